import random

import pytest
from hypothesis import strategies as st

TWO_FACETS = [(8, 0), (6, 1), (2, 3), (1, 5), (0, 6)]
OFF_ORIGIN = [(6, 1), (3, 2), (2, 4)]
CODIM_ONE = [(1, 0, 1), (0, 1, 1)]

# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: int(k[2:])):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


def random_artinian(rng, n, max_entry=8, max_points=8):
    """Pure powers on every axis plus a few random extra points."""
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = rng.randint(1, max_entry)
        pts.append(tuple(e))
    for _ in range(rng.randint(0, max_points - n)):
        e = tuple(rng.randint(0, max_entry) for _ in range(n))
        if any(e) and e not in pts:
            pts.append(e)
    rng.shuffle(pts)
    return pts


def random_points(rng, n, max_entry=8, max_points=8):
    pts = []
    for _ in range(rng.randint(1, max_points)):
        e = tuple(rng.randint(0, max_entry) for _ in range(n))
        if e not in pts:
            pts.append(e)
    return pts


def artinian_corpus(size=200, seed=20240601):
    rng = random.Random(seed)
    corpus = []
    for k in range(size):
        n = 2 if k % 2 == 0 else 3
        if k % 10 == 0:
            # complete intersections, sometimes padded with redundant multiples
            pts = random_artinian(rng, n, max_points=n)
            if k % 20 == 0:
                extra = tuple(x + rng.randint(0, 2) for x in map(max, zip(*pts)))
                pts.append(extra)
            corpus.append(pts)
        else:
            corpus.append(random_artinian(rng, n))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return artinian_corpus()


def exponents(n, max_entry=8):
    return st.tuples(*[st.integers(0, max_entry)] * n)


@st.composite
def point_sets(draw, n=None, max_entry=8, max_size=6, nonzero=True):
    if n is None:
        n = draw(st.integers(1, 3))
    e = exponents(n, max_entry)
    if nonzero:
        e = e.filter(any)
    return draw(st.lists(e, min_size=1, max_size=max_size, unique=True))


@st.composite
def artinian_sets(draw, n=None, max_entry=8, max_extra=4):
    if n is None:
        n = draw(st.integers(1, 3))
    pts = []
    for i in range(n):
        e = [0] * n
        e[i] = draw(st.integers(1, max_entry))
        pts.append(tuple(e))
    extra = draw(st.lists(exponents(n, max_entry).filter(any), max_size=max_extra))
    for e in extra:
        if e not in pts:
            pts.append(e)
    return pts
