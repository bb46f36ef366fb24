"""Partial annihilators for monomial ideals with positive-dimensional zero set.

For an index set I of size k, project A onto the coordinates in I.  A term
indexed by (B, I) with |B| = k can only be nonzero when the projected B is
essential for the projected A.  If it sits on a compact facet there, the
term is a smooth nonvanishing factor in the remaining variables times
dbar[1/z_i^alpha_i] for i in I, and its annihilator is (z_i^alpha_i : i in I).
If it only sits on non-compact facets nothing explicit is known, and the
term is reported as unknown rather than dropped.

These formulas hold off the set where k+1 coordinates vanish; the terms
carry no information there, so the contributions are used as they stand.
"""

from dataclasses import dataclass
from itertools import combinations

from .ideals import (MonomialIdeal, coordinate_power_ideal, divides,
                     intersect_all, prepare_points, variety_codimension,
                     variety_is_origin)
from .lattice import check64
from .newton import compute_newton_polyhedron
from .residue import spanning_facet_subsets

ZERO, KNOWN, UNKNOWN = "zero", "known", "unknown"


@dataclass(frozen=True)
class ProjectedTerm:
    index_set: tuple
    members: tuple
    status: str
    contribution: MonomialIdeal | None
    alpha_restricted: tuple


@dataclass(frozen=True)
class PartialAnnihilatorReport:
    points: tuple
    terms: tuple
    partial_annihilator: MonomialIdeal
    complete: bool
    unknown_count: int
    codim: int
    mu: int
    warnings: tuple = ()

    @property
    def known_terms(self):
        return [t for t in self.terms if t.status == KNOWN]

    @property
    def unknown_terms(self):
        return [t for t in self.terms if t.status == UNKNOWN]


def project_exponents(A, index_set):
    """Restrict to the coordinates in index_set (0-based).

    Returns ``(images, back)`` where images are the distinct projections in
    first-occurrence order and back[j] is the image index of A[j].
    """
    images = []
    where = {}
    back = []
    for a in A:
        img = tuple(a[i] for i in index_set)
        if img not in where:
            where[img] = len(images)
            images.append(img)
        back.append(where[img])
    return images, back


def _classify(points, index_set):
    """Status and alpha for every |I|-subset B of the points, for one I."""
    images, back = project_exponents(points, index_set)
    Q = compute_newton_polyhedron(images)
    on_facet = {B: Q.facets[k].compact for B, k, _ in spanning_facet_subsets(Q)}
    k = len(index_set)
    for B in combinations(range(len(points)), k):
        img = tuple(sorted(back[j] for j in B))
        alpha = tuple(check64(sum(points[j][i] for j in B)) for i in index_set)
        if len(set(img)) < k or img not in on_facet:
            yield B, ZERO, alpha
        else:
            yield B, KNOWN if on_facet[img] else UNKNOWN, alpha


def enumerate_projected_terms(A):
    points, _ = prepare_points(A)
    return _projected_terms(points)


def _projected_terms(points):
    n = len(points[0])
    codim = variety_codimension(points)
    mu = min(len(points), n)
    terms = []
    for k in range(codim, mu + 1):
        for I in combinations(range(n), k):
            for B, status, alpha in _classify(points, I):
                contribution = None
                if status == KNOWN:
                    contribution = coordinate_power_ideal(n, dict(zip(I, alpha)))
                terms.append(ProjectedTerm(I, B, status, contribution, alpha))
    return terms


def _redundant(points):
    return [a for a in points if any(b != a and divides(b, a) for b in points)]


def partial_annihilator(A, strip_redundant: bool = False) -> PartialAnnihilatorReport:
    points, warnings = prepare_points(A)
    n = len(points[0])
    redundant = _redundant(points)
    if redundant and strip_redundant:
        warnings.append(f"stripped redundant generators {[list(a) for a in redundant]}")
        points = tuple(a for a in points if a not in redundant)
    elif redundant:
        warnings.append("redundant generators present; outside the Artinian case "
                        "the result may depend on the choice of generators")

    terms = _projected_terms(points)
    known = [t.contribution for t in terms if t.status == KNOWN]
    unknown = sum(1 for t in terms if t.status == UNKNOWN)
    if known:
        partial = intersect_all(known)
    else:
        partial = MonomialIdeal(n, ((0,) * n,))

    artinian = variety_is_origin(points)
    minimal = not _redundant(points)
    complete = artinian or (n == 2 and minimal and unknown == 0)
    if complete and unknown:
        raise AssertionError("a complete description cannot leave unknown terms")
    return PartialAnnihilatorReport(points, tuple(terms), partial, complete, unknown,
                                    variety_codimension(points), min(len(points), n),
                                    tuple(warnings))
