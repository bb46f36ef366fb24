"""Newton polyhedra of finite exponent sets, computed exactly.

The Newton polyhedron of A is conv(A) + R_+^n.  Its facets are found by
brute force over hyperplanes spanned by n "generators", each a point of A
or a coordinate ray, and kept when they support the polyhedron.  Only
minimal points can be vertices, so non-minimal points never seed a
candidate.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import MonomialError
from .ideals import (MonomialIdeal, as_exponent, divides, lattice_box,
                     prepare_points)
from .lattice import check64, dot, null_vector, primitive, rank

# refuse lattice enumerations beyond this many columns
MAX_COLUMNS = 2_000_000


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: int
    on_facet: tuple
    compact: bool

    def value(self, x) -> int:
        return dot(self.normal, x)


@dataclass(frozen=True)
class NewtonPolyhedron:
    points: tuple
    facets: tuple
    vertex_indices: tuple
    warnings: tuple = field(default=(), compare=False)

    @property
    def dimension(self):
        return len(self.points[0])

    @property
    def vertices(self):
        return [self.points[i] for i in self.vertex_indices]

    def compact_facets(self):
        return [f for f in self.facets if f.compact]

    def contains(self, x, r: int = 1) -> bool:
        return membership_in_scaled(self, r, x)


def _unit(n, i):
    e = [0] * n
    e[i] = 1
    return tuple(e)


def _minimal_indices(points):
    return [i for i, a in enumerate(points)
            if not any(j != i and divides(b, a) for j, b in enumerate(points))]


def _oriented(v):
    """Flip v into the non-negative orthant, or None if it has mixed signs."""
    if all(x >= 0 for x in v):
        return v
    if all(x <= 0 for x in v):
        return tuple(-x for x in v)
    return None


def compute_newton_polyhedron(A: Sequence[Sequence[int]]) -> NewtonPolyhedron:
    points, warnings = prepare_points(A)
    n = len(points[0])
    pool = [("p", i) for i in _minimal_indices(points)] + [("r", i) for i in range(n)]

    found = {}
    for chosen in combinations(pool, n):
        anchors = [i for kind, i in chosen if kind == "p"]
        if not anchors:
            continue
        p0 = points[anchors[0]]
        rows = [tuple(x - y for x, y in zip(points[i], p0)) for i in anchors[1:]]
        rows += [_unit(n, i) for kind, i in chosen if kind == "r"]
        nv = null_vector(rows, n)
        if not any(nv):
            continue
        nv = _oriented(nv)
        if nv is None:
            continue
        rho = primitive(nv)
        if rho in found:
            continue
        c = dot(rho, p0)
        if all(dot(rho, a) >= c for a in points):
            found[rho] = c

    facets = []
    for rho in sorted(found):
        c = found[rho]
        on = tuple(i for i, a in enumerate(points) if dot(rho, a) == c)
        facet = Facet(rho, c, on, all(x > 0 for x in rho))
        _validate_facet(facet, points)
        facets.append(facet)

    vertices = []
    for i in range(len(points)):
        normals = [f.normal for f in facets if i in f.on_facet]
        if normals and rank(normals) == n:
            vertices.append(i)
    return NewtonPolyhedron(points, tuple(facets), tuple(vertices), tuple(warnings))


def _validate_facet(facet: Facet, points):
    n = len(points[0])
    rho, c = facet.normal, facet.offset
    assert any(rho) and all(x >= 0 for x in rho)
    assert all(dot(rho, a) >= c for a in points)
    base = points[facet.on_facet[0]]
    span = [tuple(x - y for x, y in zip(points[i], base)) for i in facet.on_facet[1:]]
    span += [_unit(n, i) for i in range(n) if rho[i] == 0]
    assert rank(span) == n - 1, f"normal {rho} does not cut out a facet"


def compact_facets(P: NewtonPolyhedron):
    return P.compact_facets()


def membership_in_scaled(P: NewtonPolyhedron, r: int, x) -> bool:
    """Is the lattice point x in r times the Newton polyhedron?"""
    x = as_exponent(x, P.dimension)
    return all(f.value(x) >= check64(r * f.offset) for f in P.facets)


def _ceil_div(a, b):
    return -((-a) // b)


def closure_of_polyhedron(P: NewtonPolyhedron, r: int = 1) -> MonomialIdeal:
    """Minimal lattice points of r times the polyhedron.

    A minimal point x satisfies x_i <= r*M, M the largest coordinate in A:
    if x_i > r*M then x - e_i is still in the scaled polyhedron.  So it is
    enough to scan columns over the box in the first n-1 coordinates and
    take the lowest feasible last coordinate in each.
    """
    if r < 1:
        raise MonomialError("scale factor must be at least 1")
    n = P.dimension
    bound = check64(r * max(max(a) for a in P.points))
    if (bound + 1) ** (n - 1) > MAX_COLUMNS:
        raise MonomialError("lattice enumeration box is too large")
    flat = [(f.normal[:-1], f.normal[-1], check64(r * f.offset)) for f in P.facets]

    def lowest(head):
        t = 0
        for rho, last, c in flat:
            slack = c - sum(a * b for a, b in zip(rho, head))
            if last == 0:
                if slack > 0:
                    return None
            elif slack > 0:
                t = max(t, _ceil_div(slack, last))
        return t

    heights = {}
    gens = []
    for head in lattice_box([bound] * (n - 1)):
        h = lowest(head)
        heights[head] = h
        if h is None:
            continue
        minimal = True
        for i, x in enumerate(head):
            if x:
                below = heights[head[:i] + (x - 1,) + head[i + 1:]]
                if below is not None and below <= h:
                    minimal = False
                    break
        if minimal:
            gens.append(head + (h,))
    return MonomialIdeal(n, tuple(sorted(gens)))


def integral_closure(A) -> MonomialIdeal:
    return closure_of_polyhedron(compute_newton_polyhedron(A), 1)


def integral_closure_of_power(A, r: int) -> MonomialIdeal:
    return closure_of_polyhedron(compute_newton_polyhedron(A), r)
