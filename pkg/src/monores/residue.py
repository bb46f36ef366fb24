"""Annihilators of Bochner-Martinelli residue currents, Artinian case.

When the monomials z^A vanish only at the origin, the residue current is a
sum over *essential* sets B: n points of A lying on a common facet of the
Newton polyhedron and spanning R^n.  Each contributes a nonzero multiple of
the tensor product of one-variable currents with orders alpha^B, the sum of
the points in B, so its annihilator is the irreducible ideal
(z_1^alpha_1, ..., z_n^alpha_n).  The constants in front are only known to
be nonzero, which is all the annihilator depends on.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .errors import MonomialError, NotArtinianError
from .ideals import (MonomialIdeal, contains, intersect_all, irreducible,
                     is_complete_intersection, is_pure_power, minimalize,
                     variety_is_origin)
from .lattice import check64, det
from .newton import (NewtonPolyhedron, closure_of_polyhedron,
                     compute_newton_polyhedron)


@dataclass(frozen=True)
class EssentialSet:
    indices: tuple
    facet_index: int
    determinant: int
    alpha: tuple


@dataclass(frozen=True)
class ResidueTerm:
    alpha: tuple
    basis_label: tuple
    constant_nonzero: bool = True


@dataclass(frozen=True)
class AnnihilatorReport:
    points: tuple
    essential_sets: tuple
    terms: tuple
    annihilator: MonomialIdeal
    ideal: MonomialIdeal
    equals_ideal: bool
    complete_intersection: bool
    polyhedron: NewtonPolyhedron = field(repr=False, compare=False, default=None)
    warnings: tuple = ()


@dataclass(frozen=True)
class ChainReport:
    """closure((z^A)^mu) <= Ann R <= (z^A), with strictness of each step."""

    mu: int
    closure_power: MonomialIdeal
    annihilator: MonomialIdeal
    ideal: MonomialIdeal
    left_inclusion: bool
    right_inclusion: bool
    left_strict: bool
    right_strict: bool
    witness: tuple | None = None


def spanning_facet_subsets(P: NewtonPolyhedron):
    """Yield (indices, facet index, det) for n-subsets of a facet with det != 0.

    A subset with nonzero determinant spans a hyperplane, so it sits on at
    most one facet; the set guard is only defensive.
    """
    n = P.dimension
    seen = set()
    for k, facet in enumerate(P.facets):
        for B in combinations(facet.on_facet, n):
            if B in seen:
                continue
            d = det([P.points[i] for i in B])
            if d:
                seen.add(B)
                yield B, k, d


def _alpha(points, B):
    n = len(points[0])
    return tuple(check64(sum(points[i][j] for i in B), "alpha") for j in range(n))


def _require_artinian(points):
    if not variety_is_origin(points):
        raise NotArtinianError("the monomials must vanish only at the origin "
                               "(every variable needs a pure power)")


def essential_sets_of(P: NewtonPolyhedron):
    out = [EssentialSet(B, k, d, _alpha(P.points, B))
           for B, k, d in spanning_facet_subsets(P)]
    out.sort(key=lambda s: s.indices)
    for s in out:
        f = P.facets[s.facet_index]
        # the barycenter alpha/n lies on the facet
        assert f.value(s.alpha) == P.dimension * f.offset
    return out


def enumerate_essential_sets(A):
    P = compute_newton_polyhedron(A)
    _require_artinian(P.points)
    return essential_sets_of(P)


def annihilator(A) -> AnnihilatorReport:
    P = compute_newton_polyhedron(A)
    _require_artinian(P.points)
    sets = essential_sets_of(P)
    if not sets:
        raise AssertionError("an Artinian generator set always has essential subsets")
    terms = tuple(ResidueTerm(s.alpha, s.indices) for s in sets)
    ann = intersect_all(irreducible(s.alpha) for s in sets)
    ideal = minimalize(P.dimension, P.points)
    equal = ann == ideal
    ci = is_complete_intersection(ideal)
    if equal != ci:
        raise AssertionError("annihilator equals the ideal exactly for complete intersections")
    return AnnihilatorReport(P.points, tuple(sets), terms, ann, ideal, equal, ci,
                             P, P.warnings)


def briancon_skoda_witness(A) -> tuple:
    """The exponent of z_1^(n b_1 - 1), in Ann R but not in closure((z^A)^n).

    (b_1, 0, ..., 0) is where the Newton diagram meets the first axis,
    i.e. the smallest pure power of z_1 in A.
    """
    P = compute_newton_polyhedron(A)
    _require_artinian(P.points)
    n = P.dimension
    if n == 1:
        raise MonomialError("no strict inclusion in one variable")
    b1 = min(a[0] for a in P.points if is_pure_power(a) and a[0])
    return (check64(n * b1 - 1),) + (0,) * (n - 1)


def verify_chain(A) -> ChainReport:
    report = annihilator(A)
    P = report.polyhedron
    n = P.dimension
    mu = min(len(P.points), n)
    closure = closure_of_polyhedron(P, mu)
    ann, ideal = report.annihilator, report.ideal

    left = closure.issubset(ann)
    right = ann.issubset(ideal)
    if not (left and right):
        raise AssertionError("closure of the mu-th power <= Ann R <= ideal must hold")
    left_strict = closure != ann
    right_strict = ann != ideal
    if right_strict == report.complete_intersection:
        raise AssertionError("Ann R is strictly smaller than the ideal exactly off complete intersections")

    witness = None
    if n >= 2:
        witness = briancon_skoda_witness(P.points)
        if not (contains(ann, witness) and not contains(closure, witness)):
            raise AssertionError(f"witness {witness} does not separate closure and Ann R")
        if not left_strict:
            raise AssertionError("closure of the n-th power must be strictly inside Ann R")
    return ChainReport(mu, closure, ann, ideal, left, right, left_strict,
                       right_strict, witness)
