"""Monomial ideals as staircases of exponent vectors.

An exponent is a plain tuple of non-negative ints.  A monomial ideal is
stored by its minimal generators in lexicographic order, so two ideals are
equal exactly when their ``MonomialIdeal`` values compare equal.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .errors import (DimensionMismatch, MonomialError, UnitIdealError,
                     ZeroIdealError)
from .lattice import check64

Exponent = tuple


def as_exponent(coords: Iterable[int], n: int | None = None) -> Exponent:
    e = tuple(coords)
    if n is not None and len(e) != n:
        raise DimensionMismatch(f"expected {n} coordinates, got {len(e)}")
    for x in e:
        if not isinstance(x, int) or isinstance(x, bool):
            raise MonomialError(f"exponent entries must be integers: {e!r}")
        if x < 0:
            raise MonomialError(f"negative exponent in {e!r}")
        check64(x, "exponent")
    return e


def _same_dim(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"{a!r} and {b!r} differ in dimension")


def divides(a: Exponent, b: Exponent) -> bool:
    """True iff z^a divides z^b."""
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def is_pure_power(a: Exponent) -> bool:
    return sum(1 for x in a if x) == 1


def prepare_points(raw: Iterable[Iterable[int]], n: int | None = None):
    """Validate a generator list and drop repeats, keeping first occurrences.

    Returns ``(points, warnings)``.
    """
    points = []
    seen = set()
    warnings = []
    for coords in raw:
        e = as_exponent(coords, n)
        if n is None:
            n = len(e)
        if n == 0:
            raise MonomialError("ambient dimension must be positive")
        if e in seen:
            warnings.append(f"duplicate exponent {list(e)} ignored")
            continue
        seen.add(e)
        points.append(e)
    if not points:
        raise ZeroIdealError("empty generator list")
    return tuple(points), warnings


def _minimal(points: Iterable[Exponent]) -> tuple:
    # sorting lexicographically puts any divisor of e before e
    keep = []
    for e in sorted(set(points)):
        if not any(divides(g, e) for g in keep):
            keep.append(e)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    dimension: int
    generators: tuple

    def __post_init__(self):
        if self.dimension < 1:
            raise MonomialError("dimension must be positive")
        if not self.generators:
            raise ZeroIdealError("a monomial ideal needs at least one generator")
        for g in self.generators:
            if len(g) != self.dimension:
                raise DimensionMismatch(f"generator {g!r} is not in dimension {self.dimension}")
        if list(self.generators) != sorted(set(self.generators)):
            raise MonomialError("generators must be distinct and sorted")
        for a, b in combinations(self.generators, 2):
            if divides(a, b) or divides(b, a):
                raise MonomialError(f"generators {a!r} and {b!r} are not minimal")

    def __contains__(self, e):
        return contains(self, e)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(contains(other, g) for g in self.generators)

    @property
    def is_unit(self):
        return any(not any(g) for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(monomial_str(g) for g in self.generators) + ")"


def monomial_str(e: Exponent, names: Sequence[str] | None = None) -> str:
    if names is None:
        names = [f"z{i + 1}" for i in range(len(e))]
    parts = []
    for name, x in zip(names, e):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return " ".join(parts) if parts else "1"


def minimalize(dimension: int, raw: Iterable[Iterable[int]]) -> MonomialIdeal:
    pts = [as_exponent(e, dimension) for e in raw]
    if not pts:
        raise ZeroIdealError("empty generator list")
    return MonomialIdeal(dimension, _minimal(pts))


def contains(ideal: MonomialIdeal, e: Exponent) -> bool:
    if len(e) != ideal.dimension:
        raise DimensionMismatch(f"{e!r} is not in dimension {ideal.dimension}")
    return any(divides(g, e) for g in ideal.generators)


def _check_pair(I, J):
    if I.dimension != J.dimension:
        raise DimensionMismatch(f"dimensions {I.dimension} and {J.dimension} differ")


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    lcms = [tuple(map(max, a, b)) for a in I.generators for b in J.generators]
    return MonomialIdeal(I.dimension, _minimal(lcms))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    it = iter(ideals)
    try:
        out = next(it)
    except StopIteration:
        raise ValueError("nothing to intersect") from None
    for J in it:
        out = intersect(out, J)
    return out


def product_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_pair(I, J)
    sums = [tuple(check64(x + y, "exponent") for x, y in zip(a, b))
            for a in I.generators for b in J.generators]
    return MonomialIdeal(I.dimension, _minimal(sums))


def power(I: MonomialIdeal, r: int) -> MonomialIdeal:
    """Minimal generators of the r-fold sumset of the generators of I."""
    if r < 1:
        raise UnitIdealError("power must be at least 1")
    # square-and-multiply; minimalizing between steps keeps the sets small
    result = None
    base = I
    while r:
        if r & 1:
            result = base if result is None else product_ideal(result, base)
        r >>= 1
        if r:
            base = product_ideal(base, base)
    return result


def irreducible(alpha: Exponent) -> MonomialIdeal:
    """The ideal (z_1^alpha_1, ..., z_n^alpha_n); entries must be positive."""
    n = len(alpha)
    gens = []
    for i, x in enumerate(alpha):
        if x < 1:
            raise MonomialError("irreducible ideals need positive exponents")
        e = [0] * n
        e[i] = x
        gens.append(tuple(e))
    return MonomialIdeal(n, tuple(sorted(gens)))


def coordinate_power_ideal(n: int, powers: Mapping[int, int]) -> MonomialIdeal:
    """The ideal generated by z_i^powers[i] for the given coordinates only."""
    gens = []
    for i, x in powers.items():
        e = [0] * n
        e[i] = x
        gens.append(tuple(e))
    return MonomialIdeal(n, _minimal(gens))


def variety_is_origin(A: Sequence[Exponent]) -> bool:
    """True iff every axis carries a pure power from A."""
    if not A:
        raise ZeroIdealError("empty generator list")
    n = len(A[0])
    hit = set()
    for a in A:
        if is_pure_power(a):
            hit.add(next(i for i, x in enumerate(a) if x))
    return len(hit) == n


def variety_codimension(A: Sequence[Exponent]) -> int:
    """Smallest set of coordinates meeting the support of every exponent."""
    if not A:
        raise ZeroIdealError("empty generator list")
    if any(not any(a) for a in A):
        raise UnitIdealError("a zero exponent makes the variety empty")
    n = len(A[0])
    supports = [frozenset(i for i, x in enumerate(a) if x) for a in A]
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            s = set(S)
            if all(sup & s for sup in supports):
                return k
    raise AssertionError("the full coordinate set always hits every support")


def is_complete_intersection(I: MonomialIdeal) -> bool:
    if not variety_is_origin(I.generators):
        raise MonomialError("complete-intersection test only covers ideals with variety the origin")
    return len(I.generators) == I.dimension and all(is_pure_power(g) for g in I.generators)


def lattice_box(upper: Sequence[int]):
    """All lattice points 0 <= x <= upper, in lexicographic order."""
    return product(*(range(u + 1) for u in upper))


@dataclass(frozen=True)
class Polynomial:
    """A holomorphic polynomial with rational coefficients."""

    dimension: int
    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in dict(self.terms).items():
            e = as_exponent(e, self.dimension)
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def monomial(cls, e: Exponent, coefficient=1):
        return cls(len(e), {tuple(e): coefficient})

    @classmethod
    def zero(cls, dimension: int):
        return cls(dimension, {})

    def __add__(self, other: "Polynomial"):
        if self.dimension != other.dimension:
            raise DimensionMismatch("polynomials live in different dimensions")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.dimension, terms)

    def support(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms
