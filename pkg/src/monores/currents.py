"""Symbolic pairing of residue currents with holomorphic test functions.

This is an oracle that avoids the polyhedral code entirely.  The current
dbar[1/z^p] in one variable pairs with phi dz to give

    2 pi i / (p-1)!  *  d^(p-1) phi / dz^(p-1) (0)

and the terms of the residue current are tensor products of these.  Test
functions are holomorphic polynomials only: anything carrying a factor of
z-bar pairs to zero against these currents, so dropping antiholomorphic
terms loses nothing.  The unit 2 pi i is kept as a formal power.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import factorial, prod

from .errors import DimensionMismatch, NotArtinianError
from .ideals import Polynomial, as_exponent, variety_is_origin


@dataclass(frozen=True)
class TensorCurrent:
    alpha: tuple

    def __post_init__(self):
        if any(p < 1 for p in self.alpha):
            raise ValueError(f"current orders must be positive: {self.alpha!r}")

    @property
    def dimension(self):
        return len(self.alpha)


@dataclass(frozen=True)
class PairingValue:
    coefficient: Fraction
    pi_power: int

    @property
    def is_zero(self):
        return self.coefficient == 0


def _derivative_at_zero(k: int, order: int) -> int:
    """d^order/dz^order of z^k, evaluated at z = 0."""
    if order > k:
        return 0
    falling = factorial(k) // factorial(k - order)
    return falling if k == order else 0


def pair_one_variable(p: int, k: int) -> Fraction:
    """Coefficient of 2 pi i in <dbar[1/z^p], z^k dz>."""
    return Fraction(_derivative_at_zero(k, p - 1), factorial(p - 1))


def pair_monomial(T: TensorCurrent, h, test_exp) -> PairingValue:
    """<z^h T, z^test_exp dz>, variable by variable."""
    h = as_exponent(h)
    test_exp = as_exponent(test_exp)
    if not len(h) == len(test_exp) == T.dimension:
        raise DimensionMismatch("current, multiplier and test monomial differ in dimension")
    coeff = prod((pair_one_variable(p, a + b) for p, a, b in zip(T.alpha, h, test_exp)),
                 start=Fraction(1))
    return PairingValue(coeff, T.dimension)


def _pairing_support(T: TensorCurrent, beta):
    """Test exponents in the box [0, alpha-1] where z^beta T can pair nonzero.

    The pairing is a product over variables, so it is enough to scan each
    coordinate separately; outside the product of these ranges some factor
    vanishes.
    """
    per_coord = []
    for p, b in zip(T.alpha, beta):
        per_coord.append([t for t in range(p) if pair_one_variable(p, b + t) != 0])
    out = [()]
    for choices in per_coord:
        out = [prefix + (t,) for prefix in out for t in choices]
    return out


def annihilates_term(T: TensorCurrent, h: Polynomial) -> bool:
    """Does h T vanish?  Decided twice: by pairing and by divisibility."""
    if h.dimension != T.dimension:
        raise DimensionMismatch("polynomial and current differ in dimension")
    sums = {}
    for beta, c in h.terms.items():
        for t in _pairing_support(T, beta):
            v = pair_monomial(T, beta, t)
            sums[t] = sums.get(t, 0) + c * v.coefficient
    by_pairing = all(v == 0 for v in sums.values())

    by_divisibility = all(any(b >= p for b, p in zip(beta, T.alpha)) for beta in h.terms)
    if by_pairing != by_divisibility:
        raise AssertionError("pairing and divisibility disagree")
    return by_pairing


def _solve_hyperplane(B):
    """rho with rho . b = 1 for every row b of the invertible matrix B."""
    n = len(B)
    M = [[Fraction(x) for x in row] + [Fraction(1)] for row in B]
    for col in range(n):
        piv = next(i for i in range(col, n) if M[i][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for i in range(n):
            if i != col and M[i][col]:
                f = M[i][col] / M[col][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def _full_rank(B):
    n = len(B)
    M = [[Fraction(x) for x in row] for row in B]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return False
        M[col], M[piv] = M[piv], M[col]
        for i in range(col + 1, n):
            f = M[i][col] / M[col][col]
            M[i] = [x - f * y for x, y in zip(M[i], M[col])]
    return True


def essential_alphas(A):
    """Orders of the nonvanishing terms, found by brute force over n-subsets.

    An n-subset B spanning R^n determines the hyperplane rho . x = 1.  B lies
    on a facet of the Newton polyhedron iff rho >= 0 and rho . a >= 1 for all
    a in A.
    """
    pts = sorted({tuple(a) for a in A})
    n = len(pts[0])
    out = []
    for B in combinations(pts, n):
        if not _full_rank(B):
            continue
        rho = _solve_hyperplane(B)
        if any(x < 0 for x in rho):
            continue
        if all(sum(r * x for r, x in zip(rho, a)) >= 1 for a in pts):
            out.append(tuple(sum(col) for col in zip(*B)))
    return out


def annihilator_membership_oracle(A, h: Polynomial) -> bool:
    if not variety_is_origin([tuple(a) for a in A]):
        raise NotArtinianError("oracle covers only generator sets vanishing at the origin")
    return all(annihilates_term(TensorCurrent(alpha), h) for alpha in essential_alphas(A))


def cross_check(A, ideal, upper=None):
    """Lattice points in a box where ``ideal`` and the oracle disagree.

    The box defaults to [0, max alpha]^n, which holds every generator of the
    annihilator plus one step beyond.
    """
    if not variety_is_origin([tuple(a) for a in A]):
        raise NotArtinianError("oracle covers only generator sets vanishing at the origin")
    currents = [TensorCurrent(alpha) for alpha in essential_alphas(A)]
    n = ideal.dimension
    if upper is None:
        upper = [max(c.alpha[i] for c in currents) for i in range(n)]
    mismatches = []
    for x in product(*(range(u + 1) for u in upper)):
        h = Polynomial.monomial(x)
        if (x in ideal) != all(annihilates_term(T, h) for T in currents):
            mismatches.append(x)
    return mismatches
