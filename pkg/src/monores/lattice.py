"""Exact integer linear algebra on small lattice matrices.

Python integers never wrap, so the width limits are enforced by explicit
range checks: lattice values must fit a signed 64-bit word, determinant
intermediates a signed 128-bit word.
"""

from math import gcd
from typing import Sequence

from .errors import LatticeOverflowError

INT64_MAX = 2**63 - 1
INT128_MAX = 2**127 - 1


def check64(value: int, what: str = "value") -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise LatticeOverflowError(f"{what} {value} does not fit in 64 bits")
    return value


def check128(value: int, what: str = "intermediate") -> int:
    if not -INT128_MAX - 1 <= value <= INT128_MAX:
        raise LatticeOverflowError(f"{what} does not fit in 128 bits")
    return value


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return check64(sum(a * b for a, b in zip(u, v)), "dot product")


def det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss step: the division is exact
                m[i][j] = check128(m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return check128(sign * m[n - 1][n - 1], "determinant")


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix (any shape)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                a, b = m[r][c], m[i][c]
                row = [a * x - b * y for x, y in zip(m[i], m[r])]
                g = 0
                for x in row:
                    g = gcd(g, x)
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def null_vector(rows: Sequence[Sequence[int]], n: int) -> tuple:
    """Integer vector orthogonal to the n-1 given rows of length n.

    Built from signed maximal minors (the generalized cross product); it is
    the zero vector exactly when the rows are linearly dependent.
    """
    if len(rows) != n - 1:
        raise ValueError("need exactly n-1 rows")
    out = []
    for j in range(n):
        minor = [[r[c] for c in range(n) if c != j] for r in rows]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def primitive(v: Sequence[int]) -> tuple:
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(check64(x // g, "normal entry") for x in v)
