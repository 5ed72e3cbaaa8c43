"""Small dense exact-rational linear algebra on tuples of Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...], row major


def frac_vector(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def frac_matrix(rows) -> Matrix:
    return tuple(frac_vector(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def compact(x):
    """Integral Fractions become ints; arithmetic with them is much cheaper."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def compact_matrix(a) -> Matrix:
    return tuple(tuple(compact(v) for v in row) for row in a)


def matvec(a: Matrix, x: Sequence) -> Vector:
    return tuple(sum([r * v for r, v in zip(row, x) if r]) for row in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(
        tuple(compact(sum([r * c for r, c in zip(row, col) if r])) for col in cols)
        for row in a
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def vadd(x: Sequence, y: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence, y: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vscale(c, x: Sequence) -> Vector:
    return tuple(c * a for a in x)


def is_zero(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of the row space, by exact Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
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
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve(a: Matrix, b: Sequence) -> Vector:
    """Solve ``a x = b`` for square nonsingular ``a``."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(a, b)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        m[c] = [v / p for v in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(row[n] for row in m)


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve(a, [Fraction(int(i == j)) for i in range(n)]) for j in range(n)]
    return transpose(tuple(cols))


def leading_minors_positive(a: Matrix) -> bool:
    """Sylvester's criterion for a symmetric matrix."""
    m = [list(map(Fraction, r)) for r in a]
    n = len(m)
    for c in range(n):
        if m[c][c] <= 0:
            return False
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return True
