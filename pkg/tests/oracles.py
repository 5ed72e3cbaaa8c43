"""Independent reference implementations used only by the tests.

Nothing here imports the library's enumeration or solver code; each oracle
recomputes its answer from first principles (permutations, closed-form
orders, plain nested loops).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial


def involutions(n: int) -> list:
    """All involutive permutations of range(n), by brute force over S_n."""
    return [p for p in itertools.permutations(range(n)) if all(p[p[i]] == i for i in range(n))]


def telephone(n: int) -> int:
    """Involution count via the recurrence T(n) = T(n-1) + (n-1) T(n-2)."""
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n else 1


def classical_weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840}[(family, rank)]


def inversion_set(w) -> set:
    """1-based pairs (i, j), i > j, whose order w keeps: the normal-fiber roots of GL_n."""
    n = len(w)
    return {(i + 1, j + 1) for i in range(n) for j in range(n) if i > j and w[i] > w[j]}


def gl_normal_support(w) -> set:
    """Negative roots e_i - e_j (i > j) of gl_n whose image under the permutation w stays negative.

    With the split Galois involution theta acts trivially on roots, so w o theta = w.
    """
    n = len(w)
    out = set()
    for i in range(n):
        for j in range(i):
            # w(e_i - e_j) = e_{w(i)} - e_{w(j)} is negative iff w(i) > w(j)
            if w[i] > w[j]:
                v = [0] * n
                v[i], v[j] = 1, -1
                out.add(tuple(Fraction(x) for x in v))
    return out


def naive_solutions(vectors, target, N: int) -> list:
    """Every n >= 0 with sum(n) <= N and sum n_j v_j == target, by plain enumeration."""
    k = len(vectors)
    dim = len(target)
    target = tuple(Fraction(t) for t in target)
    found = []

    def rec(j, left, acc, n):
        if j == k:
            if acc == target:
                found.append(tuple(n))
            return
        for c in range(left + 1):
            rec(j + 1, left - c, tuple(acc[i] + c * vectors[j][i] for i in range(dim)), n + [c])

    rec(0, N, (Fraction(0),) * dim, [])
    return sorted(found)


def count_compositions(k: int, N: int) -> int:
    """Number of nonnegative k-vectors with sum <= N."""
    from math import comb

    return comb(N + k, k)


def matvec(m, x):
    return tuple(sum(Fraction(a) * b for a, b in zip(row, x)) for row in m)


def fold_by_hand(w_matrix, theta_matrix, epsilon, lam_re, lam_im, m):
    """chi + w(theta(chi)) computed directly from matrices, as three tuples."""
    re = tuple(a + b for a, b in zip(lam_re, matvec(w_matrix, matvec(theta_matrix, lam_re))))
    im = tuple(a + b for a, b in zip(lam_im, matvec(w_matrix, matvec(theta_matrix, lam_im))))
    mm = tuple(
        a + epsilon * b for a, b in zip(m, matvec(w_matrix, matvec(theta_matrix, m)))
    )
    return re, im, mm


def brute_orbit_equivalent(elements, chi1, chi2) -> bool:
    """Weyl-orbit membership by applying every element's matrix to all three parts."""
    for w in elements:
        M = w.matrix
        if (
            matvec(M, chi1.lambda_re) == tuple(map(Fraction, chi2.lambda_re))
            and matvec(M, chi1.lambda_im) == tuple(map(Fraction, chi2.lambda_im))
            and matvec(M, chi1.m) == tuple(map(Fraction, chi2.m))
        ):
            return True
    return False
