"""Torus characters on the normal fiber of a Borel orbit.

For a twisted involution ``w`` the normal fiber decomposes into lines on
which the fixed torus acts by roots ``alpha`` with both ``alpha`` and
``w o theta(alpha)`` negative. :func:`normal_multiset` lists them with
multiplicities; :func:`gln_oracle` is the closed form for ``GL_n`` with the
split Galois involution.
"""

from __future__ import annotations

import weakref
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import _linalg as la
from .chars import CharacterOfT, fold, root_character
from .errors import BudgetExceeded, NotTwisted
from .weyl import TwistedInvolution, make_twisted

FIXED_MULTIPLICITY = {"semilinear": 1, "linear_plus": 0, "linear_minus": 2}


@dataclass(frozen=True)
class NormalEntry:
    root_index: int
    multiplicity: int
    fixed: bool
    folded_index: int | None


@dataclass(frozen=True)
class NormalFiberMultiset:
    pair: object
    involution: TwistedInvolution
    entries: tuple
    folded_vectors: tuple
    folded_coordinates: tuple

    @property
    def support(self) -> frozenset:
        return frozenset(self.pair.rs.roots[e.root_index] for e in self.entries)

    @property
    def support_indices(self) -> frozenset:
        return frozenset(e.root_index for e in self.entries)

    @property
    def dimension(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def basis(self) -> list:
        """Root indices of a weight basis, each repeated by its multiplicity."""
        return [e.root_index for e in self.entries for _ in range(e.multiplicity)]


_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def normal_multiset(pair, w) -> NormalFiberMultiset:
    """Roots ``alpha < 0`` with ``w o theta(alpha) < 0``, with multiplicities.

    Roots in two-element orbits of ``w o theta`` get multiplicity 1 each;
    fixed roots get the multiplicity prescribed by ``pair.theta.mode``.
    """
    if isinstance(w, TwistedInvolution):
        if w.theta != pair.theta:
            raise NotTwisted("twisted involution was built for a different theta")
        tw = w
    else:
        tw = make_twisted(w, pair.theta)
    key = (pair.theta, tw.element.perm)
    cache = _cache.setdefault(pair.rs, {})
    if key not in cache:
        cache[key] = _build(pair, tw)
    return cache[key]


def _build(pair, tw) -> NormalFiberMultiset:
    rs = pair.rs
    a = tw.action
    fixed_mult = FIXED_MULTIPLICITY[pair.theta.mode]
    entries = []
    vectors, coords, where = [], [], {}
    for k in range(rs.n_positive, len(rs.roots)):
        img = a[k]
        if rs.is_positive_index(img):
            continue
        fixed = img == k
        mult = fixed_mult if fixed else 1
        slot = None
        if mult:
            c = tuple(x + y for x, y in zip(rs.coefficients[k], rs.coefficients[img]))
            if c not in where:
                where[c] = len(vectors)
                coords.append(c)
                vectors.append(la.vadd(rs.roots[k], rs.roots[img]))
            slot = where[c]
        entries.append(NormalEntry(k, mult, fixed, slot))
    return NormalFiberMultiset(pair, tw, tuple(entries), tuple(vectors), tuple(coords))


def gln_oracle(n: int, w) -> set:
    """``{(i, j) : i > j, w(i) > w(j)}`` for an involutive permutation.

    ``w`` is 0-based one-line notation; the returned pairs are 1-based.

    >>> sorted(gln_oracle(3, [1, 0, 2]))
    [(3, 1), (3, 2)]
    """
    w = list(w)
    if len(w) != n or sorted(w) != list(range(n)):
        raise ValueError(f"{w} is not a permutation of 0..{n - 1}")
    if any(w[w[i]] != i for i in range(n)):
        raise ValueError(f"{w} is not an involution")
    return {(i + 1, j + 1) for i in range(n) for j in range(i) if w[i] > w[j]}


def gl_root(n: int, i: int, j: int) -> tuple:
    """``alpha_ij = e_i - e_j`` with 1-based indices."""
    v = [Fraction(0)] * n
    v[i - 1] += 1
    v[j - 1] -= 1
    return tuple(v)


def _flat(chi: CharacterOfT) -> tuple:
    return chi.lambda_re + chi.lambda_im + tuple(Fraction(x) for x in chi.m)


def sym_eigen_count(pair, w, chi: CharacterOfT, k_max: int, budget: int = 10**6) -> list:
    """Per degree ``k <= k_max``, the number of degree-k monomials in the normal
    fiber's weight basis whose folded character equals the folded ``chi``.

    These counts bound the dimensions of the ``chi``-equivariant parts of
    the symmetric algebra from above. Raises :class:`BudgetExceeded` with
    ``partial`` set when the search grows past ``budget`` states; those
    counts only use the weight groups processed so far and are lower bounds.
    """
    rs = pair.rs
    S = normal_multiset(pair, w)
    target = _flat(fold(rs, chi, S.involution, pair.theta))
    groups = defaultdict(int)
    for k in S.basis():
        groups[_flat(fold(rs, root_character(rs.roots[k]), S.involution, pair.theta))] += 1
    zero = (Fraction(0),) * len(target)
    # states[d][acc] = number of monomials of degree d with folded character acc
    states = [defaultdict(int) for _ in range(k_max + 1)]
    states[0][zero] = 1
    size = 1
    for vec, b in groups.items():
        new = [defaultdict(int) for _ in range(k_max + 1)]
        for d in range(k_max + 1):
            for acc, ways in states[d].items():
                cur = acc
                for e in range(k_max - d + 1):
                    new[d + e][cur] += ways * comb(b + e - 1, e)
                    cur = la.vadd(cur, vec)
        states = new
        size = sum(len(s) for s in states)
        if size > budget:
            partial = [states[d].get(target, 0) for d in range(k_max + 1)]
            raise BudgetExceeded(
                f"monomial search reached {size} states (budget {budget})",
                estimate=size, budget=budget, partial=partial,
            )
    return [states[d].get(target, 0) for d in range(k_max + 1)]
