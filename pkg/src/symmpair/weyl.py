"""Weyl group elements, enumeration and twisted involutions.

An element is stored as the permutation it induces on the root indices of
its :class:`~symmpair.rootsys.RootSystem`. Weyl elements fix the orthogonal
complement of the root span, so the permutation determines the ambient
matrix; the matrix and a reduced word are derived on demand.
"""

from __future__ import annotations

import weakref
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import prod

from . import _linalg as la
from .errors import BudgetExceeded, DimensionMismatch, NotTwisted
from .involution import InvolutionSpec, root_permutation

DEFAULT_BUDGET = 51840


@dataclass(frozen=True)
class WeylElement:
    rs: object
    perm: tuple

    @cached_property
    def length(self) -> int:
        n = self.rs.n_positive
        return sum(1 for k in range(n) if self.perm[k] >= n)

    @cached_property
    def word(self) -> tuple:
        """Lexicographically least reduced word, 1-based simple indices."""
        rs = self.rs
        refl = rs.reflection_permutations
        n = rs.n_positive
        perm = self.perm
        out = []
        while True:
            inv = invert_perm(perm)
            for i in range(rs.rank):
                # left descent: w^{-1}(alpha_i) < 0
                if inv[i] >= n:
                    out.append(i + 1)
                    perm = tuple(refl[i][p] for p in perm)
                    break
            else:
                return tuple(out)

    @cached_property
    def matrix(self) -> tuple:
        m = la.compact_matrix(la.identity(self.rs.ambient_dim))
        for i in self.word:
            m = la.matmul(m, self.rs.reflection_matrices[i - 1])
        return m

    def inverse(self) -> "WeylElement":
        return WeylElement(self.rs, invert_perm(self.perm))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.rs is not self.rs:
            raise ValueError("cannot compose elements of different root systems")
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    def is_identity(self) -> bool:
        return all(k == i for i, k in enumerate(self.perm))

    def act(self, x) -> tuple:
        return act(self, x)

    def act_root_index(self, k: int) -> int:
        return self.perm[k]

    def sort_key(self):
        return (self.length, self.word)

    def __repr__(self):
        w = "".join(f"s{i}" for i in self.word) or "e"
        return f"WeylElement({w})"


def invert_perm(p) -> tuple:
    inv = [0] * len(p)
    for k, v in enumerate(p):
        inv[v] = k
    return tuple(inv)


def identity_element(rs) -> WeylElement:
    return WeylElement(rs, tuple(range(len(rs.roots))))


def simple_reflection(rs, i: int) -> WeylElement:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple index {i} out of range 1..{rs.rank}")
    return WeylElement(rs, rs.reflection_permutations[i - 1])


def from_word(rs, word) -> WeylElement:
    w = identity_element(rs)
    for i in word:
        w = w * simple_reflection(rs, i)
    return w


def from_matrix(rs, matrix) -> WeylElement:
    """Element acting by ``matrix``; the matrix must permute the roots and lie in W."""
    m = la.frac_matrix(matrix)
    perm = []
    for r in rs.roots:
        image = la.matvec(m, r)
        if image not in rs._index:
            raise ValueError(f"matrix maps root {r} outside the root system")
        perm.append(rs._index[image])
    w = WeylElement(rs, tuple(perm))
    if w.matrix != m:
        raise ValueError("matrix permutes the roots but is not a Weyl group element")
    return w


def act(w: WeylElement, x) -> tuple:
    if len(x) != w.rs.ambient_dim:
        raise DimensionMismatch(f"vector has length {len(x)}, expected {w.rs.ambient_dim}")
    return la.matvec(w.matrix, x)


def weyl_group_order(rs) -> int:
    """|W| from the exponents, read off the height distribution of positive roots."""
    heights = Counter(rs.height(k) for k in range(rs.n_positive))
    top = max(heights, default=0)
    # number of exponents >= t equals the number of positive roots of height t
    counts = [heights.get(t, 0) for t in range(top + 2)]
    exps = []
    for t in range(1, top + 1):
        exps += [t] * (counts[t] - counts[t + 1])
    return prod(e + 1 for e in exps)


_enum_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def enumerate_weyl(rs, budget: int = DEFAULT_BUDGET) -> tuple:
    """All elements of W, sorted by length then reduced word.

    Breadth-first closure under right multiplication by simple reflections.
    Refuses with :class:`BudgetExceeded` when |W| exceeds ``budget``.
    """
    order = weyl_group_order(rs)
    if order > budget:
        raise BudgetExceeded(
            f"|W({rs.label})| = {order} exceeds the enumeration budget {budget}",
            estimate=order, budget=budget,
        )
    if rs in _enum_cache:
        return _enum_cache[rs]
    refl = rs.reflection_permutations
    start = tuple(range(len(rs.roots)))
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for p in frontier:
            for r in refl:
                q = tuple(p[k] for k in r)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elements = sorted((WeylElement(rs, p) for p in seen), key=WeylElement.sort_key)
    result = tuple(elements)
    _enum_cache[rs] = result
    return result


def longest_element(rs) -> WeylElement:
    """The element of maximal length, built by climbing right ascents."""
    n = rs.n_positive
    refl = rs.reflection_permutations
    perm = tuple(range(len(rs.roots)))
    while True:
        for i in range(rs.rank):
            if perm[i] < n:
                perm = tuple(perm[k] for k in refl[i])
                break
        else:
            return WeylElement(rs, perm)


@dataclass(frozen=True)
class TwistedInvolution:
    """``w`` with ``theta w theta^{-1} = w^{-1}``.

    ``action`` is the permutation of root indices induced by ``w o theta``;
    it is an involution, which is the witness that is re-checked by
    :meth:`verify`.
    """

    element: WeylElement
    theta: InvolutionSpec
    action: tuple

    @cached_property
    def matrix(self) -> tuple:
        """Ambient matrix of ``w o theta``."""
        return la.matmul(self.element.matrix, self.theta.matrix)

    @cached_property
    def fold_coordinate_matrix(self) -> tuple:
        """``lambda -> `` simple-root coordinates of the projection of ``lambda + w o theta(lambda)``."""
        one_plus = tuple(
            tuple(v + (i == j) for j, v in enumerate(row)) for i, row in enumerate(self.matrix)
        )
        return la.matmul(self.element.rs.coordinate_matrix, one_plus)

    def verify(self) -> bool:
        rs = self.element.rs
        P = self.theta.matrix
        w = self.element.matrix
        lhs = la.matmul(la.matmul(P, w), la.inverse(P))
        composite = la.matmul(w, P)
        return (
            lhs == self.element.inverse().matrix
            and la.matmul(composite, composite) == la.identity(rs.ambient_dim)
            and all(self.action[self.action[k]] == k for k in range(len(self.action)))
        )


def twisted_action(w: WeylElement, theta_perm) -> tuple:
    return tuple(w.perm[t] for t in theta_perm)


def is_twisted(w: WeylElement, theta: InvolutionSpec) -> bool:
    tp = root_permutation(w.rs, theta)
    a = twisted_action(w, tp)
    return all(a[a[k]] == k for k in range(len(a)))


def make_twisted(w: WeylElement, theta: InvolutionSpec) -> TwistedInvolution:
    tp = root_permutation(w.rs, theta)
    a = twisted_action(w, tp)
    if any(a[a[k]] != k for k in range(len(a))):
        raise NotTwisted(f"{w!r} is not a twisted involution for the given theta")
    return TwistedInvolution(w, theta, a)


def twisted_involutions(rs, theta: InvolutionSpec, budget: int = DEFAULT_BUDGET) -> list:
    """Every ``w`` in W with ``theta(w) = w^{-1}``, ordered by length then word."""
    tp = root_permutation(rs, theta)
    out = []
    for w in enumerate_weyl(rs, budget):
        # theta w theta = w^{-1}  <=>  (w theta)^2 = 1 on roots
        a = twisted_action(w, tp)
        if all(a[a[k]] == k for k in range(len(a))):
            out.append(TwistedInvolution(w, theta, a))
    return out


def from_permutation(rs, sigma) -> WeylElement:
    """``gl_n`` only: the element sending ``e_i`` to ``e_{sigma[i]}`` (0-based one-line notation)."""
    n = rs.ambient_dim
    if rs.realization != "gl_n":
        raise ValueError("from_permutation needs the gl_n realization")
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{n - 1}")
    m = [[0] * n for _ in range(n)]
    for i, s in enumerate(sigma):
        m[s][i] = 1
    return from_matrix(rs, m)


def to_permutation(w: WeylElement) -> tuple:
    """Inverse of :func:`from_permutation`."""
    if w.rs.realization != "gl_n":
        raise ValueError("to_permutation needs the gl_n realization")
    cols = la.transpose(w.matrix)
    return tuple(col.index(1) for col in cols)
