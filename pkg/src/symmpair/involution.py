"""The involution theta as a root-system automorphism."""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .errors import InvalidInvolution

MODES = ("semilinear", "linear_plus", "linear_minus")


@dataclass(frozen=True)
class InvolutionSpec:
    """Involution acting on weights by ``matrix`` and on compact parts by ``epsilon * matrix``.

    ``mode`` decides the multiplicity of roots fixed by ``w o theta`` in the
    normal fiber: 1 for ``semilinear``, 0 for ``linear_plus``, 2 for
    ``linear_minus``.
    """

    matrix: tuple
    epsilon: int = -1
    mode: str = "semilinear"

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.compact_matrix(la.frac_matrix(self.matrix)))
        if self.epsilon not in (1, -1):
            raise InvalidInvolution(f"epsilon must be +1 or -1, got {self.epsilon}")
        if self.mode not in MODES:
            raise InvalidInvolution(f"mode must be one of {MODES}, got {self.mode!r}")

    @classmethod
    def identity(cls, dim: int, epsilon: int = 1, mode: str = "linear_plus") -> "InvolutionSpec":
        return cls(la.identity(dim), epsilon, mode)


_perm_cache: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def root_permutation(rs, theta: InvolutionSpec) -> tuple:
    """Permutation of root indices induced by ``theta``; validates ``theta`` against ``rs``."""
    cache = _perm_cache.setdefault(rs, {})
    if theta in cache:
        return cache[theta]
    P = theta.matrix
    n = rs.ambient_dim
    if len(P) != n or any(len(row) != n for row in P):
        raise InvalidInvolution(f"involution matrix must be {n}x{n}")
    if la.matmul(P, P) != la.identity(n):
        raise InvalidInvolution("involution matrix does not square to the identity")
    # orthogonality keeps the complement of the root span stable
    if la.matmul(la.matmul(la.transpose(P), rs.form), P) != tuple(tuple(Fraction(x) for x in r) for r in rs.form):
        raise InvalidInvolution("involution matrix does not preserve the inner product")
    perm = []
    for r in rs.roots:
        image = la.matvec(P, r)
        if image not in rs._index:
            raise InvalidInvolution(f"involution maps root {r} to non-root {image}")
        perm.append(rs._index[image])
    perm = tuple(perm)
    cache[theta] = perm
    return perm
