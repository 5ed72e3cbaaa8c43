"""Symmetric-pair specifications and the modular-character check.

A pair bundles a root system with an involution. :func:`verify_star`
checks, for every twisted involution ``w``, that the positive roots sent
negative by ``w o theta`` contribute a vanishing root sum. That vanishing is
what the compatibility ``delta_{B^{theta_n}} = delta_B^{1/2}`` reduces to once
unipotent and compact parts are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .involution import InvolutionSpec, root_permutation
from .weyl import DEFAULT_BUDGET, TwistedInvolution, twisted_involutions

__all__ = [
    "InvolutionSpec", "PairSpec", "StarEntry", "StarReport",
    "galois_split_pair", "identity_pair", "verify_star", "star_partition",
]


@dataclass(frozen=True)
class PairSpec:
    rs: object
    theta: InvolutionSpec
    label: str = ""

    def __post_init__(self):
        # validates matrix**2 == 1, root preservation and orthogonality
        root_permutation(self.rs, self.theta)


def galois_split_pair(rs) -> PairSpec:
    """Split Galois pair: theta fixes the split torus and inverts phases."""
    theta = InvolutionSpec(la.identity(rs.ambient_dim), epsilon=-1, mode="semilinear")
    return PairSpec(rs, theta, "galois-split")


def identity_pair(rs) -> PairSpec:
    return PairSpec(rs, InvolutionSpec.identity(rs.ambient_dim), "identity")


@dataclass(frozen=True)
class StarEntry:
    involution: TwistedInvolution
    s1: tuple
    s2: tuple
    s3: tuple
    s3_sum: tuple
    s3_closed: bool

    @property
    def holds(self) -> bool:
        return la.is_zero(self.s3_sum)

    @property
    def sizes(self) -> tuple:
        return len(self.s1), len(self.s2), len(self.s3)


@dataclass(frozen=True)
class StarReport:
    pair: PairSpec
    entries: tuple = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return all(e.holds for e in self.entries)


def star_partition(rs, tw: TwistedInvolution) -> StarEntry:
    """Split the positive roots by the action of ``w o theta``.

    S1: moved and still positive; S2: fixed; S3: sent negative.
    """
    a = tw.action
    s1, s2, s3 = [], [], []
    for k in range(rs.n_positive):
        img = a[k]
        if img == k:
            s2.append(k)
        elif rs.is_positive_index(img):
            s1.append(k)
        else:
            s3.append(k)
    total = [Fraction(0)] * rs.ambient_dim
    for k in s3:
        total = la.vadd(la.vadd(total, rs.roots[k]), rs.roots[a[k]])
    s3_set = set(s3)
    closed = all(rs.negate_index(a[k]) in s3_set for k in s3) and all(
        rs.negate_index(a[rs.negate_index(a[k])]) == k for k in s3
    )
    return StarEntry(tw, tuple(s1), tuple(s2), tuple(s3), tuple(total), closed)


def verify_star(pair: PairSpec, budget: int = DEFAULT_BUDGET) -> StarReport:
    entries = tuple(
        star_partition(pair.rs, tw) for tw in twisted_involutions(pair.rs, pair.theta, budget)
    )
    return StarReport(pair, entries)
