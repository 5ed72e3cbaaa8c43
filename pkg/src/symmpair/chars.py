"""Characters of the maximal torus of a complex reductive group.

A character ``chi(t) = prod |t_i|^{lambda_i} (t_i/|t_i|)^{m_i}`` is stored as
the real and imaginary parts of ``lambda`` (rational vectors) and the integer
compact part ``m``, all in the ambient coordinates of the root system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .errors import DimensionMismatch, InputError, NotTwisted
from .involution import InvolutionSpec
from .weyl import DEFAULT_BUDGET, TwistedInvolution, WeylElement, enumerate_weyl, make_twisted


@dataclass(frozen=True)
class CharacterOfT:
    lambda_re: tuple
    lambda_im: tuple = None
    m: tuple = None

    def __post_init__(self):
        re = _fracs(self.lambda_re)
        n = len(re)
        im = _fracs(self.lambda_im) if self.lambda_im is not None else (Fraction(0),) * n
        m = tuple(_as_int(v) for v in self.m) if self.m is not None else (0,) * n
        if len(im) != n or len(m) != n:
            raise DimensionMismatch(
                f"character parts have lengths {n}, {len(im)}, {len(m)}; they must agree"
            )
        object.__setattr__(self, "lambda_re", re)
        object.__setattr__(self, "lambda_im", im)
        object.__setattr__(self, "m", m)

    @property
    def dim(self) -> int:
        return len(self.lambda_re)

    @classmethod
    def trivial(cls, dim: int) -> "CharacterOfT":
        return cls((0,) * dim)

    def is_trivial(self) -> bool:
        return la.is_zero(self.lambda_re) and la.is_zero(self.lambda_im) and not any(self.m)

    def __repr__(self):
        def fmt(v):
            return "(" + ",".join(str(x) for x in v) + ")"
        return f"CharacterOfT({fmt(self.lambda_re)}, {fmt(self.lambda_im)}, {fmt(self.m)})"


def _fracs(v) -> tuple:
    # ints are kept as ints: exact, and cheaper than integral Fractions
    if isinstance(v, tuple) and all(type(x) is Fraction or type(x) is int for x in v):
        return v
    return tuple(la.compact(Fraction(x)) for x in v)


def _as_int(v) -> int:
    if type(v) is int:
        return v
    f = Fraction(v)
    if f.denominator != 1:
        raise InputError(f"compact part must be integral, got {v}")
    return int(f)


def root_character(root) -> CharacterOfT:
    """The root as a torus character: ``lambda = m = root``."""
    return CharacterOfT(root, None, root)


def _check(rs_dim: int, chi: CharacterOfT):
    if chi.dim != rs_dim:
        raise DimensionMismatch(f"character has dimension {chi.dim}, expected {rs_dim}")


def is_dominant(rs, chi: CharacterOfT) -> bool:
    _check(rs.ambient_dim, chi)
    return all(v >= 0 for v in la.matvec(rs.simple_pairing, chi.lambda_re))


def is_strictly_dominant(rs, chi: CharacterOfT) -> bool:
    _check(rs.ambient_dim, chi)
    return all(v > 0 for v in la.matvec(rs.simple_pairing, chi.lambda_re))


def weyl_act_char(w: WeylElement, chi: CharacterOfT) -> CharacterOfT:
    _check(w.rs.ambient_dim, chi)
    M = w.matrix
    return CharacterOfT(la.matvec(M, chi.lambda_re), la.matvec(M, chi.lambda_im), la.matvec(M, chi.m))


def theta_act_char(theta: InvolutionSpec, chi: CharacterOfT) -> CharacterOfT:
    P = theta.matrix
    _check(len(P), chi)
    m = la.matvec(P, chi.m)
    if theta.epsilon == -1:
        m = tuple(-x for x in m)
    return CharacterOfT(la.matvec(P, chi.lambda_re), la.matvec(P, chi.lambda_im), m)


def invert_char(chi: CharacterOfT) -> CharacterOfT:
    return CharacterOfT(
        tuple(-x for x in chi.lambda_re), tuple(-x for x in chi.lambda_im), tuple(-x for x in chi.m)
    )


def compose_chars(chi1: CharacterOfT, chi2: CharacterOfT) -> CharacterOfT:
    """Pointwise product of characters (componentwise sum of parameters)."""
    _check(chi1.dim, chi2)
    return CharacterOfT(
        la.vadd(chi1.lambda_re, chi2.lambda_re),
        la.vadd(chi1.lambda_im, chi2.lambda_im),
        tuple(a + b for a, b in zip(chi1.m, chi2.m)),
    )


def _as_twisted(w, theta) -> TwistedInvolution:
    if isinstance(w, TwistedInvolution):
        if w.theta != theta:
            raise NotTwisted("twisted involution was built for a different theta")
        return w
    return make_twisted(w, theta)


def fold(rs, chi: CharacterOfT, w, theta: InvolutionSpec) -> CharacterOfT:
    """The folded character ``chi * (w o theta)(chi)``; ``w`` must be twisted for ``theta``."""
    _check(rs.ambient_dim, chi)
    M = _as_twisted(w, theta).matrix
    eps = theta.epsilon
    return CharacterOfT(
        la.vadd(chi.lambda_re, la.matvec(M, chi.lambda_re)),
        la.vadd(chi.lambda_im, la.matvec(M, chi.lambda_im)),
        tuple(a + eps * b for a, b in zip(chi.m, la.matvec(M, chi.m))),
    )


def weyl_orbit_witness(rs, chi1: CharacterOfT, chi2: CharacterOfT, budget: int = DEFAULT_BUDGET):
    """First ``w`` (by length, then word) with ``w.chi1 == chi2``, else ``None``."""
    _check(rs.ambient_dim, chi1)
    _check(rs.ambient_dim, chi2)
    # cheap invariant first: the form is W-invariant
    if rs.inner(chi1.lambda_re, chi1.lambda_re) != rs.inner(chi2.lambda_re, chi2.lambda_re):
        enumerate_weyl(rs, budget)
        return None
    for w in enumerate_weyl(rs, budget):
        if weyl_act_char(w, chi1) == chi2:
            return w
    return None


def weyl_orbit_equivalent(rs, chi1: CharacterOfT, chi2: CharacterOfT, budget: int = DEFAULT_BUDGET) -> bool:
    return weyl_orbit_witness(rs, chi1, chi2, budget) is not None
