"""Seeded random characters for property checks."""

from __future__ import annotations

import random
from fractions import Fraction

from . import _linalg as la
from .chars import CharacterOfT
from .langlands import dominant_representative
from .weyl import twisted_involutions


def random_rational(rng: random.Random, bound: int = 4, denominators=(1, 1, 1, 2, 3)) -> Fraction:
    q = rng.choice(denominators)
    return Fraction(rng.randint(-bound * q, bound * q), q)


def random_character(rs, rng: random.Random, bound: int = 4, imaginary: bool = True) -> CharacterOfT:
    n = rs.ambient_dim
    re = [random_rational(rng, bound) for _ in range(n)]
    im = [random_rational(rng, bound) if imaginary and rng.random() < 0.5 else 0 for _ in range(n)]
    m = [rng.randint(-bound, bound) for _ in range(n)]
    return CharacterOfT(re, im, m)


def random_dominant_character(rs, rng: random.Random, bound: int = 4) -> CharacterOfT:
    return dominant_representative(rs, random_character(rs, rng, bound))[0].chi


def random_symmetric_character(pair, rng: random.Random, bound: int = 4) -> CharacterOfT:
    """A dominant ``chi`` with ``chi^{-1} = w.theta(chi)`` for some twisted involution ``w``.

    Built as ``chi0 * ((w o theta)(chi0))^{-1}`` for a random ``chi0`` and
    ``w``, then moved to the dominant chamber.
    """
    rs, theta = pair.rs, pair.theta
    tw = rng.choice(twisted_involutions(rs, theta))
    wm = la.matmul(tw.element.matrix, theta.matrix)
    chi0 = random_character(rs, rng, bound)
    re = la.vsub(chi0.lambda_re, la.matvec(wm, chi0.lambda_re))
    im = la.vsub(chi0.lambda_im, la.matvec(wm, chi0.lambda_im))
    m = la.vsub(chi0.m, la.vscale(theta.epsilon, la.matvec(wm, chi0.m)))
    return dominant_representative(rs, CharacterOfT(re, im, m))[0].chi
