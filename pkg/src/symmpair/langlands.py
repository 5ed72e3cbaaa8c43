"""Parameter calculus for principal series of complex groups.

A parameter is a dominant torus character. Parameters are equivalent when
they lie in one Weyl orbit; no canonical form is imposed on the imaginary
and compact parts, since wall stabilizers move them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg as la
from .chars import (
    CharacterOfT, invert_char, is_dominant, theta_act_char, weyl_act_char,
)
from .distinction import InternalCheckFailed
from .errors import NotDominant
from .involution import root_permutation
from .weyl import DEFAULT_BUDGET, enumerate_weyl, longest_element, twisted_action


@dataclass(frozen=True)
class LanglandsParameter:
    rs: object
    chi: CharacterOfT

    def __post_init__(self):
        if not is_dominant(self.rs, self.chi):
            raise NotDominant(f"{self.chi!r} is not dominant for {self.rs.label}")


def dominant_representative(rs, chi: CharacterOfT, budget: int = DEFAULT_BUDGET):
    """``(LanglandsParameter(w.chi), w)`` for the least ``w`` (length, then word) making ``chi`` dominant."""
    rs.check_dim(chi.lambda_re, "character")
    for w in enumerate_weyl(rs, budget):
        re = la.matvec(w.matrix, chi.lambda_re)
        if all(v >= 0 for v in la.matvec(rs.simple_pairing, re)):
            return LanglandsParameter(rs, weyl_act_char(w, chi)), w
    raise InternalCheckFailed("no Weyl element reaches the dominant chamber")


def contragredient_param(rs, p: LanglandsParameter) -> LanglandsParameter:
    """Parameter of the contragredient: ``w_0.(chi^{-1})``, which is already dominant."""
    image = weyl_act_char(longest_element(rs), invert_char(p.chi))
    if not is_dominant(rs, image):
        raise InternalCheckFailed(f"w_0.(chi^-1) = {image!r} is not dominant")
    return LanglandsParameter(rs, image)


def theta_twist_param(rs, theta, p: LanglandsParameter, budget: int = DEFAULT_BUDGET) -> LanglandsParameter:
    """Parameter of the theta-twist: the dominant representative of ``theta(chi)``."""
    return dominant_representative(rs, theta_act_char(theta, p.chi), budget)[0]


def check_conj_symmetry(rs, theta, p: LanglandsParameter, budget: int = DEFAULT_BUDGET):
    """Look for ``w`` with ``chi^{-1} = w.theta(chi)`` and ``theta(w) = w^{-1}``.

    Returns ``(True, w)`` for the least such ``w`` or ``(False, None)``.
    """
    tp = root_permutation(rs, theta)
    target = invert_char(p.chi)
    twisted = theta_act_char(theta, p.chi)
    for w in enumerate_weyl(rs, budget):
        a = twisted_action(w, tp)
        if any(a[a[k]] != k for k in range(len(a))):
            continue
        if weyl_act_char(w, twisted) == target:
            return True, w
    return False, None
