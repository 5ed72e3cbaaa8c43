"""
Contragredients and theta-twists of principal series parameters
===============================================================

A parameter is a dominant character. The contragredient is w_0(chi^{-1}),
the theta-twist the dominant representative of theta(chi). When a character
passes the folded test the two parameters lie in one Weyl orbit.
"""

from symmpair import (
    CharacterOfT, LanglandsParameter, check_conj_symmetry, check_distinction, contragredient_param,
    galois_split_pair, gl, theta_twist_param, weyl_orbit_equivalent,
)

rs = gl(2)
pair = galois_split_pair(rs)

for chi in (CharacterOfT((1, 0), None, (2, 1)), CharacterOfT((1, -1), None, (3, 3))):
    p = LanglandsParameter(rs, chi)
    contra = contragredient_param(rs, p)
    twist = theta_twist_param(rs, pair.theta, p)
    sym, w = check_conj_symmetry(rs, pair.theta, p)
    print(chi)
    print("  contragredient:", contra.chi)
    print("  theta twist:   ", twist.chi)
    print("  same orbit:    ", weyl_orbit_equivalent(rs, contra.chi, twist.chi))
    print("  conj symmetric:", sym, w)
    print("  passes folded test:", check_distinction(pair, chi).any_feasible)
