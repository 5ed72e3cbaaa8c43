"""Feasibility of the folded character equation.

For a dominant ``chi`` and a twisted involution ``w`` we look for exponents
``n_j >= 0`` on the distinct folded vectors ``v_j = alpha_j + w o theta(alpha_j)``
of the normal fiber with ``sum n_j v_j = tau``, where ``tau`` is the real part
of ``chi * (w o theta)(chi)`` projected to the root span. Every ``v_j`` has
nonpositive simple-root coordinates and is nonzero, which bounds each
``n_j`` and makes the search exhaustive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

from . import _linalg as la
from .chars import (
    CharacterOfT, fold, invert_char, is_dominant, root_character, theta_act_char, weyl_act_char,
)
from .errors import InputError, NotDominant
from .normalspace import NormalFiberMultiset, normal_multiset
from .weyl import DEFAULT_BUDGET, twisted_involutions

ORBIT_COUNT_LABEL = "Q'-orbit representative count"


class InternalCheckFailed(AssertionError):
    """A cross-check that the theory guarantees did not hold."""


def _check_vectors(vectors):
    for v in vectors:
        if any(c > 0 for c in v) or not any(v):
            raise InputError(f"folded vector {v} must be nonzero with nonpositive coordinates")


def degree_bound(target) -> int:
    """Upper bound on ``sum n_j``: each folded vector has height at most -1."""
    return max(0, floor(-sum(Fraction(t) for t in target)))


def solve_lattice(vectors, target) -> list:
    """All ``n >= 0`` with ``sum n_j vectors[j] == target``, in lexicographic order.

    ``vectors`` and ``target`` are simple-root coordinates.
    """
    vectors = [tuple(int(c) for c in v) for v in vectors]
    target = tuple(Fraction(t) for t in target)
    _check_vectors(vectors)
    if any(t > 0 for t in target):
        return []
    if not vectors:
        return [()] if not any(target) else []
    out = []
    n = [0] * len(vectors)

    def search(j, rest):
        if j == len(vectors):
            if not any(rest):
                out.append(tuple(n))
            return
        v = vectors[j]
        top = min(floor(r / c) for r, c in zip(rest, v) if c < 0)
        cur = rest
        for k in range(top + 1):
            n[j] = k
            search(j + 1, cur)
            cur = tuple(r - c for r, c in zip(cur, v))
        n[j] = 0

    search(0, target)
    return out


def solve_fold_equation(S: NormalFiberMultiset, tau) -> list:
    """Complete list of exponent assignments over ``S.folded_vectors`` reaching ``tau``.

    ``tau`` is an ambient weight and must lie in the root span.
    """
    rs = S.pair.rs
    rs.check_dim(tau, "tau")
    tau = tuple(Fraction(t) for t in tau)
    coords = rs.simple_coordinates(tau)
    if rs.from_simple_coordinates(coords) != tau:
        raise InputError(f"tau = {tau} is not in the span of the roots")
    return solve_lattice(S.folded_coordinates, coords)


def _full_matches(S: NormalFiberMultiset, n, target: CharacterOfT) -> int:
    """Number of monomials realizing lattice solution ``n`` whose full folded character is ``target``."""
    rs, theta = S.pair.rs, S.pair.theta
    by_slot = [[] for _ in S.folded_vectors]
    for e in S.entries:
        if e.multiplicity:
            ch = fold(rs, root_character(rs.roots[e.root_index]), S.involution, theta)
            by_slot[e.folded_index].extend([ch] * e.multiplicity)
    # distribute n_j over the basis vectors sharing folded vector j
    choices = []
    for j, nj in enumerate(n):
        choices.append(list(itertools.combinations_with_replacement(range(len(by_slot[j])), nj)))
    count = 0
    for pick in itertools.product(*choices):
        total = CharacterOfT.trivial(rs.ambient_dim)
        for j, idxs in enumerate(pick):
            for i in idxs:
                ch = by_slot[j][i]
                total = CharacterOfT(
                    tuple(a + b for a, b in zip(total.lambda_re, ch.lambda_re)),
                    tuple(a + b for a, b in zip(total.lambda_im, ch.lambda_im)),
                    tuple(a + b for a, b in zip(total.m, ch.m)),
                )
        if total == target:
            count += 1
    return count


@dataclass(frozen=True)
class DistinctionEntry:
    involution: object
    multiset: NormalFiberMultiset
    tau_coordinates: tuple
    solutions: tuple
    feasible: bool
    symmetric: bool
    sym_dimension: int

    @property
    def tau(self) -> tuple:
        """Projected real folded weight, ambient coordinates."""
        return self.multiset.pair.rs.from_simple_coordinates(self.tau_coordinates)


@dataclass(frozen=True)
class DistinctionReport:
    pair: object
    character: CharacterOfT
    entries: tuple = field(default_factory=tuple)

    @property
    def feasible_count(self) -> int:
        return sum(e.feasible for e in self.entries)

    @property
    def orbit_count(self) -> int:
        return len(self.entries)

    @property
    def any_feasible(self) -> bool:
        return self.feasible_count > 0


def evaluate_involution(pair, chi: CharacterOfT, tw, S: NormalFiberMultiset | None = None) -> DistinctionEntry:
    rs, theta = pair.rs, pair.theta
    if S is None:
        S = normal_multiset(pair, tw)
    coords = la.matvec(tw.fold_coordinate_matrix, chi.lambda_re)
    solutions = tuple(solve_lattice(S.folded_coordinates, coords))
    matches = 0
    if solutions:
        folded = fold(rs, chi, tw, theta)
        matches = sum(_full_matches(S, n, folded) for n in solutions)
    symmetric = _is_symmetric(chi, tw)
    feasible = matches > 0
    if feasible and not (symmetric and matches == 1):
        raise InternalCheckFailed(
            f"feasible at {tw.element!r} but symmetric={symmetric}, "
            f"matches={matches}, solutions={solutions}"
        )
    return DistinctionEntry(tw, S, coords, solutions, feasible, symmetric, matches)


def _is_symmetric(chi: CharacterOfT, tw) -> bool:
    """``chi^{-1} == w.theta(chi)``, comparing the real parts first."""
    w, theta = tw.element, tw.theta
    re = la.matvec(w.matrix, la.matvec(theta.matrix, chi.lambda_re))
    if any(a != -b for a, b in zip(re, chi.lambda_re)):
        return False
    return invert_char(chi) == weyl_act_char(w, theta_act_char(theta, chi))


def check_distinction(pair, chi: CharacterOfT, budget: int = DEFAULT_BUDGET) -> DistinctionReport:
    """Run the folded-equation test at every twisted involution of ``pair``."""
    if not is_dominant(pair.rs, chi):
        raise NotDominant(
            "character is not dominant; normalize it first with "
            "symmpair.langlands.dominant_representative"
        )
    entries = tuple(
        evaluate_involution(pair, chi, tw)
        for tw in twisted_involutions(pair.rs, pair.theta, budget)
    )
    return DistinctionReport(pair, chi, entries)
