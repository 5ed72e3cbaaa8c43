"""Combinatorics of Borel orbits on complex symmetric spaces.

Root systems, Weyl groups and twisted involutions, torus characters, the
normal-fiber character multisets of Borel orbits, the folded-character
feasibility test and the principal-series parameter calculus, all in exact
rational arithmetic.
"""

__version__ = "0.1.0"

from .chars import (  # noqa: E402
    CharacterOfT, compose_chars, fold, invert_char, is_dominant, theta_act_char,
    weyl_act_char, weyl_orbit_equivalent,
)
from .distinction import check_distinction, solve_fold_equation  # noqa: E402
from .errors import (  # noqa: E402
    BudgetExceeded, CartanError, DimensionMismatch, InputError, InvalidInvolution,
    NotDominant, NotTwisted, PreconditionError, SymmPairError,
)
from .involution import InvolutionSpec  # noqa: E402
from .langlands import (  # noqa: E402
    LanglandsParameter, check_conj_symmetry, contragredient_param, dominant_representative,
    theta_twist_param,
)
from .normalspace import gln_oracle, normal_multiset, sym_eigen_count  # noqa: E402
from .pairs import PairSpec, galois_split_pair, identity_pair, verify_star  # noqa: E402
from .rootsys import (  # noqa: E402
    RootSystem, build_root_system, gl, inner_product, standard_parabolic, standard_parabolics,
)
from .weyl import (  # noqa: E402
    WeylElement, act, enumerate_weyl, longest_element, simple_reflection, twisted_involutions,
)
