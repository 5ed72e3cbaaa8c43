"""
The folded character equation
=============================

For a dominant character chi and a twisted involution w, a nonzero
monomial on the normal fiber would have to solve
sum n_j (alpha_j + w theta alpha_j) = Re(chi + w theta chi).
Dominance forces every solution to be zero, so the only way through is
chi^{-1} = w theta(chi).
"""

import random

from symmpair import CharacterOfT, build_root_system, check_distinction, galois_split_pair, gl
from symmpair.sampling import random_dominant_character, random_symmetric_character

pair = galois_split_pair(gl(3))

for chi in (CharacterOfT((1, 0, -1)), CharacterOfT((2, 1, 0))):
    rep = check_distinction(pair, chi)
    print(chi)
    print("  w            |S|  tau (simple coords)  solutions  feasible")
    for e in rep.entries:
        word = "".join(f"s{i}" for i in e.involution.element.word) or "e"
        tau = tuple(str(x) for x in e.tau_coordinates)
        print(f"  {word:<12} {e.multiset.dimension:<4} {str(tau):<20} {len(e.solutions):<10} {e.feasible}")
    print(f"  feasible at {rep.feasible_count} of {rep.orbit_count}\n")

# a quick scan over B3: uniform characters almost never pass, symmetric ones always do somewhere
rng = random.Random(0)
b3 = galois_split_pair(build_root_system("B3"))
uniform = sum(check_distinction(b3, random_dominant_character(b3.rs, rng)).any_feasible for _ in range(200))
built = sum(check_distinction(b3, random_symmetric_character(b3, rng)).any_feasible for _ in range(200))
print(f"B3: {uniform}/200 uniform characters feasible, {built}/200 symmetric ones feasible")
