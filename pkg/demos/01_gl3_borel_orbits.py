"""
Borel orbits for the split Galois pair of GL_3
==============================================

The orbit representatives are the involutions of S_3. For each one we list
the negative roots on the normal fiber and check them against the closed
form I_w = {(i, j) : i > j, w(i) > w(j)}.
"""

from symmpair import galois_split_pair, gl, gln_oracle, normal_multiset, twisted_involutions
from symmpair.weyl import to_permutation

rs = gl(3)
pair = galois_split_pair(rs)
reps = twisted_involutions(rs, pair.theta)
print(f"{len(reps)} twisted involutions")

for tw in reps:
    perm = to_permutation(tw.element)
    S = normal_multiset(pair, tw)
    roots = sorted(rs.roots[e.root_index] for e in S.entries)
    closed_form = sorted(gln_oracle(3, perm))
    print(f"w = {[p + 1 for p in perm]}  |S| = {S.dimension}  I_w = {closed_form}")
    for r in roots:
        print("    ", tuple(int(x) for x in r))

# the telephone numbers come out of the same enumeration
counts = [len(twisted_involutions(gl(n), galois_split_pair(gl(n)).theta)) for n in range(2, 8)]
print("counts for n = 2..7:", counts)
