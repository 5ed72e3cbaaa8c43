"""
Root sums behind the modular character identity
================================================

For every twisted involution the positive roots split into those moved but
kept positive (S1), fixed (S2) and sent negative (S3). The identity between
modular characters reduces to sum_{S3} (alpha + w theta alpha) = 0.
"""

from symmpair import InvolutionSpec, PairSpec, build_root_system, galois_split_pair, verify_star

for label in ("A2", "B2", "G2", "B3", "D4"):
    rep = verify_star(galois_split_pair(build_root_system(label)))
    sizes = sorted({e.sizes for e in rep.entries})
    print(f"{label}: {len(rep.entries)} involutions, holds={rep.holds}, S-sizes seen: {sizes}")

# a non-split twist by the diagram automorphism of A3
rs = build_root_system("A3")
flip = InvolutionSpec([[0, 0, 1], [0, 1, 0], [1, 0, 0]], -1, "semilinear")
rep = verify_star(PairSpec(rs, flip, "A3-diagram"))
print(f"A3 diagram twist: {len(rep.entries)} involutions, holds={rep.holds}")
