"""What breaks in non-prime dimensions.

The direct recipe still produces d orthonormal eigenbases for any d, and
each of them stays unbiased to the computational basis (every amplitude
has modulus 1/sqrt(d)).  What fails is unbiasedness between the eigenbases
themselves: for composite d some overlap moduli leave 1/sqrt(d) by a wide
margin, so no complete set arises this way.
"""

import numpy as np

import mubkit as mk

for d in (6, 9):
    mub_set = mk.build_complete_set(d, force=True)   # refuses without force
    rep = mk.verify_set(mub_set)
    print(f"d = {d}: {len(mub_set.bases)} bases built, verification pass = {rep.passed}")
    print(f"  note: {rep.details['note']}")

    worst = 0.0
    worst_pair = None
    for i, a_basis in enumerate(mub_set.bases):
        for b_basis in mub_set.bases[i + 1 :]:
            moduli = np.abs(mk.overlap_matrix(a_basis, b_basis))
            deviation = np.abs(moduli - 1 / np.sqrt(d)).max()
            if "s" in (a_basis.label, b_basis.label):
                assert deviation < 1e-10  # computational pairs stay clean
            elif deviation > worst:
                worst, worst_pair = deviation, (a_basis.label, b_basis.label)

    print(f"  every eigenbasis is still unbiased to the computational basis")
    print(f"  but pair {worst_pair} misses 1/sqrt({d}) by {worst:.3f}\n")

print("prime-power dimensions are rescued by the tensor construction:")
print(f"  d = 9 via classes: {len(mk.build_composite_set(3, 2).bases)} verified bases")
print("  d = 6 has no prime-power factorization, and indeed no recipe here reaches 7 bases")
