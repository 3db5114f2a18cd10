"""The structured exponential sums behind unbiasedness.

Scaling any cross-basis overlap by d gives a quadratic exponential sum
over the d-th roots of unity.  For prime d its magnitude is forced: d when
both labels agree, 0 when only the basis labels agree, sqrt(d) otherwise.
The package evaluates the squared magnitude exactly, as an element of a
cyclotomic ring, so the trichotomy is an integer identity rather than a
float coincidence.
"""

from collections import Counter

import mubkit as mk

d = 7
print(f"dimension d = {d}: sweeping all {d**4} index tuples\n")

observed = Counter()
for a in range(d):
    for b in range(d):
        for n_alpha in range(d):
            for n_beta in range(d):
                abs2, numeric = mk.gauss_sum_magnitude(d, a, b, n_alpha, n_beta)
                expected = mk.mub.gauss_sum_expected_sq(d, a, b, n_alpha, n_beta)
                assert abs2 == expected, (a, b, n_alpha, n_beta)
                observed[expected] += 1

print("squared magnitude -> tuple count")
for value, count in sorted(observed.items()):
    print(f"  {value:3d} -> {count}")

print(f"\nd^2 = {d * d} appears d^2 = {d * d} times (a = b, n_alpha = n_beta)")
print(f"0 appears d^2(d-1) = {d * d * (d - 1)} times (a = b, n_alpha != n_beta)")
print(f"d = {d} appears d^3(d-1) = {d**3 * (d - 1)} times (a != b)")

one_sum, numeric = mk.gauss_sum_magnitude(3, 1, 0, 0, 0)
print(f"\nsmall example, d = 3, a - b = 1: the sum collapses to 1 + 2q,")
print(f"with |1 + 2q|^2 = {one_sum.as_int()} exactly (numeric magnitude {numeric:.6f})")
