#!/usr/bin/env python3
"""The half-sum sufficiency bound and how tight it is.

For graphic sequences with minimum degree >= n/2, a bound on the sum of the
largest n/2 degrees already guarantees the consecutive-pairs matching.  The
test is evaluated exactly over the integers: no square roots, no floats.

The near-extremal family shows the bound is sharp up to an additive
constant: k* copies of d* followed by n/2's.  The construction only bites
when frac(n*sqrt(2)) <= 1/4, and its degree sum can come out odd (n = 10),
so each instance is reported with all of its flags instead of being
asserted to be a counterexample.
"""
from degmatch import DegreeSequence, corollary_bound_holds, star_check, tightness_scan

print("the bound against the exact family on regular sequences (n=8):")
for d in range(4, 8):
    seq = DegreeSequence((d,) * 8)
    print(
        f"   all degrees {d}: bound {str(corollary_bound_holds(seq)):5s} "
        f"family {star_check(seq).verdict}"
    )
print("-> the bound is sufficient but not necessary\n")

print("near-extremal instances for even n up to 26:")
print("   n  d*  k*  frac<=1/4  sum-even  graphic  fails-at-k*")
for t in tightness_scan(26):
    print(
        f"  {t.n:3d} {t.d_star:3d} {t.k_star:3d}  "
        f"{str(t.alpha_le_quarter):9s} {str(t.sum_parity_even):9s} "
        f"{str(t.is_graphic):8s} {t.fails_star_at_k_star}"
    )
print(
    "\n-> n=10 lands in the right regime but its degree sum is odd;\n"
    "   n=22 is the first full counterexample: graphic, yet the matching\n"
    "   family fails exactly at k*=15 with 285 > 281"
)
