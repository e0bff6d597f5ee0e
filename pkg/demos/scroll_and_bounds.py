"""The rational normal scroll P^1 x P^2 in P^5 and the Betti-number bound.

The three 2x2 minors of a generic 2x3 matrix define a smooth codimension
two ACM variety, so all of its powers are resolved by strand complexes and
coincide with its symbolic powers.  For each power we compare the ranks
with the binomial formula and test the conjectured upper bound on Betti
numbers in terms of the maximal shifts.

Run: python3 demos/scroll_and_bounds.py
"""

from symbpow.ideals import equals, saturate
from symbpow.resolve import Presentation, format_betti, power_complex, verify_complex
from symbpow.schemes import scroll_ideal
from symbpow.symbolic import predicted_power_betti, romer_check

J = scroll_ideal(2)
P = Presentation.of_ideal(J)
for m in (1, 2, 3):
    C = power_complex(P, m)
    vr = verify_complex(C, J ** m)
    ranks = C.ranks()[1:]
    want = [predicted_power_betti(3, m, i) for i in range(1, len(ranks) + 1)]
    print("m = %d: ranks %s (formula %s), resolution verified: %s" % (m, ranks, want, vr.ok))
    print(format_betti(C.betti()))
    print(romer_check(vr.expected).format())
    print("J^%d saturated: %s" % (m, equals(saturate(J ** m), J ** m)))
    print()
