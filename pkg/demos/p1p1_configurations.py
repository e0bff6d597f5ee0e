"""Reduced point sets in P^1 x P^1 and the powers of their ideals.

A set is described by its alpha tuple, the sizes of its fibres over the
first factor.  Constant tuples are complete intersections, two-valued ones
almost complete intersections, and anything else has at least four
generators, which is where the cube first picks up extra symbolic elements.

Run: python3 demos/p1p1_configurations.py
"""

import warnings

from symbpow.resolve import betti_table, format_betti, power_complex
from symbpow.schemes import AlphaTuple, aci_presentation, classify_p1p1, ferrers_config, triple_point_twists
from symbpow.symbolic import classify_all_powers

warnings.simplefilter("ignore")

for alpha in [(2, 2), (2, 1), (3, 1), (3, 2, 1)]:
    cfg = ferrers_config(alpha)
    cl = classify_p1p1(cfg)
    rep = classify_all_powers(cfg.ideal(), n=3, max_m=3, config=cfg)
    print("alpha = %s  ->  %s, mu = %d" % (alpha, cl.kind, cl.mu))
    for v in rep.verdicts:
        print("   ", v.format())
    if cl.kind == "ACI":
        B3 = betti_table(cfg.ideal() ** 3)
        print("    R/I^3 has projective dimension %d (not ACM, yet saturated)" % B3.pdim)
    print()

# Triple points on the ACI support alpha = (2, 1): the cube of the ideal is
# resolved by the strand complex, whose twists have a closed form.
alpha = AlphaTuple((2, 1))
a, b, c, d = alpha.aci_parameters()
C = power_complex(aci_presentation(alpha), 3)
print("triple points on alpha = (2, 1):")
print(format_betti(C.betti()))
closed = triple_point_twists(a, b, c, d)
same = all(sorted(tuple(t) for t in M.twists) == sorted(w) for M, w in zip(C.modules[1:], closed))
print("closed-form twists agree:", same)
