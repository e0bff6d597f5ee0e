"""Six points obtained by linkage, and the failure of their square.

Inside P^3 take a complete intersection of type (1,1,2): two points on a
line.  Link it through a general complete intersection of three quadrics
(eight points) to get six points with Hilbert function 1, 4, 6, 6, ...
They need four quadric generators, more than n = 3 allows, and the square
of their ideal is not saturated.  Re-running the construction in P^4 gives
a curve with the same Betti diagram whose square is saturated.

Run: python3 demos/linked_residual.py [--p4]
"""

import sys

from symbpow.ideals import hilbert_series, min_generators
from symbpow.polyring import GradedRing
from symbpow.resolve import betti_table, format_betti, is_saturated
from symbpow.schemes import linked_residual_112_222

nvars = 5 if "--p4" in sys.argv else 4
R = GradedRing(["x%d" % i for i in range(nvars)])
I, info = linked_residual_112_222(R, seed=0)
print("seed used:", info["seed"])
print("Hilbert function:", hilbert_series(I).values(5))
print("minimal generators:", [(tuple(d), c) for d, c in min_generators(I)[0]])
print()
print("R/I")
print(format_betti(betti_table(I)))
print()
print("R/I^2")
print(format_betti(betti_table(I ** 2)))
print()
print("I^2 saturated:", is_saturated(I ** 2))
