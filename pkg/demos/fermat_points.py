"""Twelve points in the plane whose square is not symbolic.

The ideal (x(y^3-z^3), y(z^3-x^3), z(x^3-y^3)) cuts out the nine points of
the complete intersection x^3 = y^3 = z^3 plus the three coordinate points.
It has three cubic-times-linear generators, which is one more than n = 2
allows for the second power to stay saturated.

Run: python3 demos/fermat_points.py
"""

from symbpow.ideals import equals, hilbert_series, saturate
from symbpow.polyring import GradedRing
from symbpow.resolve import Presentation, exactness_hypotheses, format_betti, power_complex, verify_complex
from symbpow.schemes import fermat_configuration, fermat_ideal
from symbpow.symbolic import powers_equal

R = GradedRing(["x", "y", "z"])
I = fermat_ideal(3, R)
cfg = fermat_configuration(3, R)
print("I =", ", ".join(map(str, I.gens)))
print("Hilbert function of R/I:", hilbert_series(I).values(6))
print("matches the intersection of its components:", equals(cfg.ideal(), I))

# The strand complex of I^2 has length three in a ring of dimension three,
# so R/I^2 has depth zero and I^2 cannot be saturated.
rep = exactness_hypotheses(I, 2)
print()
print(rep.format())
C = power_complex(Presentation.of_ideal(I), 2)
print(format_betti(C.betti()))
print("checks:", verify_complex(C, I ** 2).to_json())

I2 = I ** 2
print()
print("I^2 saturated:", equals(saturate(I2), I2))
v = powers_equal(I, 2, cfg)
print(v.format())
