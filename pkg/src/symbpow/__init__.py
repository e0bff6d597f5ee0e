"""Exact computations with symbolic and ordinary powers of homogeneous ideals.

Layers, bottom up: ``polyring`` (rings, polynomials, parser), ``groebner``
(module Groebner bases, syzygies), ``ideals`` (ideal algebra, Hilbert series),
``resolve`` (minimal resolutions, strand complexes), ``schemes`` (point, line
and determinantal constructions), ``symbolic`` (symbolic powers and verdicts).
"""

from .errors import (HomogeneityError, HypothesisError, InvariantViolation, NotAGroebnerBasisError, ParseError,
                     RingMismatchError, SymbPowError)
from .polyring import GF, QQ, GradedRing, MonomialOrder, Polynomial
from .groebner import GroebnerBasis, buchberger, normal_form, syzygy_module
from .ideals import (Ideal, codimension, colon, dimension, hilbert_series, intersect, min_generators, power,
                     saturate)
from .resolve import BettiTable, Presentation, betti_table, format_betti, minimal_resolution, power_complex
from .symbolic import classify_all_powers, powers_equal, romer_check, symbolic_power

__all__ = [
    "SymbPowError", "ParseError", "RingMismatchError", "HomogeneityError", "NotAGroebnerBasisError",
    "HypothesisError", "InvariantViolation",
    "QQ", "GF", "GradedRing", "MonomialOrder", "Polynomial",
    "GroebnerBasis", "buchberger", "normal_form", "syzygy_module",
    "Ideal", "codimension", "colon", "dimension", "hilbert_series", "intersect", "min_generators", "power",
    "saturate",
    "BettiTable", "Presentation", "betti_table", "format_betti", "minimal_resolution", "power_complex",
    "classify_all_powers", "powers_equal", "romer_check", "symbolic_power",
]

__version__ = "0.1.0"
