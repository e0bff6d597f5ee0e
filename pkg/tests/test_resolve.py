from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from symbpow.errors import HypothesisError
from symbpow.ideals import Ideal
from symbpow.polyring import GradedRing
from symbpow.resolve import (BettiTable, ChainComplex, ModuleMap, Presentation, exactness_hypotheses, format_betti,
                             is_acm, is_saturated, minimal_resolution, power_complex, projective_dimension,
                             verify_complex)
from symbpow.schemes import fermat_ideal, general_p1p1_points, random_ci, scroll_ideal
from symbpow.symbolic import predicted_power_betti

K2 = GradedRing(["x0", "x1"])
P3 = GradedRing(["x0", "x1", "x2", "x3"])
R = GradedRing(["x", "y", "z"])


def I_(ring, *gens, **tags):
    return Ideal(ring, [ring.parse(g) for g in gens], tags)


def test_koszul_resolution():
    I = I_(K2, "x0", "x1")
    C, B = minimal_resolution(I)
    assert C.ranks() == [1, 2, 1]
    assert B.totals() == [1, 2, 1]
    assert verify_complex(C, I).ok


def test_corrupted_differential_is_caught():
    I = I_(P3, "x0", "x1", "x2")
    C, _ = minimal_resolution(I)
    d = C.maps[1]
    bad = [list(row) for row in d.matrix]
    bad[0][0] = -bad[0][0] if bad[0][0] else bad[1][0]
    maps = list(C.maps)
    maps[1] = ModuleMap(d.source, d.target, bad)
    rep = verify_complex(ChainComplex(C.modules, maps, I), I)
    assert not rep.d_squared_zero and not rep.ok


def test_betti_of_zero_ideal():
    B = minimal_resolution(Ideal(P3, []))[1]
    assert format_betti(B) == "     0\n  0: 1\nTot: 1"


def test_betti_json_round_trip():
    B = minimal_resolution(fermat_ideal(3, R))[1]
    assert BettiTable.from_json(B.to_json()) == B
    assert B.to_json()["pdim"] == 2


def test_complete_intersection_power_complex_ranks():
    I = I_(P3, "x0^2 + x1*x2", "x3^3")
    C = power_complex(Presentation.of_ideal(I), 2)
    assert C.ranks() == [1, 3, 2]
    assert verify_complex(C, I ** 2).ok


def test_fermat_square_complex():
    I = fermat_ideal(3, R)
    rep = exactness_hypotheses(I, 2)
    assert rep.passed
    C = power_complex(Presentation.of_ideal(I), 2)
    assert C.ranks()[1:] == [predicted_power_betti(3, 2, i) for i in (1, 2, 3)] == [6, 6, 1]
    assert verify_complex(C, I ** 2).ok
    # length three in P^2 means the square is not saturated
    assert not is_saturated(I ** 2)


def test_hypotheses_scroll_and_non_acm():
    assert exactness_hypotheses(scroll_ideal(2), 2).passed
    J = general_p1p1_points(5, seed=0).ideal()
    rep = exactness_hypotheses(J, 2)
    assert rep.checks["acm"] == "fail" and not rep.passed


def test_acm_and_saturation():
    I = I_(P3, "x0^2 - x1*x2", "x3^2 + x0*x1")
    assert is_acm(I) and projective_dimension(I) == 2
    assert is_saturated(I)
    assert not is_saturated(I_(K2, "x0^2", "x0*x1"))


def test_presentation_rejects_non_syzygy():
    gens = [R.parse("x"), R.parse("y")]
    with pytest.raises(HypothesisError):
        Presentation.from_matrix(R, gens, [["y"], ["x"]])


@settings(max_examples=8)
@given(st.integers(0, 10 ** 5), st.integers(1, 3), st.integers(1, 2), st.integers(1, 3))
def test_strand_complex_on_random_complete_intersections(seed, a, b, m):
    I = random_ci([a, b], P3, seed=seed)
    C = power_complex(Presentation.of_ideal(I), m)
    d = 2
    assert C.ranks()[1:] == [comb(d - 1, i - 1) * comb(d + m - i, d - 1) for i in range(1, C.length() + 1)]
    assert verify_complex(C, I ** m).ok
