import random

import pytest
from hypothesis import given, settings, strategies as st

from symbpow.errors import HypothesisError
from symbpow.ideals import Ideal, contains, equals, intersect, power, saturate
from symbpow.polyring import GradedRing
from symbpow.resolve import BettiTable, betti_table
from symbpow.schemes import (LineConfig, PointConfig, fermat_configuration, fermat_ideal, ferrers_config,
                             p1p1_config, point_ideal, random_form, scroll_ideal)
from symbpow.symbolic import (classify_all_powers, powers_equal, predicted_power_betti, romer_check,
                              symbolic_power_components, symbolic_power_saturation)

R = GradedRing(["x", "y", "z"])
P2 = GradedRing(["x0", "x1", "x2"])
P3 = GradedRing(["x0", "x1", "x2", "x3"])


def test_complete_intersection_square_unchanged():
    I = Ideal(P3, [P3.parse("x0"), P3.parse("x1")], {"lci": True, "unmixed": True})
    assert equals(symbolic_power_saturation(I, 2), power(I, 2))


def test_single_point_component_route():
    P = point_ideal((1, 2, 3), P2)
    cfg = PointConfig(P2, [(1, 2, 3)])
    assert equals(symbolic_power_components(cfg, 3), power(P, 3))


def test_skew_lines_square_by_components():
    cfg = LineConfig(P3, [("x0", "x1"), ("x2", "x3")])
    A, B = [P for P, _ in cfg.components]
    assert equals(symbolic_power_components(cfg, 2), intersect(power(A, 2), power(B, 2)))
    assert powers_equal(cfg.ideal(), 2, cfg).equal


def test_fermat_square_is_not_symbolic():
    I = fermat_ideal(3, R)
    v = powers_equal(I, 2, fermat_configuration(3, R))
    assert not v.equal
    assert v.routes == ["components", "saturation"]
    assert v.witness_degree == 8
    assert contains(v.symbolic, v.witness) and not contains(I ** 2, v.witness)


def test_scroll_square_is_symbolic():
    J = scroll_ideal(2)
    assert equals(symbolic_power_saturation(J, 2), power(J, 2))


def test_saturation_route_needs_tags():
    with pytest.raises(HypothesisError):
        symbolic_power_saturation(Ideal(P3, [P3.parse("x0*x1")]), 2)
    with pytest.raises(HypothesisError):
        powers_equal(Ideal(P3, [P3.parse("x0*x1")]), 2)


def test_staircase_cube_differs():
    cfg = ferrers_config((3, 2, 1))
    rep = classify_all_powers(cfg.ideal(), max_m=3, config=cfg)
    assert rep.mu == 4 and rep.hypotheses_hold
    assert [v.equal for v in rep.verdicts] == [True, True, False]
    assert rep.witness is not None


def test_aci_all_equal():
    cfg = ferrers_config((2, 1))
    rep = classify_all_powers(cfg.ideal(), max_m=3, config=cfg)
    assert rep.mu == 3 and all(v.equal for v in rep.verdicts)


def test_unsaturated_input_refused():
    I = Ideal(P2, [P2.parse("x0^2"), P2.parse("x0*x1")])
    with pytest.raises(HypothesisError):
        classify_all_powers(I)


def test_predicted_ranks():
    assert [predicted_power_betti(3, 2, i) for i in (1, 2, 3)] == [6, 6, 1]
    with pytest.raises(ValueError):
        predicted_power_betti(1, 2, 1)


def test_romer_bound_on_koszul():
    B = betti_table(Ideal(P2, P2.gens()))
    r = romer_check(B)
    # Koszul: beta = (3, 3, 1), M = (1, 2, 3)
    assert [row[1] for row in r.rows] == [3, 3, 1]
    assert [row[2] for row in r.rows] == [3, 3, 1]
    assert r.holds


def test_romer_detects_violation():
    B = BettiTable({(0, (0,)): 1, (1, (1,)): 10, (2, (2,)): 1}, 1)
    assert not romer_check(B).holds


# random reduced configurations for the dual-route property

def _random_config(kind, seed):
    rng = random.Random(seed)
    if kind == "p2":
        pts = set()
        while len(pts) < rng.randint(2, 5):
            pts.add((1, rng.randint(-4, 4), rng.randint(-4, 4)))
        return PointConfig(P2, sorted(pts))
    if kind == "p1p1":
        pts = set()
        while len(pts) < rng.randint(2, 5):
            pts.add(((1, rng.randint(0, 2)), (1, rng.randint(0, 2))))
        return p1p1_config(sorted(pts))
    lines = []
    while len(lines) < rng.randint(1, 4):
        cand = lines + [(random_form(P3, 1, rng), random_form(P3, 1, rng))]
        try:
            LineConfig(P3, cand)
        except ValueError:
            continue
        lines = cand
    return LineConfig(P3, lines)


@settings(max_examples=20)
@given(st.sampled_from(["p2", "p1p1", "lines"]), st.integers(0, 10 ** 6), st.integers(1, 2))
def test_routes_agree_on_random_configurations(kind, seed, m):
    cfg = _random_config(kind, seed)
    I = cfg.ideal()
    comp = symbolic_power_components(cfg, m)
    Pm = power(I, m)
    for g in Pm.gens:
        assert contains(comp, g)
    if I.tags.get("lci") and I.tags.get("unmixed"):
        assert equals(comp, saturate(Pm))
