import pytest

from symbpow.ideals import Ideal, equals, hilbert_series, power
from symbpow.polyring import GF, GradedRing
from symbpow.resolve import is_acm
from symbpow.schemes import (AlphaTuple, LineConfig, PointConfig, aci_presentation, alpha_tuple, classify_p1p1,
                             fat_points_ideal, fermat_configuration, fermat_ideal, fermat_points, ferrers_config,
                             general_lines_p3, general_p1p1_points, generic_matrix_minors, linkage_residual,
                             p1p1_config, point_ideal, random_ci, scroll_ideal)

R = GradedRing(["x0", "x1", "x2"])
P3 = GradedRing(["x0", "x1", "x2", "x3"])


def test_point_ideals():
    P = point_ideal((1, 0, 0), R)
    assert equals(P, Ideal(R, [R.parse("x1"), R.parse("x2")]))
    assert equals(fat_points_ideal([(1, 0, 0)], [2], R), power(P, 2))


def test_point_ideal_vanishes_at_point():
    P = point_ideal((2, -1, 3), R)
    for g in P.gens:
        assert g.evaluate((2, -1, 3)) == 0


def test_alpha_tuples():
    assert alpha_tuple(p1p1_config([((1, 0), (1, 0)), ((1, 0), (0, 1)), ((0, 1), (1, 0))])) == (2, 1)
    grid = [((1, i), (1, j)) for i in range(3) for j in range(2)]
    assert alpha_tuple(p1p1_config(grid)) == (2, 2, 2)
    assert alpha_tuple(general_p1p1_points(5, seed=3)) == (1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        AlphaTuple((1, 2))


def test_p1p1_classification_kinds():
    assert classify_p1p1(ferrers_config((2, 2))).kind == "CI"
    assert classify_p1p1(ferrers_config((2, 1))).kind == "ACI"
    c = classify_p1p1(ferrers_config((3, 2, 1)))
    assert c.kind == "other" and c.mu == 4
    assert classify_p1p1(general_p1p1_points(5, seed=0)).kind == "non-ACM"


def test_aci_presentation_twists():
    P = aci_presentation((3, 1))
    a, b, c, d = AlphaTuple((3, 1)).aci_parameters()
    assert (a, b, c, d) == (3, 1, 1, 1)
    assert [tuple(t) for t in P.G.twists] == [(c + d, 0), (c, b), (0, a)]
    assert [tuple(t) for t in P.F.twists] == [(c + d, b), (c, a)]


def test_scroll_and_minors():
    J = scroll_ideal(2)
    assert len(J.gb) == 3
    assert all(g.total_degree() == 2 for g in J.gb)
    assert is_acm(J)
    assert len(generic_matrix_minors(2, 4, 2).gens) == 6


def test_fermat_components_over_rationals():
    cfg = fermat_configuration(3, R)
    assert equals(cfg.ideal(), fermat_ideal(3, R))


def test_fermat_points_over_prime_field():
    F = GF(31)
    S = R.with_field(F)
    pts = fermat_points(3, F)
    assert len(pts) == 12
    assert equals(PointConfig(S, pts).ideal(), fermat_ideal(3, S))


def test_linkage_residual_negative_control():
    ci = random_ci([2, 2], P3, seed=1)
    assert linkage_residual(ci, ci).is_unit()


def test_lines():
    cfg = LineConfig(P3, [("x0", "x1"), ("x2", "x3")])
    assert equals(cfg.ideal(), Ideal(P3, [P3.parse(g) for g in ["x0*x2", "x0*x3", "x1*x2", "x1*x3"]]))
    assert cfg.meeting_pairs() == []
    meet = LineConfig(P3, [("x0", "x1"), ("x0", "x2")])
    assert meet.meeting_pairs() == [(0, 1)]
    with pytest.raises(ValueError):
        LineConfig(P3, [("x0", "x1"), ("x1", "x0 + x1")])
    g = general_lines_p3(3, seed=0)
    # skew lines impose 3(d+1) conditions from d = 2 on (one quadric contains them)
    assert hilbert_series(g.ideal()).values(4)[2:] == [3 * (d + 1) for d in (2, 3, 4)]


def test_concurrent_lines_are_not_tagged_lci():
    cfg = LineConfig(P3, [("x0", "x1"), ("x0", "x2"), ("x1", "x2")])
    assert cfg.has_concurrent_triple()
    assert "lci" not in cfg.ideal().tags
