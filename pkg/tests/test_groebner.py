import random

import pytest
from hypothesis import given, settings, strategies as st

from oracle import our_gb_set, sympy_reduced_gb
from symbpow.groebner import buchberger, normal_form, syzygy_module
from symbpow.polyring import GF, GradedRing, MonomialOrder

R = GradedRing(["x", "y", "z"])
P3 = GradedRing(["x0", "x1", "x2", "x3"])

CASES = [
    (R, ["x*(y^3-z^3)", "y*(z^3-x^3)", "z*(x^3-y^3)"]),
    (R, ["x^2 + y*z", "x*y - z^2", "y^3 - x*z"]),
    (P3, ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]),
    (P3, ["x0*x1", "x2*x3", "x0^2 + x1^2 + x2^2 + x3^2"]),
]


@pytest.mark.parametrize("ring,gens", CASES)
@pytest.mark.parametrize("order", ["grevlex", "lex"])
def test_reduced_gb_matches_sympy(ring, gens, order):
    S = ring if order == "grevlex" else ring.with_order(MonomialOrder.lex(ring.nvars))
    polys = [S.parse(g) for g in gens]
    assert our_gb_set(buchberger(polys)) == sympy_reduced_gb(polys, S, order)


def test_normal_form_membership():
    polys = [R.parse(g) for g in CASES[0][1]]
    G = buchberger(polys)
    f = R.parse("x^2") * polys[0] - R.parse("y*z") * polys[2]
    assert not normal_form(f, G)
    assert normal_form(R.parse("x^4*y"), G)


def test_syzygies_of_koszul_pair():
    f, g = R.parse("x^2"), R.parse("y^3")
    S = syzygy_module([f, g])
    assert len(S) == 1
    s = S[0]
    assert s[0] * f + s[1] * g == R.zero()


def test_syzygies_are_syzygies():
    polys = [P3.parse(g) for g in CASES[2][1]]
    S = syzygy_module(polys)
    assert len(S) >= 2
    for s in S:
        assert sum((s[i] * polys[i] for i in range(3)), P3.zero()) == P3.zero()


def test_gb_over_prime_field():
    S = GradedRing(["x", "y", "z"], field=GF(31))
    G = buchberger([S.parse(g) for g in CASES[0][1]])
    assert len(G) == len(buchberger([R.parse(g) for g in CASES[0][1]]))


def _random_forms(seed, count=3):
    rng = random.Random(seed)
    mons = [(a, b, c) for a in range(3) for b in range(3) for c in range(3) if a + b + c == 2]
    out = []
    for _ in range(count):
        out.append(R.from_dict({m: rng.randint(-3, 3) for m in rng.sample(mons, 3)}))
    return [f for f in out if f]


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6))
def test_reduced_gb_unique_and_idempotent(seed):
    polys = _random_forms(seed)
    if not polys:
        return
    G = buchberger(polys)
    shuffled = list(reversed(polys)) + [polys[0] * R.parse("x") + polys[-1] * R.parse("y")]
    assert our_gb_set(buchberger(shuffled)) == our_gb_set(G)
    assert our_gb_set(buchberger(G.elements)) == our_gb_set(G)
    for g in G.elements:
        assert not normal_form(g, G)
