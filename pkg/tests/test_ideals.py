import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from symbpow.errors import HomogeneityError
from symbpow.ideals import (Ideal, codimension, colon, contains, degree_dimension, dimension, equals,
                            hilbert_series, initial_degree, intersect, min_generators, power, product, saturate)
from symbpow.polyring import GradedRing
from symbpow.schemes import fermat_ideal, scroll_ideal

K2 = GradedRing(["x0", "x1"])
P3 = GradedRing(["x0", "x1", "x2", "x3"])
R = GradedRing(["x", "y", "z"])


def I_(ring, *gens, **tags):
    return Ideal(ring, [ring.parse(g) for g in gens], tags)


def test_colon_factors_out_variable():
    assert equals(colon(I_(K2, "x0^2", "x0*x1"), I_(K2, "x0")), I_(K2, "x0", "x1"))


def test_colon_by_itself_is_unit():
    I = I_(P3, "x0*x1", "x2^2")
    assert colon(I, I).is_unit()


def test_saturate_removes_embedded_origin():
    assert equals(saturate(I_(K2, "x0^2", "x0*x1")), I_(K2, "x0"))


def test_saturate_by_polynomial_ideal():
    I = I_(R, "x*(x - y)", "x*z")
    assert equals(saturate(I, I_(R, "x")), I_(R, "x - y", "z"))


def test_power_and_product():
    assert set(map(str, power(I_(K2, "x0", "x1"), 2).gens)) == {"x0^2", "x0*x1", "x1^2"}
    I = I_(P3, "x0*x2 - x1^2", "x3^2")
    assert equals(power(I, 1), I)
    A, B = I_(P3, "x0", "x1"), I_(P3, "x2", "x3")
    lines = I_(P3, "x0*x2", "x0*x3", "x1*x2", "x1*x3")
    assert equals(product(A, B), lines)
    assert equals(intersect(A, B), lines)


def test_intersect_trivial_cases():
    assert equals(intersect(I_(K2, "x0"), I_(K2, "x1")), I_(K2, "x0*x1"))
    I = I_(P3, "x0*x1", "x2^3 - x3^3")
    assert equals(intersect(I, I), I)


def test_contains_and_equals():
    I = I_(K2, "x0", "x1")
    assert contains(I, K2.parse("x0^2 + x1*x0"))
    assert not contains(I_(K2, "x0^2"), K2.parse("x0*x1"))
    J = Ideal(K2, I.gb)
    assert equals(I, J) and I == J


def test_hilbert_function_of_skew_lines():
    I = I_(P3, "x0*x2", "x0*x3", "x1*x2", "x1*x3")
    assert hilbert_series(I).values(6) == [1, 4, 6, 8, 10, 12, 14]
    assert dimension(I) == 2 and codimension(I) == 2


def test_hilbert_series_of_zero_ideal():
    H = hilbert_series(Ideal(P3, []))
    assert H.numerator == {(0,): 1}
    assert H.values(3) == [1, 4, 10, 20]


def test_codimensions():
    assert codimension(fermat_ideal(3, R)) == 2
    assert codimension(scroll_ideal(2)) == 2


def test_minimal_generators():
    counts, kept = min_generators(I_(K2, "x0^2", "x0*x1", "x1^2", "x0^2 + x1^2"))
    assert [(tuple(d), c) for d, c in counts] == [((2,), 3)]
    assert len(kept) == 3
    counts, _ = min_generators(fermat_ideal(3, R))
    assert [(tuple(d), c) for d, c in counts] == [((4,), 3)]
    assert initial_degree(fermat_ideal(3, R)) == 4


def test_homogeneity_required_for_hilbert_series():
    with pytest.raises(HomogeneityError):
        hilbert_series(I_(K2, "x0^2 + x1"))


def _brute_force_hf(I, d):
    """dim_k (R/I)_d: monomials of degree d minus the rank of I_d (independent linear algebra)."""
    ring = I.ring
    mons = [m for m in combinations_with_replacement(range(ring.nvars), d)]
    total = len(mons)
    return total - degree_dimension(I, (d,))


def _random_homogeneous_ideal(seed, ring, count, degree):
    rng = random.Random(seed)
    mons = list(combinations_with_replacement(range(ring.nvars), degree))
    gens = []
    for _ in range(count):
        terms = {}
        for m in rng.sample(mons, min(3, len(mons))):
            e = [0] * ring.nvars
            for v in m:
                e[v] += 1
            terms[tuple(e)] = rng.randint(-4, 4)
        gens.append(ring.from_dict({e: c for e, c in terms.items() if c}))
    return Ideal(ring, gens)


@settings(max_examples=15)
@given(st.integers(0, 10 ** 6), st.integers(1, 3), st.integers(1, 3))
def test_hilbert_series_agrees_with_brute_force(seed, count, degree):
    I = _random_homogeneous_ideal(seed, R, count, degree)
    H = hilbert_series(I)
    assert H.values(8) == [_brute_force_hf(I, d) for d in range(9)]


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6))
def test_ideal_algebra_laws(seed):
    I = _random_homogeneous_ideal(seed, R, 2, 2)
    J = _random_homogeneous_ideal(seed + 1, R, 2, 1)
    assert equals(power(I, 1) * power(I, 2), power(I, 3))
    P, X = product(I, J), intersect(I, J)
    assert P <= X and X <= I and X <= J
    S = saturate(I)
    assert equals(saturate(S), S)
    assert I <= S
