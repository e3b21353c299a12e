import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderline.groebner import buchberger, truncation
from borderline.hilbert import (
    HilbertSeries,
    MacaulayRep,
    NonStabilizingError,
    generic_hilbert_function,
    has_generic_hf,
    hilbert_function_la,
    macaulay_ok,
    macaulay_upper,
    stable_value,
)
from borderline.parse import parse_ideal
from borderline.ring import GradedRing

import checks
from conftest import points_ideal, random_points
from oracles import lex_growth

R3 = GradedRing.parse("P2")


def test_monomial_ci_row():
    gb = buchberger(parse_ideal("y0^2, y1^3, y2^4", R3))
    assert [gb.hilbert_function((k,)) for k in range(7)] == [1, 3, 5, 6, 5, 3, 1]


@pytest.mark.parametrize("a,b", [(1, 2), (2, 3), (1, 1), (3, 3)])
def test_binomial_pair_value_at_a_plus_b(a, b):
    gb = buchberger(parse_ideal(f"y0^{a + 1}, y1^{b + 1}", R3))
    assert gb.hilbert_function((a + b,)) == (a + 1) * (b + 1)


def test_standard_monomials_agree_with_linear_algebra():
    I = parse_ideal("y0^2 - y1*y2, y1^3 + y0*y2^2, y2^4", R3)
    gb = buchberger(I)
    for k in range(7):
        assert gb.hilbert_function((k,)) == hilbert_function_la(I, (k,))


def test_generic_hilbert_function():
    assert [generic_hilbert_function(R3, 4, k) for k in range(4)] == [1, 3, 4, 4]
    R = GradedRing.parse("P2xP2xP2")
    assert generic_hilbert_function(R, 3, (1, 1, 0)) == 3
    assert generic_hilbert_function(R3, 1, 5) == 1


def test_has_generic_hf():
    import random
    I = points_ideal(R3, random_points(random.Random(1), [3], 3))
    assert has_generic_hf(I, 3, 5)[0]
    T = truncation(parse_ideal("y0^2, y1^3", R3), 3)
    assert has_generic_hf(T, 6, 7)[0]
    ok, bad = has_generic_hf(parse_ideal("y0, y1", R3), 2, 3)
    assert not ok and bad == (1,)


def test_stable_values():
    R = GradedRing.parse("P1xP1")
    I = points_ideal(R, [[[1, 0], [1, 0]], [[0, 1], [1, 1]], [[1, 1], [0, 1]]])
    assert stable_value(I) == 3
    assert stable_value(parse_ideal("y0*y1, y0*y2, y1^6", R3)) == 7
    assert stable_value(parse_ideal("y0^2, y1^3", R3)) == 6
    with pytest.raises(NonStabilizingError):
        stable_value(parse_ideal("y0", R3))


def test_hilbert_series():
    hs = HilbertSeries.of(parse_ideal("y0^2, y1^3", R3))
    assert hs.polynomial_constant() == 6
    assert [hs.value(k) for k in range(5)] == [1, 3, 5, 6, 6]


def test_macaulay_examples():
    assert macaulay_upper(0, 3) == 0
    assert macaulay_upper(3, 1) == 6
    rep = MacaulayRep.of(10, 3)
    assert sum(__import__("math").comb(k, i) for k, i in rep.terms()) == 10


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 25), st.integers(1, 4))
def test_macaulay_upper_matches_lex_segments(h, d):
    assert macaulay_upper(h, d) == lex_growth(h, d)


def test_macaulay_ok_rejects_fast_growth():
    assert macaulay_ok([1, 3, 5, 6, 5, 3, 1])
    assert not macaulay_ok([1, 2, 4])


def test_superadditivity_exhaustive():
    assert checks.superadditivity_violations(60) == 0


def test_two_part_inequality():
    assert checks.split_growth_violations(8) == []


def test_growth_inequality():
    assert checks.full_piece_growth_violations(8, 12) == []


def test_ci_symmetry():
    assert checks.ci_symmetry_violations(6) == []


def test_point_ideals_against_evaluation():
    assert checks.point_ideal_property_failures(20, seed=11) == []
