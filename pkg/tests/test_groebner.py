import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderline.groebner import (
    buchberger,
    colon,
    colon_ideal,
    extend_groebner,
    ideal_contains,
    ideal_equal,
    initial_ideal,
    intersect,
    is_groebner,
    is_saturated,
    normal_form,
    parse_order,
    saturate,
    saturate_irrelevant,
    truncation,
    weight_initial_ideal,
)
from borderline.parse import parse_ideal, parse_polynomial
from borderline.ring import QQ, GradedRing, Ideal, Polynomial

from conftest import points_ideal, random_points
from oracles import dense_hf

R3 = GradedRing.parse("P2")


def hom_poly(draw_terms, deg):
    return Polynomial(R3, {e: QQ(c) for e, c in draw_terms.items() if sum(e) == deg})


@st.composite
def small_ideals(draw):
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 3))
        exps = [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)]
        chosen = draw(st.lists(st.sampled_from(exps), min_size=1, max_size=3, unique=True))
        coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(chosen), max_size=len(chosen)))
        gens.append(Polynomial(R3, dict(zip(chosen, coeffs))))
    return Ideal(R3, gens)


@settings(max_examples=40, deadline=None)
@given(small_ideals())
def test_basis_is_groebner_and_hf_matches_dense(I):
    gb = buchberger(I)
    assert is_groebner(gb.elements, gb.order)
    raw = [dict(g.terms) for g in I.gens]
    for d in range(0, 6):
        assert gb.hilbert_function((d,)) == dense_hf(raw, 3, d)


@settings(max_examples=30, deadline=None)
@given(small_ideals(), st.randoms(use_true_random=False))
def test_reduced_basis_is_independent_of_generator_order(I, rnd):
    gens = list(I.gens)
    rnd.shuffle(gens)
    scaled = [g * QQ(rnd.randint(1, 5)) for g in gens]
    assert buchberger(Ideal(R3, scaled)).raw == buchberger(I).raw


@settings(max_examples=25, deadline=None)
@given(small_ideals())
def test_normal_form_kills_members(I):
    gb = buchberger(I)
    for g in I.gens:
        assert normal_form(g * R3.var(1), gb).is_zero()
        h = g * R3.var(2) + R3.var(0) ** (g.degree()[0] + 1)
        assert normal_form(h, gb) == normal_form(R3.var(0) ** (g.degree()[0] + 1), gb)


@settings(max_examples=20, deadline=None)
@given(small_ideals(), small_ideals())
def test_intersection_membership(I, J):
    K = intersect(I, J)
    assert ideal_contains(I, K) and ideal_contains(J, K)
    for f in I.gens:
        for g in J.gens:
            assert buchberger(K).contains(f * g)


def test_monomial_intersection_is_lcm():
    I = parse_ideal("y0^2, y1", R3)
    J = parse_ideal("y0*y1^2", R3)
    assert ideal_equal(intersect(I, J), parse_ideal("y0^2*y1^2, y0*y1^2", R3))


def test_colon():
    I = parse_ideal("y0^2*y1, y0*y2^3", R3)
    f = parse_polynomial("y0", R3)
    Q = colon(I, f)
    assert ideal_equal(Q, parse_ideal("y0*y1, y2^3", R3))
    # (I : (y0, y1)) = (I : y0) ∩ (I : y1)
    both = colon_ideal(I, parse_ideal("y0, y1", R3))
    assert ideal_equal(both, intersect(Q, colon(I, R3.var(1))))
    for g in Q.gens:
        assert buchberger(I).contains(g * f)


def test_saturation_recovers_truncated_points():
    pts = random_points(random.Random(3), [3], 4)
    I = points_ideal(R3, pts)
    assert is_saturated(I)
    T = truncation(I, 4)
    assert not is_saturated(T)
    assert ideal_equal(saturate_irrelevant(T), I)


def test_saturation_on_product():
    R = GradedRing.parse("P1xP1")
    I = points_ideal(R, [[[1, 0], [0, 1]], [[1, 1], [1, 2]]])
    # I times the irrelevant ideal has the same saturation
    J = Ideal(R, [g * R.var(i) * R.var(j) for g in I.gens for i in (0, 1) for j in (2, 3)])
    assert ideal_equal(saturate_irrelevant(J), I)


def test_saturate_by_variable():
    I = parse_ideal("y0^3*y1, y0^2*y2", R3)
    assert ideal_equal(saturate(I, R3.var(0)), parse_ideal("y1, y2", R3))


def test_lex_initial_ideal_of_L():
    L = parse_ideal("y0*y2^2 + y1^3, y0^2*y2, y0^2*y1", R3)
    K = parse_ideal("y0*y2^2, y0^2*y2, y0^2*y1, y0*y1^3, y1^6", R3)
    assert ideal_equal(initial_ideal(L, "lex:y0<y1<y2"), K)


def test_order_descriptors():
    o = parse_order("lex:y0<y1<y2", R3)
    assert o.perm == (2, 1, 0)
    assert parse_order("lex:y2>y1>y0", R3) == o
    assert parse_order("grevlex", R3).perm == (0, 1, 2)
    e = parse_order("lex:y0<...", R3)
    assert e.perm[-1] == 0
    with pytest.raises(ValueError):
        parse_order("lex:y0<y0<y1", R3)
    with pytest.raises(ValueError):
        parse_order("lex:y0<y1", R3)


def test_weight_initial_ideal():
    I = parse_ideal("y0^2 + y1*y2, y1^3", R3)
    w = parse_order("weight:[0,1,1]", R3)
    init = weight_initial_ideal(I, w)
    assert buchberger(init).contains(parse_polynomial("y1*y2", R3))


def test_extend_matches_fresh_basis():
    I = parse_ideal("y0^2 - y1*y2, y1^2", R3)
    gb = buchberger(I)
    new = [parse_polynomial("y0*y1*y2", R3)]
    assert extend_groebner(gb, new).raw == buchberger(I + Ideal(R3, new)).raw


def test_cache_returns_same_basis():
    I = parse_ideal("y0^2, y1^2 - y0*y2", R3)
    assert buchberger(I) is buchberger(parse_ideal("y0^2, y1^2 - y0*y2", R3))


def test_unit_ideal():
    gb = buchberger(Ideal(R3, [R3.const(1)], check=False))
    assert gb.is_unit()
