import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderline.apolarity import DualForm, annihilates
from borderline.groebner import ideal_equal
from borderline.parse import parse_ideal, parse_polynomial
from borderline.ring import GradedRing
from borderline.vsp import (
    OMEGA_TRIPLES,
    TERNARY_CUBICS,
    ci_slip_criterion,
    ci_vspbar,
    common_factor_degree,
    cw_cubic,
    cw_cubic_vspbar,
    cw_point_ideal,
    generic_omega_rank,
    monomial_ci,
    monomial_vps_report,
    nondegenerate_no_linear_factor,
    omega_matrix_rank,
    reducible_certificates,
    schubert_certificates,
    sylvester_binary,
    ternary_cubic_vspbar,
)

P1 = GradedRing.parse("P1")
R3 = GradedRing.parse("P2")


def _all_passed(rep):
    return all(c.get("passed", True) for c in rep.certificates)


@pytest.mark.parametrize("form,r,shape", [
    ("x0^3", 1, "point"),
    ("x0^2*x1", 2, "point"),
    ("x0^2*x1^2", 3, "P^1"),
    ("x0^3 + x1^3", 2, "point"),
    ("x0*x1^4", 2, "point"),
    ("x0^4 + x1^4 + (x0+x1)^4", 3, "P^1"),
])
def test_sylvester(form, r, shape):
    got_r, got_shape, rep = sylvester_binary(DualForm.parse(form, P1))
    assert (got_r, got_shape) == (r, shape)
    assert _all_passed(rep)


@given(st.lists(st.integers(-4, 4), min_size=6, max_size=6))
@settings(max_examples=25, deadline=None)
def test_sylvester_degrees_add_up(coeffs):
    terms = [f"{c}*x0^{5 - i}*x1^{i}" for i, c in enumerate(coeffs) if c]
    if not terms:
        return
    F = DualForm.parse(" + ".join(terms), P1)
    r, shape, rep = sylvester_binary(F)
    assert _all_passed(rep)
    assert 1 <= r <= 3


def test_sylvester_accepts_binary_form_in_more_variables():
    r, shape, _ = sylvester_binary(DualForm.parse("(x0+x1)^3 + (x1-x2)^3", R3))
    assert r == 2 and shape == "point"


@pytest.mark.parametrize("entry", TERNARY_CUBICS, ids=[e[0] for e in TERNARY_CUBICS])
def test_ternary_cubic_table(entry):
    _, form, _, brank = entry
    rep = ternary_cubic_vspbar(DualForm.parse(form, R3))
    assert rep.input["border_rank"] == brank
    assert rep.verdict == ("P^2" if brank == 4 else "point")
    assert _all_passed(rep)


def test_ternary_cubic_rejects_other_degrees():
    with pytest.raises(ValueError):
        ternary_cubic_vspbar(DualForm.parse("x0^4", R3))


@pytest.mark.parametrize("kind", ["A", "B", "C"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_cw_cubics(kind, n):
    rep = cw_cubic_vspbar(kind, n)
    expect = "P^2" if kind != "C" and n == 2 else "point"
    assert rep.verdict == expect
    assert rep.input["border_rank"] == (n + 1 if kind == "C" else n + 2)
    assert _all_passed(rep)


@pytest.mark.parametrize("n", [3, 4])
def test_cw_point_ideal_is_apolar(n):
    assert annihilates(cw_point_ideal(n), cw_cubic("B", n))


@pytest.mark.parametrize("a,b,expect", [
    (1, 2, "point"), (2, 3, "point"), (3, 4, "P^2"), (4, 5, "P^4"), (3, 6, "P^2"), (4, 7, "P^4"),
])
def test_ci_vspbar(a, b, expect):
    F = DualForm.parse(f"x0*x1^{a}*x2^{b}", R3)
    rep = ci_vspbar(F, monomial_ci(F))
    assert rep.verdict == expect
    assert _all_passed(rep)


def test_ci_vspbar_unresolved_beyond_hypotheses():
    F = DualForm.parse("x0*x1^5*x2^6", R3)
    rep = ci_vspbar(F, monomial_ci(F))
    assert rep.inconclusive


def test_ci_vspbar_point_ideal_is_truncation():
    F = DualForm.parse("x0*x1^2*x2^3", R3)
    rep = ci_vspbar(F, monomial_ci(F))
    ideal = next(c["value"] for c in rep.certificates if c["name"] == "ideal")
    I = parse_ideal(", ".join(ideal), R3)
    assert annihilates(I, F)


def test_ci_slip_criterion():
    J = parse_ideal("y0^2, y1^2", R3)
    W = [parse_polynomial(s, R3) for s in ("y0^4", "y0^2*y1^2", "y0^3*y2")]
    assert not ci_slip_criterion(J, W, 4)
    W.append(parse_polynomial("y1^4", R3))
    assert ci_slip_criterion(J, W, 4)
    # J^2 starts in degree 4
    assert ci_slip_criterion(J, [], 3)


def test_monomial_ci():
    F = DualForm.parse("x0^3*x1*x2^2", R3)
    assert ideal_equal(monomial_ci(F), parse_ideal("y1^2, y2^3", R3))


@pytest.mark.parametrize("a,e,r", OMEGA_TRIPLES)
def test_generic_omega_rank(a, e, r):
    ok, rep = generic_omega_rank(a, e, r)
    assert ok is True
    assert rep.verdict == "generic"


def test_omega_rank_of_zero_form_is_zero():
    n = sum(1 for i in range(6) for j in range(6) if 2 <= 6 - i - j < 4 and i + j <= 6)
    assert omega_matrix_rank(6, 2, [0] * n) == 0
    with pytest.raises(ValueError):
        omega_matrix_rank(6, 2, [1])


@pytest.mark.parametrize("abc,shape", [
    ((1, 2, 4), "point"), ((1, 3, 3), "P^1"), ((2, 3, 4), "point"), ((2, 2, 2), "P^2"),
    ((1, 1, 1), "P^2"), ((2, 2, 3), "point"), ((1, 1, 3), "point"),
])
def test_monomial_vps(abc, shape):
    rep = monomial_vps_report(*abc)
    assert rep.verdict == shape
    assert _all_passed(rep)


def test_monomial_vps_rejects_unsorted():
    with pytest.raises(ValueError):
        monomial_vps_report(3, 2, 1)


def test_schubert_certificates():
    rep = schubert_certificates()
    assert rep.verdict == "verified"
    values = {c["name"]: c["value"] for c in rep.certificates}
    assert values["Ext^1(J/K, S/J)_0"] == 0
    assert values["hom_degree0_dim(K^)"] == 25


def test_reducible_certificates():
    rep = reducible_certificates()
    assert rep.verdict == "verified"


def test_common_factor_degree():
    forms = [parse_polynomial(s, R3) for s in ("(y0+y1)*y2^2", "(y0+y1)*y0*y1", "(y0+y1)*(y1^2 - y2^2)")]
    assert common_factor_degree(forms) == 1
    coprime = [parse_polynomial(s, R3) for s in ("y0^2", "y1^2", "y2^2")]
    assert common_factor_degree(coprime) == 0


def test_nondegenerate_quartic():
    F = DualForm.parse("x0^4 + x1^4 + x2^4 + (x0+x1+x2)^4 + (x0-x1+2*x2)^4 + (x0+2*x1-x2)^4", R3)
    rep = nondegenerate_no_linear_factor(F, 3)
    assert rep.verdict == "no common linear factor"


def test_degenerate_form_is_flagged():
    rep = nondegenerate_no_linear_factor(DualForm.parse("x0^4", R3), 3)
    assert rep.verdict == "unresolved"
