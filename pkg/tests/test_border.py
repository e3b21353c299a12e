import itertools
from math import prod

import pytest

from borderline.apolarity import DualForm, annihilates, tensor_form
from borderline.border import (
    EnumerationConfig,
    EnumerationOverflow,
    NotConciseError,
    enumerate_monomial_apolar_ideals,
    monomial_border_rank,
    plateau_identifiability,
    slip_ext_filter,
    tensor_wildness,
    wild_tensor,
)
from borderline.groebner import buchberger, ideal_equal, saturate_irrelevant
from borderline.hilbert import has_generic_hf, stable_value
from borderline.parse import parse_ideal
from borderline.ring import GradedRing, Ideal

from conftest import points_ideal

R3 = GradedRing.parse("P2")
R3X = GradedRing.parse("blocks=[3,3,3]")


def _triangle_config(**kw):
    F = DualForm.parse("x0*x1*x2", R3)
    return EnumerationConfig(Ideal(R3, []), 4, form=F, **kw)


def test_triangle_enumeration():
    res = enumerate_monomial_apolar_ideals(_triangle_config())
    assert len(res.ideals) == 3
    F = DualForm.parse("x0*x1*x2", R3)
    for I in res.ideals:
        assert annihilates(I, F)
        assert has_generic_hf(I, 4, (res.cap,))[0]
        assert stable_value(I) == 4


def test_enumeration_order_is_canonical():
    a = enumerate_monomial_apolar_ideals(_triangle_config())
    b = enumerate_monomial_apolar_ideals(_triangle_config(branch_limit=50))
    assert a.added == b.added
    keys = [sorted((sum(m), tuple(-x for x in m)) for m in added) for added in a.added]
    assert keys == sorted(keys)


def test_explicit_cap_agrees_with_automatic():
    auto = enumerate_monomial_apolar_ideals(_triangle_config())
    capped = enumerate_monomial_apolar_ideals(_triangle_config(cap=6))
    assert capped.cap == 6
    assert len(capped.ideals) == len(auto.ideals)


def test_enumeration_without_form_on_points():
    # every monomial ideal with HF h_2 on P^1: (y0^2), (y0*y1), (y1^2)
    ring = GradedRing.parse("P1")
    res = enumerate_monomial_apolar_ideals(EnumerationConfig(Ideal(ring, []), 2))
    assert len(res.ideals) == 3


def test_branch_limit_overflow():
    with pytest.raises(EnumerationOverflow):
        enumerate_monomial_apolar_ideals(_triangle_config(branch_limit=1))


@pytest.mark.parametrize("kw", [{"r": 0}, {"branch_limit": 0}])
def test_config_rejects_bad_values(kw):
    args = {"base": Ideal(R3, []), "r": 3, **kw}
    with pytest.raises(ValueError):
        EnumerationConfig(**args)


def test_config_rejects_low_cap_and_nonapolar_base():
    base = parse_ideal("y0^3", R3)
    with pytest.raises(ValueError):
        EnumerationConfig(base, 4, cap=2)
    with pytest.raises(ValueError):
        EnumerationConfig(base, 4, form=DualForm.parse("x0^3", R3))
    with pytest.raises(ValueError):
        EnumerationConfig(Ideal(R3X, []), 3)


def test_ext_filter_keeps_saturated():
    I = points_ideal(R3, [[[1, 0, 0]], [[0, 1, 0]], [[0, 0, 1]]])
    kept, excluded, dims = slip_ext_filter([I])
    assert kept == [I] and excluded == [] and dims == [None]


def test_ext_filter_on_triangle_candidates():
    res = enumerate_monomial_apolar_ideals(_triangle_config())
    kept, excluded, dims = slip_ext_filter(res.ideals)
    assert len(kept) + len(excluded) == 3
    for I, d in zip(res.ideals, dims):
        assert (d is None) == ideal_equal(saturate_irrelevant(I), I)


@pytest.mark.parametrize("form,expect", [
    ("x0*x1*x2", 4), ("x0*x1^2*x2^3", 6), ("x0^2*x1^2*x2^2", 9), ("x0^5", 1), ("x0^2*x1^3", 3),
])
def test_monomial_border_rank(form, expect):
    r, rep = monomial_border_rank(DualForm.parse(form, R3))
    assert r == expect
    assert rep.verdict == expect


def _closed_form(exps):
    e = sorted(x for x in exps if x > 0)
    return prod(a + 1 for a in e[:-1]) if e else 1


@pytest.mark.parametrize("exps", sorted({tuple(sorted(t)) for t in
                                         itertools.product(range(3), range(3), range(5))}))
def test_monomial_search_agrees_with_closed_form(exps):
    form = "*".join(f"x{i}^{a}" for i, a in enumerate(exps) if a) or "1"
    if form == "1":
        return
    r, rep = monomial_border_rank(DualForm.parse(form, R3))
    assert r == _closed_form(exps)
    assert not rep.inconclusive


def test_diagonal_tensor_is_not_wild():
    e = [[[int(i == j == k) for k in range(3)] for j in range(3)] for i in range(3)]
    F = tensor_form([3, 3, 3], e)
    wr, rep = tensor_wildness(F, 3)
    assert wr.verdict == "not wild" and rep.verdict == "not wild"
    pts = [[[1, 0, 0]] * 3, [[0, 1, 0]] * 3, [[0, 0, 1]] * 3]
    assert ideal_equal(wr.K, points_ideal(R3X, pts))
    assert wr.vsp_report().verdict == "single point"


def test_wild_tensor_is_wild():
    wr, rep = tensor_wildness(wild_tensor(), 3)
    assert wr.sharp
    assert wr.verdict == "wild"


def test_nonconcise_tensor_raises():
    e = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    e[0][0][0] = e[1][1][1] = 1
    with pytest.raises(NotConciseError, match="block"):
        tensor_wildness(tensor_form([3, 3, 3], e))


def test_fermat_cubic_is_identifiable():
    rep = plateau_identifiability(DualForm.parse("x0^3 + x1^3 + x2^3", R3), 3)
    assert rep.verdict == "border identifiable"
    witness = next(c["value"] for c in rep.certificates if c["name"] == "witness")
    assert ideal_equal(parse_ideal(", ".join(witness), R3), parse_ideal("y0*y1, y0*y2, y1*y2", R3))


def test_binary_form_plateau():
    ring = GradedRing.parse("P1")
    rep = plateau_identifiability(DualForm.parse("x0^7 + x1^7 + (x0+x1)^7 + (x0-x1)^7", ring), 4)
    assert rep.verdict == "border identifiable"


def test_no_plateau_for_monomial():
    rep = plateau_identifiability(DualForm.parse("x0*x1^2*x2^3", R3), 6)
    assert rep.verdict == "no plateau"


def test_witness_is_saturated_apolar():
    F = DualForm.parse("x0^3 + x1^3 + x2^3", R3)
    rep = plateau_identifiability(F, 3)
    assert all(c.get("passed", True) for c in rep.certificates)
    K = saturate_irrelevant(parse_ideal("y0*y1, y0*y2, y1*y2", R3))
    assert annihilates(K, F) and buchberger(K).hilbert_function(5) == 3
