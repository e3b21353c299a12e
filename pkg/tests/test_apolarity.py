import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from borderline.apolarity import (
    DualForm,
    ann_hilbert_row,
    annihilates,
    annihilator,
    annihilator_piece,
    catalecticant,
    contract,
    essential_form,
    hessian,
    is_concise,
    is_nondegenerate_even,
    tensor_form,
)
from borderline.groebner import buchberger, ideal_equal
from borderline.hilbert import macaulay_upper
from borderline.parse import parse_ideal, parse_polynomial
from borderline.ring import QQ, GradedRing, Polynomial

R3 = GradedRing.parse("P2")


def test_contraction_is_differentiation():
    F = DualForm.parse("x0^3*x1", R3)
    G = contract(parse_polynomial("y0^2", R3), F)
    assert G == DualForm.parse("6*x0*x1", R3)
    assert contract(parse_polynomial("y2", R3), F).is_zero()


def test_monomial_annihilator():
    F = DualForm.parse("x0*x1^2*x2^3", R3)
    assert ideal_equal(annihilator(F), parse_ideal("y0^2, y1^3, y2^4", R3))
    assert ann_hilbert_row(F) == [1, 3, 5, 6, 5, 3, 1]


def test_catalecticant_rank_is_hf():
    F = DualForm.parse("x0^4 + x1^4 + x2^4 + (x0+x1+x2)^4", R3)
    gb = buchberger(annihilator(F))
    for k in range(5):
        assert catalecticant(F, (k,)).rank() == gb.hilbert_function((k,))


forms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)),
    st.integers(-5, 5).filter(bool),
    min_size=1, max_size=5,
)


@settings(max_examples=40, deadline=None)
@given(forms, st.integers(2, 4))
def test_annihilator_is_apolar_and_gorenstein(t, d):
    terms = {}
    for (a, b), c in t.items():
        if a + b <= d:
            terms[(a, b, d - a - b)] = QQ(c)
    if not terms:
        return
    F = DualForm(R3, Polynomial(R3, terms))
    ann = annihilator(F)
    assert annihilates(ann, F)
    row = ann_hilbert_row(F)
    assert row == row[::-1]
    for k in range(1, d):
        assert row[k + 1] <= macaulay_upper(row[k], k)


def test_conciseness():
    assert is_concise(DualForm.parse("x0*x1*x2", R3)) == [True]
    assert is_concise(DualForm.parse("x0^2*x1", R3)) == [False]
    e = [[[1 if i == j == k else 0 for k in range(3)] for j in range(3)] for i in range(3)]
    assert is_concise(tensor_form([3, 3, 3], e)) == [True, True, True]
    e[2][2][2] = 0
    assert is_concise(tensor_form([3, 3, 3], e)) == [False, False, False]


def test_essential_form():
    G, k = essential_form(DualForm.parse("(x0 + 2*x1 - x2)^3", R3))
    assert k == 1
    G, k = essential_form(DualForm.parse("x0^2*x1 + x1^3", R3))
    assert k == 2 and G.ring.nvars == 2


def test_hessian():
    assert hessian(DualForm.parse("x0*x1*x2", R3)).terms
    assert not hessian(DualForm.parse("x0^2*x1", R3)).terms


def test_nondegenerate_even():
    F = DualForm.parse("x0^2 + x1^2 + x2^2", R3)
    assert is_nondegenerate_even(F, 2)
    assert not is_nondegenerate_even(DualForm.parse("x0^4 + x1^4", R3), 3)
    with pytest.raises(ValueError):
        is_nondegenerate_even(F, 3)


def test_multigraded_pieces():
    e = [[[0] * 2 for _ in range(2)] for _ in range(2)]
    e[0][0][0] = e[1][1][1] = 1
    F = tensor_form([2, 2, 2], e)
    piece = annihilator_piece(F, (1, 1, 0))
    assert len(piece) == 2
    assert all(contract(p, F).is_zero() for p in piece)


def test_tensor_shape_checked():
    with pytest.raises(ValueError):
        tensor_form([2, 2], [1, 2, 3])
