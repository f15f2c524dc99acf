from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multitwist.algebra import AlgebraicReal, NumberField
from multitwist.catalog import catalog
from multitwist.flat import build_flat
from multitwist.jinvariant import (
    JTensor,
    Verdict,
    integer_multiple,
    j_class_report,
    j_cover_scale,
    j_equivalence,
    j_of_flat,
    j_of_rectangle,
    j_scale,
    to_common_field,
)

ROOT2 = NumberField(AlgebraicReal.from_rational(2).sqrt())
ROOT5 = NumberField(AlgebraicReal.from_rational(5).sqrt())


def J(name):
    return j_of_flat(build_flat(catalog(name)))


def test_a4():
    f = build_flat(catalog("A4"))
    g, one = f.sqrt_mu, f.field.one
    expected = JTensor.from_pairs([(g, one), (g, g), (one, g)], 2, f.field)
    assert J("A4") == expected
    assert J("A4").rank == 2


def test_a3():
    half = ROOT2.gen.inverse()
    assert J("A3") == JTensor.from_pairs([(half, ROOT2.one)], 4, ROOT2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_pillowcase_family(n):
    Q = NumberField.rationals()
    assert J(f"P{2 * n}") == JTensor.from_pairs([(Q.one, Q.one)], 4 * n, Q)


@pytest.mark.parametrize("g", [2, 3, 4, 5])
def test_filling_pairs(g):
    c = catalog(f"FillingPair({g})")
    Q = NumberField.rationals()
    assert j_of_flat(build_flat(c)) == JTensor.from_pairs([(Q.one, Q.one)], 2 * c.squares, Q)


def test_rectangle_rejects_nonpositive():
    with pytest.raises(ValueError):
        j_of_rectangle(ROOT2.one, -ROOT2.gen)


def test_rectangle_square_is_rank_one():
    T = j_of_rectangle(ROOT2.gen, ROOT2.gen)
    assert T.rank == 1
    # tensors are over Q, so sqrt2 (x) sqrt2 is not 2 (1 (x) 1)
    assert T != JTensor.from_pairs([(ROOT2.one, ROOT2.one)], 4, ROOT2)


elements = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).map(lambda c: ROOT5.element(list(c)))
nonzero = elements.filter(lambda x: not x.is_zero())
tensors = st.lists(st.tuples(elements, elements), min_size=1, max_size=3).map(
    lambda ps: JTensor.from_pairs(ps, 1, ROOT5))


@given(tensors, tensors, nonzero, nonzero)
def test_scaling_is_linear(T1, T2, r, s):
    assert j_scale(T1 + T2, r, s) == j_scale(T1, r, s) + j_scale(T2, r, s)


@given(tensors, nonzero, nonzero, nonzero, nonzero)
def test_scaling_composes(T, r1, s1, r2, s2):
    assert j_scale(j_scale(T, r1, s1), r2, s2) == j_scale(T, r1 * r2, s1 * s2)


@given(tensors, nonzero, nonzero)
def test_scaling_preserves_rank(T, r, s):
    assert j_scale(T, r, s).rank == T.rank


@given(tensors)
def test_negating_both_factors_is_identity(T):
    assert j_scale(T, -1, -1) == T


@given(elements, elements, elements)
def test_bilinear_in_width(x, y, h):
    lhs = JTensor.from_pairs([(x + y, h)], 1, ROOT5)
    assert lhs == JTensor.from_pairs([(x, h), (y, h)], 1, ROOT5)


def test_embedding_into_larger_field():
    A, B = to_common_field(J("A4"), J("A3"))
    assert A.field == B.field and A.field.degree == 4
    assert A.rank == J("A4").rank and B.rank == J("A3").rank


def test_cover_scale():
    assert j_cover_scale(J("A4"), 3) == J("A4") + J("A4") + J("A4")
    assert integer_multiple(j_cover_scale(J("A4"), 5), J("A4")) == 5
    assert integer_multiple(J("A4"), J("A6")) is None
    with pytest.raises(ValueError):
        j_cover_scale(J("A4"), 0)


def test_class_report():
    rep = j_class_report(J("A4"))
    assert rep.rank == 2
    assert rep.width_ratio_minpoly.degree == 2
    rep = j_class_report(J("P6"))
    assert rep.rank == 1 and rep.width_ratio_minpoly.degree == 1


def test_equivalence_of_scaled_copy():
    T = J("A4")
    f = build_flat(catalog("A4"))
    res = j_equivalence(T, j_scale(T, f.sqrt_mu + 3, Fraction(1, 7)))
    assert res.verdict is Verdict.EQUIVALENT
    r, s = res.witness
    assert j_scale(T, r, s) == j_scale(T, f.sqrt_mu + 3, Fraction(1, 7))


def test_equivalence_verdicts():
    assert j_equivalence(J("A4"), J("A6")).verdict is Verdict.DISTINCT  # rank
    assert j_equivalence(J("A4"), J("A7")).verdict is Verdict.DISTINCT  # ratio subfields
    assert j_equivalence(J("A4"), j_cover_scale(J("A4"), 2)).verdict is Verdict.EQUIVALENT
    assert j_equivalence(J("P6"), J("FillingPair(2)")).verdict is Verdict.EQUIVALENT


def test_json_shape():
    d = J("A4").to_json()
    assert d["rank"] == 2 and "terms" in d and d["field_minpoly"]
