from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from multitwist.algebra import AlgebraicReal
from multitwist.catalog import catalog
from multitwist.commensurability import (
    CompareVerdict,
    LambdaOutcome,
    compare,
    delta_commensurable,
    lambda_commensurable,
)
from multitwist.twist import NotPseudoAnosov, TwistWord, expansion_factor

W = TwistWord.parse
deltas = st.dictionaries(st.integers(1, 12), st.integers(1, 6), max_size=4)


@given(deltas, st.integers(1, 5))
def test_delta_scaled(d, q):
    scaled = {k: q * v for k, v in d.items()}
    assert delta_commensurable(d, scaled) == (q if d else 1)


@given(deltas, deltas)
def test_delta_symmetric(d1, d2):
    a, b = delta_commensurable(d1, d2), delta_commensurable(d2, d1)
    assert (a is None) == (b is None)
    if a is not None:
        assert a * b == 1


def test_delta_examples():
    assert delta_commensurable({6: 1}, {6: 2}) == 2
    assert delta_commensurable({6: 1}, {10: 1}) is None
    assert delta_commensurable({4: 2, 6: 1}, {4: 4, 6: 2}) == 2
    assert delta_commensurable({4: 2, 6: 1}, {4: 4, 6: 1}) is None


@given(st.integers(5, 30), st.integers(1, 4))
def test_lambda_power_relation(mu, k):
    m = AlgebraicReal.from_rational(mu)
    w = W("A B")
    res = lambda_commensurable(expansion_factor(w, m), expansion_factor(TwistWord(w.letters * k), m))
    assert res.outcome is LambdaOutcome.RELATION and res.powers == (k, 1)


def test_lambda_distinct_quadratic_fields():
    l1 = expansion_factor(W("A B"), AlgebraicReal.from_rational(6))
    l2 = expansion_factor(W("A B^-1"), AlgebraicReal.from_rational(4))
    assert lambda_commensurable(l1, l2).outcome is LambdaOutcome.CERTIFIED_NONE


def test_compare_obstructions():
    rep = compare(catalog("A4"), W("A B^-1"), catalog("A6"), W("A B^-1"))
    assert rep.verdict is CompareVerdict.NOT_COMMENSURABLE
    assert rep.delta_ratio is None
    assert any("singularity" in r for r in rep.reasons)
    assert rep.to_json()["verdict"] == "NOT_COMMENSURABLE"


def test_compare_self():
    rep = compare(catalog("A4"), W("A B^-1"), catalog("A4"), W("A B^-1 A B^-1"))
    assert rep.verdict is CompareVerdict.NO_OBSTRUCTION_FOUND
    assert rep.lambda_result.powers == (2, 1)


def test_compare_requires_pseudo_anosov():
    with pytest.raises(NotPseudoAnosov):
        compare(catalog("A4"), W("A B"), catalog("A6"), W("A B^-1"))
