import pytest
from hypothesis import given, strategies as st

from multitwist.algebra import AlgebraicReal, RationalPoly
from multitwist.catalog import catalog
from multitwist.flat import build_flat
from multitwist.twist import (
    Classification,
    NotPseudoAnosov,
    TwistMatrix,
    TwistWord,
    WordSyntaxError,
    classify,
    expansion_factor,
    image_is_free,
    rho,
    trace_field_data,
    trace_value,
)


def P(*c):
    return RationalPoly(c)


def mu_of(name):
    return build_flat(catalog(name)).mu


R = AlgebraicReal.from_rational

letters = st.lists(st.tuples(st.sampled_from("AB"), st.integers(-3, 3).filter(bool)), max_size=6)
words = letters.map(lambda ls: TwistWord(tuple(ls)))


def test_parse_and_print():
    w = TwistWord.parse("A B^-2 B^2 A A^3")
    assert str(w) == "A^5"
    assert str(TwistWord.parse("")) == "1"
    for bad in ("A^0", "C", "A^x", "AB"):
        with pytest.raises(WordSyntaxError):
            TwistWord.parse(bad)


def test_generator_matrices():
    A = rho(TwistWord.parse("A")).evaluate(4.0)
    B = rho(TwistWord.parse("B")).evaluate(4.0)
    assert A == ((1, 2), (0, 1))
    assert B == ((1, 0), (-2, 1))


def test_product_ab():
    m = rho(TwistWord.parse("A B"))
    # (1 - mu, sqrt mu; -sqrt mu, 1)
    assert (m.p, m.q, m.r, m.s) == (P(1, -1), P(1), P(-1), P(1))


@given(words)
def test_determinant_is_one(w):
    assert rho(w).determinant == P(1)


@given(words, words)
def test_homomorphism(u, v):
    assert rho(u * v) == rho(u) @ rho(v)


@given(words, words)
def test_trace_conjugation_invariant(u, v):
    assert rho(u * v * u.inverse()).trace == rho(v).trace


@given(words)
def test_inverse(w):
    assert rho(w) @ rho(w.inverse()) == TwistMatrix.identity()


@given(words, st.integers(-3, 3).filter(bool), st.integers(-3, 3).filter(bool))
def test_substitute_composes(w, k, l):
    assert w.substitute(1, 1) == w
    assert w.substitute(k, l).substitute(l, k) == w.substitute(k * l, l * k)
    assert len(w.substitute(k, l)) == len(w)


def test_classification_at_golden_mean():
    mu = mu_of("A4")
    assert classify(TwistWord.parse("A"), mu) is Classification.REDUCIBLE
    assert classify(TwistWord.parse("A B"), mu) is Classification.FINITE_ORDER
    assert classify(TwistWord.parse("A B^-1"), mu) is Classification.PSEUDO_ANOSOV
    with pytest.raises(NotPseudoAnosov):
        expansion_factor(TwistWord.parse("A B"), mu)


def test_lambda_at_six():
    e = expansion_factor(TwistWord.parse("A B"), R(6))
    assert e.minpoly == P(1, -4, 1)
    assert e.value * e.value == 4 * e.value - 1
    d = trace_field_data(e)
    assert (d.quadratic_radicand, d.field_discriminant) == (3, 12)


def test_lambda_at_four():
    e = expansion_factor(TwistWord.parse("A B^-1"), R(4))
    assert e.minpoly == P(1, -6, 1)
    assert trace_field_data(e).field_discriminant == 8


def test_lambda_square_of_ab_at_six():
    e = expansion_factor(TwistWord.parse("A B A B"), R(6))
    assert e.minpoly == P(1, -14, 1)  # (2 + sqrt3)^2 = 7 + 4 sqrt3


def test_golden_and_heptagonal_lambdas():
    assert expansion_factor(TwistWord.parse("A B^-1"), mu_of("A4")).minpoly == P(1, -7, 13, -7, 1)
    assert expansion_factor(TwistWord.parse("A B^-1"), mu_of("A6")).minpoly == P(-1, 5, -6, 1)


@given(st.integers(5, 40), words)
def test_lambda_is_root_of_char_poly(mu, w):
    m = AlgebraicReal.from_rational(mu)
    if classify(w, m) is not Classification.PSEUDO_ANOSOV:
        return
    e = expansion_factor(w, m)
    t = abs(float(trace_value(w, m)))
    lam = float(e.value)
    assert lam == pytest.approx((t + (t * t - 4) ** 0.5) / 2, rel=1e-9)


def test_freeness_threshold():
    assert image_is_free(R(4)) and not image_is_free(mu_of("E8"))
    assert image_is_free(mu_of("E10"))
