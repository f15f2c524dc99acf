from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from multitwist.algebra import (
    AlgebraicReal,
    NumberField,
    PerronFrobeniusError,
    RationalPoly,
    adjoin_sqrt,
    charpoly,
    check_primitive,
    common_field,
    compositum,
    isolate_real_roots,
    pf_eigenvalue,
    pf_eigenvector,
    same_subfield,
    subfield_generated,
)
from multitwist.algebra.linalg import nullspace, rank, solve
from multitwist.algebra.poly import discriminant, poly_gcd, resultant, squarefree_part

X = sp.symbols("x")


def P(*coeffs):
    return RationalPoly(coeffs)


def sqrt_of(n):
    return AlgebraicReal.from_rational(n).sqrt()


# -- polynomials -------------------------------------------------------------

small_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=6).map(lambda cs: RationalPoly(cs))


@given(small_polys, small_polys)
def test_divmod_reconstructs(a, b):
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(small_polys, small_polys)
def test_gcd_divides_both(a, b):
    if a.is_zero() or b.is_zero():
        return
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero()


def test_discriminant_and_resultant():
    assert discriminant(P(1, -4, 1)) == 12
    assert resultant(P(-2, 0, 1), P(-3, 0, 1)) == 1
    assert squarefree_part(P(-1, 0, 1) * P(-1, 0, 1)) == P(-1, 0, 1).monic()


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=4, max_size=4))
def test_charpoly_matches_sympy(M):
    ours = charpoly(M)
    theirs = sp.Poly(sp.Matrix(M).charpoly(X).as_expr(), X).all_coeffs()[::-1]
    assert [int(c) for c in ours.coeffs] == [int(c) for c in theirs]


# -- real algebraic numbers ----------------------------------------------------

def test_isolation_counts_real_roots():
    roots = isolate_real_roots(P(-1, 0, 1) * P(-2, 0, 1))
    assert [round(float(r), 6) for r in roots] == [-1.414214, -1.0, 1.0, 1.414214]


def test_sqrt_and_arithmetic_are_exact():
    r2, r3 = sqrt_of(2), sqrt_of(3)
    assert r2 * r2 == 2
    s = r2 + r3
    assert s.minpoly.monic() == P(1, 0, -10, 0, 1)
    assert (s * s - 5) == 2 * r2 * r3


def test_comparison_of_close_numbers():
    # 1.41421356237... vs 1.41421356 differ in the 9th digit
    assert sqrt_of(2) > Fraction(141421356, 100000000)
    assert sqrt_of(2).compare(sqrt_of(2)) == 0


@given(st.integers(1, 50), st.integers(1, 50))
def test_sqrt_products(a, b):
    assert sqrt_of(a) * sqrt_of(b) == sqrt_of(a * b)


def test_json_roundtrip():
    x = sqrt_of(5)
    assert AlgebraicReal.from_json(x.to_json()) == x


# -- number fields ---------------------------------------------------------------

def test_field_inverse_and_minpoly():
    K = NumberField(sqrt_of(2))
    t = K.gen
    x = t + 3
    assert x * x.inverse() == K.one
    assert x.minimal_polynomial == P(7, -6, 1)


@given(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5))
def test_field_ops_agree_with_floats(a, b, c, d):
    K = NumberField(sqrt_of(3))
    x, y = K.element([a, b]), K.element([c, d])
    assert abs(float(x * y) - float(x) * float(y)) < 1e-9
    if not y.is_zero():
        assert abs(float(x / y) - float(x) / float(y)) < 1e-6 * max(1, abs(float(x) / float(y)))


def test_compositum_contains_both():
    K, e1, e2 = compositum(NumberField(sqrt_of(2)), NumberField(sqrt_of(3)))
    assert K.degree == 4
    a, b = e1(e1.source.gen), e2(e2.source.gen)
    assert a * a == 2 and b * b == 3
    assert abs(float(a * b) - 6 ** 0.5) < 1e-12


def test_common_field_reuses_larger_field():
    gamma = NumberField(AlgebraicReal.root_in(P(-1, -1, 1), 1, 2))
    mu = gamma.gen * gamma.gen
    K, a, b = common_field(mu, gamma.gen)
    assert K.degree == 2


def test_adjoin_sqrt_degrees():
    F = NumberField(AlgebraicReal.root_in(P(1, -3, 1), 2, 3))  # (3+sqrt5)/2
    K, emb, root = adjoin_sqrt(F.gen)
    assert K.degree == 2 and root * root == emb(F.gen)
    F2 = NumberField(sqrt_of(2) + 2)
    K2, emb2, root2 = adjoin_sqrt(F2.gen)
    assert K2.degree == 4 and root2 * root2 == emb2(F2.gen)


def test_subfields():
    K, _, e = compositum(NumberField(sqrt_of(2)), NumberField(sqrt_of(3)))
    r3 = e(e.source.gen)
    g = subfield_generated([r3, r3 * 2 + 1])
    assert g.minimal_polynomial.degree == 2
    assert same_subfield(g, r3 * 5)
    assert not same_subfield(r3, r3 * r3 * r3 * 0 + K.gen)


# -- linear algebra ---------------------------------------------------------------

def test_linear_algebra():
    A = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rank(A) == 1
    assert len(nullspace(A)) == 1
    assert solve(A, [Fraction(1), Fraction(3)]) is None
    assert solve(A, [Fraction(1), Fraction(2)]) is not None


# -- Perron-Frobenius --------------------------------------------------------------

def test_pf_golden():
    mu = pf_eigenvalue([[1, 1], [1, 2]])
    assert mu.minpoly.monic() == P(1, -3, 1)
    v = pf_eigenvector([[1, 1], [1, 2]], mu)
    assert v[0] == 1 and abs(float(v[1]) - 1.6180339887) < 1e-9


def test_pf_rational():
    mu = pf_eigenvalue([[2, 1, 0], [1, 2, 1], [0, 1, 2]])
    assert abs(float(mu) - (2 + 2 ** 0.5)) < 1e-12
    assert pf_eigenvalue([[4]]) == 4


@pytest.mark.parametrize("M, msg", [
    ([[1, 0], [0, 1]], "reducible"),
    ([[0, 1], [1, 0]], "periodic"),
    ([[1, -1], [1, 1]], "negative"),
    ([[1, 2]], "square"),
])
def test_pf_errors(M, msg):
    with pytest.raises(PerronFrobeniusError, match=msg):
        check_primitive(M)
