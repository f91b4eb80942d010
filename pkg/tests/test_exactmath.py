import sympy as sp
import pytest
from hypothesis import given, strategies as st

from osp12.exactmath import (
    BiPoly, Rational, UniPoly, as_rational, bipoly_d_dt2, fmt_rational, parse_rational,
    rat_arith, upoly_divmod, upoly_gcd,
)

small = st.fractions(min_value=-20, max_value=20, max_denominator=12)
coeff_lists = st.lists(small, min_size=0, max_size=7)


def to_sympy(u: UniPoly):
    t = sp.Symbol("t")
    expr = sum(sp.Rational(int(c.numerator), int(c.denominator)) * t ** k for k, c in u.coeffs.items())
    return sp.Poly(expr or 0, t, domain="QQ")


def test_rational_roundtrip():
    assert fmt_rational(Rational(-6, 4)) == "-3/2"
    assert fmt_rational(5) == "5"
    assert parse_rational("-3/2") == Rational(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(TypeError):
        as_rational(True)


def test_rat_arith():
    assert rat_arith(Rational(1, 2), Rational(1, 3), "+") == Rational(5, 6)
    assert rat_arith(1, 3, "/") == Rational(1, 3)
    with pytest.raises(ZeroDivisionError):
        rat_arith(1, 0, "/")


@given(coeff_lists, coeff_lists)
def test_divmod_roundtrip(a, b):
    A, B = UniPoly(a), UniPoly(b)
    if B.is_zero():
        with pytest.raises(ZeroDivisionError):
            upoly_divmod(A, B)
        return
    q, r = upoly_divmod(A, B)
    assert q * B + r == A
    assert r.degree < B.degree


@given(coeff_lists, coeff_lists)
def test_mul_matches_sympy(a, b):
    A, B = UniPoly(a), UniPoly(b)
    assert to_sympy(A * B) == (to_sympy(A) * to_sympy(B)).set_domain('QQ')


@given(coeff_lists, coeff_lists)
def test_gcd_matches_sympy(a, b):
    A, B = UniPoly(a), UniPoly(b)
    if A.is_zero() and B.is_zero():
        return
    g = upoly_gcd(A, B)
    assert g.is_monic()
    assert to_sympy(g) == sp.gcd(to_sympy(A), to_sympy(B)).monic().set_domain('QQ')


@given(st.lists(small, min_size=1, max_size=6), small)
def test_from_roots(roots, x):
    f = UniPoly.from_roots(roots)
    assert f.degree == len(roots) and f.is_monic()
    for r in roots:
        assert f(r) == 0
    expected = Rational(1)
    for r in roots:
        expected *= as_rational(x) - as_rational(r)
    assert f(x) == expected


def test_ring_axioms_small():
    a, b, c = UniPoly([1, 2]), UniPoly([0, -1, Rational(1, 2)]), UniPoly([3])
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()
    assert (a ** 3).degree == 3


def test_bipoly_basics():
    v = BiPoly.monomial(2, 1, 3) + BiPoly.monomial(0, 2, -1)
    assert v.t2_strata() == {1: UniPoly({2: 3}), 2: UniPoly([-1])}
    assert bipoly_d_dt2(v) == BiPoly.monomial(2, 0, 3) + BiPoly.monomial(0, 1, -2)
    assert v.subs_t1(2) == UniPoly({1: 12, 2: -1})
    assert (v * BiPoly.monomial(1, 0)).coeffs == {(3, 1): 3, (1, 2): -1}
