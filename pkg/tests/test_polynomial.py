from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given

from bisectorc.errors import DivisionByZero, EndpointIsRoot, ZeroPolynomial
from bisectorc.polynomial import (
    NEG_INF,
    QPoly,
    poly_arith,
    poly_content_primitive,
    poly_derivative,
    poly_divrem,
    poly_eval,
    poly_gcd,
    sturm_chain,
    sturm_count,
)

from conftest import f_at, qpolys, rationals

X = QPoly.x()


def to_sympy(p: QPoly):
    x = sympy.Symbol("x")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)] or [0], x, domain="QQ")


def test_canonical_form():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]).coeffs == ()
    assert QPoly().degree == NEG_INF
    assert QPoly([5]).degree == 0


def test_arith_examples(f1):
    assert poly_arith(QPoly([1, 2]), QPoly([-1, 1, 1]), "mul") == f_at(Fraction(1, 2))
    assert (X - 1) * QPoly([1, 5, 2]) == f1
    p = QPoly([3, 0, 1])
    assert poly_arith(p, QPoly(), "add") == p


def test_divrem_examples(f1):
    assert poly_divrem(f_at(Fraction(1, 2)), QPoly([1, 2])) == (QPoly([-1, 1, 1]), QPoly())
    assert poly_divrem(f1, X - 1) == (QPoly([1, 5, 2]), QPoly())
    assert poly_divrem(X ** 2, X ** 3) == (QPoly(), X ** 2)
    with pytest.raises(DivisionByZero):
        poly_divrem(X, QPoly())


def test_eval_examples(f1, f2):
    assert poly_eval(f1, 1) == 0
    assert f2 == QPoly([-1, -16, 3, 2])
    assert poly_eval(f2, 1) == -12
    assert poly_eval(QPoly([7, 3, 3]), 0) == 7


def test_derivative_examples(f1):
    assert poly_derivative(f1) == QPoly([-4, 6, 6])
    assert poly_derivative(QPoly([5])).is_zero()
    assert poly_derivative(X) == QPoly([1])


def test_content_primitive_examples(f1):
    assert poly_content_primitive(QPoly([Fraction(1, 3), Fraction(1, 2)])) == (Fraction(1, 6), QPoly([2, 3]))
    assert poly_content_primitive(f1) == (1, f1)
    assert poly_content_primitive(QPoly([0, -4])) == (-4, X)
    with pytest.raises(ZeroPolynomial):
        poly_content_primitive(QPoly())


def test_gcd_examples(f1):
    assert poly_gcd(QPoly([1, -2, 1]), QPoly([-2, 2])) == X - 1
    assert poly_gcd(QPoly([2, 4]), QPoly()) == QPoly([Fraction(1, 2), 1])
    assert poly_gcd(f1, poly_derivative(f1)) == QPoly([1])
    with pytest.raises(ZeroPolynomial):
        poly_gcd(QPoly(), QPoly())


def test_sturm_chain_examples(f2):
    assert [p.degree for p in sturm_chain(f2)] == [3, 2, 1, 0]
    assert sturm_chain(X) == [X, QPoly([1])]
    assert sturm_chain(QPoly([-2, 0, 1])) == [QPoly([-2, 0, 1]), QPoly([0, 2]), QPoly([2])]


def test_sturm_chain_matches_sympy_up_to_positive_scale(f2):
    # sympy normalizes the head to monic; signs per entry must agree
    ours = sturm_chain(f2)
    theirs = sympy.sturm(to_sympy(f2))
    assert len(ours) == len(theirs)
    for a, b in zip(ours, theirs):
        ratio = to_sympy(a).LC() / b.LC()
        assert ratio > 0
        assert to_sympy(a) == b * ratio


def test_sturm_count_examples(f2):
    chain = sturm_chain(f2)
    assert sturm_count(chain, Fraction(1, 2), None) == 1
    assert sturm_count(chain, None, None) == 3
    assert sturm_count(sturm_chain(QPoly([-2, 0, 1])), Fraction(0), Fraction(1)) == 0
    # the sign analysis brackets: (-4, -3), (-1, 0), (2, 3)
    for lo, hi in [(-4, -3), (-1, 0), (2, 3)]:
        assert sturm_count(chain, Fraction(lo), Fraction(hi)) == 1


def test_sturm_count_rejects_root_endpoint(f1):
    with pytest.raises(EndpointIsRoot):
        sturm_count(sturm_chain(f1), Fraction(0), Fraction(1))


def test_render():
    assert QPoly([-1, -4, 3, 2]).render() == "2*X^3 + 3*X^2 - 4*X - 1"
    assert QPoly([0, 0, -4]).render("q") == "-4*q^2"
    assert QPoly([Fraction(-1, 2), 1]).render() == "X - 1/2"
    assert QPoly().render() == "0"


@given(qpolys(), qpolys())
def test_divrem_round_trip(a, b):
    assume(not b.is_zero())
    quot, rem = poly_divrem(a, b)
    assert b * quot + rem == a
    assert rem.degree < b.degree


@given(qpolys(), qpolys(), rationals(-10, 10))
def test_eval_is_ring_homomorphism(a, b, x):
    assert poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x)
    assert poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x)


@given(qpolys())
def test_content_reconstructs(p):
    assume(not p.is_zero())
    content, prim = poly_content_primitive(p)
    assert content * prim == p
    assert all(c.denominator == 1 for c in prim.coeffs)
    assert prim.lead > 0


@given(qpolys(3), qpolys(3))
def test_gcd_matches_sympy(a, b):
    assume(not (a.is_zero() and b.is_zero()))
    g = poly_gcd(a, b)
    expected = sympy.gcd(to_sympy(a), to_sympy(b)).monic()
    assert to_sympy(g) == expected


@given(qpolys(4))
def test_sturm_total_count_matches_sympy(p):
    assume(p.degree >= 1)
    sqf = poly_divrem(p, poly_gcd(p, poly_derivative(p)))[0]
    assert sturm_count(sturm_chain(sqf), None, None) == len(set(sympy.real_roots(to_sympy(p))))
