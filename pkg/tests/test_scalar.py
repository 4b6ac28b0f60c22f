from fractions import Fraction

import pytest
from conftest import rational_functions
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler import (
    BackendMismatchError,
    DomainError,
    PoleError,
    QBase,
    RationalFunction,
    RepresentabilityError,
    T,
    add,
    approx_eq,
    div,
    eval_at,
    mul,
    qpow,
    sub,
    to_complex,
)
from qeuler.qbasics import gauss_binomial, q_number


def test_qpow_zero_exponent_is_one():
    assert qpow(QBase.float(0.3), 0) == 1
    assert qpow(QBase.exact("1/3"), 0) == RationalFunction(1)


def test_qpow_root_of_quarter():
    q = QBase.exact("1/4", root_den=2)
    v = qpow(q, Fraction(1, 2))
    assert v == T
    assert eval_at(v, q.root_point()) == Fraction(1, 2)


def test_qpow_integer_power_float():
    assert qpow(QBase.float(0.5), 3) == pytest.approx(0.125)


def test_qpow_negative_exponent_goes_to_denominator():
    v = qpow(QBase.exact(None, 3), Fraction(-2, 3))
    assert v == 1 / T**2
    assert v.denominator == [0, 0, 1]


def test_qpow_unrepresentable():
    with pytest.raises(RepresentabilityError, match="not representable"):
        qpow(QBase.exact("1/2", 2), Fraction(1, 3))


def test_qpow_zero_base_negative_exponent():
    with pytest.raises(DomainError):
        qpow(QBase.float(0), -1)


def test_qbase_rejects_unit_modulus():
    with pytest.raises(DomainError):
        QBase.float(1.0)
    with pytest.raises(DomainError):
        QBase.float(0.6 + 0.8j)
    with pytest.raises(DomainError):
        QBase.exact("3/2")


def test_power_keeps_the_same_variable():
    q = QBase.exact(None, 2)
    assert q.power(3).pow(Fraction(1, 2)) == T**3
    qf = QBase.float(0.4 + 0.3j)
    assert qf.power(3).pow(Fraction(2, 3)) == pytest.approx(qf.pow(2))


def test_like_terms():
    f = T / (1 - T)
    assert f + f == 2 * T / (1 - T)
    assert str(f + f) == "-2*t/(t - 1)"


def test_mul_identity_and_factorization():
    f = (3 * T**2 + 1) / (T - 5)
    assert mul(f, RationalFunction(1)) == f
    assert div(1 - T**2, 1 - T) == 1 + T


def test_backend_mismatch():
    with pytest.raises(BackendMismatchError):
        add(T, 1.0 + 0j)
    with pytest.raises(BackendMismatchError):
        T * 0.5
    with pytest.raises(BackendMismatchError):
        approx_eq(T, 1j, 1e-3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        div(T, RationalFunction(0))
    with pytest.raises(ZeroDivisionError):
        div(1 + 0j, 0j)


def test_approx_eq_examples():
    assert approx_eq(1.0 + 0j, 1.0 + 1e-14j, 1e-12)
    assert approx_eq(1 + T, (1 - T**2) / (1 - T), 0.0)
    assert not approx_eq(0.1 + 0j, 0.2 + 0j, 1e-3)


def test_approx_eq_is_relative_above_one():
    assert approx_eq(1e6 + 0j, 1e6 + 1e-5 + 0j, 1e-10)
    assert not approx_eq(1e6 + 0j, 1e6 + 1e-3 + 0j, 1e-10)


def test_eval_at_examples():
    assert eval_at((1 - T**2) / (1 - T), 1) == 2
    assert eval_at(T**3, Fraction(1, 2)) == Fraction(1, 8)
    with pytest.raises(PoleError, match="pole"):
        eval_at(1 / (1 - T), 1)


def test_canonical_form_is_monic_and_coprime():
    f = RationalFunction.from_coeffs([2, 2], [4, 0, -4])  # 2(1+t) / 4(1-t)(1+t)
    assert f.denominator == [-1, 1]
    assert f.numerator == [Fraction(-1, 2)]


@pytest.mark.parametrize("text", ["0", "t", "-t", "3/4", "-3/t^2", "1/2*(3*t^2 - 1)/(2*t^3 + 1)",
                                  "-(t^2 - 1)/(t^4 - t^3 + 2*t^2 - t + 1)", "t^5 - 2*t^3"])
def test_text_round_trip(text):
    f = RationalFunction.parse(text)
    assert str(f) == text
    assert RationalFunction.parse(str(f)) == f


@given(rational_functions(), rational_functions(), rational_functions())
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if not a.is_zero():
        assert a / a == 1
        assert (b / a) * a == b


@given(rational_functions(), rational_functions(nonzero=True))
@settings(max_examples=60, deadline=None)
def test_equality_agrees_with_cross_multiplication(a, b):
    c = a * b / b
    assert c == a
    n1, d1 = RationalFunction.from_coeffs(a.numerator), RationalFunction.from_coeffs(a.denominator)
    n2, d2 = RationalFunction.from_coeffs(c.numerator), RationalFunction.from_coeffs(c.denominator)
    assert n1 * d2 == n2 * d1


@given(rational_functions())
@settings(max_examples=60, deadline=None)
def test_canonicalization_idempotent(a):
    assert a.canonical() == a
    assert a.canonical().numerator == a.numerator
    assert a.canonical().denominator == a.denominator


@given(st.integers(1, 9), st.integers(1, 4), st.integers(2, 4), st.integers(0, 6), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_cross_backend_consistency(p, d, D, m, r):
    # q = (p/10)^D so that t0 = p/10 is rational
    qv = Fraction(p, 10) ** D
    qe = QBase.exact(qv, D)
    qf = QBase.float(float(qv))
    exact = gauss_binomial(m, r, qe) * q_number(Fraction(d, D), qe) ** 2
    flt = gauss_binomial(m, r, qf) * q_number(Fraction(d, D), qf) ** 2
    assert to_complex(exact, qe) == pytest.approx(flt, rel=1e-10)


def test_sub_and_neg():
    assert sub(T, T) == 0
    assert -(1 - T) == T - 1
