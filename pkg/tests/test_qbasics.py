from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qeuler import (
    QBase,
    RationalFunction,
    T,
    eval_at,
    gauss_binomial,
    q_number,
    q_number_base,
    q_pochhammer,
)


def test_q_number_small_values(formal):
    assert q_number(0, formal) == 0
    assert q_number(1, formal) == 1
    assert q_number(2, formal) == 1 + T


def test_q_number_float():
    # (1 - 0.125) / (1 - 0.5)
    assert q_number(3, QBase.float(0.5)) == pytest.approx(1.75)


def test_q_number_base_a1(formal):
    for x in (0, 1, 3, -2):
        assert q_number_base(x, formal, 1) == q_number(x, formal)


def test_q_number_base_rational_example():
    q = QBase.exact("1/8", 3)
    v = q_number_base(Fraction(1, 3), q, 3)
    assert eval_at(v, q.root_point()) == Fraction(448, 511)


@given(st.fractions(min_value=-4, max_value=4, max_denominator=4), st.integers(1, 5))
@settings(max_examples=50, deadline=None)
def test_multiplicative_rebase(x, a):
    q = QBase.exact(None, 12)
    assert q_number(a, q) * q_number_base(x, q, a) == q_number(a * x, q)


def test_gauss_binomial_r1_is_one(formal):
    for m in range(8):
        assert gauss_binomial(m, 1, formal) == 1


def test_gauss_binomial_2_2(formal):
    assert gauss_binomial(2, 2, formal) == 1 + T + T**2


def _gb(N, k, q):
    # C_q(N, k) = C_q((N-k) + k, N-k) with r = k + 1
    if k < 0 or k > N:
        return RationalFunction(0)
    return gauss_binomial(N - k, k + 1, q)


def test_gauss_binomial_is_polynomial(formal):
    for m in range(6):
        for r in range(1, 5):
            assert gauss_binomial(m, r, formal).is_polynomial()


def test_pascal_recurrence(formal):
    for N in range(1, 13):
        for k in range(1, N):
            assert _gb(N, k, formal) == _gb(N - 1, k - 1, formal) + T**k * _gb(N - 1, k, formal)


def test_q_to_one_limits(formal):
    for N in range(13):
        for k in range(N + 1):
            assert eval_at(_gb(N, k, formal), 1) == comb(N, k)
    for x in range(-3, 8):
        assert eval_at(q_number(x, formal), 1) == x


def test_q_pochhammer_small(formal):
    z = 3 * T + 1
    assert q_pochhammer(z, formal, 0) == 1
    assert q_pochhammer(z, formal, 1) == 1 - z


@pytest.mark.parametrize("qv,z,r", [(0.5, 0.3, 2), (0.3 + 0.2j, -0.6 + 0.1j, 3), (0.7, 0.5j, 4)])
def test_q_binomial_theorem(qv, z, r):
    q = QBase.float(qv)
    total = sum(gauss_binomial(m, r, q) * z**m for m in range(400))
    assert abs(total - 1 / q_pochhammer(z, q, r)) < 1e-13
