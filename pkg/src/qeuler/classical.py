"""Classical Euler numbers and polynomials of order r.

E_n^(r)(x) is the coefficient of t^n/n! in (2/(e^t+1))^r e^(xt).  These are
the q -> 1 limits of the q-Euler polynomials and serve as an exact oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = ["RationalPolynomial", "euler_numbers_order1", "euler_numbers", "euler_poly"]


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in x with rational coefficients, ``coeffs[k]`` multiplying x^k."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                mono = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                mono = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(mono if c > 0 else f"-{mono}")
            else:
                parts.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(parts)


def euler_numbers_order1(n_max: int) -> list[Fraction]:
    """E_0..E_{n_max} from (e^t + 1) * sum E_n t^n/n! = 2.

    Comparing coefficients gives E_0 = 1 and, for n >= 1,
    sum_{k=0}^{n} C(n,k) E_k + E_n = 0.
    """
    return list(_euler_numbers(n_max, 1))


def euler_numbers(n_max: int, r: int) -> list[Fraction]:
    """Euler numbers of order r: the r-fold binomial convolution of order 1."""
    if r < 1:
        raise ValueError("order r must be >= 1")
    return list(_euler_numbers(n_max, r))


@lru_cache(maxsize=None)
def _euler_numbers(n_max: int, r: int) -> tuple[Fraction, ...]:
    if r == 1:
        out = [Fraction(1)]
        for n in range(1, n_max + 1):
            s = sum(comb(n, k) * out[k] for k in range(n))
            out.append(-s / 2)
        return tuple(out)
    base = _euler_numbers(n_max, 1)
    prev = _euler_numbers(n_max, r - 1)
    return tuple(
        sum(comb(n, k) * prev[k] * base[n - k] for k in range(n + 1))
        for n in range(n_max + 1)
    )


def euler_poly(n: int, r: int) -> RationalPolynomial:
    """E_n^(r)(x) = sum_k C(n,k) E_k^(r) x^(n-k)."""
    nums = _euler_numbers(n, r)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = comb(n, k) * nums[k]
    return RationalPolynomial(tuple(coeffs))
