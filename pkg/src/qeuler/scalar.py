"""Scalar backends and the deformation parameter q.

Two kinds of scalar flow through the package:

* float backend: a Python ``complex``;
* exact backend: a :class:`~qeuler.ratfunc.RationalFunction` in
  ``t = q**(1/D)``, where ``D`` (the root denominator) is fixed per
  computation so that every power of q that occurs is an integer power of t.

:class:`QBase` carries q together with an integer ``scale`` so that the
derived base ``q**a`` used throughout the symmetry identities stays tied to
the same root q (and the same variable t): ``QBase.power(a)`` multiplies the
scale, never the stored value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

from .errors import BackendMismatchError, DomainError, RepresentabilityError
from .ratfunc import RationalFunction

Scalar = Union[complex, RationalFunction]

FLOAT = "float"
EXACT = "exact"


def _as_fraction(e) -> Fraction:
    if isinstance(e, Fraction):
        return e
    if isinstance(e, float):
        raise TypeError("exponents must be rational (int, Fraction or 'p/q' string), not float")
    return Fraction(e)


@dataclass(frozen=True)
class QBase:
    """The deformation parameter.

    ``value`` is the root q: a complex number with ``|q| < 1`` (float
    backend) or a rational in (0, 1) or ``None`` for a purely formal
    indeterminate (exact backend).  The effective base is ``value**scale``.
    """

    value: complex | Fraction | None
    backend: str = FLOAT
    root_den: int = 1
    scale: int = 1

    def __post_init__(self):
        if self.backend == FLOAT:
            if self.value is None:
                raise DomainError("float backend needs a numeric q")
            q = complex(self.value)
            if not abs(q) < 1:
                raise DomainError(f"|q| < 1 required, got |q| = {abs(q)}")
            object.__setattr__(self, "value", q)
        elif self.backend == EXACT:
            if self.value is not None:
                q = Fraction(self.value)
                if not 0 < q < 1:
                    raise DomainError(f"exact backend needs 0 < q < 1, got {q}")
                object.__setattr__(self, "value", q)
        else:
            raise ValueError(f"unknown backend {self.backend!r}")
        if not isinstance(self.root_den, int) or self.root_den < 1:
            raise DomainError("root denominator D must be a positive integer")
        if not isinstance(self.scale, int) or self.scale < 1:
            raise DomainError("base scale must be a positive integer")

    # -- constructors -----------------------------------------------------

    @classmethod
    def float(cls, q: complex) -> "QBase":
        return cls(complex(q), FLOAT)

    @classmethod
    def exact(cls, q=None, root_den: int = 1) -> "QBase":
        return cls(None if q is None else Fraction(q), EXACT, root_den)

    def power(self, a: int) -> "QBase":
        """The base q**a, sharing this base's root q and variable t."""
        return replace(self, scale=self.scale * a)

    def with_root_den(self, root_den: int) -> "QBase":
        return replace(self, root_den=root_den)

    # -- properties -------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.backend == EXACT

    @property
    def modulus(self) -> float:
        """|q_eff| for the float backend."""
        if self.is_exact:
            if self.value is None:
                raise DomainError("formal q has no modulus")
            return float(self.value) ** self.scale
        return abs(self.value) ** self.scale

    def root_point(self) -> Fraction | None:
        """t0 = q**(1/D) when it is rational, else None."""
        if not self.is_exact or self.value is None:
            return None
        num = _int_root(self.value.numerator, self.root_den)
        den = _int_root(self.value.denominator, self.root_den)
        if num is None or den is None:
            return None
        return Fraction(num, den)

    def root_point_float(self) -> float:
        if self.value is None:
            raise DomainError("formal q cannot be evaluated numerically")
        return float(self.value) ** (1.0 / self.root_den)

    def describe(self) -> dict:
        """Plain-data description for reports."""
        if self.is_exact:
            q = None if self.value is None else str(self.value)
        else:
            q = {"re": self.value.real, "im": self.value.imag}
        return {"backend": self.backend, "q": q, "D": self.root_den, "scale": self.scale}

    # -- scalars ------------------------------------------------------------

    def const(self, c) -> Scalar:
        if self.is_exact:
            return RationalFunction(_as_fraction(c))
        if isinstance(c, Fraction):
            c = float(c)
        return complex(c)

    def one(self) -> Scalar:
        return self.const(1)

    def zero(self) -> Scalar:
        return self.const(0)

    def representable(self, e) -> bool:
        if not self.is_exact:
            return True
        return (_as_fraction(e) * self.scale * self.root_den).denominator == 1

    def pow(self, e) -> Scalar:
        """q_eff**e (see :func:`qpow`)."""
        return qpow(self, e)


def qpow(q: QBase, e) -> Scalar:
    """Return ``q_eff**e`` for a rational exponent ``e``.

    Exact backend: ``t**(e*scale*D)``, which must be an integer power.
    Float backend: integer exponents use repeated multiplication; other
    rational exponents use the principal branch, ``exp(e*scale*Log q)``.
    """
    e = _as_fraction(e)
    total = e * q.scale
    if q.is_exact:
        k = total * q.root_den
        if k.denominator != 1:
            raise RepresentabilityError(
                f"exponent not representable: q^({e}) needs D divisible by "
                f"{(total).denominator}, have D = {q.root_den}"
            )
        return RationalFunction.monomial(int(k))
    base = q.value
    if total == 0:
        return 1 + 0j
    if base == 0:
        if total < 0:
            raise DomainError("0 raised to a negative power")
        return 0j
    if total.denominator == 1:
        return base ** int(total)
    return cmath.exp(float(total) * cmath.log(base))


def _int_root(n: int, k: int) -> int | None:
    if n < 0:
        return None
    if k == 1:
        return n
    r = round(n ** (1.0 / k)) if n < 2**1000 else int(math.exp(math.log(n) / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    return None


# -- field operations -------------------------------------------------------


def is_exact(x) -> bool:
    return isinstance(x, RationalFunction)


def _check(a, b):
    if is_exact(a) != is_exact(b):
        raise BackendMismatchError("operands come from different backends")


def add(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    _check(a, b)
    if (is_exact(b) and b.is_zero()) or (not is_exact(b) and b == 0):
        raise ZeroDivisionError("division by zero scalar")
    return a / b


def neg(a: Scalar) -> Scalar:
    return -a


def approx_eq(a: Scalar, b: Scalar, tol: float) -> bool:
    """Exact: identical canonical forms.  Float: ``|a-b| <= tol*max(1,|a|,|b|)``."""
    _check(a, b)
    if is_exact(a):
        return a == b
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def eval_at(a: RationalFunction, t0) -> Fraction:
    """Exact value of an exact scalar at the rational point ``t = t0``."""
    if not is_exact(a):
        raise BackendMismatchError("eval_at needs an exact scalar")
    return a.eval_at(t0)


def to_complex(a: Scalar, q: QBase | None = None) -> complex:
    """Numeric value; exact scalars are evaluated at ``t0 = q**(1/D)``."""
    if not is_exact(a):
        return complex(a)
    if q is None:
        raise DomainError("need the QBase to evaluate an exact scalar")
    t0 = q.root_point()
    if t0 is not None:
        v = a.eval_at(t0)
        return complex(float(v))
    return a.eval_complex(q.root_point_float())
