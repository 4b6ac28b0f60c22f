"""Rational functions in one variable t over the rationals.

Elements are kept in canonical form: numerator and denominator are
coprime and the denominator is monic.  Two canonical fractions are equal
iff their numerators and denominators are equal coefficient-wise, so
``==`` is decidable and agrees with cross-multiplication.

Polynomial arithmetic (products, exact division, gcd) is delegated to
``flint.fmpq_poly``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

import flint

from .errors import BackendMismatchError, PoleError

__all__ = ["RationalFunction", "T"]

_Poly = flint.fmpq_poly


def _to_fraction(c) -> Fraction:
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    if isinstance(c, flint.fmpz):
        return Fraction(int(c))
    return Fraction(c)


def _poly_coeffs(p: _Poly) -> list[Fraction]:
    return [_to_fraction(c) for c in p.coeffs()]


def _const_poly(c) -> _Poly:
    if isinstance(c, Fraction):
        return _Poly([flint.fmpq(c.numerator, c.denominator)])
    return _Poly([c])


class RationalFunction:
    """An element of Q(t), immutable, in canonical form."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical: bool = False):
        if not isinstance(num, _Poly):
            num = self._coerce_poly(num)
        if not isinstance(den, _Poly):
            den = self._coerce_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            num, den = self._canonicalize(num, den)
        self._num = num
        self._den = den
        self._hash = None

    @staticmethod
    def _coerce_poly(value) -> _Poly:
        if isinstance(value, (list, tuple)):
            return _Poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in value])
        if isinstance(value, (int, Fraction, flint.fmpq, flint.fmpz)) and not isinstance(value, bool):
            return _const_poly(value)
        if isinstance(value, Rational):
            return _const_poly(Fraction(value))
        raise BackendMismatchError(
            f"cannot build an exact scalar from {type(value).__name__}"
        )

    @staticmethod
    def _canonicalize(num: _Poly, den: _Poly) -> tuple[_Poly, _Poly]:
        if num.is_zero():
            return _Poly([0]), _Poly([1])
        g = num.gcd(den)
        if not g.is_one():
            num = num // g
            den = den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        return num, den

    # -- construction ---------------------------------------------------

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "RationalFunction":
        """Return ``coeff * t**power``; negative powers go to the denominator."""
        c = _const_poly(Fraction(coeff))
        if power >= 0:
            return cls(c * _Poly([0, 1]) ** power, _Poly([1]), _canonical=True) if coeff else cls()
        return cls(c, _Poly([0, 1]) ** (-power), _canonical=True) if coeff else cls()

    @classmethod
    def from_coeffs(cls, num: list, den: list | None = None) -> "RationalFunction":
        """Build from ascending coefficient lists."""
        return cls(list(num), [1] if den is None else list(den))

    # -- accessors ------------------------------------------------------

    @property
    def numerator(self) -> list[Fraction]:
        return _poly_coeffs(self._num)

    @property
    def denominator(self) -> list[Fraction]:
        return _poly_coeffs(self._den)

    @property
    def num_poly(self) -> _Poly:
        return self._num

    @property
    def den_poly(self) -> _Poly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.is_one()

    def is_constant(self) -> bool:
        return self._den.is_one() and self._num.degree() <= 0

    def canonical(self) -> "RationalFunction":
        return RationalFunction(self._num, self._den)

    # -- arithmetic -----------------------------------------------------

    def _other(self, other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return RationalFunction(_const_poly(other), _Poly([1]), _canonical=True)
        if isinstance(other, (float, complex)):
            raise BackendMismatchError(
                "cannot combine an exact scalar with a float/complex value"
            )
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self._den == o._den:
            return RationalFunction(self._num + o._num, self._den)
        return RationalFunction(self._num * o._den + o._num * self._den, self._den * o._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self._num, self._den, _canonical=True)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o._den.is_one() and o._num.degree() <= 0:
            if o._num.is_zero():
                return RationalFunction()
            return RationalFunction(self._num * o._num, self._den, _canonical=True)
        return RationalFunction(self._num * o._num, self._den * o._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * o._den, self._den * o._num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e >= 0:
            return RationalFunction(self._num ** e, self._den ** e, _canonical=e > 0)
        if self.is_zero():
            raise ZeroDivisionError("zero rational function to a negative power")
        return RationalFunction(self._den ** (-e), self._num ** (-e))

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        try:
            o = self._other(other)
        except BackendMismatchError:
            return False
        if o is None:
            return NotImplemented
        return self._num == o._num and self._den == o._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(self.numerator), tuple(self.denominator)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- evaluation -----------------------------------------------------

    def eval_at(self, t0) -> Fraction:
        """Exact value at a rational point; raises PoleError at a pole."""
        t0 = Fraction(t0)
        x = flint.fmpq(t0.numerator, t0.denominator)
        d = self._den(x)
        if d == 0:
            raise PoleError(f"pole at evaluation point t = {t0}")
        return _to_fraction(self._num(x)) / _to_fraction(d)

    def eval_complex(self, t0: complex) -> complex:
        """Floating-point value at ``t0`` (Horner on both polynomials)."""
        d = _horner([float(c) for c in self.denominator], t0)
        if d == 0:
            raise PoleError(f"pole at evaluation point t = {t0}")
        return _horner([float(c) for c in self.numerator], t0) / d

    # -- text form ------------------------------------------------------

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        content, num, den = self.integer_parts()
        if not num:
            return "0"
        nstr = _wrap(_format_int_poly(num), num)
        if num == [1]:
            body = str(content)
        elif content == 1:
            body = nstr if den != [1] else _format_int_poly(num)
        elif content == -1:
            body = f"-{nstr}"
        else:
            body = f"{content}*{nstr}"
        if den != [1]:
            body = f"{body}/{_wrap(_format_int_poly(den), den)}"
        return body

    def integer_parts(self) -> tuple[Fraction, list[int], list[int]]:
        """Split into ``content * N(t) / D(t)`` with N, D primitive integer
        polynomials (ascending coefficients) whose leading coefficients are
        positive."""
        if self.is_zero():
            return Fraction(0), [], [1]
        num = self.numerator
        den = self.denominator
        cn, pn = _primitive(num)
        cd, pd = _primitive(den)
        return cn / cd, pn, pd

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        """Inverse of :meth:`__str__` (and of :func:`format_canonical`)."""
        return _Parser(text).parse()


T = RationalFunction.monomial(1)


def _horner(coeffs: list[float], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _primitive(coeffs: list[Fraction]) -> tuple[Fraction, list[int]]:
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, lcm), [v // g for v in ints]


def _wrap(text: str, coeffs: list[int]) -> str:
    return f"({text})" if sum(1 for c in coeffs if c) > 1 else text


def _format_int_poly(coeffs: list[int], var: str = "t") -> str:
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            mono = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            mono = power if mag == 1 else f"{mag}*{power}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|(\^)|([-+*/()]))")


class _Parser:
    """Recursive-descent parser for expressions in t with rational constants.

    Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
    factor := ('-'|'+') factor | atom ('^' int)?; atom := int | 't' | '(' expr ')'.
    """

    def __init__(self, text: str):
        self.tokens: list[str] = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse rational function near {text[pos:]!r}")
            self.tokens.append(m.group(m.lastindex))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> RationalFunction:
        value = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self):
        if self.peek() in ("-", "+"):
            op = self.take()
            value = self.factor()
            return -value if op == "-" else value
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(tok)
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok.isdigit():
            return RationalFunction(int(tok))
        if tok == "t":
            return T
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parentheses")
            return value
        raise ValueError(f"unexpected token {tok!r}")
