"""Symmetric identities for odd a, b.

Each verifier evaluates one side as a function of (a, b) and the other side
as the same function of (b, a), so ``report(a, b).lhs == report(b, a).rhs``
holds by construction; what is being checked is that the two orders agree.

Sums over j = (j_1, ..., j_r) in [0, a-1]^r only see J = j_1 + ... + j_r, so
they run over J weighted by the number of tuples with that total
(:func:`composition_counts`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DomainError
from .polynomials import qeuler_closed
from .qbasics import q_number
from .report import IdentityReport
from .scalar import QBase, Scalar, approx_eq
from .series import SeriesControl
from .zeta import bracket_power, zeta_single_sum

__all__ = [
    "SymmetryParams",
    "composition_counts",
    "s_sum",
    "theorem1_sides",
    "theorem2_sides",
    "theorem3_sides",
]


@dataclass(frozen=True)
class SymmetryParams:
    """Parameters shared by the three verifiers.

    ``a`` and ``b`` must be odd unless ``unchecked`` is set; the unchecked
    mode exists for experiments and carries no claim about the outcome.
    """

    a: int
    b: int
    r: int
    x: Fraction
    q: QBase
    n: int | None = None
    s: complex | None = None
    ctrl: SeriesControl = field(default_factory=SeriesControl)
    unchecked: bool = False

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        if self.a < 1 or self.b < 1:
            raise DomainError("a and b must be positive integers")
        if self.r < 1:
            raise DomainError("order r must be >= 1")
        if not self.unchecked and (self.a % 2 == 0 or self.b % 2 == 0):
            raise DomainError(f"a and b must be odd, got a = {self.a}, b = {self.b}")
        if self.n is not None and self.n < 0:
            raise DomainError("n must be >= 0")

    def echo(self) -> dict:
        out = {"a": self.a, "b": self.b, "r": self.r, "x": str(self.x)}
        if self.n is not None:
            out["n"] = self.n
        if self.s is not None:
            out["s"] = complex(self.s)
        if self.unchecked:
            out["unchecked"] = True
        return out


@lru_cache(maxsize=None)
def composition_counts(a: int, r: int) -> tuple[int, ...]:
    """counts[T] = #{(j_1..j_r) in [0, a-1]^r : sum = T}, by dynamic programming."""
    counts = [1]
    for _ in range(r):
        nxt = [0] * (len(counts) + a - 1)
        for t, c in enumerate(counts):
            if c:
                for j in range(a):
                    nxt[t + j] += c
        counts = nxt
    return tuple(counts)


def _ipow(v: Scalar, k: int, q: QBase) -> Scalar:
    # 0^0 = 1
    return q.one() if k == 0 else v**k


def s_sum(n: int, i: int, r: int, a: int, q_eff: QBase, method: str = "collapsed") -> Scalar:
    """S_{n,i}^(r)(a) = sum_{j in [0,a-1]^r} (-1)^J q_eff^((n-i+1) J) [J]_{q_eff}^i, J = sum j.

    ``method="direct"`` enumerates all a^r tuples; ``"collapsed"`` sums over
    J with signed composition counts.  ``q_eff`` is the base the sum is taken
    in (q^b on the left of the convolution identity, q^a on the right).
    """
    if not 0 <= i <= n:
        raise DomainError("s_sum needs 0 <= i <= n")
    if a < 1 or r < 1:
        raise DomainError("s_sum needs a >= 1 and r >= 1")
    out = q_eff.zero()
    if method == "direct":
        for js in itertools.product(range(a), repeat=r):
            J = sum(js)
            term = q_eff.pow((n - i + 1) * J) * _ipow(q_number(J, q_eff), i, q_eff)
            out = out - term if J % 2 else out + term
        return out
    if method != "collapsed":
        raise ValueError(f"unknown method {method!r}")
    for J, c in enumerate(composition_counts(a, r)):
        term = q_eff.pow((n - i + 1) * J) * _ipow(q_number(J, q_eff), i, q_eff) * c
        out = out - term if J % 2 else out + term
    return out


def _j_sum(a: int, b: int, r: int, q: QBase, value) -> Scalar:
    """sum_{j in [0,a-1]^r} (-1)^J q^(bJ) value(J)."""
    out = q.zero()
    for J, c in enumerate(composition_counts(a, r)):
        term = q.pow(b * J) * value(J) * c
        out = out - term if J % 2 else out + term
    return out


# -- zeta level ---------------------------------------------------------------


def _thm1_side(a: int, b: int, p: SymmetryParams) -> complex:
    q, s = p.q, complex(p.s)
    qa = q.power(a)

    def zeta_at(J: int) -> complex:
        arg = b * p.x + Fraction(b, a) * J
        try:
            return zeta_single_sum(s, p.r, arg, qa, p.ctrl).value
        except DomainError as exc:
            raise DomainError(f"zeta argument {arg} at j-total J = {J} (a={a}, b={b}): {exc}") from exc

    total = _j_sum(a, b, p.r, q, zeta_at)
    pre = q_number(2, q.power(b)) ** p.r * bracket_power(q_number(b, q), -s)
    return pre * total


def theorem1_sides(a: int, b: int, s, r: int, x, q: QBase, ctrl: SeriesControl | None = None,
                   tol: float | None = None, unchecked: bool = False) -> IdentityReport:
    """[2]_{q^b}^r [b]_q^s sum_j (-1)^J q^(bJ) zeta_{q^a,r}(s, bx + (b/a)J)  vs  (a <-> b)."""
    if q.is_exact:
        raise DomainError("the zeta-level identity is verified on the float backend")
    p = SymmetryParams(a, b, r, x, q, s=complex(s), ctrl=ctrl or SeriesControl(), unchecked=unchecked)
    lhs = _thm1_side(a, b, p)
    rhs = _thm1_side(b, a, p)
    return IdentityReport.compare("thm1", lhs, rhs, q, 1e-9 if tol is None else tol, **p.echo())


# -- polynomial level ---------------------------------------------------------


def _thm2_side(a: int, b: int, p: SymmetryParams) -> Scalar:
    q = p.q
    qa = q.power(a)
    total = _j_sum(a, b, p.r, q, lambda J: qeuler_closed(p.n, p.r, b * p.x + Fraction(b, a) * J, qa))
    return q_number(2, q.power(b)) ** p.r * q_number(a, q) ** p.n * total


def theorem2_sides(a: int, b: int, n: int, r: int, x, q: QBase, tol: float | None = None,
                   unchecked: bool = False) -> IdentityReport:
    """[2]_{q^b}^r [a]_q^n sum_j (-1)^J q^(bJ) E_{n,q^a}(bx + (b/a)J)  vs  (a <-> b)."""
    p = SymmetryParams(a, b, r, x, q, n=n, unchecked=unchecked)
    return IdentityReport.compare("thm2", _thm2_side(a, b, p), _thm2_side(b, a, p), q, tol, **p.echo())


# -- convolution level --------------------------------------------------------


def _thm3_side(a: int, b: int, p: SymmetryParams) -> Scalar:
    q, n = p.q, p.n
    qa, qb = q.power(a), q.power(b)
    ba, bb = q_number(a, q), q_number(b, q)
    out = q.zero()
    for i in range(n + 1):
        out = out + (
            comb(n, i)
            * _ipow(ba, n - i, q)
            * _ipow(bb, i, q)
            * qeuler_closed(n - i, p.r, b * p.x, qa)
            * s_sum(n, i, p.r, a, qb)
        )
    return q_number(2, qb) ** p.r * out


def theorem3_sides(a: int, b: int, n: int, r: int, x, q: QBase, tol: float | None = None,
                   unchecked: bool = False, cross_check: bool = True) -> IdentityReport:
    """[2]_{q^b}^r sum_i C(n,i) [a]^(n-i) [b]^i E_{n-i,q^a}(bx) S_{n,i,q^b}(a)  vs  (a <-> b).

    With ``cross_check`` each side is also compared with the matching side of
    :func:`theorem2_sides`; the outcome is recorded as
    ``params["matches_thm2"]`` and folded into ``passed``.
    """
    p = SymmetryParams(a, b, r, x, q, n=n, unchecked=unchecked)
    lhs, rhs = _thm3_side(a, b, p), _thm3_side(b, a, p)
    report = IdentityReport.compare("thm3", lhs, rhs, q, tol, **p.echo())
    if cross_check:
        t = report.tol
        match = approx_eq(lhs, _thm2_side(a, b, p), t) and approx_eq(rhs, _thm2_side(b, a, p), t)
        report.params["matches_thm2"] = match
        report.passed = report.passed and match
    return report
