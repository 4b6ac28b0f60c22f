"""Multiple q-Euler zeta function.

    zeta_{q,r}(s, x) = [2]_q^r sum_{m_1..m_r >= 0} (-q)^(m_1+...+m_r) / [m_1+...+m_r+x]_q^s

For |q| < 1 the bracket tends to 1/(1-q), so the terms are O(m^(r-1) |q|^m)
for every complex s and the series converges geometrically; no analytic
continuation is involved.  At s = -n it reproduces E_{n,q}^(r)(x), which
:func:`interpolation_check` verifies against the closed form.

Complex powers use the principal branch, w^(-s) = exp(-s Log w).  A bracket
on the branch cut (real and <= 0) is rejected unless s is an integer.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import BackendMismatchError, BranchCutError, DomainError
from .polynomials import _cutoff, _index_totals, _weights, qeuler_closed
from .report import IdentityReport
from .scalar import QBase
from .series import (
    SeriesControl,
    SeriesValue,
    bracket_bounds,
    geometric_tail,
    multiplicity_tail,
    sum_series,
)

__all__ = ["zeta_single_sum", "zeta_multisum", "interpolation_check", "bracket_power"]


def _integral(s: complex) -> int | None:
    if s.imag == 0 and float(s.real).is_integer():
        return int(s.real)
    return None


def _check_args(s, r: int, x, q: QBase) -> tuple[complex, Fraction]:
    if q.is_exact:
        raise BackendMismatchError("zeta is evaluated on the float backend only")
    if r < 0:
        raise DomainError("order r must be >= 0")
    x = Fraction(x)
    if x <= 0 and x.denominator == 1:
        raise DomainError(f"x = {x} is excluded (x must avoid 0, -1, -2, ...)")
    return complex(s), x


def bracket_power(w: complex, s: complex) -> complex:
    """w^(-s) on the principal branch."""
    k = _integral(s)
    if k is not None:
        if w == 0 and k > 0:
            raise DomainError("bracket [m+x]_q vanishes")
        return w ** (-k)
    if w.imag == 0 and w.real <= 0:
        raise BranchCutError(f"bracket {w} lies on the principal-log branch cut")
    return cmath.exp(-s * cmath.log(w))


def _power_bound(lo: float, hi: float, s: complex) -> float:
    """sup |w^(-s)| for lo <= |w| <= hi, |Arg w| <= pi."""
    sigma = s.real
    if sigma > 0:
        if lo == 0:
            return math.inf
        mag = lo ** (-sigma)
    else:
        mag = hi ** (-sigma)
    return mag * math.exp(abs(s.imag) * math.pi)


def zeta_single_sum(s, r: int, x, q: QBase, ctrl: SeriesControl | None = None,
                    gaussian: bool = False) -> SeriesValue:
    """[2]_q^r sum_m C(m+r-1, m) (-q)^m [m+x]_q^(-s), truncated with a tail bound.

    r = 0 is read as the empty r-fold sum over a single term: [x]_q^(-s).
    """
    s, x = _check_args(s, r, x, q)
    ctrl = ctrl or SeriesControl()
    qe = q.pow(1)
    qx = q.pow(x)
    one_minus = 1 - qe
    if r == 0:
        return SeriesValue(bracket_power((1 - qx) / one_minus, s), 0.0, 1)
    rho = q.modulus
    two_r = (1 + qe) ** r
    weight = _weights(r, q, gaussian)

    def term(m: int) -> complex:
        qm = q.pow(m)
        bracket = (1 - qm * qx) / one_minus
        sign = -1 if m % 2 else 1
        return two_r * weight(m) * sign * qm * bracket_power(bracket, s)

    def tail(m0: int) -> float:
        lo, hi = bracket_bounds(rho, abs(one_minus), float(x), m0)
        return abs(two_r) * _power_bound(lo, hi, s) * multiplicity_tail(rho, r, m0, gaussian)

    return sum_series(term, tail, ctrl)


def zeta_multisum(s, r: int, x, q: QBase, ctrl: SeriesControl | None = None) -> SeriesValue:
    """The r-fold defining sum, every index below the cutoff M (brute force)."""
    s, x = _check_args(s, r, x, q)
    if r == 0:
        return zeta_single_sum(s, 0, x, q, ctrl)
    ctrl = ctrl or SeriesControl()
    qe = q.pow(1)
    qx = q.pow(x)
    rho = q.modulus
    two_r = (1 + qe) ** r
    spread = r / (1 - rho) ** (r - 1)

    def tail(m0: int) -> float:
        lo, hi = bracket_bounds(rho, abs(1 - qe), float(x), m0)
        return geometric_tail(abs(two_r) * _power_bound(lo, hi, s) * spread, rho, m0)

    M = _cutoff(tail, ctrl)
    totals = _index_totals(M, r)
    pw = np.array([q.pow(m) for m in range(r * (M - 1) + 1)], dtype=complex)
    qm = pw[totals]
    bracket = (1 - qm * qx) / (1 - qe)
    k = _integral(s)
    if k is not None:
        powered = bracket ** (-k) if k else np.ones_like(bracket)
    else:
        bad = np.flatnonzero((bracket.imag == 0) & (bracket.real <= 0))
        if bad.size:
            idx = np.unravel_index(bad[0], (M,) * r)
            raise BranchCutError(
                f"branch cut hit at index tuple {tuple(int(i) for i in idx)}"
            )
        powered = np.exp(-s * np.log(bracket))
    sign = np.where(totals % 2 == 1, -1.0, 1.0)
    value = complex(two_r * (sign * qm * powered).sum())
    return SeriesValue(value, tail(M), M)


def interpolation_check(n: int, r: int, x, q: QBase, ctrl: SeriesControl | None = None,
                        tol: float | None = None) -> IdentityReport:
    """zeta_{q,r}(-n, x) (single sum) against E_{n,q}^(r)(x) (closed form)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    ctrl = ctrl or SeriesControl()
    z = zeta_single_sum(-n, r, x, q, ctrl)
    e = qeuler_closed(n, r, x, q)
    return IdentityReport.compare(
        "eq5", z.value, e, q, tol, n=n, r=r, x=str(Fraction(x)), tail_bound=z.tail_bound
    )
