"""Higher-order q-Euler polynomials E_{n,q}^(r)(x).

E_{n,q}^(r)(x) is n! times the t^n coefficient of

    [2]_q^r * sum_{m_1..m_r >= 0} (-q)^(m_1+...+m_r) * exp([m_1+...+m_r+x]_q t),

so E_{n,q}^(r)(x) = [2]_q^r sum (-q)^(sum m) [sum m + x]_q^n.  Three
independent evaluators are provided:

* :func:`qeuler_multisum` -- the r-fold sum, brute force (float only);
* :func:`qeuler_single_sum` -- the sum grouped by m = m_1+...+m_r, which
  has C(m+r-1, m) tuples: [2]_q^r sum_m C(m+r-1, m) (-q)^m [m+x]_q^n
  (float only);
* :func:`qeuler_closed` -- the finite form obtained by expanding
  [m+x]_q^n binomially, after which each of the r index sums is geometric:

      [2]_q^r (1-q)^(-n) sum_{k=0}^{n} C(n,k) (-1)^k q^(kx) (1 + q^(k+1))^(-r).

The closed form works on both backends and is the production evaluator.

``gaussian=True`` selects the variant in which the multiplicity C(m+r-1, m)
is replaced by the Gaussian binomial C_q(m+r-1, m).  Its finite form has
prod_{j=1}^{r} (1 + q^(k+j)) in place of (1 + q^(k+1))^r.  It agrees with
the r-fold sum only for r = 1, and the symmetry identities fail for it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .errors import BackendMismatchError, ConvergenceError, DomainError
from .qbasics import gauss_binomial, q_number
from .report import IdentityReport
from .scalar import QBase, Scalar
from .series import (
    SeriesControl,
    SeriesValue,
    bracket_bounds,
    geometric_tail,
    multiplicity_tail,
    sum_series,
)

__all__ = [
    "qeuler",
    "qeuler_closed",
    "qeuler_single_sum",
    "qeuler_multisum",
    "qeuler_addition",
    "eq15_sides",
    "eq16_sides",
]

# Upper limit on the number of index tuples the brute-force r-fold sum may
# materialize at once.
MULTISUM_MAX_TUPLES = 30_000_000


def _check_order(n: int, r: int) -> None:
    if n < 0:
        raise DomainError("n must be >= 0")
    if r < 1:
        raise DomainError("order r must be >= 1")


def _require_float(q: QBase, what: str) -> None:
    if q.is_exact:
        raise BackendMismatchError(f"{what} is a float-backend evaluator")


def _ipow(v: Scalar, k: int, q: QBase) -> Scalar:
    # 0^0 = 1
    return q.one() if k == 0 else v**k


def qeuler_closed(n: int, r: int, x, q: QBase, gaussian: bool = False) -> Scalar:
    """E_{n,q}^(r)(x) by the finite closed form (both backends)."""
    _check_order(n, r)
    return _closed(n, r, Fraction(x), q, gaussian)


qeuler = qeuler_closed


@lru_cache(maxsize=65536)
def _closed(n: int, r: int, x: Fraction, q: QBase, gaussian: bool) -> Scalar:
    one = q.one()
    qx = q.pow(x) if n > 0 else one
    acc = q.zero()
    qxk = one
    for k in range(n + 1):
        if gaussian:
            den = one
            for j in range(1, r + 1):
                den = den * (one + q.pow(k + j))
        else:
            den = (one + q.pow(k + 1)) ** r
        term = qxk / den
        acc = acc + term * comb(n, k) if k % 2 == 0 else acc - term * comb(n, k)
        qxk = qxk * qx
    two = one + q.pow(1)
    return acc * two**r / (one - q.pow(1)) ** n


def qeuler_single_sum(n: int, r: int, x, q: QBase, ctrl: SeriesControl | None = None,
                      gaussian: bool = False) -> SeriesValue:
    """E_{n,q}^(r)(x) = [2]_q^r sum_m C(m+r-1, m) (-q)^m [m+x]_q^n, truncated."""
    _check_order(n, r)
    _require_float(q, "qeuler_single_sum")
    ctrl = ctrl or SeriesControl()
    x = Fraction(x)
    qe = q.pow(1)
    qx = q.pow(x)
    rho = q.modulus
    two_r = (1 + qe) ** r
    one_minus = 1 - qe
    weight = _weights(r, q, gaussian)

    def term(m: int) -> complex:
        qm = q.pow(m)
        bracket = (1 - qm * qx) / one_minus
        sign = -1 if m % 2 else 1
        return two_r * weight(m) * sign * qm * _ipow(bracket, n, q)

    def tail(m0: int) -> float:
        _, hi = bracket_bounds(rho, abs(one_minus), float(x), m0)
        return abs(two_r) * hi**n * multiplicity_tail(rho, r, m0, gaussian)

    return sum_series(term, tail, ctrl)


def _weights(r: int, q: QBase, gaussian: bool):
    if gaussian:
        return lambda m: gauss_binomial(m, r, q)
    return lambda m: comb(m + r - 1, m)


def qeuler_multisum(n: int, r: int, x, q: QBase, ctrl: SeriesControl | None = None) -> SeriesValue:
    """E_{n,q}^(r)(x) from the r-fold sum with every index below M.

    M is the least cutoff whose tail bound meets ``ctrl.abs_tol``.  Dropped
    tuples have some index >= M, so their total is at most
    r * rho^M/(1-rho) * (1/(1-rho))^(r-1) * sup|[2]_q^r [.]_q^n|.
    """
    _check_order(n, r)
    _require_float(q, "qeuler_multisum")
    ctrl = ctrl or SeriesControl()
    x = Fraction(x)
    qe = q.pow(1)
    qx = q.pow(x)
    rho = q.modulus
    two_r = (1 + qe) ** r
    spread = r / (1 - rho) ** (r - 1)

    def tail(m0: int) -> float:
        # every dropped tuple has total >= m0
        _, hi = bracket_bounds(rho, abs(1 - qe), float(x), m0)
        return geometric_tail(abs(two_r) * hi**n * spread, rho, m0)

    M = _cutoff(tail, ctrl)
    totals = _index_totals(M, r)
    pw = np.array([q.pow(m) for m in range(r * (M - 1) + 1)], dtype=complex)
    qm = pw[totals]
    sign = np.where(totals % 2 == 1, -1.0, 1.0)
    bracket = (1 - qm * qx) / (1 - qe)
    terms = sign * qm * (bracket**n if n else np.ones_like(bracket))
    value = complex(two_r * terms.sum())
    return SeriesValue(value, tail(M), M)


def _cutoff(tail, ctrl: SeriesControl) -> int:
    if not ctrl.use_tail_bound:
        return ctrl.max_terms
    for M in range(1, ctrl.max_terms + 1):
        if tail(M) <= ctrl.abs_tol:
            return M
    raise ConvergenceError(
        f"not converged: tail bound {tail(ctrl.max_terms):.3e} > abs_tol "
        f"{ctrl.abs_tol:.3e} at max_terms = {ctrl.max_terms}"
    )


def _index_totals(M: int, r: int) -> np.ndarray:
    """m_1 + ... + m_r for every tuple in [0, M)^r, flattened."""
    if M**r > MULTISUM_MAX_TUPLES:
        raise ConvergenceError(
            f"not converged: the r-fold sum needs {M}^{r} index tuples "
            f"(limit {MULTISUM_MAX_TUPLES})"
        )
    return np.indices((M,) * r, dtype=np.int64).sum(axis=0).ravel()


def qeuler_addition(n: int, r: int, x, y, q: QBase, tol: float | None = None) -> IdentityReport:
    """E_n(x+y) against sum_i C(n,i) q^(xi) E_i(y) [x]_q^(n-i)."""
    _check_order(n, r)
    x, y = Fraction(x), Fraction(y)
    lhs = qeuler_closed(n, r, x + y, q)
    bx = q_number(x, q)
    rhs = q.zero()
    for i in range(n + 1):
        rhs = rhs + comb(n, i) * q.pow(x * i) * qeuler_closed(i, r, y, q) * _ipow(bx, n - i, q)
    return IdentityReport.compare("eq9", lhs, rhs, q, tol, n=n, r=r, x=str(x), y=str(y))


def _eq15_lhs(m, n, r, x, y, q, shift_n: bool) -> Scalar:
    bx = q_number(x, q)
    out = q.zero()
    for k in range(m + 1):
        e = (k + n) * x if shift_n else k * x
        out = out + comb(m, k) * q.pow(e) * qeuler_closed(k + n, r, y, q) * _ipow(bx, m - k, q)
    return out


def eq15_sides(m: int, n: int, r: int, x, y, q: QBase, tol: float | None = None) -> IdentityReport:
    """sum_k C(m,k) q^((k+n)x) E_{k+n}(y) [x]^(m-k)
    = sum_k C(n,k) E_{m+k}(x+y) q^((n-k)x) [-x]^(n-k)."""
    x, y = Fraction(x), Fraction(y)
    lhs = _eq15_lhs(m, n, r, x, y, q, True)
    bmx = q_number(-x, q)
    rhs = q.zero()
    for k in range(n + 1):
        rhs = rhs + comb(n, k) * qeuler_closed(m + k, r, x + y, q) * q.pow((n - k) * x) * _ipow(bmx, n - k, q)
    return IdentityReport.compare("eq15", lhs, rhs, q, tol, m=m, n=n, r=r, x=str(x), y=str(y))


def eq16_sides(m: int, n: int, r: int, x, y, q: QBase, tol: float | None = None) -> IdentityReport:
    """sum_k C(m,k) q^(kx) E_{k+n}(y) [x]^(m-k)
    = sum_k C(n,k) q^(-kx) E_{m+k}(x+y) [-x]^(n-k)."""
    x, y = Fraction(x), Fraction(y)
    lhs = _eq15_lhs(m, n, r, x, y, q, False)
    bmx = q_number(-x, q)
    rhs = q.zero()
    for k in range(n + 1):
        rhs = rhs + comb(n, k) * q.pow(-k * x) * qeuler_closed(m + k, r, x + y, q) * _ipow(bmx, n - k, q)
    return IdentityReport.compare("eq16", lhs, rhs, q, tol, m=m, n=n, r=r, x=str(x), y=str(y))
