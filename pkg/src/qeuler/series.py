"""Truncation control and rigorous tail bounds for the alternating series.

Every series here has terms of the form

    coeff(m) * (-q)^m * f([m + x]_q)

with |coeff(m)| bounded uniformly in m and |f([m + x]_q)| bounded on the
tail, so the remainder after M terms is at most K * rho^M / (1 - rho) with
rho = |q|.  The helpers below produce K for each evaluator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError

__all__ = ["SeriesControl", "SeriesValue", "sum_series", "binomial_bound", "bracket_bounds"]


@dataclass(frozen=True)
class SeriesControl:
    max_terms: int = 4000
    abs_tol: float = 1e-15
    use_tail_bound: bool = True

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if self.abs_tol < 0:
            raise ValueError("abs_tol must be nonnegative")


@dataclass(frozen=True)
class SeriesValue:
    """A truncated sum together with a bound on what was dropped."""

    value: complex
    tail_bound: float
    terms: int


def sum_series(
    term: Callable[[int], complex],
    tail: Callable[[int], float],
    ctrl: SeriesControl,
) -> SeriesValue:
    """Sum ``term(0), term(1), ...``.

    With ``ctrl.use_tail_bound`` the loop stops at the first M with
    ``tail(M) <= abs_tol`` (``tail(M)`` bounds the sum of terms M, M+1, ...);
    reaching ``max_terms`` first raises ConvergenceError.  Without it exactly
    ``max_terms`` terms are summed and the bound is only reported.
    """
    re: list[float] = []
    im: list[float] = []
    for m in range(ctrl.max_terms):
        v = term(m)
        re.append(v.real)
        im.append(v.imag)
        if ctrl.use_tail_bound:
            bound = tail(m + 1)
            if bound <= ctrl.abs_tol:
                return SeriesValue(complex(math.fsum(re), math.fsum(im)), bound, m + 1)
    bound = tail(ctrl.max_terms)
    if ctrl.use_tail_bound:
        raise ConvergenceError(
            f"not converged: tail bound {bound:.3e} > abs_tol {ctrl.abs_tol:.3e} "
            f"after max_terms = {ctrl.max_terms}"
        )
    return SeriesValue(complex(math.fsum(re), math.fsum(im)), bound, ctrl.max_terms)


def binomial_bound(rho: float, r: int) -> float:
    """sup_m |C_q(m+r-1, m)| <= prod_{i=1}^{r-1} 1/(1 - rho^i).

    C_q(m+r-1, m) is a polynomial in q with nonnegative coefficients, so its
    modulus is at most its value at rho = |q|, which increases to the product.
    """
    out = 1.0
    for i in range(1, r):
        out /= 1.0 - rho**i
    return out


def bracket_bounds(rho: float, abs_one_minus_q: float, x: float, m0: int) -> tuple[float, float]:
    """Lower/upper bounds on |[m + x]_q| over all m >= m0.

    |q^(m+x)| = rho^(m+x) for real x, so the modulus lies in
    [(1 - rho^(m0+x)) / |1-q|, (1 + rho^(m0+x)) / |1-q|].  The lower bound is
    0 when rho^(m0+x) >= 1.
    """
    p = rho ** (m0 + x) if rho > 0 else 0.0
    lo = max(0.0, (1.0 - p) / abs_one_minus_q)
    hi = (1.0 + p) / abs_one_minus_q
    return lo, hi


def geometric_tail(k: float, rho: float, m0: int) -> float:
    """k * sum_{m >= m0} rho^m."""
    if k == 0:
        return 0.0
    if math.isinf(k):
        return math.inf
    return k * rho**m0 / (1.0 - rho)


def multiplicity_tail(rho: float, r: int, m0: int, gaussian: bool = False) -> float:
    """Bound on sum_{m >= m0} w(m) rho^m for the collapsed r-fold weights.

    Ordinary weights w(m) = C(m+r-1, m) (the number of r-tuples with sum m):
    for m >= m0 the ratio w(m+1) rho / w(m) is at most
    theta = rho (m0+r)/(m0+1), so the tail is w(m0) rho^m0 / (1 - theta)
    once theta < 1.  Gaussian weights are bounded by :func:`binomial_bound`.
    """
    if gaussian:
        return geometric_tail(binomial_bound(rho, r), rho, m0)
    theta = rho * (m0 + r) / (m0 + 1)
    if theta >= 1:
        return math.inf
    return math.comb(m0 + r - 1, r - 1) * rho**m0 / (1.0 - theta)
