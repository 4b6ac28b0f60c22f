"""q-numbers, Gaussian binomial coefficients and q-Pochhammer products."""

from __future__ import annotations

import threading

from .scalar import QBase, Scalar

__all__ = ["q_number", "q_number_base", "gauss_binomial", "q_pochhammer", "clear_cache"]


def q_number(x, q: QBase) -> Scalar:
    """[x]_q = (1 - q**x) / (1 - q) for rational ``x``."""
    one = q.one()
    return (one - q.pow(x)) / (one - q.pow(1))


def q_number_base(x, q: QBase, a: int) -> Scalar:
    """[x]_{q**a}, with q**a tied to the same root as ``q``."""
    return q_number(x, q.power(a))


_binom_lock = threading.Lock()
_binom_cache: dict[tuple[QBase, int], list[Scalar]] = {}


def gauss_binomial(m: int, r: int, q: QBase) -> Scalar:
    """The Gaussian binomial C_q(m+r-1, m) = prod_{i=1..m} (1-q^(r-1+i))/(1-q^i).

    Prefix products are memoized per (q, r), since series evaluators ask for
    every m up to their truncation point.
    """
    if m < 0 or r < 1:
        raise ValueError("gauss_binomial needs m >= 0 and r >= 1")
    key = (q, r)
    with _binom_lock:
        seq = _binom_cache.get(key)
        if seq is None:
            seq = _binom_cache[key] = [q.one()]
        if len(seq) > m:
            return seq[m]
        one = q.one()
        while len(seq) <= m:
            i = len(seq)
            if r == 1:
                seq.append(one)
            else:
                seq.append(seq[-1] * (one - q.pow(r - 1 + i)) / (one - q.pow(i)))
        return seq[m]


def clear_cache() -> None:
    with _binom_lock:
        _binom_cache.clear()


def q_pochhammer(z: Scalar, q: QBase, r: int) -> Scalar:
    """(z; q)_r = prod_{j=0..r-1} (1 - z q^j); the empty product is 1."""
    out = q.one()
    for j in range(r):
        out = out * (1 - z * q.pow(j))
    return out
