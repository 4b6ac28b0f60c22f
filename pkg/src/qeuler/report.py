"""Both-sides reports for verified identities."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any

from .scalar import QBase, Scalar, approx_eq, is_exact, to_complex
from .serialize import scalar_to_json

SCHEMA = "qeuler.report/1"

DEFAULT_TOL = 1e-10
TOL_ENV = "QEULER_TOL"


def default_tol() -> float:
    """Float-backend tolerance, overridable through $QEULER_TOL."""
    raw = os.environ.get(TOL_ENV)
    return float(raw) if raw else DEFAULT_TOL


@dataclass
class IdentityReport:
    identity: str
    lhs: Scalar
    rhs: Scalar
    tol: float
    passed: bool
    abs_diff: float | None
    exact_zero: bool | None
    q: QBase
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def compare(cls, identity: str, lhs: Scalar, rhs: Scalar, q: QBase,
                tol: float | None = None, **params) -> "IdentityReport":
        tol = default_tol() if tol is None else tol
        if is_exact(lhs) or is_exact(rhs):
            diff = lhs - rhs
            zero = diff.is_zero()
            try:
                absd = abs(to_complex(diff, q))
            except Exception:
                absd = None
            return cls(identity, lhs, rhs, tol, zero, absd, zero, q, params)
        passed = approx_eq(lhs, rhs, tol)
        return cls(identity, lhs, rhs, tol, passed, abs(lhs - rhs), None, q, params)

    @property
    def exact(self) -> bool:
        return self.exact_zero is not None

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "identity": self.identity,
            "params": {k: _plain(v) for k, v in self.params.items()},
            "q": self.q.describe(),
            "lhs": scalar_to_json(self.lhs, self.q),
            "rhs": scalar_to_json(self.rhs, self.q),
            "abs_diff": self.abs_diff,
            "exact_zero": self.exact_zero,
            "tol": None if self.exact else self.tol,
            "pass": self.passed,
        }


def _plain(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)
