"""JSON forms of scalars.

Complex values become ``{"re": ..., "im": ...}``; ``json`` writes floats
with their shortest round-trip repr, so parsing gives back the same bits.
Exact values become the canonical string ``content*(N)/(D)`` with N, D
primitive integer polynomials in t, plus the value at t0 = q^(1/D) when
that point is rational.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfunc import RationalFunction


def complex_to_json(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def complex_from_json(obj: dict) -> complex:
    return complex(float(obj["re"]), float(obj["im"]))


def scalar_to_json(x, q=None) -> dict:
    if not isinstance(x, RationalFunction):
        return complex_to_json(x)
    out: dict = {"exact": str(x)}
    if q is not None and q.value is not None:
        t0 = q.root_point()
        try:
            if t0 is not None:
                v = x.eval_at(t0)
                out["value"] = str(v)
                out["approx"] = float(v)
            else:
                out["approx"] = complex_to_json(x.eval_complex(q.root_point_float()))
        except ZeroDivisionError:
            out["value"] = None
    return out


def scalar_from_json(obj: dict):
    if "exact" in obj:
        return RationalFunction.parse(obj["exact"])
    return complex_from_json(obj)


def fraction_str(v: Fraction) -> str:
    return str(Fraction(v))
