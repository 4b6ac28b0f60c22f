"""Higher-order q-Euler polynomials, multiple q-Euler zeta functions and
their symmetric identities, on a complex floating-point backend and an
exact backend of rational functions in t = q^(1/D)."""

__version__ = "0.1.0"

from .classical import (
    RationalPolynomial,
    euler_numbers,
    euler_numbers_order1,
    euler_poly,
)
from .errors import (
    BackendMismatchError,
    BranchCutError,
    ConvergenceError,
    DomainError,
    PoleError,
    QEulerError,
    RepresentabilityError,
)
from .polynomials import (
    eq15_sides,
    eq16_sides,
    qeuler,
    qeuler_addition,
    qeuler_closed,
    qeuler_multisum,
    qeuler_single_sum,
)
from .qbasics import gauss_binomial, q_number, q_number_base, q_pochhammer
from .ratfunc import RationalFunction, T
from .report import IdentityReport
from .scalar import QBase, add, approx_eq, div, eval_at, mul, neg, qpow, sub, to_complex
from .series import SeriesControl, SeriesValue
from .symmetry import (
    SymmetryParams,
    composition_counts,
    s_sum,
    theorem1_sides,
    theorem2_sides,
    theorem3_sides,
)
from .zeta import interpolation_check, zeta_multisum, zeta_single_sum

__all__ = [
    "__version__",
    "RationalPolynomial",
    "euler_numbers",
    "euler_numbers_order1",
    "euler_poly",
    "BackendMismatchError",
    "BranchCutError",
    "ConvergenceError",
    "DomainError",
    "PoleError",
    "QEulerError",
    "RepresentabilityError",
    "eq15_sides",
    "eq16_sides",
    "qeuler",
    "qeuler_addition",
    "qeuler_closed",
    "qeuler_multisum",
    "qeuler_single_sum",
    "gauss_binomial",
    "q_number",
    "q_number_base",
    "q_pochhammer",
    "RationalFunction",
    "T",
    "IdentityReport",
    "QBase",
    "add",
    "approx_eq",
    "div",
    "eval_at",
    "mul",
    "neg",
    "qpow",
    "sub",
    "to_complex",
    "SeriesControl",
    "SeriesValue",
    "SymmetryParams",
    "composition_counts",
    "s_sum",
    "theorem1_sides",
    "theorem2_sides",
    "theorem3_sides",
    "interpolation_check",
    "zeta_multisum",
    "zeta_single_sum",
]
