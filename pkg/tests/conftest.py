from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qeuler import QBase, RationalFunction


@pytest.fixture
def q_half():
    return QBase.float(0.5)


@pytest.fixture
def formal():
    return QBase.exact(None, 1)


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def rational_functions(draw, max_degree=3, nonzero=False):
    num = draw(st.lists(small_fractions, min_size=1, max_size=max_degree + 1))
    den = draw(st.lists(small_fractions, min_size=1, max_size=max_degree + 1).filter(lambda c: any(c)))
    f = RationalFunction.from_coeffs(num, den)
    if nonzero and f.is_zero():
        f = f + 1
    return f


__all__ = ["rational_functions", "small_fractions", "Fraction"]


# One line per acceptance criterion, printed after the run.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line: criterion(number, title, ok, detail)."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> bool:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}"
        ACCEPTANCE_LINES.append(line + (f" ({detail})" if detail else ""))
        print(ACCEPTANCE_LINES[-1])
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
