import pytest

from subint.curves import CurveOrder, Extension, polynomial_ring
from subint.poly import Poly
from subint.scalars import GF


@pytest.fixture(scope="session")
def F2():
    return GF(2)


@pytest.fixture(scope="session")
def cusp(F2):
    t = Poly.t(F2)
    return Extension(CurveOrder(F2, [t**2, t**3], "cusp"), polynomial_ring(F2), "cusp")


# -- acceptance summary -------------------------------------------------------

_ACCEPTANCE: list = []


@pytest.fixture
def criterion():
    """``criterion(n, title, ok, detail)`` records one acceptance line and prints it."""
    def record(n, title, ok, detail=""):
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}" + \
               (f"  [{detail}]" if detail else "")
        _ACCEPTANCE.append((n, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_ACCEPTANCE):
        terminalreporter.write_line(line)
