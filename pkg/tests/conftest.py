import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from indefdil import gf2, gf2k, quotient_ring, space_make  # noqa: E402


@pytest.fixture
def F2():
    return gf2()


@pytest.fixture
def F4():
    """GF(4) = GF(2)[x]/(x^2+x+1) with the identity involution."""
    return gf2k(2, 0b111)


@pytest.fixture
def F4bar():
    """GF(4) with conjugation a -> a^2."""
    return gf2k(2, 0b111, frobenius=True)


@pytest.fixture
def hyperbolic(F2):
    return space_make(F2, 2, [[0, 1], [1, 0]])


def small_rings():
    """Rings used for exhaustive and sampled law checks."""
    return [
        gf2(),
        gf2k(2, 0b111),
        gf2k(2, 0b111, frobenius=True),
        gf2k(3, 0b1011),
        gf2k(4, 0b10011, frobenius=True),
        gf2k(8, 0x11B),
        gf2k(8, 0x11B, frobenius=True),
        quotient_ring(0b101),
        quotient_ring(0b1111),
        quotient_ring(0b110),
    ]


ACCEPTANCE: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}".rstrip())
