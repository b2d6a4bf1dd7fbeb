from __future__ import annotations

import math

import pytest

from flatbill.builders import build, double_ngon, square_torus

ACCEPTANCE_LINES: list[str] = []


def h_w(n: int):
    """Circumferences and widths of the vertical cylinders of the double n-gon."""
    hs = [4 * math.sin(math.pi * (2 * j - 1) / n) * math.cos(math.pi / n) for j in range(1, (n - 1) // 2 + 1)]
    ws = [2 * math.sin(math.pi * (2 * j - 1) / n) * math.sin(math.pi / n) for j in range(1, (n - 1) // 2 + 1)]
    return hs, ws


def primitive_vectors(R: float, step: int = 1):
    """Brute-force scan of primitive integer vectors (times ``step``) of norm at most R."""
    out = []
    m = int(R // step) + 1
    for a in range(-m, m + 1):
        for b in range(-m, m + 1):
            if (a, b) != (0, 0) and math.gcd(a, b) == 1 and math.hypot(a * step, b * step) <= R + 1e-9:
                out.append((a * step, b * step))
    return out


@pytest.fixture(scope="session")
def x5():
    return double_ngon(5)


@pytest.fixture(scope="session")
def s5():
    return build("Sn", 5)


@pytest.fixture(scope="session")
def torus():
    return square_torus()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
