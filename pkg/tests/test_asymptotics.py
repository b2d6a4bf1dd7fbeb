import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatbill.asymptotics import (
    DiscFn,
    TrapezoidFn,
    circle_average_check,
    count_series,
    predicted_constant,
    sum_identity_check,
    sv_transform,
    trapezoid_ellipse_integral,
)
from flatbill.builders import build, double_ngon, triangle_p
from flatbill.census import cylinders_up_to
from flatbill.geom import Vec2, sl2_element
from flatbill.surface import apply_matrix, area
from conftest import h_w, primitive_vectors


def test_predicted_values():
    assert predicted_constant("Xn", 5) == pytest.approx(0.557825, abs=2e-5)
    assert predicted_constant("Sn", 5) == pytest.approx(1.227216, abs=3e-5)
    assert predicted_constant("Pn", 5) * triangle_p(5).area() == pytest.approx(6 / math.pi * 132 / 432, rel=1e-12)
    assert predicted_constant("torus") == pytest.approx(6 / math.pi, rel=1e-15)
    x7 = 49 * 48 / (24 * 5 * math.pi) / (7 * math.sin(2 * math.pi / 7))
    assert predicted_constant("Xn", 7) == pytest.approx(x7, rel=1e-12)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_predicted_consistency(n):
    # N(P_n, T) and N(S_n, T) are the same count
    assert predicted_constant("Sn", n) == pytest.approx(predicted_constant("Pn", n), rel=1e-12)
    ax = area(double_ngon(n))
    assert predicted_constant("Sn", n) * ax == pytest.approx(
        2 * predicted_constant("Xn", n) * ax + n * (n - 1) / (4 * (n - 2) * math.pi), rel=1e-12)
    hs, ws = h_w(n)
    # the X_n constant is the sum over the orbits of the vertical cylinders
    per_orbit = sum(n / ((n - 2) * math.pi) / (h * w) for h, w in zip(hs, ws))
    assert predicted_constant("Xn", n) == pytest.approx(per_orbit, rel=1e-12)


def test_predicted_errors():
    with pytest.raises(ValueError):
        predicted_constant("Xn", 6)
    with pytest.raises(ValueError):
        predicted_constant("Yn", 5)


@pytest.mark.parametrize("n,rhs", [(3, 4 / 3), (5, 4.0), (7, 8.0), (9, 40 / 3), (11, 20.0)])
def test_sum_identity(n, rhs):
    lhs, r = sum_identity_check(n)
    assert r == pytest.approx(rhs)
    assert abs(lhs - r) <= 1e-9


def test_sum_identity_domain():
    with pytest.raises(ValueError):
        sum_identity_check(4)


def test_sv_transform_torus(torus):
    assert sv_transform(torus, DiscFn(0.01)) == 0
    h = TrapezoidFn()
    expect = sum(h(a, b) for a, b in primitive_vectors(2))
    assert sv_transform(torus, h) == expect == 2


def test_short_cylinder_transform(x5):
    hs, ws = h_w(5)
    # squeeze the vertical direction so V_1 and V_2 become very short
    g = sl2_element("diag_t", 4.0)
    s = apply_matrix(g, x5)
    eps = 0.1
    for h, w in zip(hs, ws):
        assert sv_transform(s, DiscFn(eps), signed=False, area_class=h * w) == 1
        assert sv_transform(s, DiscFn(eps), signed=True, area_class=h * w) == 2
    assert sv_transform(s, DiscFn(1e-3), signed=False, area_class=hs[0] * ws[0]) == 0


def test_trapezoid_region():
    h = TrapezoidFn()
    assert h(1, 1) == 1 and h(0, 1) == 1 and h(0, 0.5) == 1 and h(0.5, 0.5) == 1
    assert h(0.6, 0.55) == 0 and h(0, 0.49) == 0 and h(-0.01, 0.8) == 0
    assert h.radius == pytest.approx(math.sqrt(2))


@pytest.mark.parametrize("t", [1.0, 2.0, 3.0])
def test_trapezoid_integral_support(t):
    v = Vec2(0.6, 0.8)
    # ellipse stays inside norm 1/2
    assert trapezoid_ellipse_integral(v * (math.exp(-t) / 4), t) == 0
    # ellipse stays outside norm sqrt(2)
    assert trapezoid_ellipse_integral(v * (2 * math.sqrt(2) * math.exp(t)), t) <= 1e-15


def test_trapezoid_integral_closed_form():
    # for |v| in (e^t/2, e^t] the integral is arctan(e^-2t)
    t, grid = 3.0, 1 << 18
    for r in (0.55, 0.75, 1.0):
        got = trapezoid_ellipse_integral(Vec2(r * math.exp(t), 0), t, grid)
        assert got == pytest.approx(math.atan(math.exp(-2 * t)), abs=2 * 2 * math.pi / grid)


def test_trapezoid_integral_constants():
    rng = np.random.default_rng(12345)
    t = 3.0
    vals = []
    for _ in range(1000):
        r = rng.uniform(math.exp(t) / 2, math.exp(t))
        a = rng.uniform(0, 2 * math.pi)
        vals.append(trapezoid_ellipse_integral(Vec2(r * math.cos(a), r * math.sin(a)), t) * math.exp(2 * t))
    # measured constants c1 = 0.9960, c2 = 1.0056
    assert 0.99 <= min(vals) and max(vals) <= 1.01


def test_trapezoid_grid_domain():
    with pytest.raises(ValueError):
        trapezoid_ellipse_integral(Vec2(1, 0), 1.0, 100)


def test_count_series_torus(torus):
    cs = count_series(torus, "cylinders", [10, 20, 50], predicted=predicted_constant("torus"))
    assert cs.rows[0][1] == len(primitive_vectors(10)) == 192
    assert cs.rows[2][2] == pytest.approx(6 / math.pi, rel=0.03)
    buf = io.StringIO()
    cs.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "T,count,count_over_T2,predicted,ratio"
    assert len(lines) == 4
    sc = count_series(torus, "saddle_connections", [10])
    assert sc.rows[0][1] == 192


def test_count_series_validation(torus):
    with pytest.raises(ValueError):
        count_series(torus, "cylinders", [20, 10])
    with pytest.raises(ValueError):
        count_series(torus, "loops", [10])
    with pytest.raises(ValueError):
        count_series(torus, "saddle_connections", [10], weights="1/area")


def test_area_weights(x5):
    w = count_series(x5, "cylinders", [10], weights="1/area")
    cyl = cylinders_up_to(x5, 10)
    assert w.rows[0][1] == pytest.approx(sum(1 / c.area for c in cyl))


def test_bracketing_and_telescoping(x5, s5, torus):
    for s, c in ((x5, 2 * predicted_constant("Xn", 5)), (s5, 2 * predicted_constant("Sn", 5)),
                 (torus, predicted_constant("torus"))):
        Ts = [10 / 2 ** k for k in range(6, -1, -1)] + [20.0]
        rows = count_series(s, "cylinders", Ts).rows
        counts = [N for _, N, _ in rows]
        assert counts == sorted(counts)
        for T, N, _ in rows:
            if T >= 10:
                assert c / 2 * T * T < N < 2 * c * T * T
        # sum of the dyadic annuli below T = 10 telescopes to N(10)
        n10 = dict((T, N) for T, N, _ in rows)
        ann = sum(n10[10 / 2 ** k] - n10[10 / 2 ** (k + 1)] for k in range(6))
        assert ann + n10[10 / 2 ** 6] == n10[10.0]


def test_circle_average_degenerate(torus):
    r = circle_average_check(torus, 0.9, grid=360)
    assert r.lhs == 0
    assert r.ratio is None


def test_circle_average_grid_domain(torus):
    with pytest.raises(ValueError):
        circle_average_check(torus, 8, grid=100)


@settings(max_examples=20, deadline=None)
@given(st.floats(0, 2 * math.pi), st.floats(0.51, 1.0), st.floats(2.0, 3.0))
def test_integral_rotation_invariant(a, r, t):
    v = Vec2(r * math.exp(t) * math.cos(a), r * math.exp(t) * math.sin(a))
    grid = 1 << 16
    assert trapezoid_ellipse_integral(v, t, grid) == pytest.approx(math.atan(math.exp(-2 * t)), abs=2 * 2 * math.pi / grid)
