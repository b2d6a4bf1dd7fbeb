import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flatbill.geom import Mat2, Vec2, angle_between, apply, rotation, sl2_element, to_angle_frac

reals = st.floats(-5, 5, allow_nan=False)


def test_vec_arithmetic():
    u, v = Vec2(1, 2), Vec2(3, -1)
    assert u + v == Vec2(4, 1)
    assert u - v == Vec2(-2, 3)
    assert 2 * u == Vec2(2, 4)
    assert u.cross(v) == -7
    assert u.perp() == Vec2(-2, 1)


def test_non_finite_rejected():
    with pytest.raises(ValueError):
        Vec2(math.nan, 0)
    with pytest.raises(ValueError):
        sl2_element("diag_t", math.inf)


def test_named_elements():
    assert sl2_element("diag_t", 1.0) == Mat2(math.e, 0, 0, math.exp(-1))
    assert sl2_element("upper_u", 2.0) == Mat2(1, 2, 0, 1)
    u5 = sl2_element("veech_unipotent", 5)
    assert u5.c == pytest.approx(2 / math.tan(math.pi / 5))
    # r_theta turns clockwise, rotation() counterclockwise
    assert apply(sl2_element("rot_theta", math.pi / 2), Vec2(1, 0)).y == pytest.approx(-1)
    assert apply(rotation(math.pi / 2), Vec2(1, 0)).y == pytest.approx(1)


@pytest.mark.parametrize("bad", [2, 4.5, True])
def test_veech_unipotent_domain(bad):
    with pytest.raises(ValueError):
        sl2_element("veech_unipotent", bad)


def test_unknown_family():
    with pytest.raises(ValueError):
        sl2_element("shear", 1)


@given(st.sampled_from(["diag_t", "rot_theta", "upper_u"]), reals)
def test_named_elements_unimodular(kind, t):
    assert sl2_element(kind, t).is_unimodular(1e-9)


@given(reals, reals, reals, reals, reals, reals)
def test_product_and_inverse(a, b, c, d, x, y):
    m = Mat2(a, b, c, d)
    if abs(m.det()) < 1e-3:
        return
    v = Vec2(x, y)
    back = apply(m.inverse(), apply(m, v))
    assert back.x == pytest.approx(x, abs=1e-6 * (1 + abs(x)) / abs(m.det()) * (1 + abs(a) + abs(b) + abs(c) + abs(d)) ** 2)
    assert (m @ m.inverse()).det() == pytest.approx(1.0, rel=1e-6)


@given(reals, reals)
def test_angle_between_range(s, t):
    u = Vec2(math.cos(s), math.sin(s))
    v = Vec2(math.cos(t), math.sin(t))
    a = angle_between(u, v)
    assert 0 <= a < 2 * math.pi
    assert apply(rotation(a), u).x == pytest.approx(v.x, abs=1e-9)


def test_angle_frac():
    assert to_angle_frac(2, 4) == to_angle_frac(1, 2)
    with pytest.raises(ValueError):
        to_angle_frac(1, 0)
