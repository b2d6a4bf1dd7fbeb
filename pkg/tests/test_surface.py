import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flatbill.builders import build, double_ngon, square_torus
from flatbill.geom import Mat2, Vec2, sl2_element
from flatbill.surface import (
    InvalidSurfaceError,
    TranslationSurface,
    apply_matrix,
    area,
    cone_points,
    delaunay,
    dumps,
    from_dict,
    is_delaunay,
    is_isomorphic,
    loads,
    stratum,
    to_dict,
    validate,
)

SQUARE = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]


def test_torus_valid(torus):
    assert validate(torus).ok
    (c,) = cone_points(torus)
    assert c.angle_multiple == 1 and c.zero_order == 0
    assert area(torus) == 1.0
    assert torus.genus() == 1


def test_missing_pair_is_uncovered():
    s = TranslationSurface([SQUARE], [((0, 0), (0, 2))])
    rep = validate(s)
    assert not rep.ok
    assert "uncovered edge" in rep.kinds()


def test_non_translation_gluing():
    # glue bottom to right: the edges are not antiparallel
    s = TranslationSurface([SQUARE], [((0, 0), (0, 1)), ((0, 2), (0, 3))])
    assert "not a translation" in validate(s).kinds()


def test_orientation_and_degenerate():
    cw = list(reversed(SQUARE))
    assert "orientation" in validate(TranslationSurface([cw], [((0, 0), (0, 2)), ((0, 1), (0, 3))])).kinds()
    flat = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]
    assert not validate(TranslationSurface([flat], [((0, 0), (0, 1))])).ok


def test_bad_edge_reference():
    s = TranslationSurface([SQUARE], [((0, 0), (0, 7)), ((0, 1), (0, 3))])
    assert not validate(s).ok


def test_require_valid_raises():
    s = TranslationSurface([SQUARE], [((0, 0), (0, 2))])
    with pytest.raises(InvalidSurfaceError):
        cone_points(s)


def test_x5_cone_data(x5):
    assert validate(x5).ok
    (c,) = cone_points(x5)
    # one vertex class of total angle 6 pi
    assert c.angle_multiple == 3
    assert stratum(x5) == (2,)
    assert x5.genus() == 2
    assert area(x5) == pytest.approx(5 * math.sin(2 * math.pi / 5), rel=1e-12)
    assert area(x5) == pytest.approx(4.755283, abs=1e-6)


def test_s5_cone_data(s5, x5):
    assert sorted(stratum(s5), reverse=True) == [2, 2, 1, 1]
    assert s5.genus() == 4
    assert area(s5) == pytest.approx(2 * area(x5), rel=1e-12)
    assert area(s5) == pytest.approx(9.510565, abs=1e-6)


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_gauss_bonnet(n):
    for s in (double_ngon(n), build("Sn", n)):
        assert sum(c.zero_order for c in cone_points(s)) == 2 * s.genus() - 2


def test_apply_matrix_identity_and_inverse(x5):
    same = apply_matrix(Mat2.identity(), x5)
    for p, q in zip(same.polygons, x5.polygons):
        assert p.vertices == q.vertices
    g = sl2_element("diag_t", 0.7)
    back = apply_matrix(sl2_element("diag_t", -0.7), apply_matrix(g, x5))
    for p, q in zip(back.polygons, x5.polygons):
        for a, b in zip(p.vertices, q.vertices):
            assert (a - b).norm() < 1e-10


def test_apply_matrix_rejects_non_unimodular(x5):
    with pytest.raises(ValueError):
        apply_matrix(Mat2(2, 0, 0, 1), x5)


def test_rotation_keeps_area(torus):
    r = apply_matrix(sl2_element("rot_theta", math.pi / 2), torus)
    assert area(r) == pytest.approx(1.0)
    assert validate(r).ok


matrices = st.tuples(st.floats(-1.5, 1.5), st.floats(-1.5, 1.5), st.floats(-1.0, 1.0)).map(
    lambda p: sl2_element("upper_u", p[0]) @ sl2_element("diag_t", p[2]) @ sl2_element("rot_theta", p[1]))


@settings(max_examples=25, deadline=None)
@given(matrices)
def test_apply_matrix_invariants(g):
    for s in (double_ngon(5), build("Sn", 5)):
        t = apply_matrix(g, s)
        assert area(t) == pytest.approx(area(s), rel=1e-9)
        assert [c.angle_multiple for c in cone_points(t)] == [c.angle_multiple for c in cone_points(s)]


@settings(max_examples=20, deadline=None)
@given(matrices)
def test_delaunay_properties(g):
    s = apply_matrix(g, double_ngon(5))
    d = delaunay(s)
    assert d.is_triangulated()
    assert is_delaunay(d)
    assert area(d) == pytest.approx(area(s), rel=1e-9)
    assert sorted(c.angle_multiple for c in cone_points(d)) == [3]
    assert is_isomorphic(d, s) and is_isomorphic(s, d)
    # idempotent up to relabelling
    assert is_isomorphic(delaunay(d), d)


def test_delaunay_of_stretched_pentagons_is_short(x5):
    d = delaunay(apply_matrix(sl2_element("diag_t", 2.0), x5))
    assert validate(d).ok
    assert [c.angle_multiple for c in cone_points(d)] == [3]
    # a Delaunay edge is a chord of an empty disc, so it is no longer than twice the surface diameter
    assert max(e.norm() for p in d.polygons for e in p.edges()) < 2 * math.sqrt(area(d)) * 10


def test_delaunay_torus_fixed(torus):
    d = delaunay(torus)
    assert is_isomorphic(d, torus)
    assert is_delaunay(d)


def test_isomorphism_examples(x5, torus):
    assert is_isomorphic(x5, x5)
    big = apply_matrix(Mat2.identity(), torus)
    four = TranslationSurface([[(0, 0), (2, 0), (2, 2), (0, 2)]], [((0, 0), (0, 2)), ((0, 1), (0, 3))])
    assert not is_isomorphic(big, four)
    assert is_isomorphic(apply_matrix(sl2_element("veech_unipotent", 5), x5), x5)
    assert not is_isomorphic(apply_matrix(sl2_element("diag_t", 1.0), x5), x5)
    assert is_isomorphic(apply_matrix(sl2_element("upper_u", 1.0), torus), torus)
    assert not is_isomorphic(apply_matrix(sl2_element("upper_u", 0.5), torus), torus)


def test_json_round_trip(tmp_path, s5):
    text = dumps(s5)
    data = json.loads(text)
    assert set(data) >= {"name", "polygons", "gluings"}
    back = loads(text)
    for p, q in zip(back.polygons, s5.polygons):
        assert p.vertices == q.vertices
    assert back.gluing == s5.gluing
    assert to_dict(from_dict(to_dict(s5))) == to_dict(s5)


def test_load_validates():
    data = {"name": "bad", "polygons": [{"vertices": SQUARE}], "gluings": [[[0, 0], [0, 2]]]}
    with pytest.raises(InvalidSurfaceError):
        from_dict(data)
