"""Surfaces from rational billiard tables and the named families.

``unfold`` reflects a rational polygon through the finite group generated by
reflections in its sides.  Group elements are kept exact: an element is a
pair ``(flip, k)`` meaning ``rot(2*pi*k/N) o F**flip`` with ``F`` the
reflection in the line of the first side.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .geom import AngleFrac, Mat2, Vec2, apply
from .surface import EPS_GLUE, Polygon, TranslationSurface

DEFAULT_GROUP_CAP = 1024


@dataclass(frozen=True)
class RationalPolygon:
    """A billiard table: counterclockwise vertices and their angles as multiples of pi."""
    vertices: tuple[Vec2, ...]
    angles: tuple[AngleFrac, ...]
    name: str = ""

    def __init__(self, vertices, angles, name: str = ""):
        vs = tuple(v if isinstance(v, Vec2) else Vec2(float(v[0]), float(v[1])) for v in vertices)
        angs = tuple(Fraction(a) for a in angles)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "angles", angs)
        object.__setattr__(self, "name", name)
        self._check()

    def _check(self):
        k = len(self.vertices)
        if k < 3 or len(self.angles) != k:
            raise ValueError("need at least three vertices and one angle per vertex")
        if any(a <= 0 for a in self.angles):
            raise ValueError("angles must be positive")
        if sum(self.angles) != k - 2:
            raise ValueError(f"angles sum to {sum(self.angles)}*pi, expected {k - 2}*pi")
        poly = Polygon(self.vertices)
        scale = max(e.norm() for e in poly.edges())
        for i, a in enumerate(self.angles):
            if abs(poly.angle(i) - float(a) * math.pi) > 1e3 * EPS_GLUE:
                raise ValueError(f"vertex {i} has angle {poly.angle(i)!r}, declared {a}*pi")
        if poly.area() <= EPS_GLUE * scale * scale:
            raise ValueError("polygon must be counterclockwise with positive area")

    @property
    def polygon(self) -> Polygon:
        return Polygon(self.vertices)

    def area(self) -> float:
        return self.polygon.area()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "vertices": [[v.x, v.y] for v in self.vertices],
            "angles": [[a.numerator, a.denominator] for a in self.angles],
        }

    @classmethod
    def from_dict(cls, data: dict) -> RationalPolygon:
        return cls([tuple(v) for v in data["vertices"]],
                   [Fraction(n, d) for n, d in data["angles"]], data.get("name", ""))


def triangle(angles, base: float = 1.0, name: str = "") -> RationalPolygon:
    """Triangle with the given angles (multiples of pi), first side horizontal of length ``base``."""
    a, b, c = (Fraction(x) for x in angles)
    A = Vec2(0.0, 0.0)
    B = Vec2(base, 0.0)
    # law of sines for the side AC opposite angle b
    ac = base * math.sin(float(b) * math.pi) / math.sin(float(c) * math.pi)
    C = Vec2(ac * math.cos(float(a) * math.pi), ac * math.sin(float(a) * math.pi))
    return RationalPolygon([A, B, C], [a, b, c], name)


def _side_turns(p: RationalPolygon) -> list[Fraction]:
    """Direction of side ``i`` minus direction of side 0, as a multiple of pi."""
    turns = [Fraction(0)]
    for i in range(1, len(p.angles)):
        turns.append(turns[-1] + 1 - p.angles[i])
    return turns


def reflection_group_order(p: RationalPolygon) -> int:
    return 2 * lcm(*(t.denominator for t in _side_turns(p)))


def unfold(p: RationalPolygon, cap: int = DEFAULT_GROUP_CAP, name: str | None = None) -> TranslationSurface:
    """The translation surface made of one reflected copy of ``p`` per element of its reflection group."""
    turns = _side_turns(p)
    N = lcm(*(t.denominator for t in turns))
    if 2 * N > cap:
        raise ValueError(f"reflection group has order {2 * N}, above the cap {cap}")
    # reflection in side i is rot(2*pi*turn_i) o F  ->  (1, N*turn_i)
    gens = [(1, int(t * N) % N) for t in turns]

    def mul(g, h):
        f1, k1 = g
        f2, k2 = h
        return ((f1 + f2) % 2, (k1 + (-k2 if f1 else k2)) % N)

    elements = [(0, 0)]
    index = {(0, 0): 0}
    i = 0
    while i < len(elements):
        g = elements[i]
        for r in gens:
            h = mul(g, r)
            if h not in index:
                index[h] = len(elements)
                elements.append(h)
        i += 1

    phi0 = p.polygon.edge(0).angle()
    c2, s2 = math.cos(2 * phi0), math.sin(2 * phi0)
    F = Mat2(c2, s2, s2, -c2)

    k = len(p.vertices)
    polys = []
    for flip, rot in elements:
        th = 2 * math.pi * rot / N
        R = Mat2(math.cos(th), -math.sin(th), math.sin(th), math.cos(th))
        m = R @ F if flip else R
        vs = [apply(m, v) for v in p.vertices]
        if flip:
            # reversed order keeps the copy counterclockwise; edge i becomes edge k-2-i
            vs = vs[::-1]
        polys.append(vs)

    def local_edge(flip, i):
        return (k - 2 - i) % k if flip else i

    gluing = {}
    for a, g in enumerate(elements):
        for i, r in enumerate(gens):
            h = mul(g, r)
            b = index[h]
            gluing[(a, local_edge(g[0], i))] = (b, local_edge(h[0], i))
    label = name if name is not None else (f"unfold({p.name})" if p.name else "unfolding")
    return TranslationSurface(polys, gluing, label)


# -- named families -----------------------------------------------------------

def _check_odd(n: int, family: str):
    if int(n) != n or n < 5 or n % 2 == 0:
        raise ValueError(f"{family} needs an odd integer n >= 5, got {n!r}")


def triangle_p(n: int) -> RationalPolygon:
    """Isosceles triangle with apex angle 2pi/n and unit legs, one leg horizontal."""
    _check_odd(n, "P_n")
    apex = Fraction(2, n)
    base = Fraction(n - 2, 2 * n)
    return triangle([apex, base, base], 1.0, f"P_{n}")


def triangle_q(n: int) -> RationalPolygon:
    """Isosceles triangle with angles pi/n, pi/n, (n-2)pi/n and unit legs, one leg horizontal."""
    _check_odd(n, "Q_n")
    apex = Fraction(n - 2, n)
    base = Fraction(1, n)
    return triangle([apex, base, base], 1.0, f"Q_{n}")


def double_ngon(n: int) -> TranslationSurface:
    """Two regular n-gons of circumradius 1 with opposite sides identified.

    The n-gons have a vertical side, so the vertical direction splits into
    (n-1)/2 cylinders.
    """
    _check_odd(n, "X_n")
    angles = [-math.pi / n + 2 * math.pi * k / n for k in range(n)]
    P = [(math.cos(a), math.sin(a)) for a in angles]
    Q = [(-x, -y) for x, y in P]
    gluing = [((0, i), (1, i)) for i in range(n)]
    return TranslationSurface([P, Q], gluing, f"X_{n}")


def square_torus() -> TranslationSurface:
    square = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    return TranslationSurface([square], [((0, 0), (0, 2)), ((0, 1), (0, 3))], "square torus")


FAMILIES = ("Pn", "Qn", "Xn", "Sn", "square_torus")


def build(family: str, n: int | None = None):
    """Named billiard tables and surfaces.

    ``Pn`` and ``Qn`` are billiard tables (:class:`RationalPolygon`); the other
    families are translation surfaces.  ``Sn`` is the unfolding of ``Pn``.
    """
    key = family.lower()
    if key in ("square_torus", "square", "torus"):
        return square_torus()
    if key == "pn":
        return triangle_p(n)
    if key == "qn":
        return triangle_q(n)
    if key == "xn":
        return double_ngon(n)
    if key == "sn":
        return unfold(triangle_p(n), name=f"S_{n}")
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def load_polygon(path) -> RationalPolygon:
    with open(path) as fh:
        return RationalPolygon.from_dict(json.load(fh))
