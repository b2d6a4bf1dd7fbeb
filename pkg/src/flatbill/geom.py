"""Planar linear algebra used throughout the package.

Vectors and matrices are small immutable value types backed by floats.
Angles that must be compared exactly (polygon angles, reflection groups)
are kept as :class:`fractions.Fraction` multiples of pi.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

# An angle equal to (numerator / denominator) * pi.
AngleFrac = Fraction

EPS_SCALE = float(os.environ.get("FLATSURF_EPS_SCALE", "1"))


def eps(value: float) -> float:
    """Scale a default tolerance by ``FLATSURF_EPS_SCALE``."""
    return value * EPS_SCALE


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite vector ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, k: float) -> Vec2:
        return Vec2(k * self.x, k * self.y)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: Vec2) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Vec2) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Vec2:
        n = self.norm()
        if n == 0:
            raise ValueError("zero vector has no direction")
        return Vec2(self.x / n, self.y / n)

    def perp(self) -> Vec2:
        """Counterclockwise rotation by a quarter turn."""
        return Vec2(-self.y, self.x)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


@dataclass(frozen=True)
class Mat2:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.a, self.b, self.c, self.d)):
            raise ValueError("non-finite matrix entry")

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1.0, 0.0, 0.0, 1.0)

    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def is_unimodular(self, tol: float = 1e-10) -> bool:
        return abs(self.det() - 1.0) <= tol

    def inverse(self) -> Mat2:
        det = self.det()
        if det == 0:
            raise ValueError("singular matrix")
        return Mat2(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, Vec2):
            return apply(self, other)
        return NotImplemented

    def rows(self) -> list[list[float]]:
        return [[self.a, self.b], [self.c, self.d]]


def apply(m: Mat2, v: Vec2) -> Vec2:
    return Vec2(m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y)


def sl2_element(kind: str, param) -> Mat2:
    """Named one-parameter families in SL(2, R).

    ``diag_t``
        ``diag(e^t, e^-t)``
    ``rot_theta``
        ``((cos, sin), (-sin, cos))``; note this rotates *clockwise* by theta,
        which is the convention of the circle averages.
    ``upper_u``
        ``((1, s), (0, 1))``
    ``veech_unipotent``
        ``((1, 0), (2 cot(pi/n), 1))`` for an integer ``n >= 3``
    """
    if kind == "veech_unipotent":
        if isinstance(param, bool) or int(param) != param:
            raise ValueError(f"veech_unipotent needs an integer n, got {param!r}")
        n = int(param)
        if n < 3:
            raise ValueError(f"veech_unipotent needs n >= 3, got {n}")
        return Mat2(1.0, 0.0, 2.0 / math.tan(math.pi / n), 1.0)

    t = float(param)
    if not math.isfinite(t):
        raise ValueError(f"non-finite parameter {param!r}")
    if kind == "diag_t":
        return Mat2(math.exp(t), 0.0, 0.0, math.exp(-t))
    if kind == "rot_theta":
        c, s = math.cos(t), math.sin(t)
        return Mat2(c, s, -s, c)
    if kind == "upper_u":
        return Mat2(1.0, t, 0.0, 1.0)
    raise ValueError(f"unknown SL(2,R) family {kind!r}")


def rotation(theta: float) -> Mat2:
    """Counterclockwise rotation by ``theta``."""
    return sl2_element("rot_theta", -theta)


def angle_between(u: Vec2, v: Vec2) -> float:
    """Counterclockwise angle from ``u`` to ``v`` in ``[0, 2*pi)``."""
    a = math.atan2(u.cross(v), u.dot(v))
    if a < 0:
        a += 2 * math.pi
    return 0.0 if a >= 2 * math.pi else a


def to_angle_frac(numerator: int, denominator: int = 1) -> AngleFrac:
    if denominator <= 0:
        raise ValueError("angle denominator must be positive")
    return Fraction(numerator, denominator)
