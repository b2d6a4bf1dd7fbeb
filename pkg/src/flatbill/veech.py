"""Veech-group membership and orbit counting for Fuchsian lattices."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import Mat2, Vec2, apply, rotation, sl2_element
from .surface import TranslationSurface, apply_matrix, is_isomorphic

DEFAULT_PRUNE = 4.0
DEDUP = 1e-8
MAX_ORBIT = 5_000_000


class OrbitError(RuntimeError):
    pass


@dataclass(frozen=True)
class FuchsianGroupSpec:
    generators: tuple[Mat2, ...]
    covolume: float
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if not g.is_unimodular(1e-10):
                raise ValueError(f"generator {g} is not unimodular")
        if not self.covolume > 0:
            raise ValueError("covolume must be positive")


@dataclass(frozen=True)
class OrbitCount:
    vector: Vec2
    radius: float
    count: int
    predicted: float | None
    pruning_factor: float
    calibration: float | None = field(default=None, repr=False)

    @property
    def ratio(self) -> float | None:
        """Measured count over the raw lemma prediction."""
        if not self.predicted:
            return None
        return self.count / self.predicted

    @property
    def calibrated(self) -> float | None:
        if self.predicted is None or self.calibration is None:
            return None
        return self.predicted * self.calibration

    def to_dict(self) -> dict:
        return {"vector": [self.vector.x, self.vector.y], "T": self.radius, "K": self.pruning_factor,
                "count": self.count, "predicted": self.predicted, "ratio": self.ratio,
                "calibration": self.calibration, "calibrated": self.calibrated}


def stabilizes(g: Mat2, s: TranslationSurface) -> bool:
    """Whether ``g`` lies in the Veech group of ``s``."""
    if not g.is_unimodular():
        raise ValueError(f"matrix has determinant {g.det()!r}, expected 1")
    s.require_valid()
    return is_isomorphic(apply_matrix(g, s), s)


def gamma_n(n: int) -> FuchsianGroupSpec:
    """Generators u_n and rotation by 2pi/n, with the covolume (n-2)pi/n."""
    if isinstance(n, bool) or int(n) != n or n < 5 or n % 2 == 0:
        raise ValueError(f"need an odd integer n >= 5, got {n!r}")
    n = int(n)
    return FuchsianGroupSpec((sl2_element("veech_unipotent", n), rotation(2 * math.pi / n)),
                             (n - 2) * math.pi / n, f"Gamma_{n}")


def sl2z() -> FuchsianGroupSpec:
    return FuchsianGroupSpec((Mat2(1.0, 1.0, 0.0, 1.0), Mat2(0.0, -1.0, 1.0, 0.0)), math.pi / 3, "SL(2,Z)")


def _parabolic_for(grp: FuchsianGroupSpec, v: Vec2) -> Mat2 | None:
    tol = 1e-9 * v.norm()
    for g in grp.generators:
        if abs(g.a + g.d - 2) < 1e-9 and (apply(g, v) - v).norm() <= tol and (g.b or g.c):
            return g
    return None


def lemma_prediction(grp: FuchsianGroupSpec, v: Vec2, T: float, parabolic: Mat2) -> float:
    """Asymptotic orbit count covol^-1 |<g v_perp, v>| / (|v|^3 |v_perp|) T^2."""
    vp = v.perp()
    return abs(apply(parabolic, vp).dot(v)) / (v.norm() ** 3 * vp.norm()) / grp.covolume * T * T


def orbit_points(grp: FuchsianGroupSpec, v: Vec2, T: float, K: float = DEFAULT_PRUNE,
                 max_points: int = MAX_ORBIT) -> list[Vec2]:
    """Orbit vectors of norm at most ``T``, found by breadth-first search inside the ball of radius ``K*T``."""
    if v.norm() == 0:
        raise ValueError("vector must be nonzero")
    if not T > 0 or not K >= 1:
        raise ValueError("need T > 0 and K >= 1")
    scale = v.norm()
    moves = []
    for g in grp.generators:
        moves.append(g)
        moves.append(g.inverse())
    moves = [(m.a, m.b, m.c, m.d) for m in moves]
    outer = (K * T / scale) ** 2
    inner = (T / scale) ** 2 * (1 + 1e-12)

    seen: dict[tuple[int, int], tuple[float, float]] = {}

    def key(x, y):
        return (round(x / DEDUP), round(y / DEDUP))

    def known(x, y):
        kx, ky = key(x, y)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                if (kx + dx, ky + dy) in seen:
                    q = seen[(kx + dx, ky + dy)]
                    if abs(q[0] - x) <= DEDUP and abs(q[1] - y) <= DEDUP:
                        return True
        return False

    x0, y0 = v.x / scale, v.y / scale
    seen[key(x0, y0)] = (x0, y0)
    frontier = [(x0, y0)]
    while frontier:
        nxt = []
        for x, y in frontier:
            for a, b, c, d in moves:
                X, Y = a * x + b * y, c * x + d * y
                if X * X + Y * Y > outer or known(X, Y):
                    continue
                seen[key(X, Y)] = (X, Y)
                nxt.append((X, Y))
                if len(seen) > max_points:
                    raise OrbitError(f"orbit exceeds {max_points} vectors; lower T or K")
        frontier = nxt
    pts = [Vec2(x * scale, y * scale) for x, y in seen.values() if x * x + y * y <= inner]
    pts.sort(key=lambda w: (round(w.norm(), 9), math.atan2(w.y, w.x)))
    return pts


def orbit_count(grp: FuchsianGroupSpec, v: Vec2, T: float, K: float = DEFAULT_PRUNE,
                parabolic: Mat2 | None = None, calibration: float | None = None,
                predict: bool = True) -> OrbitCount:
    """Count the orbit of ``v`` in the ball of radius ``T`` and compare with the lattice-point lemma.

    The parabolic fixing ``v`` defaults to the first generator that fixes it.
    """
    count = len(orbit_points(grp, v, T, K))
    predicted = None
    if predict:
        g = parabolic if parabolic is not None else _parabolic_for(grp, v)
        if g is None:
            raise OrbitError("no parabolic fixing the vector was supplied or found among the generators")
        predicted = lemma_prediction(grp, v, T, g)
    return OrbitCount(v, T, count, predicted, K, calibration)


def gj_calibration(T: float = 50.0, K: float = DEFAULT_PRUNE) -> float:
    """Measured count over lemma prediction for the SL(2,Z) orbit of (1, 0), i.e. the primitive vectors."""
    return orbit_count(sl2z(), Vec2(1.0, 0.0), T, K).ratio
