"""Counting functions, predicted quadratic-growth constants and Siegel-Veech sums."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .builders import double_ngon, triangle_p
from .census import cylinders_up_to, saddle_connections
from .geom import Vec2, sl2_element
from .surface import TranslationSurface, apply_matrix, area

ZETA2 = math.pi ** 2 / 6
KINDS = ("cylinders", "saddle_connections")


# -- regions -------------------------------------------------------------------------

@dataclass(frozen=True)
class TrapezoidFn:
    """Indicator of the trapezoid with corners (1,1), (0,1), (0,1/2), (1/2,1/2)."""

    radius: float = field(default=math.sqrt(2), init=False)

    def __call__(self, x, y):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        return ((y >= 0.5) & (y <= 1.0) & (x >= 0.0) & (x <= y)).astype(float)

    @property
    def area(self) -> float:
        return 0.375


@dataclass(frozen=True)
class DiscFn:
    """Indicator of the closed disc of radius ``eps`` about the origin."""
    eps: float

    @property
    def radius(self) -> float:
        return self.eps

    def __call__(self, x, y):
        return (np.hypot(x, y) <= self.eps).astype(float)


# -- counting ------------------------------------------------------------------------

@dataclass
class CountSeries:
    surface_name: str
    kind: str
    rows: list[tuple[float, int, float]]
    predicted_constant: float | None = None

    def write_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["T", "count", "count_over_T2", "predicted", "ratio"])
        for T, N, q in self.rows:
            p = self.predicted_constant
            w.writerow([repr(T), N, repr(q), "" if p is None else repr(p), "" if p is None else repr(q / p)])


def _holonomies(s: TranslationSurface, kind: str, L: float, signed: bool = True, jobs: int | None = 1):
    if kind == "cylinders":
        return [(c.holonomy, c.area) for c in cylinders_up_to(s, L, signed=signed, jobs=jobs)]
    if kind == "saddle_connections":
        return [(c.holonomy, None) for c in saddle_connections(s, L)]
    raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")


def count_series(s: TranslationSurface, kind: str, Ts, signed: bool = True, weights: str | None = None,
                 predicted: float | None = None, jobs: int | None = 1) -> CountSeries:
    """N(s, T) for each T in ``Ts`` from one census at the largest T.

    ``weights="1/area"`` weights each cylinder by the reciprocal of its area.
    ``signed=False`` counts each cylinder once instead of once per orientation.
    """
    Ts = [float(T) for T in Ts]
    if not Ts or any(T <= 0 for T in Ts) or Ts != sorted(Ts):
        raise ValueError("Ts must be positive and ascending")
    if weights not in (None, "1/area"):
        raise ValueError(f"unknown weighting {weights!r}")
    if weights and kind != "cylinders":
        raise ValueError("area weights apply to cylinders only")
    hol = _holonomies(s, kind, Ts[-1], signed, jobs)
    norms = np.array([h.norm() for h, _ in hol])
    w = np.array([1.0 / a if weights else 1.0 for _, a in hol]) if hol else np.zeros(0)
    rows = []
    for T in Ts:
        mask = norms <= T * (1 + 1e-12)
        N = float(w[mask].sum()) if weights else int(mask.sum())
        rows.append((T, N, N / T ** 2))
    return CountSeries(s.name, kind, rows, predicted)


def predicted_constant(family: str, n: int | None = None, surface_area: float | None = None) -> float:
    """Quadratic growth constant c with N(S, T) ~ c T^2 from the closed-form cylinder counts.

    The forms for Xn, Sn and Pn count each cylinder once; the torus form counts
    every primitive vector, i.e. both orientations.
    """
    key = family.lower()
    if key == "torus":
        return (math.pi / ZETA2) / (1.0 if surface_area is None else surface_area)
    if isinstance(n, bool) or n is None or int(n) != n or n < 5 or n % 2 == 0:
        raise ValueError(f"{family} needs an odd integer n >= 5, got {n!r}")
    ax = area(double_ngon(n))
    if key == "xn":
        return n * n * (n * n - 1) / (24 * (n - 2) * math.pi) / ax
    if key == "sn":
        return n * (n - 1) * (n * n + n + 3) / (12 * (n - 2) * math.pi) / ax
    if key == "pn":
        return (math.pi / ZETA2) * (n - 1) * (n * n + n + 3) / (144 * (n - 2)) / triangle_p(n).area()
    raise ValueError(f"unknown family {family!r}")


def sum_identity_check(n: int) -> tuple[float, float]:
    """Both sides of sum_j 1/sin^2(pi(2j-1)/n) = (n^2-1)/6, j = 1..(n-1)/2."""
    if isinstance(n, bool) or int(n) != n or n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd integer n >= 3, got {n!r}")
    lhs = math.fsum(1 / math.sin(math.pi * (2 * j - 1) / n) ** 2 for j in range(1, (n - 1) // 2 + 1))
    return lhs, (n * n - 1) / 6


# -- Siegel-Veech transforms and circle averages ---------------------------------------------

def sv_transform(s: TranslationSurface, f, kind: str = "cylinders", signed: bool = True,
                 area_class: float | None = None, jobs: int | None = 1) -> float:
    """Sum of ``f`` over the holonomies of ``s`` inside the support radius of ``f``.

    ``area_class`` restricts a cylinder sum to cylinders of that area.
    """
    hol = _holonomies(s, kind, f.radius, signed, jobs)
    if area_class is not None:
        hol = [(h, a) for h, a in hol if abs(a - area_class) <= 1e-6 * area_class]
    if not hol:
        return 0.0
    xs = np.array([h.x for h, _ in hol])
    ys = np.array([h.y for h, _ in hol])
    return float(np.sum(f(xs, ys)))


def trapezoid_ellipse_integral(v: Vec2, t: float, grid: int = 1 << 18) -> float:
    """Midpoint rule for the integral over theta in [0, 2pi) of h(a_t r_theta v), h the trapezoid indicator."""
    if grid < 1000:
        raise ValueError("grid must be at least 1000")
    th = (np.arange(grid) + 0.5) * (2 * math.pi / grid)
    c, s = np.cos(th), np.sin(th)
    x = math.exp(t) * (c * v.x + s * v.y)
    y = math.exp(-t) * (-s * v.x + c * v.y)
    return float(TrapezoidFn()(x, y).sum() * (2 * math.pi / grid))


@dataclass(frozen=True)
class CircleAverage:
    T: float
    lhs: float
    rhs: float

    @property
    def ratio(self) -> float | None:
        return self.lhs / self.rhs if self.rhs > 0 and self.lhs > 0 else None

    def to_dict(self) -> dict:
        return {"T": self.T, "lhs": self.lhs, "rhs": self.rhs, "ratio": self.ratio}


def circle_average_check(s: TranslationSurface, T: float, grid: int = 2880, signed: bool = True) -> CircleAverage:
    """Annulus count N(T) - N(T/2) against T^2 times the circle average of the trapezoid transform.

    The right side runs a fresh cylinder census on a_t r_theta s at every grid
    angle, with t = log T.
    """
    if grid < 360:
        raise ValueError("grid must be at least 360")
    series = count_series(s, "cylinders", [T / 2, T], signed=signed)
    lhs = series.rows[1][1] - series.rows[0][1]
    t = math.log(T)
    a = sl2_element("diag_t", t)
    h = TrapezoidFn()
    dth = 2 * math.pi / grid
    total = 0.0
    for k in range(grid):
        g = a @ sl2_element("rot_theta", (k + 0.5) * dth)
        total += sv_transform(apply_matrix(g, s), h, signed=signed)
    return CircleAverage(T, float(lhs), T * T * total * dth)
