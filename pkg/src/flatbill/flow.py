"""Straight-line flow on a translation surface.

Rays are followed polygon by polygon: the exit edge is found from the signs
of the vertices relative to the ray, and the ray re-enters the glued polygon
by the gluing translation.  A vertex within ``EPS_HIT`` (relative to the
surface scale) of the ray counts as hit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import Vec2, eps
from .surface import ConePoint, TranslationSurface

EPS_HIT = 1e-9

HIT = "hit_cone_point"
EXHAUSTED = "budget_exhausted"
CLOSED = "closed_up"


class TraceError(RuntimeError):
    pass


@dataclass(frozen=True)
class SurfacePoint:
    polygon_index: int
    position: Vec2


@dataclass(frozen=True)
class Segment:
    polygon_index: int
    entry: Vec2
    exit: Vec2

    def length(self) -> float:
        return (self.exit - self.entry).norm()


@dataclass
class Trajectory:
    segments: list[Segment]
    total_length: float
    terminal: str
    cone: int | None = None
    # corner (polygon, vertex) where a hit_cone_point trajectory ends
    end_corner: tuple[int, int] | None = None
    direction: Vec2 | None = field(default=None, repr=False)

    @property
    def holonomy(self) -> Vec2:
        return self.direction * self.total_length


def _locate(s: TranslationSurface, start: SurfacePoint):
    p = start.polygon_index
    if not 0 <= p < len(s.polygons):
        raise TraceError(f"no polygon {p}")
    coords, _ = s.fast
    tol = eps(EPS_HIT) * s.scale
    vs = coords[p]
    x, y = start.position.x, start.position.y
    n = len(vs)
    for i in range(n):
        ax, ay = vs[i]
        bx, by = vs[(i + 1) % n]
        if (bx - ax) * (y - ay) - (by - ay) * (x - ax) < -tol * math.hypot(bx - ax, by - ay):
            raise TraceError(f"start point {start.position} lies outside polygon {p}")
        if math.hypot(x - ax, y - ay) <= tol:
            raise TraceError("start point is a vertex; use separatrices() for rays from cone points")


def trace(s: TranslationSurface, start: SurfacePoint, direction: Vec2, max_length: float) -> Trajectory:
    """Follow the straight line from ``start`` in ``direction`` for at most ``max_length``."""
    s.require_valid()
    if direction.norm() == 0:
        raise ValueError("direction must be nonzero")
    _locate(s, start)
    return _run(s, start.polygon_index, start.position.x, start.position.y,
                direction.unit(), max_length, entry=None, from_vertex=None, closing=True)


def trace_from_corner(s: TranslationSurface, p: int, i: int, direction: Vec2, max_length: float) -> Trajectory:
    """Follow the ray leaving vertex ``i`` of polygon ``p`` into that corner."""
    coords, _ = s.fast
    x, y = coords[p][i]
    return _run(s, p, x, y, direction.unit(), max_length, entry=None, from_vertex=i, closing=False)


def _run(s, p, x, y, d: Vec2, max_length, entry, from_vertex, closing) -> Trajectory:
    coords, glue = s.fast
    tol = eps(EPS_HIT) * s.scale
    dx, dy = d.x, d.y
    sx, sy, sp = x, y, p
    segments: list[Segment] = []
    travelled = 0.0
    for _ in range(10_000_000):
        vs = coords[p]
        n = len(vs)
        side = [dx * (vy - y) - dy * (vx - x) for vx, vy in vs]
        ahead = [dx * (vx - x) + dy * (vy - y) for vx, vy in vs]
        skip = set()
        if from_vertex is not None:
            skip = {(from_vertex - 1) % n, from_vertex}
        if entry is not None:
            skip.add(entry)

        hit = None
        for j in range(n):
            if j == from_vertex:
                continue
            if abs(side[j]) <= tol and ahead[j] > tol:
                if hit is None or ahead[j] < ahead[hit]:
                    hit = j
        exit_edge = None
        if hit is None:
            for j in range(n):
                if j in skip:
                    continue
                if side[j] < 0 < side[(j + 1) % n]:
                    exit_edge = j
                    break
            if exit_edge is None:
                raise TraceError(f"ray grazes polygon {p} at ({x}, {y}); no exit edge")
            j = exit_edge
            t = side[j] / (side[j] - side[(j + 1) % n])
            ax, ay = vs[j]
            bx, by = vs[(j + 1) % n]
            ex, ey = ax + t * (bx - ax), ay + t * (by - ay)
            step = dx * (ex - x) + dy * (ey - y)
        else:
            ex, ey = vs[hit]
            step = ahead[hit]

        if closing and p == sp and (segments or entry is not None):
            # did we come back through the start point?
            cs = dx * (sy - y) - dy * (sx - x)
            ca = dx * (sx - x) + dy * (sy - y)
            if abs(cs) <= tol and -tol <= ca <= step + tol and travelled + ca <= max_length + tol:
                segments.append(Segment(p, Vec2(x, y), Vec2(sx, sy)))
                return Trajectory(segments, travelled + ca, CLOSED, direction=d)

        if travelled + step > max_length:
            rest = max_length - travelled
            segments.append(Segment(p, Vec2(x, y), Vec2(x + rest * dx, y + rest * dy)))
            return Trajectory(segments, max_length, EXHAUSTED, direction=d)

        segments.append(Segment(p, Vec2(x, y), Vec2(ex, ey)))
        travelled += step
        if hit is not None:
            return Trajectory(segments, travelled, HIT, cone=s.cone_class(p, hit),
                              end_corner=(p, hit), direction=d)

        q, f = glue[p][exit_edge]
        ws = coords[q]
        m = len(ws)
        cx, cy = ws[(f + 1) % m]
        fx, fy = ws[f]
        x, y = cx + t * (fx - cx), cy + t * (fy - cy)
        p, entry, from_vertex = q, f, None
    raise TraceError("trace did not terminate")


def arrival_angle(s: TranslationSurface, traj: Trajectory) -> float:
    """Angular coordinate, at the cone point reached, of the ray pointing back along ``traj``."""
    p, i = traj.end_corner
    return s.ray_angle(p, i, -traj.direction)


def separatrices(s: TranslationSurface, cone: ConePoint | int, direction: Vec2, max_length: float = math.inf,
                 signs=(1, -1)) -> list[Trajectory]:
    """Rays leaving a vertex class parallel to ``direction``.

    A vertex class of angle 2*pi*m has m outgoing rays in each of the
    directions +d and -d.  Each trajectory carries ``start_angle`` (its
    angular coordinate at the cone point) and ``start_corner`` attributes.

    Regular points (m = 1) are included; callers who only want genuine
    singularities should filter on ``cone.angle_multiple``.
    """
    s.require_valid()
    if direction.norm() == 0:
        raise ValueError("direction must be nonzero")
    cid = cone.id if isinstance(cone, ConePoint) else int(cone)
    out = []
    for sign in signs:
        d = (direction * sign).unit()
        for p, i, angle in s.corners_containing(cid, d):
            traj = trace_from_corner(s, p, i, d, max_length)
            traj.start_angle = angle
            traj.start_corner = (p, i)
            traj.start_cone = cid
            out.append(traj)
    return out
