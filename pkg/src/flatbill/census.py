"""Saddle connections and cylinders.

Saddle connections are enumerated by developing triangles into the plane
around each corner and splitting the wedge of still-visible directions at
every vertex that comes into view.  Vertices of the triangulation are the
marked points: every vertex class, including regular ones, can be an
endpoint.

Cylinders in a direction ``d`` are assembled from the saddle connections
parallel to ``d``.  Following each connection and turning by pi on its left
side at the endpoint gives a partial permutation; its closed cycles are
exactly the lower boundaries of cylinders.  The width of a cylinder is the
distance travelled perpendicular to ``d`` until the next parallel saddle
connection.  Cylinders separated only by regular marked points are merged,
so marking extra regular points does not change the cylinder count.
"""
from __future__ import annotations

import bisect
import csv
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .flow import EXHAUSTED, HIT, TraceError, arrival_angle, separatrices, trace_from_corner
from .geom import Vec2, eps
from .surface import (
    EdgeRef,
    LabelledTriangulation,
    TranslationSurface,
    area,
    cone_points,
    delaunay_labelled,
    triangulate,
)

log = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
EPS_WEDGE = 1e-11
EPS_DIRECTION = 1e-10
EPS_MATCH = 1e-6
C_BUDGET = 8.0


class CensusError(RuntimeError):
    pass


class NotPeriodicWithinBudget(CensusError):
    pass


@dataclass(frozen=True)
class SaddleConnection:
    holonomy: Vec2
    start_cone: int
    end_cone: int
    start_sector: int
    start_angle: float = field(default=0.0, repr=False)
    end_angle: float = field(default=0.0, repr=False)
    # corner of the census surface the connection leaves from
    start_corner: tuple[int, int] | None = field(default=None, repr=False, compare=False)

    @property
    def length(self) -> float:
        return self.holonomy.norm()

    def reversed(self) -> SaddleConnection:
        return SaddleConnection(-self.holonomy, self.end_cone, self.start_cone,
                                int(self.end_angle // TWO_PI), self.end_angle, self.start_angle)


@dataclass(frozen=True)
class Cylinder:
    direction: Vec2
    circumference: float
    width: float
    area: float
    boundary: tuple[tuple[SaddleConnection, ...], tuple[SaddleConnection, ...]] = field(repr=False, default=((), ()))

    @property
    def holonomy(self) -> Vec2:
        return self.direction * self.circumference

    @property
    def modulus(self) -> float:
        """Circumference over width."""
        return self.circumference / self.width


@dataclass(frozen=True)
class CylinderDecomposition:
    direction: Vec2
    cylinders: tuple[Cylinder, ...]

    def total_area(self) -> float:
        return sum(c.area for c in self.cylinders)

    def circumferences(self) -> list[float]:
        return sorted(c.circumference for c in self.cylinders)


class _Conn:
    """Saddle connection on the working triangulation (class ids are its own)."""
    __slots__ = ("hx", "hy", "start_cone", "start_angle", "end_cone", "end_angle", "corner", "length",
                 "segments")

    def __init__(self, hx, hy, start_cone, start_angle, end_cone, end_angle, corner):
        self.hx = hx
        self.hy = hy
        self.start_cone = start_cone
        self.start_angle = start_angle
        self.end_cone = end_cone
        self.end_angle = end_angle
        self.corner = corner
        self.length = math.hypot(hx, hy)
        self.segments = None


# -- enumeration ------------------------------------------------------------------

class _Corners:
    """Per-corner constants for fast angular bookkeeping on a triangulated surface."""

    def __init__(self, T: TranslationSurface):
        coords, _ = T.fast
        self.info = {}
        for (p, i), (cid, offset, a) in T.corner_data.items():
            n = len(coords[p])
            ex = coords[p][(i + 1) % n][0] - coords[p][i][0]
            ey = coords[p][(i + 1) % n][1] - coords[p][i][1]
            q, j = T.ccw_next(p, i)
            self.info[(p, i)] = (cid, offset, a, ex, ey, T.corner_data[(q, j)][1], T.class_angles[cid])

    def angle(self, p, i, dx, dy):
        """Angular coordinate of direction (dx, dy) leaving corner (p, i)."""
        cid, offset, a, ex, ey, next_offset, total = self.info[(p, i)]
        th = math.atan2(ex * dy - ey * dx, ex * dx + ey * dy)
        if th < 0:
            th += TWO_PI
        tol = 1e3 * eps(1e-9)
        if th > TWO_PI - tol:
            th = 0.0
        if th >= a - tol:
            return cid, next_offset % total
        return cid, (offset + th) % total


def _census(T: TranslationSurface, L: float, max_nodes: int = 200_000_000) -> list[_Conn]:
    coords, glue = T.fast
    corners = _Corners(T)
    L2 = L * L
    out: list[_Conn] = []
    nodes = 0
    wedge_tol = eps(EPS_WEDGE)
    for t in range(len(coords)):
        for i in range(3):
            Ax, Ay = coords[t][i]
            Bx, By = coords[t][(i + 1) % 3][0] - Ax, coords[t][(i + 1) % 3][1] - Ay
            Cx, Cy = coords[t][(i + 2) % 3][0] - Ax, coords[t][(i + 2) % 3][1] - Ay
            if Bx * Bx + By * By <= L2:
                sc, sa = corners.angle(t, i, Bx, By)
                ec, ea = corners.angle(t, (i + 1) % 3, -Bx, -By)
                out.append(_Conn(Bx, By, sc, sa, ec, ea, (t, i)))
            stack = [(t, (i + 1) % 3, Bx, By, Cx, Cy, Bx, By, Cx, Cy)]
            while stack:
                u0, e, Rx, Ry, Lx, Ly, ax, ay, bx, by = stack.pop()
                nodes += 1
                vx, vy = Lx - Rx, Ly - Ry
                tt = -(Rx * vx + Ry * vy) / (vx * vx + vy * vy)
                if tt < 0.0:
                    tt = 0.0
                elif tt > 1.0:
                    tt = 1.0
                qx, qy = Rx + tt * vx, Ry + tt * vy
                if qx * qx + qy * qy > L2:
                    continue
                u, f = glue[u0][e]
                U1 = coords[u][(f + 1) % 3]
                U2 = coords[u][(f + 2) % 3]
                Px = U2[0] + Rx - U1[0]
                Py = U2[1] + Ry - U1[1]
                pn = math.hypot(Px, Py)
                ca = ax * Py - ay * Px
                cb = Px * by - Py * bx
                if ca > wedge_tol * pn * math.hypot(ax, ay) and cb > wedge_tol * pn * math.hypot(bx, by):
                    if pn * pn <= L2:
                        sc, sa = corners.angle(t, i, Px, Py)
                        ec, ea = corners.angle(u, (f + 2) % 3, -Px, -Py)
                        out.append(_Conn(Px, Py, sc, sa, ec, ea, (t, i)))
                    stack.append((u, (f + 1) % 3, Rx, Ry, Px, Py, ax, ay, Px, Py))
                    stack.append((u, (f + 2) % 3, Px, Py, Lx, Ly, Px, Py, bx, by))
                elif ca <= wedge_tol * pn * math.hypot(ax, ay):
                    stack.append((u, (f + 2) % 3, Px, Py, Lx, Ly, ax, ay, bx, by))
                else:
                    stack.append((u, (f + 1) % 3, Rx, Ry, Px, Py, ax, ay, bx, by))
                if nodes > max_nodes:
                    raise CensusError(f"census explored more than {max_nodes} triangles")
    return out


def census_surface(s: TranslationSurface) -> LabelledTriangulation:
    """The triangulated surface the census of ``s`` runs on (``s`` itself if already triangulated)."""
    if s.is_triangulated():
        s.require_valid()
        return LabelledTriangulation(s, tuple(range(len(s.vertex_classes))))
    return triangulate(s)


def _public(c: _Conn, cmap) -> SaddleConnection:
    return SaddleConnection(Vec2(c.hx, c.hy), cmap[c.start_cone], cmap[c.end_cone],
                            int(c.start_angle // TWO_PI), c.start_angle, c.end_angle, c.corner)


def _sort_key(h: Vec2):
    a = math.atan2(h.y, h.x)
    return (round(h.norm(), 12), a if a >= 0 else a + TWO_PI)


def saddle_connections(s: TranslationSurface, L: float) -> list[SaddleConnection]:
    """All saddle connections of length at most ``L`` between marked points.

    Each connection is reported once per (start point, outgoing ray), so the
    reverse of every connection is also present.
    """
    if not L > 0:
        raise ValueError("length bound must be positive")
    lt = census_surface(s)
    conns = [_public(c, lt.class_map) for c in _census(lt.surface, L)]
    conns.sort(key=lambda c: _sort_key(c.holonomy))
    return conns


def shortest_sc(s: TranslationSurface) -> float:
    s.require_valid()
    L = min(e.norm() for p in s.polygons for e in p.edges()) / 8
    while True:
        found = saddle_connections(s, L)
        if found:
            return min(c.length for c in found)
        L *= 2


# -- cylinders in one direction -----------------------------------------------------

def _circ_diff(a, b, total):
    d = (a - b) % total
    return min(d, total - d)


class _Direction:
    """Cylinder assembly from the saddle connections parallel to one direction."""

    def __init__(self, T: TranslationSurface, d: Vec2, conns: list[_Conn]):
        self.T = T
        self.d = d
        self.conns = conns
        self.totals = T.class_angles
        self.by_cone: dict[int, list[tuple[float, int]]] = {}
        for k, c in enumerate(conns):
            self.by_cone.setdefault(c.start_cone, []).append((c.start_angle, k))
        for v in self.by_cone.values():
            v.sort()

    def find(self, cone, angle):
        total = self.totals[cone]
        for a, k in self.by_cone.get(cone, ()):
            if _circ_diff(a, angle, total) <= EPS_MATCH:
                return k
        return None

    def succ(self, k, turn):
        c = self.conns[k]
        return self.find(c.end_cone, (c.end_angle + turn) % self.totals[c.end_cone])

    def cycles(self, turn):
        """Closed cycles of the successor map; ``turn=-pi`` keeps the left side."""
        seen = set()
        out = []
        for k in range(len(self.conns)):
            if k in seen:
                continue
            path = [k]
            seen.add(k)
            nxt = self.succ(k, turn)
            while nxt is not None and nxt not in seen:
                path.append(nxt)
                seen.add(nxt)
                nxt = self.succ(nxt, turn)
            if nxt == k:
                out.append(path)
        return out


def _trace_conn(T: TranslationSurface, c: _Conn, d: Vec2):
    p, i = c.corner
    traj = trace_from_corner(T, p, i, d, c.length * (1 + 1e-7) + eps(1e-9) * T.scale)
    if traj.terminal != HIT or traj.cone != c.end_cone or abs(traj.total_length - c.length) > 1e-7 * max(1.0, c.length):
        raise TraceError(f"saddle connection {(c.hx, c.hy)} does not re-trace "
                         f"({traj.terminal}, length {traj.total_length})")
    c.segments = [(sg.polygon_index, sg.entry.x, sg.entry.y, sg.exit.x, sg.exit.y, k) for sg in traj.segments
                  for k in [None]]
    return traj


def _cross(T: TranslationSurface, d: Vec2, obstacles, p: int, x: float, y: float, cap: float):
    """Distance travelled from (x, y) in polygon p along perp(d) until a parallel connection or vertex."""
    coords, glue = T.fast
    tol = eps(1e-9) * T.scale
    dx, dy = d.x, d.y
    nx, ny = -dy, dx
    travelled = 0.0
    entry = None
    first = True
    while travelled <= cap:
        vs = coords[p]
        n = len(vs)
        side = [nx * (vy - y) - ny * (vx - x) for vx, vy in vs]
        ahead = [nx * (vx - x) + ny * (vy - y) for vx, vy in vs]
        hit = None
        for j in range(n):
            if abs(side[j]) <= tol and ahead[j] > tol:
                if hit is None or ahead[j] < ahead[hit]:
                    hit = j
        if hit is None:
            exit_edge = None
            for j in range(n):
                if j != entry and side[j] < 0 < side[(j + 1) % n]:
                    exit_edge = j
                    break
            if exit_edge is None:
                raise TraceError("perpendicular ray grazes an edge")
            t = side[exit_edge] / (side[exit_edge] - side[(exit_edge + 1) % n])
            step = nx * (vs[exit_edge][0] + t * (vs[(exit_edge + 1) % n][0] - vs[exit_edge][0]) - x) + \
                ny * (vs[exit_edge][1] + t * (vs[(exit_edge + 1) % n][1] - vs[exit_edge][1]) - y)
        else:
            step = ahead[hit]
        best = None
        lo = tol if first else -tol
        for ax, ay, bx, by, k in obstacles.get(p, ()):
            tau = dx * (ay - y) - dy * (ax - x)
            if tau < lo or tau > step + tol:
                continue
            px, py = x + tau * nx, y + tau * ny
            along = dx * (px - ax) + dy * (py - ay)
            seg = dx * (bx - ax) + dy * (by - ay)
            if -tol <= along <= seg + tol and (best is None or tau < best[0]):
                best = (tau, k)
        if best is not None:
            return travelled + max(best[0], 0.0), best[1]
        if hit is not None:
            return travelled + step, None
        travelled += step
        first = travelled <= tol
        q, f = glue[p][exit_edge]
        ws = coords[q]
        m = len(ws)
        cx, cy = ws[(f + 1) % m]
        fx, fy = ws[f]
        x, y = cx + t * (fx - cx), cy + t * (fy - cy)
        p, entry = q, f
    raise TraceError("perpendicular ray did not reach the next boundary")


def _point_along(c: _Conn, frac: float):
    """Polygon and coordinates of the point at fraction ``frac`` of the way along ``c``."""
    target = frac * c.length
    acc = 0.0
    for p, x0, y0, x1, y1, _ in c.segments:
        seg = math.hypot(x1 - x0, y1 - y0)
        if acc + seg >= target:
            r = (target - acc) / seg if seg > 0 else 0.0
            return p, x0 + r * (x1 - x0), y0 + r * (y1 - y0)
        acc += seg
    p, x0, y0, x1, y1, _ = c.segments[-1]
    return p, x1, y1


def _assemble(T: TranslationSurface, d: Vec2, conns: list[_Conn], limit: float, cmap) -> list[Cylinder]:
    """Cylinders in direction ``d`` of circumference at most ``limit`` bounded by ``conns``."""
    D = _Direction(T, d, conns)
    bottoms = [cyc for cyc in D.cycles(-math.pi)
               if sum(conns[k].length for k in cyc) <= limit * (1 + 1e-12)]
    if not bottoms:
        return []
    for c in conns:
        if c.segments is None:
            _trace_conn(T, c, d)
    obstacles: dict[int, list] = {}
    for k, c in enumerate(conns):
        for p, x0, y0, x1, y1, _ in c.segments:
            obstacles.setdefault(p, []).append((x0, y0, x1, y1, k))

    regular = [abs(a - TWO_PI) < 1e-6 for a in T.class_angles]
    bottom_of = {}
    for ci, cyc in enumerate(bottoms):
        for k in cyc:
            bottom_of[k] = ci
    surf_area = area(T)

    widths = []
    tops = []
    for cyc in bottoms:
        circ = sum(conns[k].length for k in cyc)
        cap = 2 * surf_area / circ + T.scale
        result = None
        for frac in (0.5, 0.381966, 0.723607, 0.130902, 0.905573):
            p, x, y = _point_along(conns[cyc[0]], frac)
            w, k = _cross(T, d, obstacles, p, x, y, cap)
            if w <= 1e-9 * T.scale:
                continue
            result = (w, k)
            if k is not None:
                break
        if result is None:
            raise TraceError("no positive-width crossing found for a cylinder")
        widths.append(result[0])
        tops.append(result[1])

    # merge across boundaries made only of regular marked points
    parent = list(range(len(bottoms)))

    def root(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def all_regular(cyc):
        return all(regular[conns[k].start_cone] for k in cyc)

    for ci, k in enumerate(tops):
        if k is None or k not in bottom_of:
            continue
        above = bottom_of[k]
        if all_regular(bottoms[above]):
            ra, rb = root(ci), root(above)
            if ra != rb:
                parent[ra] = rb

    def sc(k):
        return _public(conns[k], cmap)

    groups: dict[int, list[int]] = {}
    for ci in range(len(bottoms)):
        groups.setdefault(root(ci), []).append(ci)
    out = []
    for members in groups.values():
        circ = sum(conns[k].length for k in bottoms[members[0]])
        width = sum(widths[ci] for ci in members)
        low = next((ci for ci in members if not all_regular(bottoms[ci])), members[0])
        top_k = next((tops[ci] for ci in members
                      if tops[ci] is not None and (tops[ci] not in bottom_of or not all_regular(bottoms[bottom_of[tops[ci]]]))),
                     tops[members[-1]])
        top = ()
        if top_k is not None:
            path = [top_k]
            nxt = D.succ(top_k, math.pi)
            while nxt is not None and nxt != top_k and len(path) <= len(conns):
                path.append(nxt)
                nxt = D.succ(nxt, math.pi)
            top = tuple(sc(k) for k in path)
        out.append(Cylinder(d, circ, width, circ * width, (tuple(sc(k) for k in bottoms[low]), top)))
    out.sort(key=lambda c: c.circumference)
    return out


# -- public cylinder operations ------------------------------------------------------

def decompose(s: TranslationSurface, direction: Vec2, budget: float) -> CylinderDecomposition:
    """The cylinder decomposition of ``s`` in a completely periodic direction.

    Raises :class:`NotPeriodicWithinBudget` if some separatrix parallel to
    ``direction`` does not reach a cone point within ``budget``.
    """
    if direction.norm() == 0:
        raise ValueError("direction must be nonzero")
    lt = delaunay_labelled(s)
    T = lt.surface
    d = direction.unit()
    conns = []
    for cone in cone_points(T):
        for traj in separatrices(T, cone, d, budget):
            if traj.terminal == EXHAUSTED:
                raise NotPeriodicWithinBudget(
                    f"separatrix from cone {lt.class_map[cone.id]} in direction {tuple(d)} "
                    f"exceeds budget {budget}")
            if traj.direction.dot(d) < 0:
                continue
            c = _Conn(*(traj.holonomy), traj.start_cone, traj.start_angle, traj.cone,
                      arrival_angle(T, traj), traj.start_corner)
            c.segments = [(sg.polygon_index, sg.entry.x, sg.entry.y, sg.exit.x, sg.exit.y, None)
                          for sg in traj.segments]
            conns.append(c)
    cyls = _assemble(T, d, conns, math.inf, lt.class_map)
    total = sum(c.area for c in cyls)
    if abs(total - area(s)) > 1e-8 * area(s):
        raise CensusError(f"cylinders cover area {total!r} of {area(s)!r}")
    return CylinderDecomposition(d, tuple(cyls))


def _direction_key(hx, hy):
    """Angle in [0, pi) of the unoriented direction."""
    a = math.atan2(hy, hx)
    if a < 0:
        a += math.pi
    if a >= math.pi:
        a -= math.pi
    return a


def _group_directions(conns: list[_Conn]) -> list[list[_Conn]]:
    keyed = sorted(((_direction_key(c.hx, c.hy), k) for k, c in enumerate(conns)))
    groups = []
    current = []
    last = None
    for a, k in keyed:
        if last is not None and a - last > EPS_DIRECTION:
            groups.append(current)
            current = []
        current.append(conns[k])
        last = a
    if current:
        groups.append(current)
    # the interval wraps: directions just below pi equal those at 0
    if len(groups) > 1:
        a0 = _direction_key(groups[0][0].hx, groups[0][0].hy)
        a1 = _direction_key(groups[-1][-1].hx, groups[-1][-1].hy)
        if a0 + math.pi - a1 <= EPS_DIRECTION:
            groups[0] = groups.pop() + groups[0]
    return groups


def _cylinders_for_groups(T, groups, L, cmap, signed):
    out = []
    skipped = []
    for group in groups:
        # orient along the first connection; keep the connections pointing that way
        ref = group[0]
        d = Vec2(ref.hx, ref.hy).unit()
        if d.y < 0 or (d.y == 0 and d.x < 0):
            d = -d
        plus = [c for c in group if c.hx * d.x + c.hy * d.y > 0]
        try:
            cyls = _assemble(T, d, plus, L, cmap)
        except TraceError as exc:
            log.warning("skipping direction %s: %s", tuple(d), exc)
            skipped.append(d)
            continue
        for c in cyls:
            out.append(c)
            if signed:
                out.append(Cylinder(-c.direction, c.circumference, c.width, c.area, c.boundary))
    return out, skipped


def _worker(args):
    T, groups, L, cmap, signed = args
    return _cylinders_for_groups(T, groups, L, cmap, signed)


def cylinders_up_to(s: TranslationSurface, L: float, signed: bool = True, jobs: int | None = 1,
                    c_budget: float | None = None) -> list[Cylinder]:
    """All cylinders of circumference at most ``L``.

    With ``signed`` (the default) every cylinder appears twice, once with
    each orientation of its core curve, so the holonomies of the square torus
    are exactly the primitive integer vectors.

    ``c_budget`` is accepted for interface compatibility; boundary saddle
    connections of a cylinder never exceed its circumference, so the census
    radius ``L`` already bounds everything that has to be traced.
    """
    if not L > 0:
        raise ValueError("length bound must be positive")
    lt = delaunay_labelled(s)
    T = lt.surface
    conns = _census(T, L * (1 + 1e-9))
    groups = _group_directions(conns)
    jobs = jobs or os.cpu_count() or 1
    if jobs > 1 and len(groups) > 1:
        chunks = [groups[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_worker, [(T, ch, L, lt.class_map, signed) for ch in chunks]))
    else:
        parts = [_cylinders_for_groups(T, groups, L, lt.class_map, signed)]
    out = [c for part, _ in parts for c in part]
    skipped = [d for _, sk in parts for d in sk]
    if skipped:
        log.warning("%d directions skipped", len(skipped))
    out.sort(key=lambda c: _sort_key(c.holonomy))
    return out


# -- CSV emitters ---------------------------------------------------------------------

def write_saddles_csv(conns, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["hol_x", "hol_y", "length", "start_cone", "end_cone"])
    for c in conns:
        w.writerow([repr(c.holonomy.x), repr(c.holonomy.y), repr(c.length), c.start_cone, c.end_cone])


def write_cylinders_csv(cyls, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["dir_x", "dir_y", "circumference", "width", "area"])
    for c in cyls:
        w.writerow([repr(c.direction.x), repr(c.direction.y), repr(c.circumference), repr(c.width), repr(c.area)])
