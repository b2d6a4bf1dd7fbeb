"""Translation surfaces presented as convex polygons glued by translations.

A surface is an immutable value: a tuple of counterclockwise convex polygons
and an involution on their edges.  Everything else (vertex classes, cone
angles, genus, Delaunay triangulations) is derived and cached.

Tolerances are relative to the surface's length scale (its longest edge), so
a surface built at diameter O(1) sees the absolute values below.
"""
from __future__ import annotations

import json
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .geom import Mat2, Vec2, angle_between, apply, eps

log = logging.getLogger(__name__)

EPS_GLUE = 1e-9
EPS_ANGLE = 1e-9
EPS_FLIP = 1e-10
EPS_ISO = 1e-8
EPS_DET = 1e-10

TWO_PI = 2 * math.pi


class InvalidSurfaceError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__("invalid surface: " + "; ".join(str(v) for v in report.violations))
        self.report = report


class DelaunayError(RuntimeError):
    pass


class EdgeRef(NamedTuple):
    polygon_index: int
    edge_index: int


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Vec2, ...]

    def __init__(self, vertices):
        vs = tuple(v if isinstance(v, Vec2) else Vec2(float(v[0]), float(v[1])) for v in vertices)
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def edge(self, i: int) -> Vec2:
        n = len(self.vertices)
        return self.vertices[(i + 1) % n] - self.vertices[i % n]

    def edges(self) -> list[Vec2]:
        return [self.edge(i) for i in range(len(self.vertices))]

    def area(self) -> float:
        vs = self.vertices
        n = len(vs)
        return 0.5 * sum(vs[i].cross(vs[(i + 1) % n]) for i in range(n))

    def angle(self, i: int) -> float:
        """Interior angle at vertex ``i``."""
        n = len(self.vertices)
        out = self.edge(i)
        back = self.vertices[(i - 1) % n] - self.vertices[i]
        return angle_between(out, back)

    def transformed(self, m: Mat2) -> Polygon:
        return Polygon([apply(m, v) for v in self.vertices])


@dataclass(frozen=True)
class ConePoint:
    id: int
    angle_multiple: int
    zero_order: int


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    indices: tuple = ()

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


@dataclass(frozen=True)
class TranslationSurface:
    polygons: tuple[Polygon, ...]
    gluing: dict
    name: str = ""

    def __init__(self, polygons, gluing, name: str = ""):
        polys = tuple(p if isinstance(p, Polygon) else Polygon(p) for p in polygons)
        glue = {}
        if isinstance(gluing, dict):
            items = gluing.items()
        else:
            items = []
            for a, b in gluing:
                items.append((a, b))
                items.append((b, a))
        for a, b in items:
            glue[EdgeRef(*a)] = EdgeRef(*b)
        object.__setattr__(self, "polygons", polys)
        object.__setattr__(self, "gluing", glue)
        object.__setattr__(self, "name", name)

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other

    # -- plumbing -----------------------------------------------------------

    def glue(self, p: int, e: int) -> EdgeRef:
        return self.gluing[EdgeRef(p, e)]

    def edge_pairs(self) -> list[tuple[EdgeRef, EdgeRef]]:
        return sorted((a, b) for a, b in self.gluing.items() if a <= b)

    def is_triangulated(self) -> bool:
        return all(len(p) == 3 for p in self.polygons)

    @cached_property
    def scale(self) -> float:
        """Longest edge length; tolerances are taken relative to this."""
        return max((e.norm() for p in self.polygons for e in p.edges()), default=1.0) or 1.0

    @cached_property
    def fast(self) -> tuple[list, list]:
        """Vertex coordinates and gluing as nested plain lists for inner loops."""
        coords = [[(v.x, v.y) for v in p.vertices] for p in self.polygons]
        glue = [[self.gluing[EdgeRef(p, e)] for e in range(len(poly))]
                for p, poly in enumerate(self.polygons)]
        return coords, glue

    @cached_property
    def report(self) -> ValidationReport:
        return _validate(self)

    def require_valid(self):
        if not self.report.ok:
            raise InvalidSurfaceError(self.report)

    # -- vertex classes ---------------------------------------------------

    @cached_property
    def vertex_classes(self) -> list[list[tuple[int, int]]]:
        """Corners ``(polygon, vertex)`` of each vertex class in counterclockwise order.

        Classes are numbered by their first corner in lexicographic order; the
        first corner of each list is that minimal corner.
        """
        seen = set()
        classes = []
        for p, poly in enumerate(self.polygons):
            for i in range(len(poly)):
                if (p, i) in seen:
                    continue
                cycle = []
                c = (p, i)
                while c not in seen:
                    seen.add(c)
                    cycle.append(c)
                    c = self.ccw_next(*c)
                classes.append(cycle)
        return classes

    def ccw_next(self, p: int, i: int) -> tuple[int, int]:
        """Corner reached by turning counterclockwise past corner ``(p, i)``."""
        n = len(self.polygons[p])
        q, j = self.gluing[EdgeRef(p, (i - 1) % n)]
        return (q, j)

    @cached_property
    def corner_data(self) -> dict:
        """Map corner -> (class id, angular offset within the class, interior angle)."""
        data = {}
        for cid, cycle in enumerate(self.vertex_classes):
            offset = 0.0
            for (p, i) in cycle:
                a = self.polygons[p].angle(i)
                data[(p, i)] = (cid, offset, a)
                offset += a
        return data

    @cached_property
    def class_angles(self) -> list[float]:
        return [sum(self.corner_data[c][2] for c in cycle) for cycle in self.vertex_classes]

    def cone_class(self, p: int, i: int) -> int:
        return self.corner_data[(p, i)][0]

    def ray_angle(self, p: int, i: int, d: Vec2) -> float:
        """Angular coordinate at the cone point of a ray leaving corner ``(p, i)`` along ``d``.

        Rays along the far edge of the corner belong to the next corner; the
        result lies in ``[0, total angle)``.
        """
        cid, offset, a = self.corner_data[(p, i)]
        total = self.class_angles[cid]
        theta = angle_between(self.polygons[p].edge(i), d)
        tol = eps(EPS_ANGLE) * 1e3
        if theta > TWO_PI - tol:
            theta = 0.0
        if theta >= a - tol:
            q, j = self.ccw_next(p, i)
            return self.corner_data[(q, j)][1] % total
        return (offset + theta) % total

    def corners_containing(self, cid: int, d: Vec2) -> list[tuple[int, int, float]]:
        """Corners of class ``cid`` whose half-open sector contains direction ``d``.

        Returns ``(polygon, vertex, angular coordinate)`` triples.
        """
        tol = eps(EPS_ANGLE) * 1e3
        out = []
        for (p, i) in self.vertex_classes[cid]:
            _, offset, a = self.corner_data[(p, i)]
            theta = angle_between(self.polygons[p].edge(i), d)
            if theta > TWO_PI - tol:
                theta = 0.0
            if theta < a - tol:
                out.append((p, i, offset + theta))
        return out

    def euler_characteristic(self) -> int:
        v = len(self.vertex_classes)
        e = sum(len(p) for p in self.polygons) // 2
        f = len(self.polygons)
        return v - e + f

    def genus(self) -> int:
        return (2 - self.euler_characteristic()) // 2

    def area(self) -> float:
        return area(self)


# -- validation -------------------------------------------------------------

def _validate(s: TranslationSurface) -> ValidationReport:
    report = ValidationReport()
    bad = report.violations
    if not s.polygons:
        bad.append(Violation("empty", "surface has no polygons"))
        return report

    scale = max((e.norm() for p in s.polygons for e in p.edges()), default=1.0) or 1.0
    for p, poly in enumerate(s.polygons):
        n = len(poly)
        if n < 3:
            bad.append(Violation("degenerate polygon", f"polygon {p} has {n} vertices", (p,)))
            continue
        if poly.area() <= eps(EPS_GLUE) * scale * scale:
            bad.append(Violation("orientation", f"polygon {p} is not counterclockwise or has zero area", (p,)))
        for i in range(n):
            if poly.edge(i).norm() <= eps(EPS_GLUE) * scale:
                bad.append(Violation("degenerate polygon", f"polygon {p} edge {i} has zero length", (p, i)))
            if poly.edge(i).cross(poly.edge(i + 1)) < -eps(EPS_GLUE) * scale * scale:
                bad.append(Violation("non-convex", f"polygon {p} reflex at vertex {(i + 1) % n}", (p, (i + 1) % n)))

    edges = {EdgeRef(p, e) for p, poly in enumerate(s.polygons) for e in range(len(poly))}
    for a, b in s.gluing.items():
        if a not in edges:
            bad.append(Violation("bad edge reference", f"{tuple(a)} is not an edge", tuple(a)))
            continue
        if b not in edges:
            bad.append(Violation("bad edge reference", f"{tuple(b)} is not an edge", tuple(b)))
            continue
        if a == b:
            bad.append(Violation("fixed point", f"edge {tuple(a)} glued to itself", tuple(a)))
        if s.gluing.get(b) != a:
            bad.append(Violation("not an involution", f"{tuple(a)} -> {tuple(b)} is not reciprocated", tuple(a)))
            continue
        va = s.polygons[a.polygon_index].edge(a.edge_index)
        vb = s.polygons[b.polygon_index].edge(b.edge_index)
        if (va + vb).norm() > eps(EPS_GLUE) * scale:
            bad.append(Violation("not a translation", f"edges {tuple(a)} and {tuple(b)} are not opposite",
                                 (tuple(a), tuple(b))))
    for e in sorted(edges - set(s.gluing)):
        bad.append(Violation("uncovered edge", f"edge {tuple(e)} is not glued", tuple(e)))
    if bad:
        return report

    for cid, total in enumerate(s.class_angles):
        m = round(total / TWO_PI)
        if m < 1 or abs(total - m * TWO_PI) > eps(EPS_ANGLE) * max(1, m):
            bad.append(Violation("cone angle", f"vertex class {cid} has angle {total!r}", (cid,)))
    return report


def validate(s: TranslationSurface) -> ValidationReport:
    return s.report


def cone_points(s: TranslationSurface) -> list[ConePoint]:
    s.require_valid()
    out = []
    for cid, total in enumerate(s.class_angles):
        m = round(total / TWO_PI)
        out.append(ConePoint(cid, m, m - 1))
    return out


def stratum(s: TranslationSurface) -> tuple[int, ...]:
    """Zero orders of the genuine singularities, largest first."""
    return tuple(sorted((c.zero_order for c in cone_points(s) if c.zero_order > 0), reverse=True))


def area(s: TranslationSurface) -> float:
    return sum(p.area() for p in s.polygons)


def apply_matrix(g: Mat2, s: TranslationSurface) -> TranslationSurface:
    if not g.is_unimodular(eps(EPS_DET)):
        raise ValueError(f"matrix has determinant {g.det()!r}, expected 1")
    s.require_valid()
    return TranslationSurface([p.transformed(g) for p in s.polygons], dict(s.gluing), s.name)


# -- serialization ------------------------------------------------------------

def to_dict(s: TranslationSurface) -> dict:
    return {
        "name": s.name,
        "polygons": [{"vertices": [[v.x, v.y] for v in p.vertices]} for p in s.polygons],
        "gluings": [[list(a), list(b)] for a, b in s.edge_pairs()],
    }


def from_dict(data: dict, check: bool = True) -> TranslationSurface:
    s = TranslationSurface(
        [[tuple(v) for v in p["vertices"]] for p in data["polygons"]],
        [(tuple(a), tuple(b)) for a, b in data["gluings"]],
        data.get("name", ""),
    )
    if check:
        s.require_valid()
    return s


def dumps(s: TranslationSurface) -> str:
    # json writes floats with repr, i.e. 17 significant digits when needed
    return json.dumps(to_dict(s), indent=1)


def loads(text: str) -> TranslationSurface:
    return from_dict(json.loads(text))


def save(s: TranslationSurface, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(s))


def load(path) -> TranslationSurface:
    with open(path) as fh:
        return loads(fh.read())


# -- triangulations -----------------------------------------------------------

class _Tri:
    """Mutable triangulation used while flipping.

    ``pts[t]`` holds the three corner coordinates of triangle ``t`` (each
    triangle has its own translation chart), ``glue`` maps half-edges
    ``(t, i)`` to their partners and ``labels[t][i]`` is the vertex class of
    the original surface that corner ``i`` of ``t`` belongs to.
    """

    def __init__(self, s: TranslationSurface):
        self.pts: list[list[tuple[float, float]]] = []
        self.labels: list[list[int]] = []
        first_tri = []
        for p, poly in enumerate(s.polygons):
            first_tri.append(len(self.pts))
            vs = [(v.x, v.y) for v in poly.vertices]
            lab = [s.cone_class(p, i) for i in range(len(vs))]
            for k in range(1, len(vs) - 1):
                self.pts.append([vs[0], vs[k], vs[k + 1]])
                self.labels.append([lab[0], lab[k], lab[k + 1]])

        def half_edge(p, e):
            n = len(s.polygons[p])
            t0 = first_tri[p]
            if e == 0:
                return (t0, 0)
            if e == n - 1:
                return (t0 + n - 3, 2)
            return (t0 + e - 1, 1)

        self.glue: dict[tuple[int, int], tuple[int, int]] = {}
        for (p, e), (q, f) in s.gluing.items():
            self.glue[half_edge(p, e)] = half_edge(q, f)
        for p, poly in enumerate(s.polygons):
            t0 = first_tri[p]
            for k in range(len(poly) - 3):
                self.glue[(t0 + k, 2)] = (t0 + k + 1, 0)
                self.glue[(t0 + k + 1, 0)] = (t0 + k, 2)

    def developed_opposite(self, t: int, i: int):
        """Corners A, B, C of ``t`` (edge ``i`` is A->B) and the far vertex D across that edge."""
        u, j = self.glue[(t, i)]
        A, B, C = self.pts[t][i], self.pts[t][(i + 1) % 3], self.pts[t][(i + 2) % 3]
        U1 = self.pts[u][(j + 1) % 3]
        U2 = self.pts[u][(j + 2) % 3]
        D = (U2[0] + A[0] - U1[0], U2[1] + A[1] - U1[1])
        return A, B, C, D, u, j

    def incircle(self, t: int, i: int) -> tuple[float, float]:
        """Incircle determinant of the far vertex across edge ``(t, i)`` and its scale."""
        A, B, C, D, _, _ = self.developed_opposite(t, i)
        adx, ady = A[0] - D[0], A[1] - D[1]
        bdx, bdy = B[0] - D[0], B[1] - D[1]
        cdx, cdy = C[0] - D[0], C[1] - D[1]
        det = ((adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
               - (bdx * bdx + bdy * bdy) * (adx * cdy - cdx * ady)
               + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady))
        scale = max(adx * adx + ady * ady, bdx * bdx + bdy * bdy, cdx * cdx + cdy * cdy)
        return det, scale * scale

    def flip(self, t: int, i: int) -> bool:
        A, B, C, D, u, j = self.developed_opposite(t, i)
        if u == t:
            return False
        # new triangles (C, A, D) and (D, B, C) must be strictly convex
        if _orient(C, A, D) <= 0 or _orient(D, B, C) <= 0:
            return False
        lA, lB, lC = self.labels[t][i], self.labels[t][(i + 1) % 3], self.labels[t][(i + 2) % 3]
        lD = self.labels[u][(j + 2) % 3]
        remap = {
            (t, (i + 2) % 3): (t, 0),
            (u, (j + 1) % 3): (t, 1),
            (u, (j + 2) % 3): (u, 0),
            (t, (i + 1) % 3): (u, 1),
        }
        pairs = []
        for old, new in remap.items():
            partner = self.glue[old]
            pairs.append((new, remap.get(partner, partner)))
        for k in range(3):
            self.glue.pop((t, k), None)
            self.glue.pop((u, k), None)
        for a, b in pairs:
            self.glue[a] = b
            self.glue[b] = a
        self.glue[(t, 2)] = (u, 2)
        self.glue[(u, 2)] = (t, 2)
        self.pts[t] = [C, A, D]
        self.pts[u] = [D, B, C]
        self.labels[t] = [lC, lA, lD]
        self.labels[u] = [lD, lB, lC]
        return True

    def make_delaunay(self, tol: float, max_flips: int) -> int:
        flips = 0
        stack = [(t, i) for t in range(len(self.pts)) for i in range(3)]
        while stack:
            t, i = stack.pop()
            det, scale = self.incircle(t, i)
            if det <= tol * scale:
                continue
            u, _ = self.glue[(t, i)]
            if not self.flip(t, i):
                continue
            flips += 1
            if flips > max_flips:
                raise DelaunayError(f"no convergence after {max_flips} flips")
            stack.extend((t, k) for k in range(3))
            stack.extend((u, k) for k in range(3))
        return flips

    def surface(self, name: str) -> TranslationSurface:
        return TranslationSurface([list(p) for p in self.pts], dict(self.glue), name)


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


@dataclass(frozen=True)
class LabelledTriangulation:
    """A triangulated surface with each of its vertex classes traced back to the source surface."""
    surface: TranslationSurface
    class_map: tuple[int, ...]


def _labelled(tri: _Tri, s: TranslationSurface, name: str) -> LabelledTriangulation:
    out = tri.surface(name)
    cmap = []
    for cycle in out.vertex_classes:
        t, i = cycle[0]
        cmap.append(tri.labels[t][i])
    return LabelledTriangulation(out, tuple(cmap))


def triangulate(s: TranslationSurface) -> LabelledTriangulation:
    """Fan triangulation of every polygon."""
    s.require_valid()
    return _labelled(_Tri(s), s, s.name)


def delaunay_labelled(s: TranslationSurface, max_flips: int | None = None) -> LabelledTriangulation:
    s.require_valid()
    tri = _Tri(s)
    if max_flips is None:
        max_flips = 1000 * len(tri.pts) + 100000
    tri.make_delaunay(eps(EPS_FLIP), max_flips)
    return _labelled(tri, s, s.name)


def delaunay(s: TranslationSurface) -> TranslationSurface:
    """A Delaunay triangulation of ``s`` (same surface, re-cut into triangles)."""
    return delaunay_labelled(s).surface


def is_delaunay(s: TranslationSurface, tol: float = EPS_FLIP) -> bool:
    if not s.is_triangulated():
        return False
    tri = _Tri(s)
    for t in range(len(tri.pts)):
        for i in range(3):
            det, scale = tri.incircle(t, i)
            if det > eps(tol) * scale:
                return False
    return True


# -- Delaunay decomposition and isomorphism -----------------------------------

@dataclass
class _Cells:
    edges: list[list[tuple[float, float]]]
    glue: dict[tuple[int, int], tuple[int, int]]


def _delaunay_cells(s: TranslationSurface) -> _Cells:
    """Merge cocircular Delaunay triangles into convex cells.

    Unlike the triangulation itself, the cell decomposition does not depend on
    how ties were broken, which makes it usable for comparing surfaces.
    """
    lt = delaunay_labelled(s)
    tri = _Tri(lt.surface)
    ntri = len(tri.pts)
    tol = eps(EPS_ISO)

    degenerate = set()
    for t in range(ntri):
        for i in range(3):
            u, _ = tri.glue[(t, i)]
            if u == t:
                continue
            det, scale = tri.incircle(t, i)
            if abs(det) <= tol * scale:
                degenerate.add((t, i))

    cell_of = [-1] * ntri
    cells_he: list[list] = []
    for root in range(ntri):
        if cell_of[root] >= 0:
            continue
        cid = len(cells_he)
        pos = {root: (0.0, 0.0)}
        cell_of[root] = cid
        interior = set()
        queue = deque([root])
        while queue:
            t = queue.popleft()
            ox, oy = pos[t]
            for i in range(3):
                if (t, i) not in degenerate:
                    continue
                u, j = tri.glue[(t, i)]
                if cell_of[u] >= 0 and u not in pos:
                    continue
                A = tri.pts[t][i]
                U1 = tri.pts[u][(j + 1) % 3]
                off = (ox + A[0] - U1[0], oy + A[1] - U1[1])
                if u not in pos:
                    pos[u] = off
                    cell_of[u] = cid
                    queue.append(u)
                    interior.add((t, i))
                    interior.add((u, j))
                elif abs(pos[u][0] - off[0]) + abs(pos[u][1] - off[1]) <= tol * lt.surface.scale:
                    interior.add((t, i))
                    interior.add((u, j))
        boundary = []
        for t, (ox, oy) in pos.items():
            for i in range(3):
                if (t, i) in interior:
                    continue
                a = tri.pts[t][i]
                b = tri.pts[t][(i + 1) % 3]
                boundary.append(((a[0] + ox, a[1] + oy), (b[0] + ox, b[1] + oy), (t, i)))
        cells_he.append(_order_cycle(boundary, tol * lt.surface.scale))

    edges = []
    where = {}
    for cid, cyc in enumerate(cells_he):
        edges.append([(b[0] - a[0], b[1] - a[1]) for a, b, _ in cyc])
        for k, (_, _, he) in enumerate(cyc):
            where[he] = (cid, k)
    glue = {where[a]: where[b] for a, b in tri.glue.items() if a in where}
    return _Cells(edges, glue)


def _order_cycle(boundary, tol):
    """Chain boundary half-edges head to tail, starting from the first one."""
    if not boundary:
        raise DelaunayError("empty Delaunay cell")
    remaining = list(boundary)
    cyc = [remaining.pop(0)]
    while remaining:
        end = cyc[-1][1]
        for k, he in enumerate(remaining):
            if abs(he[0][0] - end[0]) + abs(he[0][1] - end[1]) <= tol:
                cyc.append(remaining.pop(k))
                break
        else:
            raise DelaunayError("Delaunay cell boundary is not a closed polygon")
    return cyc


def is_isomorphic(s1: TranslationSurface, s2: TranslationSurface) -> bool:
    """Whether ``s1`` and ``s2`` are the same translation surface up to cut and paste."""
    s1.require_valid()
    s2.require_valid()
    scale = max(s1.scale, s2.scale)
    if abs(area(s1) - area(s2)) > eps(EPS_ISO) * scale * scale:
        return False
    if sorted(c.angle_multiple for c in cone_points(s1) if c.angle_multiple > 1) != \
            sorted(c.angle_multiple for c in cone_points(s2) if c.angle_multiple > 1):
        return False
    c1 = _delaunay_cells(s1)
    c2 = _delaunay_cells(s2)
    if Counter(len(e) for e in c1.edges) != Counter(len(e) for e in c2.edges):
        return False
    tol = eps(EPS_ISO) * scale

    def same(u, v):
        return abs(u[0] - v[0]) <= tol and abs(u[1] - v[1]) <= tol

    seed = min(range(len(c1.edges)), key=lambda c: (sum(len(e) == len(c1.edges[c]) for e in c1.edges), c))
    k = len(c1.edges[seed])
    for target in range(len(c2.edges)):
        if len(c2.edges[target]) != k:
            continue
        for rot in range(k):
            if _extend(c1, c2, seed, target, rot, same):
                return True
    return False


def _extend(c1: _Cells, c2: _Cells, seed: int, target: int, rot: int, same) -> bool:
    images = {seed: (target, rot)}
    used = {target}
    queue = deque([seed])
    while queue:
        a = queue.popleft()
        b, r = images[a]
        ea, eb = c1.edges[a], c2.edges[b]
        k = len(ea)
        for e in range(k):
            f = (e + r) % k
            if not same(ea[e], eb[f]):
                return False
            a2, e2 = c1.glue[(a, e)]
            b2, f2 = c2.glue[(b, f)]
            if len(c1.edges[a2]) != len(c2.edges[b2]):
                return False
            r2 = (f2 - e2) % len(c1.edges[a2])
            if a2 in images:
                if images[a2] != (b2, r2):
                    return False
            else:
                if b2 in used:
                    return False
                images[a2] = (b2, r2)
                used.add(b2)
                queue.append(a2)
    return len(images) == len(c1.edges) == len(c2.edges)
