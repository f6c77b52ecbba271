"""Tolerance-aware planar primitives.

Everything downstream (distances, balls, solvers) is built on the
predicates in this module, which all share a single relative tolerance
``EPS_GEOM``.  Predicates compare against ``EPS_GEOM`` scaled by the
magnitude of their inputs, so the kernel behaves identically for a unit
square and for the same square translated to coordinates around 1e6.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import Degenerate, EmptyRegion, NotConvex, NotInterior

EPS_GEOM = 1e-9


class Point2(NamedTuple):
    """A point in the plane.  Tuple order gives lexicographic comparison."""

    x: float
    y: float


def _require_finite(p: Point2) -> Point2:
    if not (math.isfinite(p.x) and math.isfinite(p.y)):
        raise ValueError(f"non-finite coordinate: {p}")
    return p


def orientation(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the signed twice-area of triangle abc (+1 CCW, -1 CW, 0 flat).

    Returns 0 when |area| <= EPS_GEOM * scale**2, scale being the largest
    coordinate magnitude among the inputs.
    """
    cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    scale = max(abs(a[0]), abs(a[1]), abs(b[0]), abs(b[1]), abs(c[0]), abs(c[1]))
    if abs(cross) <= EPS_GEOM * scale * scale:
        return 0
    return 1 if cross > 0.0 else -1


@dataclass(frozen=True)
class ConvexPolygon:
    """A strictly convex polygon with counterclockwise vertex order.

    Instances are produced by :func:`normalize_polygon` / :func:`convex_hull`
    for untrusted input; internal constructions (homothets, realized balls)
    build directly from vertex tuples they already know to be valid.
    """

    vertices: tuple[Point2, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterable[tuple[Point2, Point2]]:
        verts = self.vertices
        for i, a in enumerate(verts):
            yield a, verts[(i + 1) % len(verts)]

    @cached_property
    def scale(self) -> float:
        """Largest coordinate magnitude; tolerance unit for this polygon."""
        return max(max(abs(p.x), abs(p.y)) for p in self.vertices)

    @cached_property
    def diameter(self) -> float:
        """Largest pairwise vertex distance."""
        verts = self.vertices
        best = 0.0
        for i, p in enumerate(verts):
            for q in verts[i + 1:]:
                d = math.hypot(p.x - q.x, p.y - q.y)
                if d > best:
                    best = d
        return best

    @cached_property
    def area(self) -> float:
        acc = 0.0
        for a, b in self.edges():
            acc += a.x * b.y - b.x * a.y
        return 0.5 * acc


@dataclass(frozen=True)
class Segment2:
    """A segment with canonical (lexicographic) endpoint order.

    a == b encodes a single point.
    """

    a: Point2
    b: Point2

    def __post_init__(self) -> None:
        if self.b < self.a:
            first, second = self.b, self.a
            object.__setattr__(self, "a", first)
            object.__setattr__(self, "b", second)


class RegionKind(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    SEGMENT = "segment"
    POLYGON = "polygon"


@dataclass(frozen=True)
class ClipResult:
    """A convex region classified by dimension."""

    kind: RegionKind
    point: Point2 | None = None
    segment: Segment2 | None = None
    polygon: ConvexPolygon | None = None

    @classmethod
    def empty(cls) -> "ClipResult":
        return cls(RegionKind.EMPTY)

    @classmethod
    def of_point(cls, p: Point2) -> "ClipResult":
        return cls(RegionKind.POINT, point=p)

    @classmethod
    def of_segment(cls, a: Point2, b: Point2) -> "ClipResult":
        return cls(RegionKind.SEGMENT, segment=Segment2(a, b))

    @classmethod
    def of_polygon(cls, poly: ConvexPolygon) -> "ClipResult":
        return cls(RegionKind.POLYGON, polygon=poly)

    @property
    def is_empty(self) -> bool:
        return self.kind is RegionKind.EMPTY

    def corner_points(self) -> tuple[Point2, ...]:
        """Extreme points of the region (vertices / endpoints / the point)."""
        if self.kind is RegionKind.POINT:
            return (self.point,)
        if self.kind is RegionKind.SEGMENT:
            return (self.segment.a, self.segment.b)
        if self.kind is RegionKind.POLYGON:
            return self.polygon.vertices
        return ()


class PointLocation(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


def normalize_polygon(raw: Sequence[Point2 | tuple[float, float]]) -> ConvexPolygon:
    """Canonicalize a vertex list into a ConvexPolygon.

    Reorders counterclockwise starting at the lexicographic minimum, merges
    duplicate and collinear vertices, and rejects anything that is not
    strictly convex afterwards.
    """
    pts = [_require_finite(Point2(float(p[0]), float(p[1]))) for p in raw]
    if len(pts) < 3:
        raise Degenerate(f"need at least 3 vertices, got {len(pts)}")

    scale = max(max(abs(p.x), abs(p.y)) for p in pts)
    sep_tol = EPS_GEOM * scale

    # Counterclockwise orientation from the signed area of the cycle.
    area2 = 0.0
    for i, a in enumerate(pts):
        b = pts[(i + 1) % len(pts)]
        area2 += a.x * b.y - b.x * a.y
    if area2 < 0.0:
        pts.reverse()

    # Merge consecutive duplicates (cyclically).
    merged: list[Point2] = []
    for p in pts:
        if merged and math.hypot(p.x - merged[-1].x, p.y - merged[-1].y) <= sep_tol:
            continue
        merged.append(p)
    while len(merged) >= 2 and math.hypot(
        merged[0].x - merged[-1].x, merged[0].y - merged[-1].y
    ) <= sep_tol:
        merged.pop()

    # Drop collinear vertices until stable.
    changed = True
    while changed and len(merged) >= 3:
        changed = False
        kept: list[Point2] = []
        n = len(merged)
        for i in range(n):
            prev = merged[(i - 1) % n]
            nxt = merged[(i + 1) % n]
            if orientation(prev, merged[i], nxt) == 0:
                changed = True
            else:
                kept.append(merged[i])
        merged = kept

    if len(merged) < 3:
        raise Degenerate("fewer than 3 vertices survive merging")

    n = len(merged)
    for i in range(n):
        if orientation(merged[i], merged[(i + 1) % n], merged[(i + 2) % n]) <= 0:
            raise NotConvex("vertex triple with non-positive orientation")

    start = min(range(n), key=lambda i: merged[i])
    return ConvexPolygon(tuple(merged[start:] + merged[:start]))


def convex_hull(points: Sequence[Point2 | tuple[float, float]]) -> ConvexPolygon:
    """Strict convex hull (monotone chain); collinear points are dropped."""
    pts = sorted({Point2(float(p[0]), float(p[1])) for p in points})
    if len(pts) < 3:
        raise Degenerate("need at least 3 distinct points")
    for p in pts:
        _require_finite(p)

    def build(seq: Iterable[Point2]) -> list[Point2]:
        chain: list[Point2] = []
        for p in seq:
            while len(chain) >= 2 and orientation(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise Degenerate("all points collinear")
    return ConvexPolygon(tuple(hull))


def point_location(omega: ConvexPolygon, p: Point2) -> PointLocation:
    """Classify p against the polygon, with an EPS_GEOM boundary band."""
    px, py = float(p[0]), float(p[1])
    scale = max(omega.scale, abs(px), abs(py))
    verts = omega.vertices
    n = len(verts)
    on_edge = False
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        ex, ey = b.x - a.x, b.y - a.y
        cross = ex * (py - a.y) - ey * (px - a.x)
        tol = EPS_GEOM * scale * math.hypot(ex, ey)
        if cross < -tol:
            return PointLocation.EXTERIOR
        if cross <= tol:
            on_edge = True
    return PointLocation.BOUNDARY if on_edge else PointLocation.INTERIOR


class RayHit(NamedTuple):
    point: Point2
    edge_index: int
    distance: float


def ray_boundary_intersection(
    omega: ConvexPolygon, p: Point2, direction: Point2 | tuple[float, float]
) -> RayHit:
    """First boundary crossing of the ray from interior point p.

    Vertex hits are assigned to the edge starting at that vertex, which makes
    chord construction deterministic.
    """
    if point_location(omega, p) is not PointLocation.INTERIOR:
        raise NotInterior(f"ray origin {tuple(p)} is not interior")
    dx, dy = float(direction[0]), float(direction[1])
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        raise ValueError("zero direction")

    px, py = p[0], p[1]
    verts = omega.vertices
    n = len(verts)
    candidates: list[tuple[float, float, int]] = []  # (t, s, edge index)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        ex, ey = b.x - a.x, b.y - a.y
        det = ex * dy - ey * dx
        if det == 0.0:
            continue
        rx, ry = a.x - px, a.y - py
        t = (ex * ry - ey * rx) / det
        s = (dx * ry - dy * rx) / det
        if t > 0.0 and -EPS_GEOM <= s <= 1.0 + EPS_GEOM:
            candidates.append((t, s, i))
    if not candidates:
        raise NotInterior("ray found no boundary crossing (origin too close to boundary)")
    t_min = min(t for t, _, _ in candidates)
    window = t_min * (1.0 + 1e-9) + 1e-15
    t, s, idx = min(
        (c for c in candidates if c[0] <= window), key=lambda c: abs(c[1])
    )
    hit = Point2(px + t * dx, py + t * dy)
    return RayHit(hit, idx, t * norm)


@dataclass(frozen=True)
class ChordFrame:
    """The chord through two interior points p, q.

    ``rear`` is the boundary endpoint behind p and ``front`` the endpoint
    beyond q, so the four points appear in order rear, p, q, front along the
    chord.  The stored lengths satisfy d_p_rear < d_q_rear and
    d_q_front < d_p_front.
    """

    rear: Point2
    front: Point2
    d_p_rear: float
    d_q_rear: float
    d_p_front: float
    d_q_front: float


def chord_frame(omega: ConvexPolygon, p: Point2, q: Point2) -> ChordFrame:
    """Chord endpoints and the four endpoint distances for interior p != q."""
    from .errors import CoincidentPoints  # local: avoids every-import cost in hot paths

    px, py = float(p[0]), float(p[1])
    qx, qy = float(q[0]), float(q[1])
    if math.hypot(qx - px, qy - py) <= EPS_GEOM * omega.diameter:
        raise CoincidentPoints(f"points {tuple(p)} and {tuple(q)} coincide")
    if point_location(omega, q) is not PointLocation.INTERIOR:
        raise NotInterior(f"point {tuple(q)} is not interior")
    front = ray_boundary_intersection(omega, Point2(px, py), (qx - px, qy - py)).point
    rear = ray_boundary_intersection(omega, Point2(px, py), (px - qx, py - qy)).point
    return ChordFrame(
        rear=rear,
        front=front,
        d_p_rear=math.hypot(px - rear.x, py - rear.y),
        d_q_rear=math.hypot(qx - rear.x, qy - rear.y),
        d_p_front=math.hypot(px - front.x, py - front.y),
        d_q_front=math.hypot(qx - front.x, qy - front.y),
    )


def clip_halfplane(
    pts: list[Point2], a: Point2, b: Point2, tol: float
) -> list[Point2]:
    """Keep the part of a convex chain on the left of directed line a->b.

    tol is an absolute cross-product slack: points within the band count as
    inside, so tangential intersections survive as degenerate chains.
    """
    if not pts:
        return pts
    ax, ay = a[0], a[1]
    ex, ey = b[0] - ax, b[1] - ay
    out: list[Point2] = []
    prev = pts[-1]
    d_prev = ex * (prev[1] - ay) - ey * (prev[0] - ax)
    for cur in pts:
        d_cur = ex * (cur[1] - ay) - ey * (cur[0] - ax)
        if d_cur >= -tol:
            if d_prev < -tol:
                t = d_prev / (d_prev - d_cur)
                out.append(
                    Point2(prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1]))
                )
            out.append(cur)
        elif d_prev >= -tol:
            t = d_prev / (d_prev - d_cur)
            out.append(
                Point2(prev[0] + t * (cur[0] - prev[0]), prev[1] + t * (cur[1] - prev[1]))
            )
        prev = cur
        d_prev = d_cur
    return out


def clip_by_polygon(
    pts: list[Point2], clip: Sequence[Point2], tol: float
) -> list[Point2]:
    """Sutherland-Hodgman clip of a convex chain by a convex CCW polygon."""
    n = len(clip)
    for i in range(n):
        pts = clip_halfplane(pts, clip[i], clip[(i + 1) % n], tol)
        if not pts:
            break
    return pts


def classify_region(pts: Sequence[Point2], scale: float) -> ClipResult:
    """Classify a clipped convex chain by dimension."""
    sep_tol = EPS_GEOM * max(scale, 1e-300)
    deduped: list[Point2] = []
    for p in pts:
        if deduped and math.hypot(p.x - deduped[-1].x, p.y - deduped[-1].y) <= sep_tol:
            continue
        deduped.append(p)
    while len(deduped) >= 2 and math.hypot(
        deduped[0].x - deduped[-1].x, deduped[0].y - deduped[-1].y
    ) <= sep_tol:
        deduped.pop()

    if not deduped:
        return ClipResult.empty()
    if len(deduped) == 1:
        return ClipResult.of_point(deduped[0])
    if len(deduped) >= 3:
        try:
            return ClipResult.of_polygon(normalize_polygon(deduped))
        except (Degenerate, NotConvex):
            pass  # sliver: fall through to segment classification
    # Segment or point: take the two points of largest separation.
    best = (0.0, deduped[0], deduped[0])
    for i, u in enumerate(deduped):
        for v in deduped[i + 1:]:
            d = math.hypot(u.x - v.x, u.y - v.y)
            if d > best[0]:
                best = (d, u, v)
    if best[0] <= sep_tol:
        return ClipResult.of_point(min(deduped))
    return ClipResult.of_segment(best[1], best[2])


def clip_convex(a: ConvexPolygon, b: ConvexPolygon) -> ClipResult:
    """Intersection of two convex polygons, classified by dimension."""
    scale = max(a.scale, b.scale)
    tol = EPS_GEOM * scale * scale
    pts = clip_by_polygon(list(a.vertices), b.vertices, tol)
    return classify_region(pts, scale)


def lexicographic_min(region: ClipResult) -> Point2:
    """The (x, then y)-smallest point of a nonempty convex region."""
    pts = region.corner_points()
    if not pts:
        raise EmptyRegion("lexicographic_min of empty region")
    return min(pts)
