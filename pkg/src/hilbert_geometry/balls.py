"""Polygonal realizations of closed metric balls.

Construction recipes:

* forward-Funk ball: homothet of the domain about the center with ratio
  1 - e^(-r); always inside the domain.
* reverse-Funk ball: homothet of the point-reflected domain with ratio
  e^r - 1, clipped to the domain (it can escape for large r).
* Hilbert ball: convex hull of the points at distance r from the center in
  both directions along every spoke (chord through the center and a domain
  vertex).
* Thompson ball: intersection of the forward and reverse Funk balls.

A radius-0 ball is the single point {center}; it is stored with
``shape=None`` so downstream clipping never sees a zero-area polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import Degenerate
from .geometry import (
    ChordFrame,
    ClipResult,
    ConvexPolygon,
    Point2,
    RegionKind,
    clip_convex,
    convex_hull,
    ray_boundary_intersection,
)
from .metrics import MetricKind, _require_interior, distance

BOUNDARY_SAMPLES_PER_EDGE = 16


@dataclass(frozen=True)
class MetricBall:
    """A realized closed ball; shape is None for the degenerate radius-0 ball."""

    kind: MetricKind
    center: Point2
    radius: float
    domain: ConvexPolygon
    shape: ConvexPolygon | None

    def shape_points(self) -> tuple[Point2, ...]:
        if self.shape is None:
            return (self.center,)
        return self.shape.vertices


@dataclass(frozen=True)
class Spoke:
    """The chord through an interior point and one domain vertex."""

    vertex_index: int
    chord: ChordFrame


def spokes(omega: ConvexPolygon, p: Point2) -> list[Spoke]:
    """One spoke per domain vertex; the chord's front endpoint is the vertex."""
    p = _require_interior(omega, p)
    out = []
    for i, v in enumerate(omega.vertices):
        d_fwd = math.hypot(v.x - p.x, v.y - p.y)
        back = ray_boundary_intersection(omega, p, (p.x - v.x, p.y - v.y))
        out.append(
            Spoke(
                vertex_index=i,
                chord=ChordFrame(
                    rear=back.point,
                    front=v,
                    d_p_rear=back.distance,
                    d_q_rear=back.distance + d_fwd,
                    d_p_front=d_fwd,
                    d_q_front=0.0,
                ),
            )
        )
    return out


def half_spokes(omega: ConvexPolygon, p: Point2) -> list[tuple[float, float, float, float]]:
    """Directed half-spokes (ux, uy, d_fwd, d_back) sorted by angle around p.

    Each spoke contributes two opposite directions; coincident directions
    (p collinear with two domain vertices) are deduplicated.  The boundary
    distances depend only on p, so callers can cache the result and evaluate
    balls of many radii cheaply.
    """
    p = _require_interior(omega, p)
    px, py = p.x, p.y
    entries: list[tuple[float, float, float, float, float]] = []
    for v in omega.vertices:
        d_fwd = math.hypot(v.x - px, v.y - py)
        ux, uy = (v.x - px) / d_fwd, (v.y - py) / d_fwd
        d_back = ray_boundary_intersection(omega, p, (-ux, -uy)).distance
        entries.append((math.atan2(uy, ux), ux, uy, d_fwd, d_back))
        entries.append((math.atan2(-uy, -ux), -ux, -uy, d_back, d_fwd))
    entries.sort()
    out: list[tuple[float, float, float, float]] = []
    first_angle = last_angle = None
    for angle, ux, uy, d_fwd, d_back in entries:
        if last_angle is not None and angle - last_angle <= 1e-12:
            continue
        out.append((ux, uy, d_fwd, d_back))
        if first_angle is None:
            first_angle = angle
        last_angle = angle
    # Wrap-around duplicate: angles near -pi and pi are the same direction.
    if len(out) >= 2 and (last_angle - first_angle) >= 2.0 * math.pi - 1e-12:
        out.pop()
    return out


def hilbert_ball_points(
    spoke_frames: list[tuple[float, float, float, float]], p: Point2, r: float
) -> list[Point2]:
    """Hilbert-sphere points on every half-spoke, in CCW angular order.

    All points lie on the ball boundary, so the returned cycle is a (weakly)
    convex polygon even before collinear vertices are merged; solver hot
    paths clip against it directly without hulling.
    """
    k = math.exp(2.0 * r)
    px, py = p.x, p.y
    pts = []
    for ux, uy, d_fwd, d_back in spoke_frames:
        u = (k - 1.0) * d_back * d_fwd / (d_fwd + k * d_back)
        pts.append(Point2(px + u * ux, py + u * uy))
    return pts


def funk_ball_points(omega: ConvexPolygon, p: Point2, r: float) -> list[Point2]:
    ratio = 1.0 - math.exp(-r)
    px, py = p[0], p[1]
    return [Point2(px + ratio * (v.x - px), py + ratio * (v.y - py)) for v in omega.vertices]


def reverse_funk_ball_points(omega: ConvexPolygon, p: Point2, r: float) -> list[Point2]:
    # Point reflection is a half-turn, so the vertex order stays CCW.
    ratio = math.exp(r) - 1.0
    px, py = p[0], p[1]
    return [Point2(px + ratio * (px - v.x), py + ratio * (py - v.y)) for v in omega.vertices]


def _polygon_or_none(region: ClipResult) -> ConvexPolygon | None:
    if region.kind is RegionKind.POLYGON:
        return region.polygon
    return None


def funk_ball(omega: ConvexPolygon, p: Point2, r: float) -> MetricBall:
    p = _require_interior(omega, p)
    _check_radius(r)
    if r == 0.0:
        return MetricBall(MetricKind.FUNK, p, 0.0, omega, None)
    shape = ConvexPolygon(tuple(funk_ball_points(omega, p, r)))
    return MetricBall(MetricKind.FUNK, p, r, omega, shape)


def reverse_funk_ball(omega: ConvexPolygon, p: Point2, r: float) -> MetricBall:
    p = _require_interior(omega, p)
    _check_radius(r)
    if r == 0.0:
        return MetricBall(MetricKind.REVERSE_FUNK, p, 0.0, omega, None)
    homothet = ConvexPolygon(tuple(reverse_funk_ball_points(omega, p, r)))
    shape = _polygon_or_none(clip_convex(homothet, omega))
    return MetricBall(MetricKind.REVERSE_FUNK, p, r, omega, shape)


def hilbert_ball(omega: ConvexPolygon, p: Point2, r: float) -> MetricBall:
    p = _require_interior(omega, p)
    _check_radius(r)
    if r == 0.0:
        return MetricBall(MetricKind.HILBERT, p, 0.0, omega, None)
    pts = hilbert_ball_points(half_spokes(omega, p), p, r)
    try:
        shape = convex_hull(pts)
    except Degenerate:
        shape = None  # radius tiny relative to the domain scale
    return MetricBall(MetricKind.HILBERT, p, r, omega, shape)


def thompson_ball(omega: ConvexPolygon, p: Point2, r: float) -> MetricBall:
    p = _require_interior(omega, p)
    _check_radius(r)
    if r == 0.0:
        return MetricBall(MetricKind.THOMPSON, p, 0.0, omega, None)
    fwd = funk_ball(omega, p, r).shape
    rev = reverse_funk_ball(omega, p, r).shape
    shape = None
    if fwd is not None and rev is not None:
        shape = _polygon_or_none(clip_convex(fwd, rev))
    return MetricBall(MetricKind.THOMPSON, p, r, omega, shape)


_CONSTRUCTORS = {
    MetricKind.FUNK: funk_ball,
    MetricKind.REVERSE_FUNK: reverse_funk_ball,
    MetricKind.HILBERT: hilbert_ball,
    MetricKind.THOMPSON: thompson_ball,
}


def ball(omega: ConvexPolygon, kind: MetricKind, p: Point2, r: float) -> MetricBall:
    return _CONSTRUCTORS[kind](omega, p, r)


def contains(b: MetricBall, x: Point2, slack: float) -> bool:
    """Distance-based membership test: d(center, x) <= radius + slack.

    Deliberately not shape-based, so membership and the polygonal
    realization can never disagree.
    """
    return distance(b.domain, b.kind, b.center, x) <= b.radius + slack


def _check_radius(r: float) -> None:
    if r < 0.0 or not math.isfinite(r):
        raise ValueError(f"radius must be finite and >= 0, got {r}")
