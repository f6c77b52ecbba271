"""The four distances on the interior of a convex polygon.

For interior points p, q with chord endpoints rear (behind p) and front
(beyond q):

    forward Funk    F(p, q) = ln(|p - front| / |q - front|)
    reverse Funk   rF(p, q) = F(q, p)
    Hilbert         H(p, q) = (F(p, q) + F(q, p)) / 2   (half the log cross-ratio)
    Thompson        T(p, q) = max(F(p, q), F(q, p))

All four vanish at p = q; coincidence is decided by an EPS_GEOM-relative
Euclidean threshold because the formulas are singular there.
"""

from __future__ import annotations

import enum
import math

from .errors import NotInterior, Unreachable
from .geometry import (
    EPS_GEOM,
    ConvexPolygon,
    Point2,
    PointLocation,
    chord_frame,
    point_location,
    ray_boundary_intersection,
)

EPS_DIST = 1e-7


class MetricKind(enum.Enum):
    FUNK = "funk"
    REVERSE_FUNK = "reverse_funk"
    HILBERT = "hilbert"
    THOMPSON = "thompson"

    @property
    def is_symmetric(self) -> bool:
        return self in (MetricKind.HILBERT, MetricKind.THOMPSON)

    @property
    def reversed_kind(self) -> "MetricKind":
        if self is MetricKind.FUNK:
            return MetricKind.REVERSE_FUNK
        if self is MetricKind.REVERSE_FUNK:
            return MetricKind.FUNK
        return self


def _require_interior(omega: ConvexPolygon, p: Point2) -> Point2:
    p = Point2(float(p[0]), float(p[1]))
    if point_location(omega, p) is not PointLocation.INTERIOR:
        raise NotInterior(f"point {tuple(p)} is not interior")
    return p


def _coincident(omega: ConvexPolygon, p: Point2, q: Point2) -> bool:
    return math.hypot(p[0] - q[0], p[1] - q[1]) <= EPS_GEOM * omega.diameter


def funk_distance(omega: ConvexPolygon, p: Point2, q: Point2) -> float:
    p = _require_interior(omega, p)
    q = _require_interior(omega, q)
    if _coincident(omega, p, q):
        return 0.0
    front = ray_boundary_intersection(omega, p, (q.x - p.x, q.y - p.y)).point
    return math.log(
        math.hypot(p.x - front.x, p.y - front.y)
        / math.hypot(q.x - front.x, q.y - front.y)
    )


def reverse_funk_distance(omega: ConvexPolygon, p: Point2, q: Point2) -> float:
    return funk_distance(omega, q, p)


def hilbert_distance(omega: ConvexPolygon, p: Point2, q: Point2) -> float:
    p = _require_interior(omega, p)
    q = _require_interior(omega, q)
    if _coincident(omega, p, q):
        return 0.0
    frame = chord_frame(omega, p, q)
    return 0.5 * math.log(
        (frame.d_q_rear / frame.d_p_rear) * (frame.d_p_front / frame.d_q_front)
    )


def thompson_distance(omega: ConvexPolygon, p: Point2, q: Point2) -> float:
    p = _require_interior(omega, p)
    q = _require_interior(omega, q)
    if _coincident(omega, p, q):
        return 0.0
    frame = chord_frame(omega, p, q)
    return max(
        math.log(frame.d_p_front / frame.d_q_front),
        math.log(frame.d_q_rear / frame.d_p_rear),
    )


_DISPATCH = {
    MetricKind.FUNK: funk_distance,
    MetricKind.REVERSE_FUNK: reverse_funk_distance,
    MetricKind.HILBERT: hilbert_distance,
    MetricKind.THOMPSON: thompson_distance,
}


def distance(omega: ConvexPolygon, kind: MetricKind, p: Point2, q: Point2) -> float:
    return _DISPATCH[kind](omega, p, q)


def offset_at_distance(kind: MetricKind, d_fwd: float, d_back: float, r: float) -> float:
    """Euclidean offset u with distance(kind, p, p + u*unit) == r.

    d_fwd / d_back are the boundary distances from p along +unit / -unit.
    Closed forms per metric; raises Unreachable when the reverse-Funk sphere
    leaves the domain in this direction (u would reach the boundary).
    """
    if r < 0.0 or not math.isfinite(r):
        raise ValueError(f"radius must be finite and >= 0, got {r}")
    if r == 0.0:
        return 0.0
    if kind is MetricKind.FUNK:
        return d_fwd * (1.0 - math.exp(-r))
    if kind is MetricKind.REVERSE_FUNK:
        u = d_back * (math.exp(r) - 1.0)
        if u >= d_fwd:
            raise Unreachable(
                f"no interior point at reverse-Funk distance {r} in this direction"
            )
        return u
    if kind is MetricKind.HILBERT:
        k = math.exp(2.0 * r)
        return (k - 1.0) * d_back * d_fwd / (d_fwd + k * d_back)
    # Thompson: max(F, rF) == r at the smaller of the two single-metric offsets.
    u_funk = d_fwd * (1.0 - math.exp(-r))
    u_rev = d_back * (math.exp(r) - 1.0)
    return min(u_funk, u_rev)


def point_at_distance(
    omega: ConvexPolygon,
    kind: MetricKind,
    p: Point2,
    direction: Point2 | tuple[float, float],
    r: float,
) -> Point2:
    """The unique point q on the ray p + t*direction with distance(p, q) = r."""
    p = _require_interior(omega, p)
    dx, dy = float(direction[0]), float(direction[1])
    norm = math.hypot(dx, dy)
    if norm == 0.0:
        raise ValueError("zero direction")
    if r == 0.0:
        return p
    ux, uy = dx / norm, dy / norm
    d_fwd = ray_boundary_intersection(omega, p, (ux, uy)).distance
    d_back = ray_boundary_intersection(omega, p, (-ux, -uy)).distance
    u = offset_at_distance(kind, d_fwd, d_back, r)
    return Point2(p.x + u * ux, p.y + u * uy)
