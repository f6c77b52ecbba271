"""Deterministic random instances for tests and benchmarks."""

from __future__ import annotations

import math
import random

from .geometry import ConvexPolygon, Point2, normalize_polygon
from .meb import MebInstance, make_instance
from .metrics import MetricKind


def random_convex_polygon(m: int, rng: random.Random) -> ConvexPolygon:
    """A strictly convex m-gon: points on a randomly stretched ellipse.

    Angular gaps are bounded away from zero so no vertex pair or triple
    falls inside the merge tolerance.
    """
    if m < 3:
        raise ValueError("polygon needs at least 3 vertices")
    gaps = [0.2 + rng.random() for _ in range(m)]
    total = sum(gaps)
    angles = []
    acc = rng.uniform(0.0, 2.0 * math.pi)
    for g in gaps:
        angles.append(acc)
        acc += 2.0 * math.pi * g / total
    a = rng.uniform(0.6, 1.6)
    b = rng.uniform(0.6, 1.6)
    theta = rng.uniform(0.0, math.pi)
    cx, cy = rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    pts = []
    for ang in angles:
        ex, ey = a * math.cos(ang), b * math.sin(ang)
        pts.append(Point2(cx + ex * cos_t - ey * sin_t, cy + ex * sin_t + ey * cos_t))
    return normalize_polygon(pts)


def random_interior_point(omega: ConvexPolygon, rng: random.Random) -> Point2:
    """Strictly interior point: positive convex combination of the vertices."""
    weights = [-math.log(1.0 - rng.random()) for _ in omega.vertices]
    total = sum(weights)
    x = sum(w * v.x for w, v in zip(weights, omega.vertices)) / total
    y = sum(w * v.y for w, v in zip(weights, omega.vertices)) / total
    return Point2(x, y)


def random_instance(
    m: int, n: int, kind: MetricKind, seed: int
) -> MebInstance:
    rng = random.Random(seed)
    omega = random_convex_polygon(m, rng)
    points = [random_interior_point(omega, rng) for _ in range(n)]
    return make_instance(omega, points, kind, seed=seed)
