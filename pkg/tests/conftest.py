import random

import pytest

from hilbert_geometry import (
    MetricBall,
    Point2,
    PointLocation,
    normalize_polygon,
    point_location,
)

UNIT_SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


@pytest.fixture
def unit_square():
    return normalize_polygon(UNIT_SQUARE)


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


def boundary_samples(ball: MetricBall, per_edge: int = 16) -> list[Point2]:
    """Midpoint samples along every shape edge, excluding the domain boundary."""
    assert ball.shape is not None
    out = []
    for a, b in ball.shape.edges():
        for i in range(per_edge):
            t = (i + 0.5) / per_edge
            pt = Point2(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))
            if point_location(ball.domain, pt) is PointLocation.INTERIOR:
                out.append(pt)
    return out
