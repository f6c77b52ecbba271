import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_geometry import (
    MetricKind,
    NotInterior,
    Point2,
    Unreachable,
    distance,
    funk_distance,
    hilbert_distance,
    normalize_polygon,
    point_at_distance,
    ray_boundary_intersection,
    reverse_funk_distance,
    thompson_distance,
)
from hilbert_geometry.metrics import EPS_DIST
from hilbert_geometry.sampling import random_convex_polygon, random_interior_point

from conftest import seeded

ALL_KINDS = list(MetricKind)
P = Point2
CENTER = P(0.5, 0.5)
RIGHT = P(0.75, 0.5)
SQUARE = normalize_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])

interior_coord = st.floats(0.05, 0.95)
interior_point = st.builds(P, interior_coord, interior_coord)


class TestFixtures:
    """Hand-computed values on the unit square (chord [0,1] x {0.5})."""

    def test_funk(self, unit_square):
        assert funk_distance(unit_square, CENTER, RIGHT) == pytest.approx(
            math.log(2), abs=1e-15
        )

    def test_funk_reversed_arguments(self, unit_square):
        assert funk_distance(unit_square, RIGHT, CENTER) == pytest.approx(
            math.log(1.5), abs=1e-15
        )

    def test_reverse_funk(self, unit_square):
        assert reverse_funk_distance(unit_square, CENTER, RIGHT) == pytest.approx(
            math.log(1.5), abs=1e-15
        )

    def test_hilbert(self, unit_square):
        assert hilbert_distance(unit_square, CENTER, RIGHT) == pytest.approx(
            0.5 * math.log(3), abs=1e-15
        )

    def test_hilbert_symmetric_pair(self, unit_square):
        assert hilbert_distance(unit_square, P(0.25, 0.5), P(0.75, 0.5)) == pytest.approx(
            math.log(3), abs=1e-15
        )

    def test_thompson(self, unit_square):
        assert thompson_distance(unit_square, CENTER, RIGHT) == pytest.approx(
            math.log(2), abs=1e-15
        )

    def test_thompson_symmetric_pair(self, unit_square):
        assert thompson_distance(unit_square, P(0.25, 0.5), P(0.75, 0.5)) == pytest.approx(
            math.log(3), abs=1e-15
        )

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_identity(self, unit_square, kind):
        assert distance(unit_square, kind, CENTER, CENTER) == 0.0

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_exterior_rejected(self, unit_square, kind):
        with pytest.raises(NotInterior):
            distance(unit_square, kind, CENTER, P(2, 2))


class TestCompositionIdentities:
    @given(p=interior_point, q=interior_point)
    @settings(max_examples=60, deadline=None)
    def test_on_unit_square(self, p, q):
        f = funk_distance(SQUARE, p, q)
        rf = reverse_funk_distance(SQUARE, p, q)
        h = hilbert_distance(SQUARE, p, q)
        t = thompson_distance(SQUARE, p, q)
        assert rf == funk_distance(SQUARE, q, p)
        assert h == pytest.approx((f + rf) / 2, abs=EPS_DIST)
        assert t == pytest.approx(max(f, rf), abs=EPS_DIST)

    @pytest.mark.parametrize("seed", range(15))
    def test_on_random_polygons(self, seed):
        rng = seeded(5000 + seed)
        omega = random_convex_polygon(3 + seed % 9, rng)
        p = random_interior_point(omega, rng)
        q = random_interior_point(omega, rng)
        f = funk_distance(omega, p, q)
        rf = reverse_funk_distance(omega, p, q)
        assert hilbert_distance(omega, p, q) == pytest.approx((f + rf) / 2, abs=EPS_DIST)
        assert thompson_distance(omega, p, q) == pytest.approx(max(f, rf), abs=EPS_DIST)

    @pytest.mark.parametrize("seed", range(10))
    def test_symmetry_of_symmetric_kinds(self, seed):
        rng = seeded(6000 + seed)
        omega = random_convex_polygon(3 + seed % 7, rng)
        p = random_interior_point(omega, rng)
        q = random_interior_point(omega, rng)
        for kind in (MetricKind.HILBERT, MetricKind.THOMPSON):
            assert kind.is_symmetric
            assert distance(omega, kind, p, q) == pytest.approx(
                distance(omega, kind, q, p), abs=EPS_DIST
            )
        assert not MetricKind.FUNK.is_symmetric
        assert not MetricKind.REVERSE_FUNK.is_symmetric


class TestTriangleInequality:
    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("seed", range(12))
    def test_sampled(self, kind, seed):
        rng = seeded(7000 + seed)
        omega = random_convex_polygon(3 + seed % 8, rng)
        a = random_interior_point(omega, rng)
        b = random_interior_point(omega, rng)
        c = random_interior_point(omega, rng)
        dac = distance(omega, kind, a, c)
        dab = distance(omega, kind, a, b)
        dbc = distance(omega, kind, b, c)
        assert dac <= dab + dbc + EPS_DIST


class TestPointAtDistance:
    def test_hilbert_round_trips_fixture(self, unit_square):
        q = point_at_distance(
            unit_square, MetricKind.HILBERT, CENTER, (1, 0), 0.5 * math.log(3)
        )
        assert q == pytest.approx((0.75, 0.5), abs=1e-12)

    def test_funk_closed_form(self, unit_square):
        q = point_at_distance(unit_square, MetricKind.FUNK, CENTER, (1, 0), math.log(2))
        assert q == pytest.approx((0.75, 0.5), abs=1e-12)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_zero_radius(self, unit_square, kind):
        assert point_at_distance(unit_square, kind, CENTER, (1, 1), 0.0) == CENTER

    def test_reverse_funk_unreachable(self, unit_square):
        # u = 0.5 (e^r - 1) reaches the boundary at r = ln 2.
        with pytest.raises(Unreachable):
            point_at_distance(unit_square, MetricKind.REVERSE_FUNK, CENTER, (1, 0), 1.0)
        q = point_at_distance(
            unit_square, MetricKind.REVERSE_FUNK, CENTER, (1, 0), 0.5
        )
        assert q.x == pytest.approx(0.5 + 0.5 * (math.exp(0.5) - 1))

    def test_thompson_takes_smaller_offset(self, unit_square):
        # Thompson = max of the two metrics, so its sphere is the nearer one.
        r = 0.3
        u_funk = point_at_distance(unit_square, MetricKind.FUNK, CENTER, (1, 0), r).x
        u_rev = point_at_distance(
            unit_square, MetricKind.REVERSE_FUNK, CENTER, (1, 0), r
        ).x
        u_thm = point_at_distance(unit_square, MetricKind.THOMPSON, CENTER, (1, 0), r).x
        assert u_thm == pytest.approx(min(u_funk, u_rev), abs=1e-15)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    @pytest.mark.parametrize("seed", range(12))
    def test_round_trip(self, kind, seed):
        rng = seeded(8000 + seed)
        omega = random_convex_polygon(3 + seed % 9, rng)
        p = random_interior_point(omega, rng)
        angle = rng.uniform(0, 2 * math.pi)
        d = (math.cos(angle), math.sin(angle))
        r = rng.uniform(0.05, 1.5)
        try:
            q = point_at_distance(omega, kind, p, d, r)
        except Unreachable:
            assert kind is MetricKind.REVERSE_FUNK
            return
        assert distance(omega, kind, p, q) == pytest.approx(r, abs=EPS_DIST)

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_monotone_along_ray(self, unit_square, kind):
        radii = [0.05, 0.1, 0.2, 0.4, 0.6]
        offsets = []
        for r in radii:
            q = point_at_distance(unit_square, kind, P(0.4, 0.45), (2, 1), r)
            offsets.append(math.hypot(q.x - 0.4, q.y - 0.45))
        assert offsets == sorted(offsets)
        assert len(set(offsets)) == len(offsets)

    @pytest.mark.parametrize(
        "kind", [MetricKind.FUNK, MetricKind.HILBERT, MetricKind.THOMPSON]
    )
    @pytest.mark.parametrize("direction", [(1, 0), (0, 1), (-1, 0), (2, 1)])
    def test_divergence_near_boundary(self, unit_square, kind, direction):
        # Directions hitting edge interiors: a corner hit would put the
        # offset point inside the boundary rejection band.
        hit = ray_boundary_intersection(unit_square, CENTER, direction)
        norm = math.hypot(*direction)
        u = hit.distance - 1e-9 * unit_square.diameter
        q = P(
            CENTER.x + u * direction[0] / norm,
            CENTER.y + u * direction[1] / norm,
        )
        assert distance(unit_square, kind, CENTER, q) > 10.0


class TestProjectiveInvariance:
    @pytest.mark.parametrize("seed", range(10))
    def test_hilbert_invariant(self, seed):
        rng = seeded(9000 + seed)
        omega = random_convex_polygon(3 + seed % 9, rng)
        p = random_interior_point(omega, rng)
        q = random_interior_point(omega, rng)
        if math.hypot(p.x - q.x, p.y - q.y) < 1e-6:
            pytest.skip("degenerate draw")
        h = hilbert_distance(omega, p, q)
        mat = _random_projective_map(omega, rng)
        image = normalize_polygon([_apply(mat, v) for v in omega.vertices])
        h_image = hilbert_distance(image, _apply(mat, p), _apply(mat, q))
        assert abs(h - h_image) <= 1e-9 * (1 + h)


def _random_projective_map(omega, rng):
    """A projective map with positive denominator over omega (bounded image)."""
    while True:
        a, b, c = rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3), rng.uniform(-1, 1)
        d, e, f = rng.uniform(-0.3, 0.3), rng.uniform(0.5, 2.0), rng.uniform(-1, 1)
        g, h = rng.uniform(-0.15, 0.15), rng.uniform(-0.15, 0.15)
        mat = ((a, b, c), (d, e, f), (g, h, 1.0))
        if abs(a * e - b * d) < 0.1:
            continue
        if all(g * v.x + h * v.y + 1.0 > 0.2 for v in omega.vertices):
            return mat


def _apply(mat, p):
    (a, b, c), (d, e, f), (g, h, i) = mat
    w = g * p.x + h * p.y + i
    return Point2((a * p.x + b * p.y + c) / w, (d * p.x + e * p.y + f) / w)
