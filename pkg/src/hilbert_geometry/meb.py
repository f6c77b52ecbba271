"""Minimum enclosing balls over the four polygon metrics.

Two solvers share one objective:

* ``lp_type_solve`` (Hilbert only): randomized incremental solver of
  combinatorial dimension 3, built from the violation-test and
  basis-computation primitives.
* ``min_ball_bisection`` (all four metrics): radius bisection against the
  feasible-center region, used as the reference oracle for the LP-type path.

The objective value is the pair (radius, center) under lexicographic order
(radius, then center.x, then center.y), which makes the optimum unique even
when many centers realize the minimum radius.

Direction convention: a center c is feasible at radius r when
d(c, x) <= r for every instance point x.  For the weak metrics that set is
the *reversed* ball around x (Funk <-> reverse Funk), because realized balls
measure distance away from their own center.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .balls import (
    MetricBall,
    ball,
    funk_ball_points,
    half_spokes,
    hilbert_ball_points,
    reverse_funk_ball_points,
)
from .errors import (
    CoincidentPoints,
    EmptyInstance,
    NoFeasibleBasis,
    NotInterior,
)
from .geometry import (
    EPS_GEOM,
    ClipResult,
    ConvexPolygon,
    Point2,
    PointLocation,
    classify_region,
    clip_by_polygon,
    lexicographic_min,
    point_location,
)
from .metrics import EPS_DIST, MetricKind, distance, hilbert_distance

EPS_RADIUS = 1e-10
MAX_BISECTION_ITERATIONS = 200

# Clipping band for solver-internal intersections.  Much tighter than
# EPS_GEOM: a wide band admits centers measurably outside a ball, and the
# distance gradient can amplify that past the support tolerance.  Tangency
# robustness comes from the radius escalation ladder instead.
SOLVER_CLIP_EPS = 1e-12


class ObjectiveValue(NamedTuple):
    """(radius, center) compared lexicographically: radius, then x, then y."""

    radius: float
    center: Point2


@dataclass(frozen=True)
class Basis:
    """Support points (as instance indices) plus their objective value."""

    indices: tuple[int, ...]
    value: ObjectiveValue


@dataclass
class SolveStats:
    violation_tests: int = 0
    basis_computations: int = 0
    bisection_iterations: int = 0


@dataclass(frozen=True, eq=False)
class MebInstance:
    """An immutable solver input; build via :func:`make_instance`."""

    omega: ConvexPolygon
    points: tuple[Point2, ...]
    kind: MetricKind
    seed: int = 0
    eps_geom: float = EPS_GEOM
    eps_dist: float = EPS_DIST
    eps_radius: float = EPS_RADIUS
    _cache: dict = field(default_factory=dict, repr=False)


@dataclass(frozen=True)
class MebResult:
    value: ObjectiveValue
    basis: Basis | None  # LP-type path only
    ball: MetricBall
    stats: SolveStats


def make_instance(
    omega: ConvexPolygon,
    points: Iterable[Point2 | tuple[float, float]],
    kind: MetricKind,
    seed: int = 0,
    eps_radius: float = EPS_RADIUS,
) -> MebInstance:
    """Validate and deduplicate points, then freeze the instance."""
    tol = EPS_GEOM * omega.diameter
    grid: dict[tuple[int, int], list[Point2]] = {}
    kept: list[Point2] = []
    for raw in points:
        p = Point2(float(raw[0]), float(raw[1]))
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise ValueError(f"non-finite point: {tuple(p)}")
        if point_location(omega, p) is not PointLocation.INTERIOR:
            raise NotInterior(f"point {tuple(p)} is not interior")
        cx, cy = int(p.x // tol), int(p.y // tol)
        duplicate = False
        for nx in (cx - 1, cx, cx + 1):
            for ny in (cy - 1, cy, cy + 1):
                for q in grid.get((nx, ny), ()):
                    if math.hypot(p.x - q.x, p.y - q.y) <= tol:
                        duplicate = True
                        break
        if duplicate:
            continue
        grid.setdefault((cx, cy), []).append(p)
        kept.append(p)
    if not kept:
        raise EmptyInstance("instance needs at least one interior point")
    return MebInstance(omega, tuple(kept), kind, seed, EPS_GEOM, EPS_DIST, eps_radius)


# ---------------------------------------------------------------------------
# Feasible center regions
# ---------------------------------------------------------------------------

def _cached_half_spokes(instance: MebInstance, p: Point2):
    key = ("spokes", p)
    frames = instance._cache.get(key)
    if frames is None:
        frames = half_spokes(instance.omega, p)
        instance._cache[key] = frames
    return frames


def _center_constraints(
    instance: MebInstance, x: Point2, r: float
) -> list[list[Point2]]:
    """CCW polygons whose intersection is {c : d(c, x) <= r}."""
    rev = instance.kind.reversed_kind
    if rev is MetricKind.HILBERT:
        return [hilbert_ball_points(_cached_half_spokes(instance, x), x, r)]
    if rev is MetricKind.FUNK:
        return [funk_ball_points(instance.omega, x, r)]
    if rev is MetricKind.REVERSE_FUNK:
        # Unclipped homothet: the running region already sits inside omega.
        return [reverse_funk_ball_points(instance.omega, x, r)]
    return [
        funk_ball_points(instance.omega, x, r),
        reverse_funk_ball_points(instance.omega, x, r),
    ]


def _feasible_chain(
    instance: MebInstance, pts: Sequence[Point2], r: float
) -> list[Point2]:
    omega = instance.omega
    scale = omega.scale
    tol = SOLVER_CLIP_EPS * scale * scale
    region = list(omega.vertices)
    for x in pts:
        for poly in _center_constraints(instance, x, r):
            region = clip_by_polygon(region, poly, tol)
            if not region:
                return region
    return region


def feasible_center_set(instance: MebInstance, r: float) -> ClipResult:
    """All centers whose radius-r ball encloses every instance point."""
    if r < 0.0 or not math.isfinite(r):
        raise ValueError(f"radius must be finite and >= 0, got {r}")
    pts = instance.points
    if r == 0.0:
        if len(pts) == 1:
            return ClipResult.of_point(pts[0])
        return ClipResult.empty()  # points are deduplicated, so n >= 2 distinct
    chain = _feasible_chain(instance, pts, r)
    return classify_region(chain, instance.omega.scale)


# ---------------------------------------------------------------------------
# Bisection solver (reference oracle, valid for all four metrics)
# ---------------------------------------------------------------------------

def _bisection_lower_bound(instance: MebInstance, pts: Sequence[Point2]) -> float:
    if instance.kind is not MetricKind.HILBERT:
        return 0.0
    omega = instance.omega
    if len(pts) > 256:
        # Pairwise scan is quadratic; fall back to the anchored bound, which
        # is still a valid lower bound for a symmetric metric.
        return max(hilbert_distance(omega, pts[0], q) for q in pts[1:]) / 2.0
    best = 0.0
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            d = hilbert_distance(omega, p, q)
            if d > best:
                best = d
    return best / 2.0


def _solve_bisection(
    instance: MebInstance,
    pts: Sequence[Point2],
    stats: SolveStats,
    r_lo: float | None = None,
) -> ObjectiveValue:
    if len(pts) == 1:
        return ObjectiveValue(0.0, pts[0])
    omega, kind = instance.omega, instance.kind
    x0 = pts[0]
    r_hi = max(distance(omega, kind, x0, x) for x in pts[1:]) + 1.0
    if r_lo is None:
        r_lo = _bisection_lower_bound(instance, pts)
    iters = 0
    while r_hi - r_lo > instance.eps_radius and iters < MAX_BISECTION_ITERATIONS:
        mid = 0.5 * (r_lo + r_hi)
        iters += 1
        if _feasible_chain(instance, pts, mid):
            r_hi = mid
        else:
            r_lo = mid
    stats.bisection_iterations += iters
    chain = _feasible_chain(instance, pts, r_hi)
    if not chain:
        raise NoFeasibleBasis("bisection terminated on an empty center region")
    center = lexicographic_min(classify_region(chain, omega.scale))
    return ObjectiveValue(r_hi, center)


def min_ball_bisection(instance: MebInstance) -> MebResult:
    stats = SolveStats()
    value = _solve_bisection(instance, instance.points, stats)
    realized = ball(instance.omega, instance.kind, value.center, value.radius)
    return MebResult(value, None, realized, stats)


# ---------------------------------------------------------------------------
# Hilbert LP-type primitives
# ---------------------------------------------------------------------------

def _require_hilbert(instance: MebInstance, op: str) -> None:
    if instance.kind is not MetricKind.HILBERT:
        raise ValueError(f"{op} is only defined for the Hilbert metric")


def two_point_center(instance: MebInstance, p: Point2, q: Point2) -> ObjectiveValue:
    """Minimum Hilbert ball of two points.

    The optimal radius is half the distance (chords are geodesics); the
    optimal center set is the intersection of the two radius-r* balls, from
    which the lexicographically smallest point is reported.
    """
    _require_hilbert(instance, "two_point_center")
    omega = instance.omega
    p = Point2(float(p[0]), float(p[1]))
    q = Point2(float(q[0]), float(q[1]))
    if math.hypot(p.x - q.x, p.y - q.y) <= EPS_GEOM * omega.diameter:
        raise CoincidentPoints("two_point_center needs distinct points")
    r_star = hilbert_distance(omega, p, q) / 2.0
    if r_star <= instance.eps_dist:
        # Balls this small are below distance tolerance; any point between
        # the pair supports both within eps_dist.
        return ObjectiveValue(r_star, Point2(0.5 * (p.x + q.x), 0.5 * (p.y + q.y)))
    frames_p = _cached_half_spokes(instance, p)
    frames_q = _cached_half_spokes(instance, q)
    scale = omega.scale
    tol = SOLVER_CLIP_EPS * scale * scale
    chain: list[Point2] = []
    # The two closed balls touch along a segment at r = d/2; if arithmetic
    # jitter separates them, inflate by at most 1e-10 relative (well inside
    # the support tolerance) until the intersection reappears.
    for bump in (1.0, 1.0 + 1e-12, 1.0 + 1e-10):
        r_eval = r_star * bump
        chain = clip_by_polygon(
            hilbert_ball_points(frames_p, p, r_eval),
            hilbert_ball_points(frames_q, q, r_eval),
            tol,
        )
        if chain:
            break
    if not chain:
        raise NoFeasibleBasis("two-point balls failed to intersect at r = d/2")
    center = lexicographic_min(classify_region(chain, scale))
    return ObjectiveValue(r_star, center)


def _contains_value(
    instance: MebInstance, value: ObjectiveValue, x: Point2
) -> bool:
    return (
        distance(instance.omega, instance.kind, value.center, x)
        <= value.radius + instance.eps_dist
    )


def _three_point_core(
    instance: MebInstance,
    pts: Sequence[Point2],
    pair_values: Sequence[tuple[ObjectiveValue, tuple[int, int]]],
    stats: SolveStats | None,
) -> tuple[ObjectiveValue, tuple[int, ...]]:
    """Optimum of three distinct points, with its minimal (local) support.

    The radius can never undercut the largest pairwise optimum R.  Three
    cases, checked in order:

    1. the largest pair's own ball already covers the third point: the pair
       value stands unchanged (support = that pair);
    2. some other center at radius exactly R covers all three: the radius
       ties the pair's bitwise, only the center moves (support = all three).
       Evaluating this exactly instead of by bisection keeps the objective
       monotone under exact comparison;
    3. otherwise all three points support a strictly larger ball, found by
       bisection bracketed below by R.
    """
    r_max = max(v.radius for v, _ in pair_values)
    best: tuple[ObjectiveValue, tuple[int, ...]] | None = None
    for v, (i, j) in pair_values:
        if v.radius == r_max:
            third = pts[3 - i - j]
            if _contains_value(instance, v, third) and (best is None or v < best[0]):
                best = (v, (i, j))
    if best is not None:
        return best
    scale = instance.omega.scale
    for bump in (1.0, 1.0 + 1e-12, 1.0 + 1e-10):
        chain = _feasible_chain(instance, pts, r_max * bump)
        if chain:
            center = lexicographic_min(classify_region(chain, scale))
            return (ObjectiveValue(r_max, center), (0, 1, 2))
    local = stats if stats is not None else SolveStats()
    return (_solve_bisection(instance, pts, local, r_lo=r_max), (0, 1, 2))


def three_point_value(
    instance: MebInstance, a: Point2, b: Point2, c: Point2
) -> ObjectiveValue:
    """Minimum Hilbert ball of three points (see _three_point_core)."""
    _require_hilbert(instance, "three_point_value")
    omega = instance.omega
    tol = EPS_GEOM * omega.diameter
    pts: list[Point2] = []
    for raw in (a, b, c):
        p = Point2(float(raw[0]), float(raw[1]))
        if not any(math.hypot(p.x - q.x, p.y - q.y) <= tol for q in pts):
            pts.append(p)
    if len(pts) == 1:
        raise CoincidentPoints("three_point_value needs at least two distinct points")
    if len(pts) == 2:
        return two_point_center(instance, pts[0], pts[1])
    pair_values = [
        (two_point_center(instance, pts[i], pts[j]), (i, j))
        for i, j in ((0, 1), (0, 2), (1, 2))
    ]
    value, _ = _three_point_core(instance, pts, pair_values, None)
    return value


def _subset_value(
    instance: MebInstance, idxs: tuple[int, ...], stats: SolveStats | None
) -> tuple[ObjectiveValue, tuple[int, ...]]:
    """Exact objective of a subset of size <= 3, with its minimal support.

    Memoized per instance: the exhaustive property suite and the LP-type
    solver both revisit the same pairs and triples many times.
    """
    key = ("value", idxs)
    hit = instance._cache.get(key)
    if hit is not None:
        return hit
    pts = instance.points
    if len(idxs) == 1:
        out = (ObjectiveValue(0.0, pts[idxs[0]]), idxs)
    elif len(idxs) == 2:
        out = (two_point_center(instance, pts[idxs[0]], pts[idxs[1]]), idxs)
    else:
        triple = tuple(pts[i] for i in idxs)
        pair_values = [
            (_subset_value(instance, (idxs[i], idxs[j]), stats)[0], (i, j))
            for i, j in ((0, 1), (0, 2), (1, 2))
        ]
        value, local_support = _three_point_core(instance, triple, pair_values, stats)
        out = (value, tuple(idxs[i] for i in local_support))
    instance._cache[key] = out
    return out


def violation_test(
    instance: MebInstance,
    basis: Basis,
    x: int,
    stats: SolveStats | None = None,
) -> bool:
    """True when adding point x must grow the objective of the basis."""
    if stats is not None:
        stats.violation_tests += 1
    return not _contains_value(instance, basis.value, instance.points[x])


def basis_computation(
    instance: MebInstance,
    basis: Basis,
    x: int,
    stats: SolveStats | None = None,
) -> Basis:
    """Minimal basis of basis + {x}, by exhausting supports that include x."""
    if stats is not None:
        stats.basis_computations += 1
    old = [i for i in basis.indices if i != x]
    group = old + [x]
    candidates: list[tuple[int, ...]] = [(x,)]
    candidates += [tuple(sorted((i, x))) for i in old]
    candidates += [tuple(sorted((i, j, x))) for i, j in combinations(old, 2)]
    best: tuple[ObjectiveValue, tuple[int, ...]] | None = None
    pts = instance.points
    for cand in candidates:
        value, support = _subset_value(instance, cand, stats)
        if not all(_contains_value(instance, value, pts[i]) for i in group):
            continue
        if best is None or value < best[0]:
            best = (value, support)
    if best is None:
        raise NoFeasibleBasis(f"no candidate basis covers points {group}")
    return Basis(tuple(sorted(best[1])), best[0])


def lp_type_solve(instance: MebInstance) -> MebResult:
    """Randomized incremental LP-type solver (move-to-front variant).

    Points are scanned in a seed-shuffled order; a violating point is moved
    to the front and the scan restarts, so every accepted prefix is certified
    against the current basis.  Each basis change strictly increases the
    objective, which bounds the number of restarts.
    """
    _require_hilbert(instance, "lp_type_solve")
    pts = instance.points
    n = len(pts)
    stats = SolveStats()
    order = list(range(n))
    random.Random(instance.seed).shuffle(order)
    first = order[0]
    basis = Basis((first,), ObjectiveValue(0.0, pts[first]))
    changes = 0
    i = 1
    while i < n:
        x = order[i]
        if x in basis.indices:
            i += 1
            continue
        if violation_test(instance, basis, x, stats):
            changes += 1
            if changes > 64 * (n + 4):
                raise NoFeasibleBasis("basis failed to stabilize (tolerance cycle)")
            basis = basis_computation(instance, basis, x, stats)
            order.pop(i)
            order.insert(0, x)
            i = 0
        else:
            i += 1
    realized = ball(instance.omega, instance.kind, basis.value.center, basis.value.radius)
    return MebResult(basis.value, basis, realized, stats)


def objective_f(instance: MebInstance, subset: Sequence[int]) -> ObjectiveValue:
    """Exact LP-type objective on a small subset (exhaustive over supports)."""
    _require_hilbert(instance, "objective_f")
    idxs = tuple(sorted(set(subset)))
    if not idxs:
        raise EmptyInstance("objective_f of empty subset")
    n = len(instance.points)
    if any(i < 0 or i >= n for i in idxs):
        raise IndexError(f"subset indices out of range: {idxs}")
    best: ObjectiveValue | None = None
    for size in range(1, min(3, len(idxs)) + 1):
        for cand in combinations(idxs, size):
            value, _ = _subset_value(instance, cand, None)
            covered = _covered_mask(instance, cand, value)
            if all(covered[i] for i in idxs):
                if best is None or value < best:
                    best = value
    if best is None:
        raise NoFeasibleBasis(f"no support of size <= 3 covers subset {idxs}")
    return best


def _covered_mask(
    instance: MebInstance, cand: tuple[int, ...], value: ObjectiveValue
) -> tuple[bool, ...]:
    key = ("covers", cand)
    mask = instance._cache.get(key)
    if mask is None:
        mask = tuple(
            _contains_value(instance, value, p) for p in instance.points
        )
        instance._cache[key] = mask
    return mask
