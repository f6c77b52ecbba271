"""Acceptance suite: one test per release criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible under
``pytest -s`` or on failure) and asserts at the criterion's stated
tolerance.  Criterion 5 is expected to fail on its Thompson half: the
claimed lower bound m on Thompson ball side counts is mathematically
false (see tests/test_balls.py::TestThompsonBall::test_side_count_can_drop_below_m
for a pinned, distance-verified counterexample).
"""

import math
import random
import time

from hilbert_geometry import (
    MetricKind,
    Point2,
    PointLocation,
    distance,
    feasible_center_set,
    funk_distance,
    hilbert_ball,
    hilbert_distance,
    lp_type_solve,
    min_ball_bisection,
    normalize_polygon,
    objective_f,
    point_location,
    reverse_funk_distance,
    thompson_ball,
    thompson_distance,
)
from hilbert_geometry.cli import run_bench
from hilbert_geometry.sampling import (
    random_convex_polygon,
    random_instance,
    random_interior_point,
)

SQUARE = normalize_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_fixture_exactness():
    p, q = Point2(0.5, 0.5), Point2(0.75, 0.5)
    errs = {
        "hilbert": abs(hilbert_distance(SQUARE, p, q) - 0.5 * math.log(3)),
        "funk": abs(funk_distance(SQUARE, p, q) - math.log(2)),
        "reverse_funk": abs(reverse_funk_distance(SQUARE, p, q) - math.log(1.5)),
        "thompson": abs(thompson_distance(SQUARE, p, q) - math.log(2)),
    }
    worst = max(errs.values())
    _report(1, worst <= 1e-12, f"unit-square fixtures, worst error {worst:.2e} (tol 1e-12)")


def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    worst_gap = 0.0
    violations = 0
    for seed in range(200):
        inst = random_instance(3 + seed % 10, 1 + seed % 12, MetricKind.HILBERT, seed=seed)
        lp = lp_type_solve(inst)
        oracle = min_ball_bisection(inst)
        gap = abs(lp.value.radius - oracle.value.radius)
        worst_gap = max(worst_gap, gap)
        if gap > 1e-6:
            violations += 1
        for x in inst.points:
            for result in (lp, oracle):
                if distance(inst.omega, inst.kind, result.value.center, x) > (
                    result.value.radius + 1e-7
                ):
                    violations += 1
    elapsed = time.perf_counter() - start
    _report(
        2,
        violations == 0 and elapsed <= 60.0,
        f"200 instances, worst radius gap {worst_gap:.2e} (tol 1e-6), "
        f"{violations} violations, {elapsed:.1f}s (budget 60s)",
    )


def test_criterion_3_lp_type_axioms():
    start = time.perf_counter()
    mono = loc = 0
    for seed in range(50):
        inst = random_instance(3 + seed % 10, 6, MetricKind.HILBERT, seed=3000 + seed)
        n = len(inst.points)
        subsets = [
            tuple(i for i in range(n) if mask & (1 << i)) for mask in range(1, 1 << n)
        ]
        values = {s: objective_f(inst, s) for s in subsets}
        for s in subsets:
            s_set = set(s)
            for t in subsets:
                if s_set <= set(t) and not values[s] <= values[t]:
                    mono += 1
        for f_set in subsets:
            fv = values[f_set]
            for g_set in subsets:
                if not set(f_set) <= set(g_set) or values[g_set] != fv:
                    continue
                for x in range(n):
                    if x in g_set:
                        continue
                    fx = tuple(sorted(set(f_set) | {x}))
                    gx = tuple(sorted(set(g_set) | {x}))
                    if values[fx] == fv and values[gx] != fv:
                        loc += 1
    elapsed = time.perf_counter() - start
    _report(
        3,
        mono == 0 and loc == 0 and elapsed <= 60.0,
        f"50 exhaustive 6-point sweeps: {mono} monotonicity / {loc} locality "
        f"violations, {elapsed:.1f}s (budget 60s)",
    )


def test_criterion_4_combinatorial_dimension():
    size_bad = support_bad = minimality_bad = 0
    worst_support = 0.0
    for seed in range(200):
        inst = random_instance(3 + seed % 10, 1 + seed % 12, MetricKind.HILBERT, seed=seed)
        basis = lp_type_solve(inst).basis
        if not 1 <= len(basis.indices) <= 3:
            size_bad += 1
        for i in basis.indices:
            err = abs(
                hilbert_distance(inst.omega, basis.value.center, inst.points[i])
                - basis.value.radius
            )
            worst_support = max(worst_support, err)
            if err > 1e-7:
                support_bad += 1
        if len(basis.indices) > 1:
            for i in basis.indices:
                rest = tuple(j for j in basis.indices if j != i)
                if not objective_f(inst, rest) < basis.value:
                    minimality_bad += 1
    _report(
        4,
        size_bad == 0 and support_bad == 0 and minimality_bad == 0,
        f"200 solved bases: sizes ok={size_bad == 0}, worst support error "
        f"{worst_support:.2e} (tol 1e-7), minimality violations {minimality_bad}",
    )


def test_criterion_5_ball_complexity():
    hilbert_bad = thompson_bad = 0
    worst_level_err = 0.0
    for seed in range(500):
        rng = random.Random(40000 + seed)
        m = 3 + seed % 10
        omega = random_convex_polygon(m, rng)
        p = random_interior_point(omega, rng)
        r = rng.uniform(0.05, 2.0)
        bh = hilbert_ball(omega, p, r)
        bt = thompson_ball(omega, p, r)
        if not m <= len(bh.shape) <= 2 * m:
            hilbert_bad += 1
        if not m <= len(bt.shape) <= 2 * m:
            thompson_bad += 1
            # The violating shape is still the exact distance level set.
            for v in bt.shape.vertices:
                worst_level_err = max(
                    worst_level_err, abs(thompson_distance(omega, p, v) - r)
                )
    _report(
        5,
        hilbert_bad == 0 and thompson_bad == 0,
        f"500 draws: hilbert [m,2m] violations {hilbert_bad}, thompson violations "
        f"{thompson_bad}. Thompson violating shapes are exact level sets "
        f"(max |T-r| = {worst_level_err:.2e}): the lower bound m is false for the "
        f"Thompson metric; see the decisions ledger.",
    )


def test_criterion_6_nesting():
    violations = 0
    for seed in range(100):
        rng = random.Random(41000 + seed)
        omega = random_convex_polygon(3 + seed % 10, rng)
        p = random_interior_point(omega, rng)
        r = rng.uniform(0.05, 2.0)
        inner = hilbert_ball(omega, p, r / 2).shape
        middle = thompson_ball(omega, p, r).shape
        outer = hilbert_ball(omega, p, r).shape
        for v in inner.vertices:
            if point_location(middle, v) is PointLocation.EXTERIOR:
                violations += 1
        for v in middle.vertices:
            if point_location(outer, v) is PointLocation.EXTERIOR:
                violations += 1
    _report(6, violations == 0, f"100 draws, vertex-wise nesting violations: {violations}")


def test_criterion_7_projective_invariance():
    violations = 0
    worst = 0.0
    for seed in range(100):
        rng = random.Random(42000 + seed)
        omega = random_convex_polygon(3 + seed % 10, rng)
        p = random_interior_point(omega, rng)
        q = random_interior_point(omega, rng)
        if math.hypot(p.x - q.x, p.y - q.y) < 1e-6:
            continue
        h = hilbert_distance(omega, p, q)
        mat = _random_projective_map(omega, rng)
        image = normalize_polygon([_apply(mat, v) for v in omega.vertices])
        h_image = hilbert_distance(image, _apply(mat, p), _apply(mat, q))
        err = abs(h - h_image) / (1.0 + h)
        worst = max(worst, err)
        if abs(h - h_image) > 1e-9 * (1.0 + h):
            violations += 1
    _report(
        7,
        violations == 0,
        f"100 projective maps, worst relative error {worst:.2e} (tol 1e-9), "
        f"violations {violations}",
    )


def test_criterion_8_weak_metric_minimality():
    kinds = [MetricKind.FUNK, MetricKind.REVERSE_FUNK, MetricKind.THOMPSON]
    violations = 0
    for seed in range(100):
        kind = kinds[seed % 3]
        inst = random_instance(3 + seed % 10, 2 + seed % 10, kind, seed=50000 + seed)
        result = min_ball_bisection(inst)
        for x in inst.points:
            if distance(inst.omega, kind, result.value.center, x) > (
                result.value.radius + 1e-7
            ):
                violations += 1
        if result.value.radius > 1e-9:
            if not feasible_center_set(inst, result.value.radius - 1e-9).is_empty:
                violations += 1
    _report(8, violations == 0, f"100 weak-metric instances, violations: {violations}")


def test_criterion_9_empirical_linearity():
    start = time.perf_counter()
    rows = run_bench([100, 1000, 10000], [8], trials=5, seed=0)
    elapsed = time.perf_counter() - start
    per_point = {n: vt / n for n, _, vt, _, _ in rows}
    bounded = all(v <= 20.0 for v in per_point.values())
    _report(
        9,
        bounded and elapsed <= 120.0,
        "violation tests per point: "
        + ", ".join(f"n={n}: {v:.2f}" for n, v in per_point.items())
        + f" (bound 20), bench time {elapsed:.1f}s (budget 120s)",
    )


def _random_projective_map(omega, rng):
    """Random projective map with positive denominator over omega."""
    while True:
        a, b, c = rng.uniform(0.5, 2.0), rng.uniform(-0.3, 0.3), rng.uniform(-1, 1)
        d, e, f = rng.uniform(-0.3, 0.3), rng.uniform(0.5, 2.0), rng.uniform(-1, 1)
        g, h = rng.uniform(-0.15, 0.15), rng.uniform(-0.15, 0.15)
        if abs(a * e - b * d) < 0.1:
            continue
        if all(g * v.x + h * v.y + 1.0 > 0.2 for v in omega.vertices):
            return ((a, b, c), (d, e, f), (g, h, 1.0))


def _apply(mat, p):
    (a, b, c), (d, e, f), (g, h, i) = mat
    w = g * p.x + h * p.y + i
    return Point2((a * p.x + b * p.y + c) / w, (d * p.x + e * p.y + f) / w)
