"""Seeded generators for the point sets and ideals the classifier is tested on.

Every generator measures what it built and compares it with the designed
h-vector; a mismatch (a degenerate random draw) triggers a redraw, and an
exhausted redraw budget raises :class:`GenericityError`. Plane curves are
realized as unions of general lines in the fixed plane x4 = ... = x_{r+1} = 0.
"""

import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from hilbert_growth.binomial_calculus import HVector, binomial
from hilbert_growth.errors import GenericityError, HilbertGrowthValueError
from hilbert_growth.exact_algebra import (
    Form,
    LinearSubspace,
    evaluate,
    integer_kernel,
    monomials,
)
from hilbert_growth.graded_ideals import (
    GradedSpan,
    MonomialIdeal,
    colon_span,
    span_from_generators,
    span_from_monomial_ideal,
)
from hilbert_growth.point_geometry import (
    PointSet,
    h_vector,
    hilbert_function_points,
    normalize_point,
)
from hilbert_growth.plane_finder import check_hypotheses
from hilbert_growth.utils import (
    DEFAULT_POINT_HEIGHT,
    DEFAULT_REDRAW_BUDGET,
    DEFAULT_WITH_PROGRESS,
    derive_seed,
    logger,
)

LINE_UNION_NOTE = "plane curve of degree d realized as a union of d general lines"

EXAMPLE_3_3_BASE = ((6, 0, 0), (5, 1, 0), (5, 0, 1), (4, 2, 0), (4, 1, 1), (4, 0, 2))
EXAMPLE_3_3_EXTRA = {
    1: ((3, 3, 0), (3, 2, 2)),
    2: ((2, 4, 0),),
    3: ((1, 5, 0),),
}
EXAMPLE_3_3_WINDOW = (0, 14)


class ConstructionRecipe(BaseModel):
    """What a generator was asked for, what it designed and what it measured."""

    name: str = Field(description="Name of the construction")
    parameters: Dict[str, int] = Field(description="Parameters, seed included")
    expected_h_vector: List[int] = Field(description="Designed h-vector")
    measured_h_vector: List[int] = Field(description="h-vector of the output")
    expected_base_locus: Optional[Dict[str, int]] = Field(
        None, description="Designed dimension and degree of the base locus"
    )
    plane: Optional[List[str]] = Field(None, description="Designed plane, when there is one")
    attempts: int = Field(1, description="Draws used")
    notes: List[str] = Field(default=[])


def designed_plane(r: int) -> LinearSubspace:
    """The plane x4 = ... = x_{r+1} = 0 of P^r carrying the planar constructions."""

    if r < 2:
        raise HilbertGrowthValueError(f"a plane needs r >= 2, got {r}")
    return LinearSubspace.coordinate(r, range(3, r + 1))


def line_configuration_hvector(counts: Sequence[int]) -> HVector:
    """h-vector of general points on general lines, counts non-increasing.

    The i-th line (1-based) contributes 1 in each degree i-1 .. counts[i]+i-2.
    """

    counts = list(counts)
    if any(a < 1 for a in counts) or counts != sorted(counts, reverse=True):
        raise HilbertGrowthValueError(f"counts must be positive and non-increasing: {counts}")
    top = max((a + i - 1 for i, a in enumerate(counts, start=1)), default=0)
    return HVector(
        values=[
            sum(1 for i, a in enumerate(counts, start=1) if i - 1 <= t <= a + i - 2)
            for t in range(top)
        ]
    ).trimmed()


def complete_intersection_hvector(a: int, b: int) -> HVector:
    """h-vector of a complete intersection of plane curves of degrees a and b."""

    if a < 1 or b < 1:
        raise HilbertGrowthValueError(f"degrees must be positive, got ({a}, {b})")
    return HVector(
        values=[
            sum(1 for i in range(a) if 0 <= t - i < b) for t in range(a + b - 1)
        ]
    )


def _embed(point: Sequence[int], r: int) -> Tuple[int, ...]:
    return tuple(point) + (0,) * (r - 2)


def _random_int(rng: random.Random, height: int, nonzero: bool = True) -> int:
    while True:
        value = rng.randint(-height, height)
        if value or not nonzero:
            return value


def _random_lines(count: int, rng: random.Random, height: int) -> List[Tuple[int, int, int]]:
    lines: List[Tuple[int, int, int]] = []
    while len(lines) < count:
        line = tuple(_random_int(rng, height) for _ in range(3))
        if all(normalize_point(line) != normalize_point(other) for other in lines):
            lines.append(line)
    return lines


def _on_line(line: Sequence[int], point: Sequence[int]) -> bool:
    return sum(a * x for a, x in zip(line, point)) == 0


def _points_on_line(
    line: Sequence[int],
    count: int,
    avoid: Sequence[Sequence[int]],
    taken: set,
    rng: random.Random,
    height: int,
) -> List[Tuple[int, int, int]]:
    p, q = integer_kernel([list(line)], 3)
    points = []
    while len(points) < count:
        s, t = _random_int(rng, height, False), _random_int(rng, height, False)
        point = tuple(s * a + t * b for a, b in zip(p, q))
        if not any(point):
            continue
        key = normalize_point(point)
        if key in taken or any(_on_line(other, point) for other in avoid):
            continue
        taken.add(key)
        points.append(point)
    return points


def _lines_and_points(
    counts: Sequence[int], rng: random.Random, height: int
) -> Tuple[List[Tuple[int, int, int]], List[Tuple[int, int, int]]]:
    lines = _random_lines(len(counts), rng, height)
    taken: set = set()
    points = []
    for i, (line, count) in enumerate(zip(lines, counts)):
        others = lines[:i] + lines[i + 1:]
        points += _points_on_line(line, count, others, taken, rng, height)
    return lines, points


def _check(measured: HVector, designed: HVector, what: str, attempt: int) -> bool:
    if measured == designed:
        return True
    logger.debug("Draw %s of %s: h-vector %s, designed %s", attempt, what, measured, designed)
    return False


def points_on_lines(
    counts: Sequence[int],
    r: int = 2,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    height: int = DEFAULT_POINT_HEIGHT,
) -> PointSet:
    """General points on general lines of the designed plane, ``counts[i]`` on line i."""

    designed = line_configuration_hvector(counts)
    for attempt in range(redraw_budget):
        rng = random.Random(derive_seed(seed, attempt))
        _, points = _lines_and_points(counts, rng, height)
        result = PointSet(r, tuple(_embed(p, r) for p in points))
        if _check(h_vector(result), designed, "line configuration", attempt):
            return result
    raise GenericityError(f"no draw of {list(counts)} points on lines gave {designed}")


def _grid_points(
    a: int, b: int, rng: random.Random, height: int, avoid=()
) -> List[Tuple[int, ...]]:
    lines = _random_lines(a + b, rng, height)
    first, second = lines[:a], lines[a:]
    crossings = []
    for i, u in enumerate(first):
        for j, v in enumerate(second):
            point = (
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            )
            crossings.append((i + j, i, point))
    crossings.sort(key=lambda c: (c[0], c[1]))
    points = [p for _, _, p in crossings]
    if any(_on_line(line, p) for line in avoid for p in points):
        return []
    return points


def line_grid(
    a: int,
    b: int,
    r: int = 2,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    height: int = DEFAULT_POINT_HEIGHT,
) -> PointSet:
    """The a*b crossings of a general lines with b general lines in the designed plane.

    Points are listed with i+j ascending, so the last ones are the corners
    of the grid.
    """

    designed = complete_intersection_hvector(a, b)
    for attempt in range(redraw_budget):
        rng = random.Random(derive_seed(seed, attempt))
        points = _grid_points(a, b, rng, height)
        try:
            result = PointSet(r, tuple(_embed(p, r) for p in points))
        except HilbertGrowthValueError:
            continue
        if _check(h_vector(result), designed, "line grid", attempt):
            return result
    raise GenericityError(f"no draw of a ({a}, {b}) line grid gave {designed}")


def truncate_hvector(
    points: PointSet,
    target_end: int,
    with_progress: bool = DEFAULT_WITH_PROGRESS,
) -> PointSet:
    """Remove points one at a time until the h-vector ends in degree ``target_end``.

    Every removal must lower only the last nonzero entry of the h-vector, by
    one. Later points are tried first.
    """

    current = h_vector(points)
    if target_end > current.last_nonzero_degree:
        raise HilbertGrowthValueError(
            f"h-vector {current} already ends before degree {target_end}"
        )
    excess = sum(current[t] for t in range(target_end + 1, len(current)))
    if with_progress:
        from tqdm.auto import tqdm

        progress = tqdm(total=excess, desc="removing points")
    else:
        progress = None
    try:
        while current.last_nonzero_degree > target_end:
            expected = list(current.trimmed().values)
            expected[-1] -= 1
            for index in range(len(points) - 1, -1, -1):
                candidate = points.without(index)
                measured = h_vector(candidate)
                if measured == expected:
                    points, current = candidate, measured
                    break
            else:
                raise GenericityError(
                    f"no point of the set can be removed from h-vector {current} "
                    f"leaving {HVector(values=expected)}"
                )
            if progress is not None:
                progress.update(1)
    finally:
        if progress is not None:
            progress.close()
    return points


def general_points(
    m: int,
    r: int,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    height: int = DEFAULT_POINT_HEIGHT,
) -> PointSet:
    """m seeded random points of P^r with the generic Hilbert function min(m, C(t+r, r))."""

    if m < 0 or r < 1:
        raise HilbertGrowthValueError(f"need m >= 0 and r >= 1, got m={m}, r={r}")
    top = 0
    while binomial(top + r, r) < m:
        top += 1
    generic = [min(m, binomial(t + r, r)) for t in range(top + 1)]
    found = []
    for attempt in range(redraw_budget):
        rng = random.Random(derive_seed(seed, attempt))
        coordinates = []
        seen = set()
        while len(coordinates) < m:
            point = tuple(rng.randint(-height, height) for _ in range(r + 1))
            if any(point) and normalize_point(point) not in seen:
                seen.add(normalize_point(point))
                coordinates.append(point)
        candidate = PointSet(r, tuple(coordinates))
        if hilbert_function_points(candidate, top) == generic:
            found.append(candidate)
            if len(found) == 2:
                return found[0]
    raise GenericityError(f"fewer than two of {redraw_budget} draws of {m} points were general")


def _off_plane_points(count: int, r: int, rng: random.Random, height: int) -> List[Tuple[int, ...]]:
    points = []
    for _ in range(count):
        points.append(
            tuple(rng.randint(-height, height) for _ in range(3))
            + tuple(_random_int(rng, height) for _ in range(r - 2))
        )
    return points


def points_on_plane_curve(
    d: int,
    n: int,
    r: int = 2,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    height: int = DEFAULT_POINT_HEIGHT,
) -> PointSet:
    """C(d,2) + (n-d+2)d + (d-1) points on a degree-d plane curve.

    The h-vector is (1, 2, ..., d, d, ..., d, d-1) with the last d in degree n.
    """

    if not 1 <= d <= n:
        raise HilbertGrowthValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return points_on_lines(_curve_counts(d, n), r, seed, redraw_budget, height)


def _curve_counts(d: int, n: int) -> List[int]:
    return [n + 3 - i for i in range(1, d)] + [n + 2 - d]


def build_prop_4_4(
    d: int,
    k: int,
    n: int,
    r: int = 3,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    height: int = DEFAULT_POINT_HEIGHT,
    with_progress: bool = DEFAULT_WITH_PROGRESS,
    log_level=logging.DEBUG,
) -> Tuple[PointSet, ConstructionRecipe]:
    """Points whose h-vector has k in degree n and k-1 in degree n+1, with a
    degree-d plane curve as the one-dimensional base locus of [I_Z]_n.

    Points on the curve come first. When d < k the curve gets one more point
    and a complete intersection grid of two line families, truncated to end
    in degree n-d+1, is added in the same plane. Finally r-2 general points
    off the plane make the set non-degenerate.
    """

    if not (1 <= d <= k <= n) or k < 2 or r < 3:
        raise HilbertGrowthValueError(
            f"need 1 <= d <= k <= n, k >= 2 and r >= 3, got d={d}, k={k}, n={n}, r={r}"
        )
    counts = _curve_counts(d, n)
    designed = line_configuration_hvector(counts)
    grid_design = None
    if d < k:
        counts[-1] += 1
        designed = line_configuration_hvector(counts)
        total = k + n - 2 * d + 1
        a, b = total // 2, total - total // 2
        ci = complete_intersection_hvector(a, b)
        end = n - d + 1
        grid_design = (a, b, end)
        values = [designed[t] + (ci[t - d] if t - d <= end else 0) for t in range(n + 2)]
        designed = HVector(values=values)
    designed = HVector(values=[designed[0], designed[1] + r - 2] + designed.values[2:])

    for attempt in range(redraw_budget):
        rng = random.Random(derive_seed(seed, attempt))
        curve, points = _lines_and_points(counts, rng, height)
        coordinates = [_embed(p, r) for p in points]
        if grid_design is not None:
            a, b, end = grid_design
            crossings = _grid_points(a, b, rng, height, avoid=curve)
            if not crossings:
                continue
            try:
                grid = PointSet(r, tuple(_embed(p, r) for p in crossings))
            except HilbertGrowthValueError:
                continue
            if h_vector(grid) != complete_intersection_hvector(a, b):
                continue
            if grid.points and h_vector(grid).last_nonzero_degree > end:
                grid = truncate_hvector(grid, end, with_progress=with_progress)
            coordinates += list(grid.points)
        coordinates += _off_plane_points(r - 2, r, rng, height)
        try:
            result = PointSet(r, tuple(coordinates))
        except HilbertGrowthValueError:
            continue
        measured = h_vector(result)
        if _check(measured, designed, "plane curve construction", attempt):
            logger.log(log_level, "Built %s points with h-vector %s", len(result), measured)
            notes = [LINE_UNION_NOTE]
            if grid_design is not None:
                notes.append(
                    f"({grid_design[0]}, {grid_design[1]}) line grid truncated to end "
                    f"in degree {grid_design[2]}"
                )
            recipe = ConstructionRecipe(
                name="prop44",
                parameters={"d": d, "k": k, "n": n, "r": r, "seed": seed},
                expected_h_vector=designed.trimmed().values,
                measured_h_vector=measured.trimmed().values,
                expected_base_locus={"dimension": 1, "degree": d},
                plane=[str(f) for f in designed_plane(r).defining_forms],
                attempts=attempt + 1,
                notes=notes,
            )
            return result, recipe
    raise GenericityError(
        f"no draw for d={d}, k={k}, n={n}, r={r} reached h-vector {designed}"
    )


def plane_regime_hvector(k: int, n: int) -> HVector:
    """(1, 2, ..., k, k+1, ..., k+1, k, k-1) with k in degree n."""

    return HVector(
        values=[min(t + 1, k + 1) for t in range(n)] + [k, k - 1]
    )


def build_plane_regime(
    k: int,
    n: int,
    r: int = 3,
    seed: int = 0,
    extra_points: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    with_progress: bool = DEFAULT_WITH_PROGRESS,
) -> Tuple[PointSet, LinearSubspace, ConstructionRecipe]:
    """Planar points with h-vector (1, 2, ..., k+1, ..., k+1, k, k-1), k in degree n.

    A (k+1, n) line grid in the designed plane is truncated to end in degree
    n+1, removing C(k-1, 2) points. Up to r-2 general points off the plane
    may be added; they only raise the h-vector in degree 1. The plane finder's
    assumptions are checked before returning.
    """

    if k < 2 or n < k + 1 or r < 3:
        raise HilbertGrowthValueError(
            f"need k >= 2, n >= k+1 and r >= 3, got k={k}, n={n}, r={r}"
        )
    if not 0 <= extra_points <= r - 2:
        raise HilbertGrowthValueError(f"at most {r - 2} points may lie off the plane")
    designed = plane_regime_hvector(k, n)
    designed = HVector(
        values=[designed[0], designed[1] + extra_points] + designed.values[2:]
    )
    plane = designed_plane(r)
    for attempt in range(redraw_budget):
        attempt_seed = derive_seed(seed, attempt)
        try:
            grid = line_grid(k + 1, n, r, seed=attempt_seed)
        except GenericityError:
            continue
        grid = truncate_hvector(grid, n + 1, with_progress=with_progress)
        rng = random.Random(derive_seed(attempt_seed, 1))
        coordinates = list(grid.points) + _off_plane_points(
            extra_points, r, rng, DEFAULT_POINT_HEIGHT
        )
        result = PointSet(r, tuple(coordinates))
        measured = h_vector(result)
        if not _check(measured, designed, "plane regime", attempt):
            continue
        log = check_hypotheses(result, n, k, seed=seed)
        if not log.all_passed:
            logger.debug("Draw %s fails %s", attempt, log.first_failure())
            continue
        recipe = ConstructionRecipe(
            name="planeregime",
            parameters={"k": k, "n": n, "r": r, "seed": seed, "extra_points": extra_points},
            expected_h_vector=designed.values,
            measured_h_vector=measured.trimmed().values,
            plane=[str(f) for f in plane.defining_forms],
            attempts=attempt + 1,
            notes=[
                f"({k + 1}, {n}) line grid truncated to end in degree {n + 1}",
            ],
        )
        return result, plane, recipe
    raise GenericityError(f"no draw for k={k}, n={n}, r={r} passed every assumption")


def example_4_6(d: int, seed: int = 0, **kwargs) -> Tuple[PointSet, ConstructionRecipe]:
    """Points of P^3 with h-vector ending (..., 7, 6), 7 in degree 8, whose
    degree-8 base locus is a curve of degree d.

    Only d in {1, 2} is available: these curves are plane curves and come
    from the line-union construction.
    """

    if d not in (1, 2):
        raise HilbertGrowthValueError(
            f"d={d} needs an arithmetically Cohen-Macaulay space curve of degree {d}, "
            "which line unions cannot realize"
        )
    points, recipe = build_prop_4_4(d, 7, 8, 3, seed=seed, **kwargs)
    recipe.name = "example46"
    return points, recipe


def _random_form(
    num_vars: int, degree: int, rng: random.Random, bound: int = 9
) -> Form:
    return Form.from_vector(
        num_vars,
        degree,
        [rng.randint(-bound, bound) for _ in monomials(num_vars, degree)],
    )


def _example_3_3_colon(seed: int, redraw_budget: int) -> GradedSpan:
    d_min, d_max = EXAMPLE_3_3_WINDOW
    for attempt in range(redraw_budget):
        rng = random.Random(derive_seed(seed, attempt))
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        point = (a, b, 1)
        z = Form.variable(2, 3)
        f, g = _random_form(3, 4, rng), _random_form(3, 6, rng)
        f = f - Form.monomial((0, 0, 4), evaluate(f, point))
        g = g - Form.monomial((0, 0, 6), evaluate(g, point))
        if f.is_zero() or g.is_zero():
            continue
        l1 = Form.variable(0, 3) - z.scale(a)
        l2 = Form.variable(1, 3) - z.scale(b)
        ci = span_from_generators([f, g], (d_min, d_max + 1))
        span = colon_span(ci, [l1, l2], (d_min, d_max))
        if span.hilbert_function(6) == 21 and span.hilbert_function(7) == 23:
            return span
        logger.debug(
            "Draw %s: colon has h(6)=%s, h(7)=%s",
            attempt,
            span.hilbert_function(6),
            span.hilbert_function(7),
        )
    raise GenericityError("no draw of the complete intersection gave h(6)=21, h(7)=23")


def example_3_3(
    which: int, seed: int = 0, redraw_budget: int = DEFAULT_REDRAW_BUDGET
) -> GradedSpan:
    """The four ideals of K[x, y, z] with h(6) = 21 and h(7) = 23.

    J1, J2 and J3 are monomial ideals whose degree-7 base loci are curves of
    degrees 3, 2 and 1. J4 is the colon of a (4, 6) complete intersection
    through a random point P by the ideal of P; its base locus is
    zero-dimensional of degree 24.
    """

    if which == 4:
        return _example_3_3_colon(seed, redraw_budget)
    if which not in EXAMPLE_3_3_EXTRA:
        raise HilbertGrowthValueError(f"which must be 1, 2, 3 or 4, got {which}")
    return span_from_monomial_ideal(example_3_3_ideal(which), EXAMPLE_3_3_WINDOW)


def example_3_3_ideal(which: int) -> MonomialIdeal:
    if which not in EXAMPLE_3_3_EXTRA:
        raise HilbertGrowthValueError(f"J{which} is not a monomial ideal")
    return MonomialIdeal(3, EXAMPLE_3_3_BASE + EXAMPLE_3_3_EXTRA[which])
