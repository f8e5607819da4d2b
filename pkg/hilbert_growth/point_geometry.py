"""Finite reduced point sets in P^r and their artinian reductions."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, List, Sequence, Tuple

from pydantic import BaseModel, Field

from hilbert_growth.binomial_calculus import HVector, green_bound
from hilbert_growth.errors import (
    GenericityError,
    HilbertGrowthFormatError,
    HilbertGrowthValueError,
    HypothesisError,
    TheoremViolationError,
)
from hilbert_growth.exact_algebra import (
    Form,
    IntRow,
    LinearSubspace,
    RationalMatrix,
    clear_denominators,
    echelon_form,
    evaluate,
    evaluate_monomial,
    form_gcd,
    integer_kernel,
    monomials,
    primitive,
    random_linear_form,
    random_rational,
    rank,
)
from hilbert_growth.graded_ideals import GradedSpan
from hilbert_growth.utils import (
    DEFAULT_REDRAW_BUDGET,
    derive_seed,
    logger,
    parse_rational,
    pydantic_dict,
    rational_str,
)

Point = Tuple[Fraction, ...]


def normalize_point(coordinates: Sequence) -> Point:
    """Scale so the last nonzero coordinate is 1."""

    point = [Fraction(c) for c in coordinates]
    last = next((c for c in reversed(point) if c), None)
    if last is None:
        raise HilbertGrowthValueError("the zero vector is not a projective point")
    return tuple(c / last for c in point)


@dataclass(frozen=True)
class PointSet:
    """Distinct points of P^ambient_dim, stored as normalized representatives."""

    ambient_dim: int
    points: Tuple[Point, ...] = ()

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise HilbertGrowthValueError(
                f"ambient_dim must be positive, got {self.ambient_dim}"
            )
        normalized = []
        seen = set()
        for p in self.points:
            if len(p) != self.ambient_dim + 1:
                raise HilbertGrowthValueError(
                    f"point {p} needs {self.ambient_dim + 1} coordinates"
                )
            q = normalize_point(p)
            if q in seen:
                raise HilbertGrowthValueError(f"duplicate point {q}")
            seen.add(q)
            normalized.append(q)
        object.__setattr__(self, "points", tuple(normalized))

    def __len__(self) -> int:
        return len(self.points)

    @cached_property
    def integer_points(self) -> Tuple[Tuple[int, ...], ...]:
        """Primitive integer representatives, used by every evaluation."""

        return tuple(tuple(primitive(clear_denominators(p))) for p in self.points)

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(self.ambient_dim, tuple(self.points[i] for i in indices))

    def without(self, index: int) -> "PointSet":
        return self.subset([i for i in range(len(self)) if i != index])

    def indices_on(self, subspace: LinearSubspace) -> List[int]:
        return [i for i, p in enumerate(self.points) if subspace.contains_point(p)]

    def to_json(self) -> List[List]:
        return [[rational_str(c) for c in p] for p in self.points]


def _hadamard_spaces(points: PointSet, top: int) -> List[List[IntRow]]:
    """Echelon bases of V_d = span of (m(p))_p over monomials m of degree d, d = 0..top."""

    size = len(points)
    if size == 0:
        return [[] for _ in range(top + 1)]
    coordinates = list(zip(*points.integer_points))
    spaces = [echelon_form([[1] * size], size)[0]]
    for _ in range(top):
        current = spaces[-1]
        if len(current) == size:
            spaces.append(current)
            continue
        products = [
            [a * x for a, x in zip(v, column)] for v in current for column in coordinates
        ]
        spaces.append(echelon_form(products, size)[0])
    return spaces


def hilbert_function_points(points: PointSet, top: int) -> List[int]:
    return [len(v) for v in _hadamard_spaces(points, top)]


def hf_points(points: PointSet, d: int) -> int:
    """Rank of the degree-d evaluation matrix."""

    if d < 0:
        return 0
    return hilbert_function_points(points, d)[d]


def h_vector(points: PointSet) -> HVector:
    """First difference of the Hilbert function of the points."""

    size = len(points)
    if size == 0:
        return HVector(values=[])
    top = 1
    while True:
        values = hilbert_function_points(points, top)
        if values[-1] == size and (len(values) < 2 or values[-2] == size):
            break
        for a, b in zip(values, values[1:]):
            if a == b and a < size:
                raise TheoremViolationError(
                    "Hilbert function of reduced points stalled below their number",
                    context={"hilbert_function": values, "points": size},
                )
        top *= 2
    while len(values) > 1 and values[-2] == size:
        values.pop()
    return HVector(values=values).first_difference().trimmed()


def evaluation_rows(points: PointSet, d: int) -> List[IntRow]:
    """One row per point: the values of the degree-d monomials."""

    basis = monomials(points.ambient_dim + 1, d)
    return [[evaluate_monomial(m, p) for m in basis] for p in points.integer_points]


def ideal_component(points: PointSet, d: int) -> List[Form]:
    """A basis of [I_Z]_d."""

    num_vars = points.ambient_dim + 1
    size = len(monomials(num_vars, d))
    if not len(points):
        return [
            Form.from_vector(num_vars, d, [int(i == j) for j in range(size)])
            for i in range(size)
        ]
    kernel = integer_kernel(evaluation_rows(points, d), size)
    return [Form.from_vector(num_vars, d, v) for v in kernel]


def points_span(points: PointSet, window: Tuple[int, int]) -> GradedSpan:
    """I_Z on the window; the evaluation functionals annihilate its components."""

    d_min, d_max = window
    return GradedSpan(
        points.ambient_dim + 1,
        {d: evaluation_rows(points, d) for d in range(d_min, d_max + 1)},
    )


@dataclass(frozen=True)
class ArtinianReduction:
    """J = (I_Z, L)/(L) in S = K[x_1, ..., x_r], the last variable eliminated through L."""

    num_vars: int
    span: GradedSpan
    reduction_form: Form
    substitution: Form
    h_vector: HVector
    seed: int

    def hilbert_function(self, d: int) -> int:
        if d > self.span.d_max:
            return 0
        return self.span.hilbert_function(d)

    def lift(self, form: Form) -> Form:
        """Lift a form of S to R, with coefficient 0 on the eliminated variable."""

        return Form(
            self.num_vars + 1,
            form.degree,
            tuple((e + (0,), c) for e, c in form.terms),
        )


def _draw_reduction_form(
    points: PointSet, rng: random.Random, redraw_budget: int
) -> Form:
    num_vars = points.ambient_dim + 1
    for attempt in range(redraw_budget):
        form = random_linear_form(num_vars, rng)
        if all(evaluate(form, p) != 0 for p in points.points):
            return form
        logger.debug("Reduction form %s vanishes at a point, redrawing", form)
    raise GenericityError(
        f"no reduction form avoiding the points in {redraw_budget} draws"
    )


def _reduction_duals(
    points: PointSet, form: Form, top: int
) -> Dict[int, List[IntRow]]:
    r = points.ambient_dim
    size = len(points)
    coefficients = clear_denominators(form.linear_coefficients())
    values = [
        sum(c * x for c, x in zip(coefficients, p)) for p in points.integer_points
    ]
    spaces = _hadamard_spaces(points, top)
    duals = {}
    for d in range(top + 1):
        if size == 0:
            duals[d] = []
            continue
        constraints = (
            [[a * v for a, v in zip(row, values)] for row in spaces[d - 1]]
            if d > 0
            else []
        )
        kernel = integer_kernel(constraints, size) if constraints else [
            [int(i == j) for j in range(size)] for i in range(size)
        ]
        basis = monomials(r, d)
        table = [
            [evaluate_monomial(m, p[:r]) for m in basis] for p in points.integer_points
        ]
        duals[d] = [
            [sum(a * row[j] for a, row in zip(vector, table) if a) for j in range(len(basis))]
            for vector in kernel
        ]
    return duals


def artinian_reduction(
    points: PointSet,
    seed: int = 0,
    redraw_budget: int = DEFAULT_REDRAW_BUDGET,
    check_genericity: bool = True,
    log_level=logging.DEBUG,
) -> ArtinianReduction:
    """Reduce R/I_Z modulo a seeded general linear form L.

    L has no zero coefficient (so the last variable can be eliminated) and
    does not vanish at any point. The quotient dimensions are checked against
    the h-vector, and with ``check_genericity`` a second independent draw must
    give the same Hilbert function.
    """

    r = points.ambient_dim
    hv = h_vector(points)
    top = len(hv.values) + 1
    rng = random.Random(seed)
    form = _draw_reduction_form(points, rng, redraw_budget)
    span = GradedSpan(r, _reduction_duals(points, form, top))
    measured = [span.hilbert_function(d) for d in range(top + 1)]
    if HVector(values=measured) != hv:
        raise GenericityError(
            f"reduction by {form} has Hilbert function {measured}, expected {hv}"
        )
    if check_genericity:
        other_form = _draw_reduction_form(
            points, random.Random(derive_seed(seed, 1)), redraw_budget
        )
        other = GradedSpan(r, _reduction_duals(points, other_form, top))
        if [other.hilbert_function(d) for d in range(top + 1)] != measured:
            raise GenericityError("two general reductions disagree")
    coefficients = form.linear_coefficients()
    substitution = Form.linear([-c / coefficients[-1] for c in coefficients[:-1]])
    logger.log(log_level, "Artinian reduction by %s: h = %s", form, hv)
    return ArtinianReduction(
        num_vars=r,
        span=span,
        reduction_form=form,
        substitution=substitution,
        h_vector=hv,
        seed=seed,
    )


@dataclass(frozen=True)
class MultiplicationPencil:
    """Matrices of x_i : [S/J]_n -> [S/J]_{n+1} in standard-monomial bases."""

    n: int
    source_dim: int
    target_dim: int
    matrices: Tuple[RationalMatrix, ...]
    source_basis: Tuple[Tuple[int, ...], ...]
    target_basis: Tuple[Tuple[int, ...], ...]

    def value(self, direction: Sequence) -> RationalMatrix:
        """A(a) = sum a_i B_i, the matrix of multiplication by sum a_i x_i."""

        if len(direction) != len(self.matrices):
            raise HilbertGrowthValueError("one coefficient per variable is required")
        result = RationalMatrix(self.target_dim, self.source_dim)
        for a, matrix in zip(direction, self.matrices):
            result = result + matrix.scale(a)
        return result

    def entry_vectors(self) -> List[List[Fraction]]:
        """For each matrix position, the vector of that entry across the variables."""

        return [
            [m.entries[j * self.source_dim + l] for m in self.matrices]
            for j in range(self.target_dim)
            for l in range(self.source_dim)
        ]


def multiplication_pencil(
    reduction: ArtinianReduction, n: int, seed: int = 0
) -> MultiplicationPencil:
    span = reduction.span
    k = reduction.hilbert_function(n)
    if k < 2 or reduction.hilbert_function(n + 1) != k - 1:
        raise HypothesisError(
            "regime",
            f"need h({n}) = k >= 2 and h({n + 1}) = k - 1, got "
            f"{k} and {reduction.hilbert_function(n + 1)}",
        )
    r = reduction.num_vars
    source = span.standard_monomials(n)
    target = span.standard_monomials(n + 1)
    matrices = []
    for i in range(r):
        columns = []
        for beta in source:
            m = list(beta)
            m[i] += 1
            columns.append(span.coordinates(Form.monomial(m)))
        matrices.append(
            RationalMatrix.from_rows(
                [[c[j] for c in columns] for j in range(len(target))], len(source)
            )
        )
    pencil = MultiplicationPencil(
        n=n,
        source_dim=k,
        target_dim=k - 1,
        matrices=tuple(matrices),
        source_basis=tuple(source),
        target_basis=tuple(target),
    )
    if k - 1 <= n + 1 and green_bound(k - 1, n + 1) == 0:
        for attempt in range(2):
            rng = random.Random(derive_seed(seed, 10 + attempt))
            direction = [random_rational(rng) for _ in range(r)]
            if rank(pencil.value(direction)) == k - 1:
                break
        else:
            raise TheoremViolationError(
                "multiplication by a general linear form is not surjective",
                context={"n": n, "k": k},
            )
    return pencil


class DavisReport(BaseModel):
    n: int = Field(description="Degree n with equal h-vector values in n and n+1")
    k: int = Field(description="The common value, expected degree of the gcd")
    gcd: str = Field(description="The gcd F of [I_Z]_n and [I_Z]_{n+1}")
    gcd_degree: int
    z1_indices: List[int] = Field(description="Indices of the points on F")
    z2_indices: List[int] = Field(description="Indices of the remaining points")
    delta_z: List[int]
    delta_z1: List[int]
    delta_z2: List[int]
    hilbert_z1: List[int] = Field(description="Hilbert function of Z1, same degrees")
    z2_vanishes: bool = Field(
        description="Whether the h-vector of Z2 vanishes from degree n-k on"
    )
    identity_delta: bool = Field(
        description="h-vector of Z equals shifted h-vector of Z2 plus h-vector of Z1"
    )
    identity_hilbert: bool = Field(
        description="h-vector of Z equals shifted h-vector of Z2 plus Hilbert function of Z1"
    )
    identity_curve: bool = Field(
        description="h-vector of Z equals shifted h-vector of Z2 plus that of a degree-k curve"
    )


def davis_decompose(points: PointSet, n: int, k: int):
    """Split planar points along the gcd of [I_Z]_n and [I_Z]_{n+1}.

    Returns ``(F, Z1, Z2, report)``.
    """

    if points.ambient_dim != 2:
        raise HilbertGrowthValueError("the decomposition applies to points of P^2")
    delta = h_vector(points)
    if delta[n] != k or delta[n + 1] != k:
        raise HypothesisError(
            "equal_values",
            f"need h-vector {k} in degrees {n} and {n + 1}, got {delta[n]} and {delta[n + 1]}",
        )
    forms = ideal_component(points, n) + ideal_component(points, n + 1)
    gcd_form = form_gcd(forms)
    if gcd_form.degree != k:
        raise TheoremViolationError(
            f"gcd has degree {gcd_form.degree}, expected {k}",
            context={"gcd": str(gcd_form), "h_vector": delta.values},
        )
    z1 = [i for i, p in enumerate(points.points) if evaluate(gcd_form, p) == 0]
    on_curve = set(z1)
    z2 = [i for i in range(len(points)) if i not in on_curve]
    part1, part2 = points.subset(z1), points.subset(z2)
    length = len(delta.values) + k + 1
    d1 = h_vector(part1)
    d2 = h_vector(part2)
    delta_z = [delta[t] for t in range(length)]
    delta_z1 = [d1[t] for t in range(length)]
    delta_z2 = [d2[t] for t in range(length)]
    hilbert_z1 = [sum(d1[s] for s in range(t + 1)) for t in range(length)]
    shifted = [d2[t - k] for t in range(length)]
    report = DavisReport(
        n=n,
        k=k,
        gcd=str(gcd_form),
        gcd_degree=gcd_form.degree,
        z1_indices=z1,
        z2_indices=z2,
        delta_z=delta_z,
        delta_z1=delta_z1,
        delta_z2=delta_z2,
        hilbert_z1=hilbert_z1,
        z2_vanishes=all(d2[t] == 0 for t in range(max(n - k, 0), length)),
        identity_delta=all(
            delta_z[t] == shifted[t] + delta_z1[t] for t in range(length)
        ),
        identity_hilbert=all(
            delta_z[t] == shifted[t] + hilbert_z1[t] for t in range(length)
        ),
        identity_curve=all(
            delta_z[t] == shifted[t] + min(t + 1, k) for t in range(n + 2)
        ),
    )
    if not report.z2_vanishes:
        raise TheoremViolationError(
            f"h-vector of Z2 does not vanish from degree {n - k}",
            context=pydantic_dict(report),
        )
    return gcd_form, part1, part2, report


def read_points(text: str) -> PointSet:
    """Parse the point format: ``ambient r`` then r+1 rationals per line."""

    ambient = None
    points = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if ambient is None:
            if len(tokens) != 2 or tokens[0] != "ambient":
                raise HilbertGrowthFormatError("expected header 'ambient r'", line=number)
            try:
                ambient = int(tokens[1])
            except ValueError:
                raise HilbertGrowthFormatError("ambient must be an integer", line=number)
            if ambient < 1:
                raise HilbertGrowthFormatError("ambient must be positive", line=number)
            continue
        if len(tokens) != ambient + 1:
            raise HilbertGrowthFormatError(
                f"expected {ambient + 1} coordinates, got {len(tokens)}", line=number
            )
        try:
            point = [parse_rational(t) for t in tokens]
        except ValueError as e:
            raise HilbertGrowthFormatError(str(e), line=number)
        if not any(point):
            raise HilbertGrowthFormatError("the zero vector is not a point", line=number)
        points.append(tuple(point))
    if ambient is None:
        raise HilbertGrowthFormatError("missing header 'ambient r'")
    try:
        return PointSet(ambient, tuple(points))
    except HilbertGrowthValueError as e:
        raise HilbertGrowthFormatError(str(e))


def write_points(points: PointSet) -> str:
    lines = [f"ambient {points.ambient_dim}"]
    lines += [" ".join(str(rational_str(c)) for c in p) for p in points.points]
    return "\n".join(lines) + "\n"

