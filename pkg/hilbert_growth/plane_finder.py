"""Recover the plane hidden in a point set with h-vector (..., k, k-1).

When the degree-n component of the artinian reduction J of I_Z is basepoint
free, J has no minimal generator in degree n+1 and no socle in degree n,
the entries of the multiplication pencil span a two-dimensional space of
linear forms. Its annihilator cuts out a line in the hyperplane of the
reducing form; lines from two general hyperplanes meet in a point and span
a plane that carries every point of Z contributing to degrees >= n of the
h-vector.
"""

import logging
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field
from tabulate import tabulate

from hilbert_growth.binomial_calculus import binomial
from hilbert_growth.errors import HypothesisError, TheoremViolationError
from hilbert_growth.exact_algebra import (
    Form,
    LinearSubspace,
    clear_denominators,
    echelon_form,
    integer_kernel,
    multiply_forms,
)
from hilbert_growth.graded_ideals import (
    basepoint_free_check,
    min_generator_count,
    socle_dimension,
)
from hilbert_growth.point_geometry import (
    ArtinianReduction,
    PointSet,
    artinian_reduction,
    h_vector,
    multiplication_pencil,
)
from hilbert_growth.utils import derive_seed, logger

PLANE_SEEDS = 3


class HypothesisCheck(BaseModel):
    name: str = Field(description="Name of the assumption")
    passed: bool
    evidence: str = Field(description="What was measured")
    gating: bool = Field(True, description="Whether find_plane requires it")


class HypothesisLog(BaseModel):
    n: int
    k: int
    seed: int
    checks: List[HypothesisCheck] = Field(default=[])

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks if c.gating)

    def first_failure(self) -> Optional[HypothesisCheck]:
        return next((c for c in self.checks if c.gating and not c.passed), None)

    def __repr__(self) -> str:
        return tabulate(
            [[c.name, "pass" if c.passed else "fail", c.evidence] for c in self.checks],
            headers=["assumption", "result", "evidence"],
        )


def check_hypotheses(points: PointSet, n: int, k: int, seed: int = 0) -> HypothesisLog:
    """Evaluate every assumption of the plane theorem; failures are recorded, not raised."""

    log = HypothesisLog(n=n, k=k, seed=seed)
    delta = h_vector(points)
    tail = [delta[n], delta[n + 1], delta[n + 2]]
    shape_ok = k >= 2 and n >= 1 and tail == [k, k - 1, 0]
    log.checks.append(
        HypothesisCheck(
            name="tail_shape",
            passed=shape_ok,
            evidence=f"h-vector {delta}, degrees {n}..{n + 2}: {tail}",
        )
    )
    log.checks.append(
        HypothesisCheck(
            name="nondegenerate",
            passed=3 <= delta[1] <= points.ambient_dim,
            evidence=f"h(1) = {delta[1]}, r = {points.ambient_dim}",
            gating=False,
        )
    )
    names = ("no_generator_in_degree_n_plus_1", "basepoint_free", "no_socle_in_degree_n")
    if not shape_ok:
        for name in names:
            log.checks.append(
                HypothesisCheck(name=name, passed=False, evidence="not evaluated: tail shape")
            )
        return log
    span = artinian_reduction(points, seed=seed).span
    count = min_generator_count(span, n + 1)
    free = basepoint_free_check(span, n)
    socle = socle_dimension(span, n)
    log.checks += [
        HypothesisCheck(
            name=names[0],
            passed=count == 0,
            evidence=f"{count} minimal generator(s) in degree {n + 1}",
        ),
        HypothesisCheck(
            name=names[1],
            passed=free,
            evidence=f"<[J]_{n}> {'fills' if free else 'does not fill'} S "
            f"by degree {span.num_vars * (n - 1) + 1}",
        ),
        HypothesisCheck(
            name=names[2],
            passed=socle == 0,
            evidence=f"socle dimension {socle} in degree {n}",
        ),
    ]
    return log


def _entry_rows(pencil) -> List[List[int]]:
    return [clear_denominators(v) for v in pencil.entry_vectors() if any(v)]


def annihilator_line(
    reduction: ArtinianReduction, n: int, seed: int = 0
) -> Tuple[List[Form], int]:
    """Linear forms killing every entry of the multiplication pencil in degree n.

    Returns the r-2 forms together with the rank of the entry span, which
    must be exactly 2. Each form is checked to multiply [S/J]_{n-1} and
    [S/J]_n to zero.
    """

    pencil = multiplication_pencil(reduction, n, seed=seed)
    r = reduction.num_vars
    rows = _entry_rows(pencil)
    basis, _ = echelon_form(rows, r)
    if len(basis) != 2:
        raise TheoremViolationError(
            f"pencil entries span a space of rank {len(basis)}, expected 2",
            context={"span_basis": [[int(x) for x in b] for b in basis], "n": n},
        )
    forms = [Form.linear(v) for v in integer_kernel(basis, r)]
    span = reduction.span
    for form in forms:
        upper_zero = pencil.value(form.linear_coefficients()).is_zero()
        lower_zero = all(
            span.contains(multiply_forms(form, Form.monomial(beta)))
            for beta in span.standard_monomials(n - 1)
        )
        if not (upper_zero and lower_zero):
            raise TheoremViolationError(
                f"multiplication by {form} is not zero",
                context={
                    "form": str(form),
                    "zero_from_degree_n_minus_1": lower_zero,
                    "zero_from_degree_n": upper_zero,
                },
            )
    return forms, len(basis)


class DeltaRow(BaseModel):
    t: int
    z: int
    z1: int
    z2: int


class BoundCheck(BaseModel):
    required: int = Field(description="C(k+1,2)+(k+1)(n-k+2)-3")
    actual: int = Field(description="Number of points on the plane")


class PlaneCertificate(BaseModel):
    """The recovered plane, the split of Z along it and the verified tables."""

    ambient_dim: int
    plane: List[List[int]] = Field(description="Coefficients of the defining forms")
    plane_forms: List[str] = Field(description="The defining forms")
    z1_indices: List[int] = Field(description="Points on the plane")
    z2_indices: List[int] = Field(description="Points off the plane")
    delta_table: List[DeltaRow]
    hypothesis_log: HypothesisLog
    entry_span_rank: int
    lines: List[List[str]] = Field(description="Defining forms of each hyperplane line")
    seeds: List[int] = Field(description="Seeds of the reductions used")
    bound: BoundCheck

    def subspace(self) -> LinearSubspace:
        return LinearSubspace(self.ambient_dim, tuple(Form.linear(v) for v in self.plane))

    def split(self, points: PointSet) -> Tuple[PointSet, PointSet]:
        return points.subset(self.z1_indices), points.subset(self.z2_indices)

    def to_text(self) -> str:
        table = tabulate(
            [[row.t, row.z, row.z1, row.z2] for row in self.delta_table],
            headers=["t", "dh Z", "dh Z1", "dh Z2"],
        )
        return (
            f"plane: V({', '.join(self.plane_forms)})\n"
            f"points on plane: {self.bound.actual} (at least {self.bound.required})\n"
            f"{table}"
        )

    def __repr__(self) -> str:
        return self.to_text()


def _hyperplane_line(
    points: PointSet, n: int, seed: int
) -> Tuple[LinearSubspace, List[Form], int]:
    reduction = artinian_reduction(points, seed=seed)
    forms, rank = annihilator_line(reduction, n, seed=seed)
    line = LinearSubspace(
        points.ambient_dim,
        (reduction.reduction_form,) + tuple(reduction.lift(f) for f in forms),
    )
    if line.projective_dimension != 1:
        raise TheoremViolationError(
            f"annihilator cuts out {line}, not a line", context={"seed": seed}
        )
    return line, forms, rank


def find_plane(
    points: PointSet, n: int, k: int, seed: int = 0, log_level=logging.DEBUG
) -> PlaneCertificate:
    """Find the plane through the points carrying the top of the h-vector.

    Raises :class:`HypothesisError` when an assumption fails and
    :class:`TheoremViolationError` when a conclusion fails on an input that
    passed them all.
    """

    log = check_hypotheses(points, n, k, seed)
    failure = log.first_failure()
    if failure is not None:
        raise HypothesisError(failure.name, failure.evidence)
    seeds = [derive_seed(seed, 100 + i) for i in range(PLANE_SEEDS)]
    lines, ranks = [], []
    for s in seeds:
        line, _, rank = _hyperplane_line(points, n, s)
        logger.log(log_level, "Seed %s: line %s", s, line)
        lines.append(line)
        ranks.append(rank)
    corner = lines[0].meet(lines[1])
    plane = lines[0].join(lines[1])
    if corner.projective_dimension != 0 or plane.projective_dimension != 2:
        raise TheoremViolationError(
            f"lines span {plane} and meet in {corner}; expected a plane and a point",
            context={"lines": [str(line) for line in lines]},
        )
    other = lines[1].join(lines[2])
    if not other.same_as(plane):
        raise TheoremViolationError(
            "the plane depends on the reducing form",
            context={"plane": str(plane), "other": str(other)},
        )
    z1 = points.indices_on(plane)
    on_plane = set(z1)
    z2 = [i for i in range(len(points)) if i not in on_plane]
    part1, part2 = points.subset(z1), points.subset(z2)
    delta, delta1, delta2 = h_vector(points), h_vector(part1), h_vector(part2)
    rows = [
        DeltaRow(t=t, z=delta[t], z1=delta1[t], z2=delta2[t])
        for t in range(len(delta) + 1)
    ]
    top_ok = all(row.z1 == row.z for row in rows if row.t >= n)
    bottom_ok = all(row.z2 == 0 for row in rows if row.t >= n - 1)
    bound = BoundCheck(
        required=binomial(k + 1, 2) + (k + 1) * (n - k + 2) - 3, actual=len(z1)
    )
    context = {
        "delta_table": [[row.t, row.z, row.z1, row.z2] for row in rows],
        "plane": str(plane),
    }
    if not (top_ok and bottom_ok):
        raise TheoremViolationError("h-vector identities fail along the plane", context=context)
    if bound.actual < bound.required:
        raise TheoremViolationError(
            f"only {bound.actual} points on the plane, at least {bound.required} required",
            context=context,
        )
    coefficients = [
        clear_denominators(f.linear_coefficients()) for f in plane.defining_forms
    ]
    return PlaneCertificate(
        ambient_dim=points.ambient_dim,
        plane=[[int(c) for c in v] for v in coefficients],
        plane_forms=[str(f) for f in plane.defining_forms],
        z1_indices=z1,
        z2_indices=z2,
        delta_table=rows,
        hypothesis_log=log,
        entry_span_rank=max(ranks),
        lines=[[str(f) for f in line.defining_forms] for line in lines],
        seeds=seeds,
        bound=bound,
    )
