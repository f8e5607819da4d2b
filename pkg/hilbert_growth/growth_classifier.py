"""Growth regimes of Hilbert functions and the base-locus predictions they carry."""

import enum
import logging
import random
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field
from tabulate import tabulate

from hilbert_growth.binomial_calculus import (
    HVector,
    binomial,
    curve_degree_bound,
    gotzmann_values,
    green_bound,
    growth_gap,
    hilbert_polynomial_from_expansion,
    is_o_sequence,
    macaulay_bound,
    macaulay_expand,
    mg_dimension,
    trailing_unit_terms,
)
from hilbert_growth.errors import (
    HilbertGrowthValueError,
    HilbertGrowthWindowError,
    TheoremViolationError,
)
from hilbert_growth.exact_algebra import random_linear_form
from hilbert_growth.graded_ideals import (
    BaseLocusProfile,
    BaseLocusStatus,
    GradedSpan,
    base_locus_profile,
    colon_span,
    restriction_dimension,
)
from hilbert_growth.point_geometry import (
    ArtinianReduction,
    PointSet,
    artinian_reduction,
    points_span,
)
from hilbert_growth.utils import logger, pydantic_dict

EMPTY = "empty"

DimensionLabel = Union[int, str]


class GrowthRegime(str, enum.Enum):
    maximal = "maximal"
    almost_maximal_high = "almost_maximal_high"
    type_k_kminus1 = "type_k_kminus1"
    submaximal_other = "submaximal_other"


class Bound(BaseModel):
    name: str = Field(description="Identifier of the bound")
    formula: str = Field(description="The formula evaluated")
    value: int = Field(description="The evaluated bound")
    hypothesis: str = Field(description="When the bound applies")


class GrowthReport(BaseModel):
    """Growth of h from degree n to n+1 and what it predicts for the base locus of [J]_n."""

    n: int = Field(description="The degree")
    h_n: int = Field(description="h(n)")
    h_n1: int = Field(description="h(n+1)")
    gap: int = Field(description="macaulay_bound(h(n), n) - h(n+1)")
    regime: GrowthRegime = Field(description="The growth regime")
    expansion: str = Field(description="The n-binomial expansion of h(n)")
    mg_dim: int = Field(description="Dimension forced by maximal growth")
    predicted_dims: List[DimensionLabel] = Field(
        description="Possible base-locus dimensions, 'empty' for no base locus"
    )
    persistence_poly: Optional[str] = Field(
        None, description="Hilbert polynomial forced by persistent maximal growth"
    )
    persistence_values: Optional[List[int]] = Field(
        None, description="Values in degrees n, n+1, ... under persistence"
    )
    curve_degree_bound: Optional[int] = Field(
        None, description="Largest degree of a one-dimensional base locus"
    )
    bounds: List[Bound] = Field(default=[], description="Point-count bounds")

    def __repr__(self) -> str:
        rows = [
            ["n", self.n],
            ["h(n), h(n+1)", f"{self.h_n}, {self.h_n1}"],
            ["expansion", self.expansion],
            ["gap", self.gap],
            ["regime", self.regime.value],
            ["predicted dims", ", ".join(str(d) for d in self.predicted_dims) or "-"],
        ]
        if self.persistence_poly is not None:
            rows.append(["persistence", self.persistence_poly])
        if self.curve_degree_bound is not None:
            rows.append(["curve degree bound", self.curve_degree_bound])
        for bound in self.bounds:
            rows.append([bound.name, f"{bound.value} = {bound.formula}"])
        return tabulate(rows, tablefmt="plain")


def bounds_report(k: int, n: int, d: Optional[int] = None) -> List[Bound]:
    """Lower bounds on the number of points on the relevant curves or plane.

    Parameters
    ----------
    k : int
        h(n), at least 2.
    n : int
        The degree, at least k.
    d : int, optional
        Degree of the one-dimensional base locus, 1 <= d <= k-1. When given,
        the bound that applies to the split between the curve and the rest is
        included.
    """

    if k < 2 or n < k:
        raise HilbertGrowthValueError(f"bounds need 2 <= k <= n, got k={k}, n={n}")
    bounds = [
        Bound(
            name="degree_k_curve",
            formula="C(k,2)+k(n-k+3)-1",
            value=binomial(k, 2) + k * (n - k + 3) - 1,
            hypothesis="the base locus of [J]_n is a curve of degree k",
        ),
        Bound(
            name="degree_k_minus_1_curve",
            formula="C(k-1,2)+(k-1)(n-k+4)",
            value=binomial(k - 1, 2) + (k - 1) * (n - k + 4),
            hypothesis="the base locus of [J]_n is a curve of degree k-1",
        ),
    ]
    if d is not None:
        if not 1 <= d <= k - 1:
            raise HilbertGrowthValueError(f"d must lie in [1, {k - 1}], got {d}")
        if k - 1 - d <= d + 1:
            bounds.append(
                Bound(
                    name="degree_d_curve_low",
                    formula="2C(d,2)+5d",
                    value=2 * binomial(d, 2) + 5 * d,
                    hypothesis="k-1-d <= d+1",
                )
            )
        if d + 1 <= k - 1 - d:
            bounds.append(
                Bound(
                    name="degree_d_curve_high",
                    formula="d^2+d(n-k+4)",
                    value=d * d + d * (n - k + 4),
                    hypothesis="d+1 <= k-1-d",
                )
            )
    bounds.append(
        Bound(
            name="plane",
            formula="C(k+1,2)+(k+1)(n-k+2)-3",
            value=binomial(k + 1, 2) + (k + 1) * (n - k + 2) - 3,
            hypothesis="[J]_n basepoint free with no generator in degree n+1 "
            "and no socle in degree n",
        )
    )
    return bounds


def classify(
    h: Union[HVector, List[int]], n: int, late_generators: Optional[bool] = None
) -> GrowthReport:
    """Select the growth regime of h from degree n to n+1.

    Parameters
    ----------
    h : HVector or list of int
        A Hilbert function indexed from degree 0, defined at least up to n+1.
    n : int
        The degree, at least 1.
    late_generators : bool, optional
        Pass ``True`` when J has minimal generators above degree n; the
        persistence polynomial is then not attached under maximal growth.
    """

    values = list(h.values if isinstance(h, HVector) else h)
    if n < 1 or len(values) < n + 2:
        raise HilbertGrowthValueError(f"h must be defined in degrees {n} and {n + 1}")
    valid, index = is_o_sequence(values)
    if not valid:
        raise HilbertGrowthValueError(f"h is not an O-sequence (fails at degree {index})")
    h_n, h_n1 = values[n], values[n + 1]
    if h_n < 1:
        raise HilbertGrowthValueError(f"h({n}) must be positive to classify its growth")
    gap = growth_gap(values, n)
    mg = mg_dimension(h_n, n)
    report: Dict[str, Any] = dict(
        n=n,
        h_n=h_n,
        h_n1=h_n1,
        gap=gap,
        expansion=str(macaulay_expand(h_n, n)),
        mg_dim=mg,
    )
    if gap == 0:
        report.update(regime=GrowthRegime.maximal, predicted_dims=[mg])
        if not late_generators:
            report.update(
                persistence_poly=str(hilbert_polynomial_from_expansion(h_n, n)),
                persistence_values=gotzmann_values(h_n, n, 5),
            )
    elif gap == 1 and h_n >= n + 1:
        predicted = [mg] + ([mg - 1] if mg >= 1 else [])
        report.update(
            regime=GrowthRegime.almost_maximal_high,
            predicted_dims=predicted,
            curve_degree_bound=curve_degree_bound(h_n, n),
        )
    elif gap == 1:
        report.update(
            regime=GrowthRegime.type_k_kminus1,
            predicted_dims=[EMPTY, 0],
            bounds=bounds_report(h_n, n) if h_n >= 2 else [],
        )
    else:
        report.update(regime=GrowthRegime.submaximal_other, predicted_dims=[])
    return GrowthReport(**report)


class ColonPattern(BaseModel):
    q: int = Field(description="Number of leading C(a+1, a) terms of the expansion")
    m: int = Field(description="Number of trailing C(a, a) terms of the expansion")
    p: int = Field(description="dim [S/(J, l)]_n")
    s: int = Field(description="dim [S/(J, l)]_{n+1}")
    label: str = Field(description="Which of (q-1,q-1), (q,q-1), (q,q) occurs")


def theorem_31_pattern(k: int, n: int, p: int, s: int) -> ColonPattern:
    """Read q and m off the n-binomial expansion of k and label the (p, s) pair."""

    q = curve_degree_bound(k, n)
    m = trailing_unit_terms(k, n)
    labels = {(q - 1, q - 1): "(q-1,q-1)", (q, q - 1): "(q,q-1)", (q, q): "(q,q)"}
    return ColonPattern(q=q, m=m, p=p, s=s, label=labels.get((p, s), "other"))


class ColonTable(BaseModel):
    """dim [S/J]_i = dim [S/(J:l)]_{i-1} + dim [S/(J,l)]_i for a general linear form l."""

    n: int = Field(description="The degree the table is centred on")
    linear_form: str = Field(description="The general linear form l")
    degrees: List[int]
    quotient: List[int] = Field(description="dim [S/J]_i")
    colon: List[int] = Field(description="dim [S/(J:l)]_{i-1}")
    restriction: List[int] = Field(description="dim [S/(J,l)]_i")
    green_ok: bool = Field(description="Restriction row within Green's bound")
    macaulay_ok: bool = Field(description="Quotient and restriction rows are O-sequence steps")
    pattern: Optional[ColonPattern] = None

    def to_text(self) -> str:
        headers = ["degree i"] + [str(d) for d in self.degrees]
        rows = [
            ["dim [S/J]_i"] + self.quotient,
            ["dim [S/(J:l)]_{i-1}"] + self.colon,
            ["dim [S/(J,l)]_i"] + self.restriction,
        ]
        return tabulate(rows, headers=headers)

    def __repr__(self) -> str:
        return self.to_text()


def _macaulay_steps_ok(degrees: List[int], row: List[int]) -> bool:
    for i, a, b in zip(degrees, row, row[1:]):
        if i < 1:
            continue
        if b > (macaulay_bound(a, i) if a > 0 else 0):
            return False
    return True


def colon_table(
    source: Union[ArtinianReduction, GradedSpan], n: int, seed: int = 0
) -> ColonTable:
    """Colon and restriction dimensions by a seeded general linear form around degree n."""

    span = source.span if isinstance(source, ArtinianReduction) else source
    if n < 1 or not span.covers(n - 1, n + 1):
        raise HilbertGrowthWindowError(
            f"the window {span.window} must cover degrees {n - 1}..{n + 1}"
        )
    form = random_linear_form(span.num_vars, random.Random(seed))
    degrees = list(range(span.d_min, n + 2))
    quotient = [span.hilbert_function(i) for i in degrees]
    restriction = [restriction_dimension(span, form, i) for i in degrees]
    colon = [
        colon_span(span, [form], (i - 1, i - 1)).hilbert_function(i - 1) if i >= 1 else 0
        for i in degrees
    ]
    for i, a, b, c in zip(degrees, quotient, colon, restriction):
        if a != b + c:
            raise TheoremViolationError(
                f"colon sequence is not exact in degree {i}",
                context={"quotient": a, "colon": b, "restriction": c},
            )
    green_ok = all(
        c <= green_bound(a, i)
        for i, a, c in zip(degrees, quotient, restriction)
        if i >= 1 and a >= 1
    )
    macaulay_ok = _macaulay_steps_ok(degrees, quotient) and _macaulay_steps_ok(
        degrees, restriction
    )
    pattern = None
    h_n = span.hilbert_function(n)
    if (
        h_n >= 1
        and macaulay_bound(h_n, n) - span.hilbert_function(n + 1) == 1
        and n + 1 <= h_n < binomial(n + 2, 2)
    ):
        pattern = theorem_31_pattern(
            h_n, n, restriction[degrees.index(n)], restriction[degrees.index(n + 1)]
        )
    return ColonTable(
        n=n,
        linear_form=str(form),
        degrees=degrees,
        quotient=quotient,
        colon=colon,
        restriction=restriction,
        green_ok=green_ok,
        macaulay_ok=macaulay_ok,
        pattern=pattern,
    )


class Verdict(str, enum.Enum):
    passed = "pass"
    failed = "fail"
    inconclusive = "inconclusive"


class PredictionCheck(BaseModel):
    verdict: Verdict
    measured: Optional[DimensionLabel] = Field(
        None, description="Measured base-locus dimension, 'empty' for no base locus"
    )
    measured_degree: Optional[int] = None
    predicted: List[DimensionLabel]
    degree_bounds: Dict[int, int] = Field(
        default={}, description="Largest allowed degree per dimension"
    )
    context: Dict[str, Any] = Field(default={})


def _measured(profile: BaseLocusProfile) -> Optional[DimensionLabel]:
    if profile.status == BaseLocusStatus.empty:
        return EMPTY
    if profile.status == BaseLocusStatus.undetermined:
        return None
    return profile.dimension


def _judge(
    profile: BaseLocusProfile,
    predicted: List[DimensionLabel],
    degree_bounds: Dict[int, int],
    context: Dict[str, Any],
    raise_on_fail: bool,
) -> PredictionCheck:
    measured = _measured(profile)
    common = dict(
        measured=measured,
        measured_degree=profile.degree,
        predicted=predicted,
        degree_bounds=degree_bounds,
        context=context,
    )
    if measured is None or not predicted:
        return PredictionCheck(verdict=Verdict.inconclusive, **common)
    ok = measured in predicted
    if ok and measured in degree_bounds and profile.degree is not None:
        ok = profile.degree <= degree_bounds[measured]
    if ok:
        return PredictionCheck(verdict=Verdict.passed, **common)
    logger.warning("Prediction failed: measured %s, predicted %s", measured, predicted)
    if raise_on_fail:
        raise TheoremViolationError(
            f"measured base locus {measured} is not among {predicted}",
            context={**context, "profile": pydantic_dict(profile)},
        )
    return PredictionCheck(verdict=Verdict.failed, **common)


def verify_prediction(
    profile: BaseLocusProfile, report: GrowthReport, raise_on_fail: bool = False
) -> PredictionCheck:
    """Compare a measured base-locus profile with the classifier's prediction.

    A determinable profile outside the predicted set is a failure; with
    ``raise_on_fail`` it raises :class:`TheoremViolationError` carrying both
    reports.
    """

    if profile.n != report.n:
        raise HilbertGrowthValueError(
            f"profile at degree {profile.n} does not match report at degree {report.n}"
        )
    degree_bounds = {}
    if report.regime == GrowthRegime.almost_maximal_high and report.curve_degree_bound:
        degree_bounds[1] = report.curve_degree_bound
    if report.regime == GrowthRegime.type_k_kminus1:
        degree_bounds[0] = report.h_n
    context = {"report": pydantic_dict(report)}
    return _judge(profile, report.predicted_dims, degree_bounds, context, raise_on_fail)


class PointClassification(BaseModel):
    """The classifier applied to the artinian reduction of a point set."""

    seed: int
    h_vector: List[int] = Field(description="h-vector of the points")
    reduction: GrowthReport = Field(description="Classification of the reduction")
    predicted_dims: List[DimensionLabel] = Field(
        description="Possible dimensions of the base locus of [I_Z]_n"
    )
    degree_bounds: Dict[int, int] = Field(default={})
    profile: Optional[BaseLocusProfile] = None
    check: Optional[PredictionCheck] = None


def classify_points(
    points: PointSet,
    n: int,
    seed: int = 0,
    measure: bool = True,
    raise_on_fail: bool = False,
    log_level=logging.DEBUG,
) -> PointClassification:
    """Classify the reduction of Z at degree n and predict the base locus of [I_Z]_n.

    The base locus of [I_Z]_n has dimension MG or MG+1 under almost maximal
    growth with h(n) >= n+1, and is at most one-dimensional (of degree at most
    k when it is a curve) in the (k, k-1) regime. With ``measure`` the base
    locus is profiled and checked against the prediction.
    """

    reduction = artinian_reduction(points, seed=seed, log_level=log_level)
    values = [reduction.h_vector[d] for d in range(max(len(reduction.h_vector), n + 2))]
    report = classify(values, n)
    degree_bounds: Dict[int, int] = {}
    if report.regime in (GrowthRegime.maximal, GrowthRegime.almost_maximal_high):
        predicted: List[DimensionLabel] = [report.mg_dim, report.mg_dim + 1]
    elif report.regime == GrowthRegime.type_k_kminus1:
        predicted = [0, 1]
        degree_bounds[1] = report.h_n
    else:
        predicted = []
    result = PointClassification(
        seed=seed,
        h_vector=reduction.h_vector.values,
        reduction=report,
        predicted_dims=predicted,
        degree_bounds=degree_bounds,
    )
    if measure:
        profile = base_locus_profile(points_span(points, (n, n)), n, log_level=log_level)
        result.profile = profile
        result.check = _judge(
            profile,
            predicted,
            degree_bounds,
            {"h_vector": reduction.h_vector.values, "n": n, "seed": seed},
            raise_on_fail,
        )
    return result
