import random

import pytest

from hilbert_growth.binomial_calculus import binomial, gotzmann_values, macaulay_bound
from hilbert_growth.constructions import build_prop_4_4
from hilbert_growth.errors import (
    HilbertGrowthValueError,
    HilbertGrowthWindowError,
    TheoremViolationError,
)
from hilbert_growth.graded_ideals import (
    BaseLocusProfile,
    BaseLocusStatus,
    GradedSpan,
    MonomialIdeal,
    base_locus_profile,
    lex_segment_ideal,
    monomial_hilbert_function,
    span_from_monomial_ideal,
)
from hilbert_growth.growth_classifier import (
    EMPTY,
    GrowthRegime,
    Verdict,
    bounds_report,
    classify,
    classify_points,
    colon_table,
    theorem_31_pattern,
    verify_prediction,
)

ALMOST_MAXIMAL = [1, 3, 6, 10, 15, 21, 21, 23]


def _values(span, top):
    return [span.hilbert_function(d) for d in range(top + 1)]


def test_classify_almost_maximal_high():
    report = classify(ALMOST_MAXIMAL, 6)
    assert report.regime == GrowthRegime.almost_maximal_high
    assert report.gap == 1
    assert report.mg_dim == 1
    assert report.predicted_dims == [1, 0]
    assert report.curve_degree_bound == 3
    assert report.persistence_poly is None


def test_classify_maximal():
    report = classify(ALMOST_MAXIMAL[:7] + [24], 6)
    assert report.regime == GrowthRegime.maximal
    assert report.predicted_dims == [1]
    assert report.persistence_poly == "3t+3"
    assert report.persistence_values == gotzmann_values(21, 6, 5)

    late = classify(ALMOST_MAXIMAL[:7] + [24], 6, late_generators=True)
    assert late.persistence_poly is None


def test_classify_type_k():
    report = classify([1, 3, 6, 7, 7, 7, 7, 7, 7, 6], 8)
    assert report.regime == GrowthRegime.type_k_kminus1
    assert report.predicted_dims == [EMPTY, 0]
    assert [b.name for b in report.bounds][0] == "degree_k_curve"
    assert "regime" in repr(report)


def test_classify_submaximal_other():
    report = classify(ALMOST_MAXIMAL[:7] + [21], 6)
    assert report.gap == 3
    assert report.regime == GrowthRegime.submaximal_other
    assert report.predicted_dims == []


def test_classify_rejects():
    with pytest.raises(HilbertGrowthValueError):
        classify([1, 2, 4], 1)
    with pytest.raises(HilbertGrowthValueError):
        classify([1, 3, 6], 2)
    with pytest.raises(HilbertGrowthValueError):
        classify([1, 1, 0, 0], 2)
    with pytest.raises(HilbertGrowthValueError):
        classify([1, 3, 6], 0)


def test_bounds_report():
    values = {b.name: b.value for b in bounds_report(7, 8, d=3)}
    assert values["degree_k_curve"] == 48
    assert values["degree_k_minus_1_curve"] == 45
    assert values["degree_d_curve_low"] == 21
    assert "degree_d_curve_high" not in values
    assert values["plane"] == 49

    high = {b.name: b.value for b in bounds_report(7, 8, d=1)}
    assert high["degree_d_curve_high"] == 1 + 5

    with pytest.raises(HilbertGrowthValueError):
        bounds_report(1, 3)
    with pytest.raises(HilbertGrowthValueError):
        bounds_report(7, 8, d=7)


def test_theorem_31_pattern():
    pattern = theorem_31_pattern(21, 6, 3, 3)
    assert (pattern.q, pattern.m) == (3, 3)
    assert pattern.label == "(q,q)"
    assert theorem_31_pattern(21, 6, 3, 2).label == "(q,q-1)"
    assert theorem_31_pattern(21, 6, 2, 2).label == "(q-1,q-1)"
    assert theorem_31_pattern(21, 6, 1, 1).label == "other"


def test_colon_table_example(example33_spans):
    span = example33_spans[1]
    table = colon_table(span, 6, seed=3)
    assert table.quotient == _values(span, 7)
    for a, b, c in zip(table.quotient, table.colon, table.restriction):
        assert a == b + c
    assert table.green_ok
    assert table.macaulay_ok
    assert table.pattern is not None
    assert table.pattern.label != "other"
    assert "dim [S/J]_i" in table.to_text()


def test_colon_table_zero_ideal():
    table = colon_table(GradedSpan.zero_ideal(3, (0, 5)), 3)
    assert table.quotient == [1, 3, 6, 10, 15]
    assert table.restriction == [1, 2, 3, 4, 5]
    assert table.colon == [0, 1, 3, 6, 10]
    assert table.green_ok
    assert table.pattern is None

    with pytest.raises(HilbertGrowthWindowError):
        colon_table(GradedSpan.zero_ideal(3, (3, 4)), 3)


def test_verify_prediction_example(example33_spans):
    for which, span in example33_spans.items():
        report = classify(_values(span, 7), 6)
        check = verify_prediction(base_locus_profile(span, 6), report)
        assert check.verdict == Verdict.passed, which

    span = example33_spans[1]
    report = classify(_values(span, 8), 7)
    assert report.regime == GrowthRegime.maximal
    profile = base_locus_profile(span, 7)
    assert verify_prediction(profile, report).verdict == Verdict.passed


def test_verify_prediction_failure():
    report = classify(ALMOST_MAXIMAL, 6)
    wrong = BaseLocusProfile(
        n=6, status=BaseLocusStatus.positive_dimensional, dimension=2, degree=1
    )
    assert verify_prediction(wrong, report).verdict == Verdict.failed
    with pytest.raises(TheoremViolationError) as e:
        verify_prediction(wrong, report, raise_on_fail=True)
    assert "report" in e.value.context

    too_long = BaseLocusProfile(
        n=6, status=BaseLocusStatus.positive_dimensional, dimension=1, degree=4
    )
    assert verify_prediction(too_long, report).verdict == Verdict.failed

    unknown = BaseLocusProfile(n=6, status=BaseLocusStatus.undetermined)
    assert verify_prediction(unknown, report).verdict == Verdict.inconclusive

    with pytest.raises(HilbertGrowthValueError):
        verify_prediction(BaseLocusProfile(n=5, status=BaseLocusStatus.empty), report)


def test_classify_points(prop44_instance):
    points, recipe = prop44_instance
    result = classify_points(points, 3)
    assert result.h_vector == recipe.measured_h_vector
    assert result.reduction.regime == GrowthRegime.type_k_kminus1
    assert result.predicted_dims == [0, 1]
    assert result.degree_bounds == {1: 2}
    assert (result.profile.dimension, result.profile.degree) == (1, 1)
    assert result.check.verdict == Verdict.passed

    quick = classify_points(points, 3, measure=False)
    assert quick.profile is None and quick.check is None


INSTANCES = 50
GAP_ONE = (GrowthRegime.almost_maximal_high, GrowthRegime.type_k_kminus1)


def _random_monomial_ideal(rng):
    generators = []
    for _ in range(rng.randint(2, 6)):
        degree = rng.randint(2, 5)
        a = rng.randint(0, degree)
        b = rng.randint(0, degree - a)
        generators.append((a, b, degree - a - b))
    return MonomialIdeal(3, tuple(generators))


def _gap_one_reports(values):
    for n in range(1, len(values) - 1):
        if values[n] < 1:
            break
        report = classify(values, n)
        if report.regime in GAP_ONE:
            yield report


def _lex_instance(rng, regime):
    # maximal up to n-1, then k in degree n and one less than the bound in n+1
    n = rng.randint(2, 5)
    if regime == GrowthRegime.almost_maximal_high:
        k = rng.randint(n + 1, binomial(n + 2, 2))
    else:
        k = rng.randint(1, n)
    full = [binomial(d + 2, 2) for d in range(n)]
    return full + [k, macaulay_bound(k, n) - 1], n


def _tally(checks):
    verdicts = [c.verdict for c in checks]
    assert Verdict.failed not in verdicts
    determinable = [v for v in verdicts if v != Verdict.inconclusive]
    assert all(v == Verdict.passed for v in determinable)
    return len(determinable)


def test_prediction_on_random_monomial_ideals():
    rng = random.Random(2024)
    checks = {regime: [] for regime in GAP_ONE}
    for _ in range(8000):
        ideal = _random_monomial_ideal(rng)
        values = [monomial_hilbert_function(ideal, d) for d in range(12)]
        for report in _gap_one_reports(values):
            if len(checks[report.regime]) == INSTANCES:
                continue
            span = span_from_monomial_ideal(ideal, (report.n, report.n))
            check = verify_prediction(base_locus_profile(span, report.n), report)
            assert check.verdict != Verdict.failed, (ideal, report.n)
            checks[report.regime].append(check)
        if all(len(c) == INSTANCES for c in checks.values()):
            break
    for regime, regime_checks in checks.items():
        assert len(regime_checks) == INSTANCES, regime
        _tally(regime_checks)


@pytest.mark.parametrize("regime", GAP_ONE)
def test_prediction_on_lex_segments(regime):
    rng = random.Random(7)
    checks = []
    for _ in range(INSTANCES):
        h, n = _lex_instance(rng, regime)
        report = classify(h, n)
        assert report.regime == regime, h
        span = span_from_monomial_ideal(lex_segment_ideal(h, 3), (0, n + 1))
        checks.append(verify_prediction(base_locus_profile(span, n), report))
    # maximal growth of the lex part certifies every profile
    assert _tally(checks) == INSTANCES


def test_prediction_on_hand_picked_lex_segments():
    for h, n in (
        (ALMOST_MAXIMAL, 6),
        ([1, 3, 6, 10, 12, 14], 4),
        ([1, 3, 5, 7, 8], 3),
    ):
        lex = lex_segment_ideal(h, 3)
        report = classify(h, n)
        assert report.regime == GrowthRegime.almost_maximal_high
        span = span_from_monomial_ideal(lex, (0, len(h) - 1))
        check = verify_prediction(base_locus_profile(span, n), report)
        assert check.verdict == Verdict.passed


@pytest.mark.slow
def test_prediction_on_curve_base_locus_constructions():
    checks = []
    for seed in range(INSTANCES):
        d, k, n = (1, 2, 3) if seed % 2 == 0 else (2, 2, 4)
        points, _ = build_prop_4_4(d, k, n, seed=seed)
        result = classify_points(points, n, seed=seed)
        assert result.reduction.regime == GrowthRegime.type_k_kminus1
        checks.append(result.check)
    _tally(checks)
