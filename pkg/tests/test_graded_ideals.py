import random
from fractions import Fraction

import pytest

from hilbert_growth.binomial_calculus import (
    binomial,
    gotzmann_values,
    macaulay_bound,
    mg_dimension,
)
from hilbert_growth.constructions import example_3_3_ideal
from hilbert_growth.errors import (
    HilbertGrowthFormatError,
    HilbertGrowthValueError,
    HilbertGrowthWindowError,
    HypothesisError,
)
from hilbert_growth.exact_algebra import Form, monomials
from hilbert_growth.graded_ideals import (
    BaseLocusStatus,
    GradedSpan,
    MonomialIdeal,
    base_locus_profile,
    basepoint_free_check,
    colon_by_forms,
    colon_span,
    hilbert_polynomial_fit,
    is_form_list,
    lex_segment_ideal,
    min_generator_count,
    minimal_generators,
    monomial_hilbert_function,
    prop61_tail_check,
    read_forms,
    read_monomial_ideal,
    restriction_dimension,
    socle_dimension,
    span_from_generators,
    span_from_monomial_ideal,
    write_forms,
    write_monomial_ideal,
)
from hilbert_growth.growth_classifier import classify

X1 = Form.variable(0, 3)


def _random_form(num_vars, degree, rng):
    return Form.from_vector(
        num_vars, degree, [rng.randint(-9, 9) for _ in monomials(num_vars, degree)]
    )


def test_span_from_generators():
    span = span_from_generators([X1], (0, 4))
    assert span.component_dimension(2) == 3
    assert span.hilbert_function(2) == 3
    assert all(span.contains(f) for f in [X1 * X1, X1 * Form.variable(2, 3)])

    zero = span_from_generators([], (0, 6), num_vars=3)
    assert zero.hilbert_function(6) == 28

    with pytest.raises(HilbertGrowthWindowError):
        span_from_generators([X1], (3, 2))
    with pytest.raises(HilbertGrowthValueError):
        span_from_generators([], (0, 2))


def test_span_window_errors():
    span = span_from_generators([X1], (2, 4))
    assert span.window == (2, 4)
    assert span.restrict((3, 4)).hilbert_function(3) == span.hilbert_function(3)
    with pytest.raises(HilbertGrowthWindowError):
        span.hilbert_function(5)


def test_example33_hilbert_function(example33_spans):
    for which, span in example33_spans.items():
        assert span.hilbert_function(6) == 21, which
        assert span.hilbert_function(7) == 23, which


def test_example33_macaulay_consistency(example33_spans):
    for span in example33_spans.values():
        for d in range(1, span.d_max):
            h = span.hilbert_function(d)
            assert span.hilbert_function(d + 1) <= macaulay_bound(h, d)


def test_monomial_hilbert_function():
    assert monomial_hilbert_function(MonomialIdeal(3, ((1, 0, 0),)), 5) == 6
    base = MonomialIdeal(3, example_3_3_ideal(1).generators[:6])
    assert monomial_hilbert_function(base, 6) == 22
    for d in range(6):
        assert monomial_hilbert_function(MonomialIdeal(3), d) == binomial(d + 2, 2)


def test_monomial_fast_path_agrees_with_span():
    rng = random.Random(5)
    for _ in range(15):
        r = rng.randint(2, 4)
        generators = [
            tuple(rng.randint(0, 3) for _ in range(r)) for _ in range(rng.randint(1, 6))
        ]
        generators = [g for g in generators if any(g)] or [(1,) + (0,) * (r - 1)]
        ideal = MonomialIdeal(r, tuple(generators))
        forms = ideal.to_forms()
        # a redundant binomial generator forces the general path
        forms.append(forms[0] * Form.linear([1] * r))
        span = span_from_generators(forms, (0, 7))
        for d in range(8):
            assert monomial_hilbert_function(ideal, d) == span.hilbert_function(d)


def test_monomial_ideal_is_minimal():
    ideal = MonomialIdeal(2, ((1, 0), (2, 0), (1, 1), (0, 3)))
    assert ideal.generators == ((1, 0), (0, 3))


def test_lex_segment_ideal():
    assert lex_segment_ideal([1, 1, 1, 0], 2).generators == ((1, 0), (0, 3))
    assert all(sum(g) > 2 for g in lex_segment_ideal([1, 3, 6, 8], 3).generators)

    span = span_from_monomial_ideal(example_3_3_ideal(1), (0, 10))
    h = span.hilbert_values().values
    lex = lex_segment_ideal(h, 3)
    assert [monomial_hilbert_function(lex, d) for d in range(11)] == h

    open_top = lex_segment_ideal([1, 3, 2], 3)
    assert [monomial_hilbert_function(open_top, d) for d in range(5)] == [1, 3, 2, 2, 2]
    closed = lex_segment_ideal([1, 3, 2, 0], 3)
    assert [monomial_hilbert_function(closed, d) for d in range(5)] == [1, 3, 2, 0, 0]

    with pytest.raises(HilbertGrowthValueError):
        lex_segment_ideal([1, 2, 4], 3)
    with pytest.raises(HilbertGrowthValueError):
        lex_segment_ideal([1, 4], 3)


def test_colon_by_forms():
    span = span_from_monomial_ideal(MonomialIdeal(3, ((2, 0, 0),)), (0, 4))
    (form,) = colon_by_forms(span, [X1], 1)
    assert form.monic() == X1

    with pytest.raises(HilbertGrowthWindowError):
        colon_by_forms(span, [X1], 4)


def test_colon_by_general_form_keeps_ideal(example33_spans):
    span = example33_spans[1]
    rng = random.Random(1)
    form = Form.linear([rng.randint(1, 50) for _ in range(3)])
    colon = colon_span(span, [form], (0, 10))
    for d in range(11):
        assert colon.hilbert_function(d) <= span.hilbert_function(d)
        assert all(colon.contains(g) for g in span.component(d)[:5])


def test_truncate(example33_spans):
    span = example33_spans[1]
    truncated = span.truncate(6, 9)
    assert truncated.window == (0, 9)
    assert truncated.hilbert_function(6) == 21
    # (x^4 (x, y, z)^2, x^3 y^3) has Hilbert function 3d + 3 from degree 6
    assert [truncated.hilbert_function(d) for d in (7, 8, 9)] == [24, 27, 30]


def test_restriction_dimension():
    zero = GradedSpan.zero_ideal(3, (0, 5))
    form = Form.linear([1, 2, 3])
    assert [restriction_dimension(zero, form, d) for d in range(6)] == [1, 2, 3, 4, 5, 6]


def test_min_generator_count(example33_spans):
    span = span_from_generators([X1], (0, 3))
    assert min_generator_count(span, 2) == 0
    assert min_generator_count(span, 1) == 1
    assert min_generator_count(example33_spans[1], 7) == 1
    for which in (2, 3, 4):
        assert min_generator_count(example33_spans[which], 7) == 0


def test_minimal_generators(example33_spans):
    generators = minimal_generators(example33_spans[1])
    assert sorted(g.leading_monomial for g in generators) == sorted(
        example_3_3_ideal(1).generators
    )


def test_hilbert_polynomial_fit(example33_spans):
    assert str(hilbert_polynomial_fit([(d, 5) for d in range(4)])) == "5"
    expected = {1: "3t+2", 2: "2t+9", 3: "t+16", 4: "23"}
    for which, span in example33_spans.items():
        values = [(d, span.hilbert_function(d)) for d in range(7, 14)]
        assert str(hilbert_polynomial_fit(values)) == expected[which]

    assert hilbert_polynomial_fit([(d, 2**d) for d in range(6)]) is None
    with pytest.raises(HilbertGrowthValueError):
        hilbert_polynomial_fit([(0, 1), (1, 1)])


def test_base_locus_profile(example33_spans):
    expected = {
        1: (BaseLocusStatus.positive_dimensional, 1, 3),
        2: (BaseLocusStatus.positive_dimensional, 1, 2),
        3: (BaseLocusStatus.positive_dimensional, 1, 1),
        4: (BaseLocusStatus.zero_dimensional, 0, 24),
    }
    for which, span in example33_spans.items():
        profile = base_locus_profile(span, 7)
        assert (profile.status, profile.dimension, profile.degree) == expected[which]


def test_base_locus_profile_empty():
    ideal = MonomialIdeal(3, ((2, 0, 0), (0, 2, 0), (0, 0, 2)))
    profile = base_locus_profile(span_from_monomial_ideal(ideal, (2, 2)), 2)
    assert profile.status == BaseLocusStatus.empty
    assert profile.dimension is None


@pytest.mark.parametrize(
    "generators,num_vars",
    [(((1, 0, 0),), 3), (((1, 0, 0, 0), (0, 1, 0, 0)), 4), (((1, 0, 0, 0),), 4)],
)
def test_gotzmann_persistence(generators, num_vars):
    n = 3
    ideal = MonomialIdeal(num_vars, generators)
    span = span_from_monomial_ideal(ideal, (0, n + 1))
    report = classify(span.hilbert_values().values, n)
    assert report.gap == 0
    profile = base_locus_profile(span, n)
    assert profile.dimension == mg_dimension(span.hilbert_function(n), n)
    polynomial = profile.polynomial()
    assert [polynomial(n + d) for d in range(6)] == gotzmann_values(
        span.hilbert_function(n), n, 5
    )


@pytest.mark.parametrize("num_vars,n", [(3, 2), (3, 3), (4, 2)])
def test_gotzmann_persistence_hypersurface(num_vars, n):
    rng = random.Random(n * 10 + num_vars)
    span = span_from_generators([_random_form(num_vars, n, rng)], (0, n + 5))
    report = classify(span.hilbert_values().values, n)
    assert report.gap == 0
    assert [span.hilbert_function(n + d) for d in range(6)] == gotzmann_values(
        span.hilbert_function(n), n, 5
    )


def test_basepoint_free_check():
    for n in (2, 3):
        powers = MonomialIdeal(3, ((n, 0, 0), (0, n, 0), (0, 0, n)))
        assert basepoint_free_check(span_from_monomial_ideal(powers, (n, n)), n)
        assert not basepoint_free_check(span_from_generators([X1], (n, n)), n)


def test_socle_dimension():
    ci = span_from_monomial_ideal(MonomialIdeal(2, ((2, 0), (0, 2))), (0, 3))
    assert socle_dimension(ci, 2) == 1
    assert socle_dimension(ci, 1) == 0
    assert socle_dimension(GradedSpan.zero_ideal(3, (0, 4)), 3) == 0


def test_prop61_tail():
    rng = random.Random(2)
    n = 4
    f, g = _random_form(2, n, rng), _random_form(2, n, rng)
    span = span_from_generators([f, g], (0, 10))
    assert [span.hilbert_function(d) for d in (4, 5)] == [3, 2]
    assert prop61_tail_check(span, n)

    cubics = [_random_form(2, 3, rng) for _ in range(3)]
    assert prop61_tail_check(span_from_generators(cubics, (0, 6)), 3)

    late = span_from_generators([f, g, _random_form(2, 6, rng)], (0, 10))
    with pytest.raises(HypothesisError) as e:
        prop61_tail_check(late, n)
    assert e.value.hypothesis == "no_late_generators"

    line = span_from_generators([Form.variable(0, 2)], (0, 6))
    with pytest.raises(HypothesisError) as e:
        prop61_tail_check(line, 2)
    assert e.value.hypothesis == "basepoint_free"


def test_prop61_tail_seeded_instances():
    for seed in range(20):
        rng = random.Random(100 + seed)
        n = 3 + seed % 2
        f, g = _random_form(2, n, rng), _random_form(2, n, rng)
        assert prop61_tail_check(span_from_generators([f, g], (0, 2 * n)), n), seed


def test_monomial_ideal_format():
    ideal = read_monomial_ideal("# J2\nvars 3\n6 0 0\n\n2 4 0  # extra\n")
    assert ideal.generators == ((6, 0, 0), (2, 4, 0))
    assert read_monomial_ideal(write_monomial_ideal(ideal)) == ideal
    assert not is_form_list(write_monomial_ideal(ideal))

    with pytest.raises(HilbertGrowthFormatError) as e:
        read_monomial_ideal("vars 3\n1 0\n")
    assert e.value.line == 2
    with pytest.raises(HilbertGrowthFormatError) as e:
        read_monomial_ideal("1 0 0\n")
    assert e.value.line == 1


def test_form_list_format():
    num_vars, forms = read_forms("vars 2 deg 2\n1 1 1\n-1/2 0 2\n\n3 1 0\n")
    assert num_vars == 2
    assert forms[0].coefficient((0, 2)) == Fraction(-1, 2)
    assert forms[1] == Form.linear([3, 0])
    assert is_form_list(write_forms(forms))
    assert read_forms(write_forms(forms)) == (2, forms)

    with pytest.raises(HilbertGrowthFormatError) as e:
        read_forms("vars 2 deg 1\n1 2 0\n")
    assert e.value.line == 2
    with pytest.raises(HilbertGrowthFormatError) as e:
        read_forms("vars 2 deg 2\n1 2 0\nx 1 1\n")
    assert e.value.line == 3
