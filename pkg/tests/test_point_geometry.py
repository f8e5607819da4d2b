from fractions import Fraction

import pytest

from hilbert_growth.constructions import general_points, points_on_lines
from hilbert_growth.errors import (
    HilbertGrowthFormatError,
    HilbertGrowthValueError,
    HypothesisError,
)
from hilbert_growth.exact_algebra import evaluate
from hilbert_growth.point_geometry import (
    PointSet,
    artinian_reduction,
    davis_decompose,
    h_vector,
    hf_points,
    ideal_component,
    multiplication_pencil,
    normalize_point,
    points_span,
    read_points,
    write_points,
)


def test_normalize_point():
    assert normalize_point((2, 4, 2)) == (1, 2, 1)
    assert normalize_point((3, 0)) == (1, 0)
    with pytest.raises(HilbertGrowthValueError):
        normalize_point((0, 0, 0))


def test_point_set_validation():
    with pytest.raises(HilbertGrowthValueError):
        PointSet(2, ((1, 0),))
    with pytest.raises(HilbertGrowthValueError):
        PointSet(1, ((1, 1), (2, 2)))
    with pytest.raises(HilbertGrowthValueError):
        PointSet(0)


def test_hf_points():
    single = PointSet(2, ((1, 2, 3),))
    assert [hf_points(single, d) for d in range(4)] == [1, 1, 1, 1]

    points = general_points(4, 2, seed=0)
    assert hf_points(points, 0) == 1
    assert hf_points(points, 1) == 3
    assert hf_points(points, 2) == 4
    assert hf_points(points, -1) == 0


def test_h_vector():
    collinear = PointSet(2, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    assert h_vector(collinear) == [1, 1, 1]
    assert h_vector(PointSet(2)) == []

    points = points_on_lines([5, 3], seed=1)
    delta = h_vector(points)
    assert delta == [1, 2, 2, 2, 1]
    assert delta.total == len(points)


def test_ideal_component():
    ends = PointSet(1, ((1, 0), (0, 1)))
    (form,) = ideal_component(ends, 2)
    assert form.monic().terms == (((1, 1), 1),)

    points = general_points(5, 2, seed=3)
    (conic,) = ideal_component(points, 2)
    assert all(evaluate(conic, p) == 0 for p in points.points)

    for d in range(4):
        forms = ideal_component(points, d)
        assert len(forms) + hf_points(points, d) == (d + 1) * (d + 2) // 2


def test_points_span_matches_hilbert_function():
    points = points_on_lines([4, 2], seed=2)
    span = points_span(points, (0, 5))
    assert [span.hilbert_function(d) for d in range(6)] == [hf_points(points, d) for d in range(6)]


def test_artinian_reduction_single_point():
    reduction = artinian_reduction(PointSet(2, ((1, 2, 3),)), seed=4)
    assert reduction.h_vector == [1]
    assert reduction.hilbert_function(0) == 1
    assert reduction.hilbert_function(1) == 0
    assert all(c != 0 for c in reduction.reduction_form.linear_coefficients())


def test_artinian_reduction_matches_h_vector():
    points = points_on_lines([5, 3], seed=1)
    reduction = artinian_reduction(points, seed=0)
    assert reduction.num_vars == 2
    assert [reduction.hilbert_function(d) for d in range(7)] == [1, 2, 2, 2, 1, 0, 0]


def test_multiplication_pencil(plane_instance):
    points, _, _ = plane_instance
    reduction = artinian_reduction(points, seed=0)

    pencil = multiplication_pencil(reduction, 3)
    assert (pencil.source_dim, pencil.target_dim) == (2, 1)
    assert len(pencil.matrices) == reduction.num_vars
    direction = [Fraction(3), Fraction(-5, 2), Fraction(7)]
    assert pencil.value(direction).rows == 1

    with pytest.raises(HypothesisError) as e:
        multiplication_pencil(reduction, 1)
    assert e.value.hypothesis == "regime"
    with pytest.raises(HilbertGrowthValueError):
        pencil.value([1, 2])


def test_davis_decompose_two_lines():
    points = points_on_lines([5, 3], seed=1)
    gcd, z1, z2, report = davis_decompose(points, 2, 2)
    assert gcd.degree == 2
    assert len(z1) == len(points) and len(z2) == 0
    assert report.z2_vanishes
    assert report.identity_delta
    assert report.delta_z[:5] == [1, 2, 2, 2, 1]


def test_davis_decompose_one_line():
    points = PointSet(2, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0)))
    gcd, z1, z2, report = davis_decompose(points, 1, 1)
    assert gcd.degree == 1
    assert all(evaluate(gcd, p) == 0 for p in points.points)
    assert report.z2_indices == []


def test_davis_decompose_three_lines():
    points = points_on_lines([6, 5, 4], seed=2)
    assert h_vector(points) == [1, 2, 3, 3, 3, 3]
    gcd, _, z2, report = davis_decompose(points, 3, 3)
    assert gcd.degree == 3
    assert len(z2) == 0
    assert report.z2_vanishes


def test_davis_decompose_rejects():
    with pytest.raises(HilbertGrowthValueError):
        davis_decompose(PointSet(3, ((1, 0, 0, 0),)), 1, 1)
    with pytest.raises(HypothesisError) as e:
        davis_decompose(points_on_lines([5, 3], seed=1), 0, 1)
    assert e.value.hypothesis == "equal_values"


def test_point_format():
    points = read_points("ambient 2\n1 0 0\n0 1 0  # second\n\n1/2 1 1\n")
    assert len(points) == 3
    assert points.points[2] == (Fraction(1, 2), 1, 1)
    assert read_points(write_points(points)) == points


@pytest.mark.parametrize(
    "text,line",
    [
        ("1 0 0\n", 1),
        ("ambient x\n", 1),
        ("ambient 2\n1 0\n", 2),
        ("ambient 2\n0 0 0\n", 2),
        ("# header\nambient 2\n1 0 0\n1 a 0\n", 4),
        ("ambient 1\n1 1\n2 2\n", None),
        ("", None),
    ],
)
def test_point_format_errors(text, line):
    with pytest.raises(HilbertGrowthFormatError) as e:
        read_points(text)
    assert e.value.line == line
