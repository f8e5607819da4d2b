import pytest

from hilbert_growth.constructions import (
    build_prop_4_4,
    complete_intersection_hvector,
    designed_plane,
    example_3_3,
    example_4_6,
    general_points,
    line_configuration_hvector,
    line_grid,
    plane_regime_hvector,
    points_on_plane_curve,
    truncate_hvector,
)
from hilbert_growth.errors import HilbertGrowthValueError
from hilbert_growth.graded_ideals import base_locus_profile
from hilbert_growth.point_geometry import h_vector, hf_points, points_span


def test_line_configuration_hvector():
    assert line_configuration_hvector([5, 3]) == [1, 2, 2, 2, 1]
    assert line_configuration_hvector([3]) == [1, 1, 1]
    assert line_configuration_hvector([]) == []
    with pytest.raises(HilbertGrowthValueError):
        line_configuration_hvector([2, 3])


def test_complete_intersection_hvector():
    assert complete_intersection_hvector(2, 2) == [1, 2, 1]
    assert complete_intersection_hvector(3, 4) == [1, 2, 3, 3, 2, 1]
    assert complete_intersection_hvector(4, 6).total == 24
    with pytest.raises(HilbertGrowthValueError):
        complete_intersection_hvector(0, 2)


def test_plane_regime_hvector():
    assert plane_regime_hvector(2, 3) == [1, 2, 3, 2, 1]
    assert plane_regime_hvector(3, 5) == [1, 2, 3, 4, 4, 3, 2]


def test_designed_plane():
    plane = designed_plane(4)
    assert plane.projective_dimension == 2
    assert plane.contains_point((1, 2, 3, 0, 0))
    with pytest.raises(HilbertGrowthValueError):
        designed_plane(1)


def test_points_on_plane_curve():
    line = points_on_plane_curve(1, 3, seed=0)
    assert h_vector(line) == [1, 1, 1, 1]

    conic = points_on_plane_curve(2, 4, seed=0)
    assert len(conic) == 10
    assert h_vector(conic) == [1, 2, 2, 2, 2, 1]

    embedded = points_on_plane_curve(2, 4, r=3, seed=0)
    assert all(p[3] == 0 for p in embedded.points)

    with pytest.raises(HilbertGrowthValueError):
        points_on_plane_curve(3, 2)


def test_line_grid():
    grid = line_grid(3, 3, seed=2)
    assert len(grid) == 9
    assert h_vector(grid) == [1, 2, 3, 2, 1]


def test_truncate_hvector():
    grid = line_grid(4, 4, seed=0)
    truncated = truncate_hvector(grid, 5)
    assert h_vector(truncated) == [1, 2, 3, 4, 3, 2]
    assert len(truncated) == len(grid) - 1
    assert truncate_hvector(truncated, 5) == truncated

    with pytest.raises(HilbertGrowthValueError):
        truncate_hvector(truncated, 7)


def test_general_points():
    points = general_points(5, 2, seed=0)
    assert h_vector(points) == [1, 2, 2]
    assert [hf_points(points, d) for d in range(3)] == [1, 3, 5]
    assert len(general_points(1, 3)) == 1
    assert len(general_points(0, 2)) == 0
    with pytest.raises(HilbertGrowthValueError):
        general_points(-1, 2)


def test_build_prop_4_4(prop44_instance):
    points, recipe = prop44_instance
    assert recipe.expected_h_vector == [1, 3, 3, 2, 1]
    assert recipe.measured_h_vector == recipe.expected_h_vector
    assert recipe.expected_base_locus == {"dimension": 1, "degree": 1}
    assert len(points) == sum(recipe.expected_h_vector)

    profile = base_locus_profile(points_span(points, (3, 3)), 3)
    assert (profile.dimension, profile.degree) == (1, 1)


@pytest.mark.parametrize(
    "d,k,n,seed", [(2, 2, 4, 3), (2, 3, 5, 3), (2, 4, 6, 0), (3, 3, 5, 0)]
)
def test_build_prop_4_4_curve(d, k, n, seed):
    points, recipe = build_prop_4_4(d, k, n, seed=seed)
    delta = h_vector(points)
    assert (delta[n], delta[n + 1], delta[n + 2]) == (k, k - 1, 0)
    profile = base_locus_profile(points_span(points, (n, n)), n)
    assert (profile.dimension, profile.degree) == (1, d)


def test_build_prop_4_4_rejects():
    with pytest.raises(HilbertGrowthValueError):
        build_prop_4_4(3, 2, 4)
    with pytest.raises(HilbertGrowthValueError):
        build_prop_4_4(1, 2, 3, r=2)


def test_example_4_6_rejects_space_curves():
    with pytest.raises(HilbertGrowthValueError):
        example_4_6(3)


def test_example_3_3_rejects():
    with pytest.raises(HilbertGrowthValueError):
        example_3_3(5)
