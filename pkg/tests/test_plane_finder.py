import pytest

from hilbert_growth.binomial_calculus import binomial
from hilbert_growth.constructions import build_plane_regime, designed_plane
from hilbert_growth.errors import HypothesisError
from hilbert_growth.exact_algebra import evaluate
from hilbert_growth.plane_finder import annihilator_line, check_hypotheses, find_plane
from hilbert_growth.point_geometry import artinian_reduction


def test_check_hypotheses_pass(plane_instance):
    points, _, _ = plane_instance
    log = check_hypotheses(points, 3, 2)
    assert log.all_passed
    assert log.first_failure() is None
    assert "basepoint_free" in repr(log)


def test_check_hypotheses_base_locus(prop44_instance):
    points, _ = prop44_instance
    log = check_hypotheses(points, 3, 2)
    assert not log.all_passed
    (free,) = [c for c in log.checks if c.name == "basepoint_free"]
    assert not free.passed


def test_check_hypotheses_tail_shape(plane_instance):
    points, _, _ = plane_instance
    log = check_hypotheses(points, 3, 1)
    assert log.first_failure().name == "tail_shape"
    assert all(not c.passed for c in log.checks if c.gating)

    with pytest.raises(HypothesisError) as e:
        find_plane(points, 3, 1)
    assert e.value.hypothesis == "tail_shape"


def test_annihilator_line(plane_instance):
    points, _, _ = plane_instance
    reduction = artinian_reduction(points, seed=5)
    forms, rank = annihilator_line(reduction, 3, seed=5)
    assert rank == 2
    assert len(forms) == points.ambient_dim - 2


def test_find_plane(plane_instance):
    points, plane, _ = plane_instance
    certificate = find_plane(points, 3, 2)
    assert certificate.subspace().same_as(plane)
    assert certificate.subspace().same_as(designed_plane(3))
    assert certificate.entry_span_rank == 2
    assert certificate.bound.actual >= certificate.bound.required
    assert len(certificate.seeds) == 3

    z1, z2 = certificate.split(points)
    assert len(z1) + len(z2) == len(points)
    for form in certificate.subspace().defining_forms:
        assert all(evaluate(form, p) == 0 for p in z1.points)
    for row in certificate.delta_table:
        if row.t >= 3:
            assert row.z1 == row.z
        if row.t >= 2:
            assert row.z2 == 0
    assert "plane: V(" in certificate.to_text()


def test_find_plane_rejects_curve_base_locus(prop44_instance):
    points, _ = prop44_instance
    with pytest.raises(HypothesisError):
        find_plane(points, 3, 2)


@pytest.mark.parametrize("k,n,r", [(2, 3, 3), (3, 4, 3), (3, 5, 4)])
def test_plane_regime_grid(k, n, r):
    points, plane, recipe = build_plane_regime(k, n, r, seed=1, extra_points=r - 2)
    assert recipe.measured_h_vector == recipe.expected_h_vector
    certificate = find_plane(points, n, k, seed=1)
    assert certificate.subspace().same_as(plane)
    assert certificate.bound.required == binomial(k + 1, 2) + (k + 1) * (n - k + 2) - 3
    assert len(certificate.z2_indices) == r - 2
