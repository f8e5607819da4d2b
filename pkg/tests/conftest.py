import pytest

from hilbert_growth.constructions import build_plane_regime, build_prop_4_4, example_3_3


@pytest.fixture(scope="session")
def seed():
    return 0


@pytest.fixture(scope="session")
def example33_spans(seed):
    return {which: example_3_3(which, seed=seed) for which in (1, 2, 3, 4)}


@pytest.fixture(scope="session")
def plane_instance(seed):
    points, plane, recipe = build_plane_regime(2, 3, 3, seed=seed)
    return points, plane, recipe


@pytest.fixture(scope="session")
def prop44_instance(seed):
    return build_prop_4_4(1, 2, 3, 3, seed=seed)
