import pytest

from disk_evac.analysis import special_points
from disk_evac.geom import Robot
from disk_evac.strategy import BASELINE, PAPER, build_trajectory

E1 = 0.629973871925
E2 = 2.590020657077
E4 = 2.972352082515

# a generic two-cut point away from the published optimum
GENERIC = ((2.5, 0.7, 0.5), (2.9, 0.2, 0.15))


@pytest.fixture
def paper():
    return PAPER


@pytest.fixture
def baseline():
    return BASELINE


@pytest.fixture
def r1(paper):
    return build_trajectory(paper, Robot.R1)


@pytest.fixture
def r2(paper):
    return build_trajectory(paper, Robot.R2)


@pytest.fixture
def special(paper):
    return special_points(paper)
