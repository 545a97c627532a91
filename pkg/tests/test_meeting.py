import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from disk_evac.geom import ORIGIN, START, Point, Robot, angles_between_array, boundary_point, tangents_array
from disk_evac.meeting import (
    MeetingError,
    Phase,
    bisect_predicate,
    evac_time,
    evac_times,
    solve_meeting,
    solve_meetings,
)
from disk_evac.strategy import BASELINE, PAPER, Segment, SegmentKind, Trajectory, Variant, build_trajectory, find_time

from .conftest import E1, E4


def close(p, xy, tol):
    return abs(p.x - xy[0]) <= tol and abs(p.y - xy[1]) <= tol


def test_bisect_predicate_finds_boundary():
    x = bisect_predicate(lambda x: x >= 0.3, 0.0, 1.0)
    assert 0.3 <= x <= 0.3 + 1e-12


def test_bisect_predicate_flat_region():
    # a value bisection would stop anywhere on the flat part
    f = lambda x: max(0.0, 0.5 - x)
    assert bisect_predicate(lambda x: f(x) <= 0.0, 0.0, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_exit_at_start():
    m = evac_time(PAPER, 0.0)
    assert m.t0 == 1.0
    assert m.t == 0.0
    assert m.evac == 1.0
    assert close(m.M, START.as_tuple(), 1e-15)
    assert m.meeting_phase is Phase.CORNER


def test_exit_at_e1_meets_at_cut_base():
    m = evac_time(PAPER, E1)
    assert m.t0 == pytest.approx(1.629973871925, abs=1e-12)
    assert m.t == pytest.approx(1.996691956585, abs=1e-8)
    assert m.evac == pytest.approx(5.6233577851, abs=1e-8)
    assert close(m.M, (0.49247, -0.87033), 1e-4)
    assert m.meeting_phase is Phase.CORNER


def test_exit_at_e4():
    m = evac_time(PAPER, E4)
    assert m.t0 == pytest.approx(4.952375476, abs=1e-8)
    assert m.evac == pytest.approx(5.62335779, abs=1e-7)
    assert close(m.M, (0.16706, -0.98595), 1e-4)


def test_exit_after_first_cut_meets_on_second_cut():
    p1 = PAPER.cuts[0].p
    m = evac_time(PAPER, p1, Variant.AFTER_CUT)
    assert m.t0 == pytest.approx(4.606689221, abs=1e-8)
    assert m.meeting_phase is Phase.CUT_OUT
    base = boundary_point(PAPER.cuts[1].p, Robot.R2)
    assert m.M.distance(base) == pytest.approx(0.161251676967, abs=1e-7)
    assert m.evac < 5.62335779 + 1e-8


def test_exit_at_antipode_meets_immediately():
    m = evac_time(PAPER, math.pi)
    assert m.t == 0.0
    assert m.evac == pytest.approx(PAPER.end_time, abs=1e-12)
    assert m.evac == pytest.approx(5.45572, abs=1e-4)
    assert close(m.M, (0.0, -1.0), 1e-9)
    batch = evac_times(PAPER, [math.pi - 0.5, math.pi])
    assert batch.t[1] == 0.0
    assert batch.evac[1] == pytest.approx(PAPER.end_time, abs=1e-12)
    assert batch.evac[0] == pytest.approx(evac_time(PAPER, math.pi - 0.5).evac, abs=1e-9)


def test_exit_before_boundary_search():
    with pytest.raises(ValueError):
        solve_meeting(build_trajectory(PAPER, Robot.R2), 0.5, START)


def test_unreachable_robot():
    runaway = Trajectory(Robot.R2, (
        Segment(SegmentKind.RADIAL, 0.0, math.inf, ORIGIN, Point(1.0, 0.0)),
    ))
    with pytest.raises(MeetingError):
        solve_meeting(runaway, 1.0, Point(-1.0, 0.0))
    with pytest.raises(MeetingError):
        solve_meetings(runaway, [1.0], [[-1.0, 0.0]])


def test_meeting_on_radial_move():
    # the partner is still walking out to I
    still = Trajectory(Robot.R2, (
        Segment(SegmentKind.RADIAL, 0.0, math.inf, ORIGIN, Point(0.0, 0.0)),
    ))
    with pytest.raises(MeetingError):
        solve_meeting(still, 1.0, Point(0.0, 0.5))


def test_mirror_symmetry():
    for x in (0.3, 1.7, 2.8):
        a = evac_time(PAPER, x, finder=Robot.R1)
        b = evac_time(PAPER, x, finder=Robot.R2)
        assert a.evac == pytest.approx(b.evac, abs=1e-11)
        assert close(a.M.mirror(), b.M.as_tuple(), 1e-9)


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=0.0, max_value=math.pi))
def test_scalar_solver_residual(x):
    m = evac_time(PAPER, x)
    assert abs(m.E.distance(m.M) - m.t) <= 1e-10
    assert m.evac == pytest.approx(m.t0 + 2.0 * m.t)


def _residuals(params, xs):
    batch = evac_times(params, xs)
    other = build_trajectory(params, Robot.R2)

    def f(t):
        d = batch.E - other.positions(batch.t0 + t)
        return np.hypot(d[:, 0], d[:, 1]) - t

    return batch, f


@pytest.mark.parametrize('params', [PAPER, BASELINE])
def test_vectorised_solver_residual_and_minimality(params):
    rng = np.random.RandomState(7)
    xs = rng.uniform(0.0, math.pi, 10000)
    batch, f = _residuals(params, xs)
    assert np.all(np.abs(f(batch.t)) <= 1e-10)
    early = batch.t > 1e-6
    assert np.all(f(np.where(early, batch.t - 1e-6, 0.0))[early] > 0.0)


def test_vectorised_matches_scalar():
    xs = np.linspace(0.0, math.pi, 101)
    batch = evac_times(PAPER, xs)
    assert len(batch) == 101
    for i, x in enumerate(xs):
        m = evac_time(PAPER, float(x))
        assert batch.t[i] == pytest.approx(m.t, abs=1e-10)
        assert batch.evac[i] == pytest.approx(m.evac, abs=1e-10)


def test_boundary_meetings_have_equal_angles():
    # without cuts every pickup happens on the boundary, where the angles
    # between the search directions and the exit-meeting segment are equal
    rng = np.random.RandomState(11)
    xs = rng.uniform(0.01, math.pi - 0.05, 10000)
    batch = evac_times(BASELINE, xs)
    r2 = build_trajectory(BASELINE, Robot.R2)
    s = batch.M - batch.E
    beta = angles_between_array(tangents_array(xs, Robot.R1), s)
    gamma = angles_between_array(r2.headings(batch.t0 + batch.t), -s)
    ys = np.mod(0.5 * math.pi - np.arctan2(batch.M[:, 1], batch.M[:, 0]), 2.0 * math.pi)
    expected = math.pi - 0.5 * (xs + ys)
    assert np.max(np.abs(beta - expected)) <= 1e-9
    assert np.max(np.abs(gamma - expected)) <= 1e-9


def test_later_exits_meet_later_on_boundary():
    xs = np.linspace(0.01, math.pi - 0.05, 5000)
    batch = evac_times(BASELINE, xs)
    ys = np.mod(0.5 * math.pi - np.arctan2(batch.M[:, 1], batch.M[:, 0]), 2.0 * math.pi)
    assert np.all(np.diff(ys) > 0.0)


def test_find_time_consistency():
    xs = np.linspace(0.0, math.pi, 50)
    batch = evac_times(PAPER, xs)
    assert batch.t0 == pytest.approx([find_time(PAPER, x) for x in xs])
