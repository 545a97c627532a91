"""
Meeting protocol.

The robot that finds the exit E at time t0 walks straight to the other robot
and meets it after the shortest extra time t with |E - pos(t0 + t)| = t. Both
then walk back to E, so the evacuation takes t0 + 2t.

f(t) = |E - pos(t0 + t)| - t never increases because positions are
1-Lipschitz, which makes `f(t) <= 0` a monotone predicate. Bisecting the
predicate (not the value) finds the smallest root even where f is flat.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .geom import Point, Robot, boundary_point, boundary_points_array
from .strategy import (
    SegmentKind,
    StrategyParams,
    Trajectory,
    Variant,
    build_trajectory,
    find_time,
    find_times,
)

logger = logging.getLogger(__name__)

#: absolute tolerance on t
TOL = 1e-12

#: no valid strategy needs a pickup this late
BRACKET_CAP = 8.0 * math.pi


class MeetingError(RuntimeError):
    pass


class Phase(enum.Enum):

    BOUNDARY = 'boundary'
    CUT_OUT = 'cut_out'
    CUT_BACK = 'cut_back'
    CORNER = 'corner'


_PHASES = {
    SegmentKind.ARC: Phase.BOUNDARY,
    SegmentKind.CUT_OUT: Phase.CUT_OUT,
    SegmentKind.CUT_BACK: Phase.CUT_BACK,
}


@dataclass(frozen=True)
class MeetingResult:

    t0: float
    t: float
    E: Point
    M: Point
    evac: float
    meeting_phase: Phase
    segment: int

    @property
    def meeting_time(self) -> float:
        return self.t0 + self.t


def bisect_predicate(pred: Callable[[float], bool], lo: float, hi: float, tol: float = TOL) -> float:
    """
    Boundary of a monotone predicate, false at `lo` and true at `hi`. Returns
    the smallest bracketed point known to satisfy it.
    """
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


def solve_meeting(other: Trajectory, t0: float, E: Point) -> MeetingResult:
    if t0 < 1.0:
        raise ValueError('Discovery time {0!r} precedes the boundary search'.format(t0))

    def f(t):
        return E.distance(other.position_at(t0 + t)) - t

    f0 = f(0.0)
    # rounding leaves a few ulps where both robots stand on the same point
    if f0 <= TOL:
        t = 0.0
    else:
        hi = f0 + 1.0
        while f(hi) > 0.0:
            if hi >= BRACKET_CAP:
                raise MeetingError(
                    'No meeting below {0} for exit {1} found at {2}'.format(BRACKET_CAP, E, t0)
                )
            hi = min(2.0 * hi, BRACKET_CAP)
            logger.debug('expanded meeting bracket to %s', hi)
        t = bisect_predicate(lambda t: f(t) <= 0.0, 0.0, hi)
    i, corner = other.segment_at(t0 + t)
    segment = other.segments[i]
    phase = Phase.CORNER if corner else _PHASES.get(segment.kind)
    if phase is None:
        raise MeetingError('Meeting on the initial radial move at {0}'.format(t0 + t))
    return MeetingResult(
        t0=t0,
        t=t,
        E=E,
        M=other.position_at(t0 + t),
        evac=t0 + 2.0 * t,
        meeting_phase=phase,
        segment=i,
    )


def evac_time(
        params: StrategyParams,
        x: float,
        variant: Variant = Variant.BEFORE_CUT,
        finder: Robot = Robot.R1,
    ) -> MeetingResult:
    """
    Evacuation for an exit at arc `x` on `finder`'s side. By symmetry the R1
    side covers the whole disk.
    """
    t0 = find_time(params, x, variant)
    other = build_trajectory(params, finder.other)
    return solve_meeting(other, t0, boundary_point(x, finder))


# arrays

@dataclass(frozen=True)
class MeetingBatch:
    """Elementwise meeting solutions for many exits."""

    t0: np.ndarray
    t: np.ndarray
    E: np.ndarray
    M: np.ndarray
    segment: np.ndarray
    corner: np.ndarray

    @property
    def evac(self) -> np.ndarray:
        return self.t0 + 2.0 * self.t

    def __len__(self):
        return len(self.t0)


def solve_meetings(other: Trajectory, t0s, Es, tol: float = TOL) -> MeetingBatch:
    t0s = np.asarray(t0s, dtype=float)
    Es = np.asarray(Es, dtype=float)

    def f(t):
        d = Es - other.positions(t0s + t)
        return np.hypot(d[:, 0], d[:, 1]) - t

    f0 = f(np.zeros_like(t0s))
    lo = np.zeros_like(t0s)
    hi = np.where(f0 > tol, f0 + 1.0, 0.0)
    pending = (hi > 0.0) & (f(hi) > 0.0)
    while pending.any():
        if (hi[pending] >= BRACKET_CAP).any():
            raise MeetingError('No meeting below {0} for {1} exits'.format(
                BRACKET_CAP, int((hi[pending] >= BRACKET_CAP).sum())))
        hi = np.where(pending, np.minimum(2.0 * hi, BRACKET_CAP), hi)
        pending = (hi > 0.0) & (f(hi) > 0.0)
    while True:
        active = hi - lo > tol
        if not active.any():
            break
        mid = 0.5 * (lo + hi)
        active &= (mid > lo) & (mid < hi)
        if not active.any():
            break
        ok = f(mid) <= 0.0
        hi = np.where(active & ok, mid, hi)
        lo = np.where(active & ~ok, mid, lo)
    times = t0s + hi
    segment, corner = other.segments_at(times)
    return MeetingBatch(
        t0=t0s, t=hi, E=Es, M=other.positions(times), segment=segment, corner=corner,
    )


def evac_times(params: StrategyParams, xs) -> MeetingBatch:
    """Vectorised `evac_time` over R1-side exits, before_cut variant."""
    xs = np.asarray(xs, dtype=float)
    return solve_meetings(
        build_trajectory(params, Robot.R2),
        find_times(params, xs),
        boundary_points_array(xs, Robot.R1),
    )
