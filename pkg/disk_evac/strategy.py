"""
The k-cut strategy family and the robots' trajectories.

Both robots walk from the center to I, then search the boundary in opposite
directions. At arc position p_i each robot leaves the boundary on a straight
cut of depth d_i at angle alpha_i, walks back to where it left and resumes the
search. With k = 0 this is the plain opposite-direction search.

Cut directions in the disk frame: R1 leaves along (cos alpha, sin alpha), R2
along (-cos alpha, sin alpha). The angle's reference axis is not spelled out
anywhere, this convention is the one that reproduces the published tip
coordinates (see tests/test_strategy.py::test_paper_tip_calibration).

Parameters are stored as JSON:

    {"cuts": [{"p": 2.62666582851, "alpha": 0.6981317007977318, "d": 0.490011696287}, ...]}
"""
from __future__ import annotations

import bisect
import enum
import functools
import json
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import CACHE_SIZE
from .geom import Point, Robot, ORIGIN, START, boundary_point, tangent

logger = logging.getLogger(__name__)

#: joints closer than this to a queried time count as corners
CORNER_TOL = 1e-9

#: tolerance for matching an exit arc to a cut position
CUT_MATCH_TOL = 1e-12


class InvalidParams(ValueError):

    def __init__(self, violations):
        self.violations = list(violations)
        super(InvalidParams, self).__init__(
            'Invalid strategy parameters: {0}'.format('; '.join(self.violations))
        )


class Variant(enum.Enum):

    BEFORE_CUT = 'before_cut'
    AFTER_CUT = 'after_cut'


class SegmentKind(enum.Enum):

    RADIAL = 'radial-start'
    ARC = 'boundary-arc'
    CUT_OUT = 'cut-out'
    CUT_BACK = 'cut-back'


@dataclass(frozen=True)
class CutSpec:

    p: float
    alpha: float
    d: float

    def direction(self, robot: Robot) -> Point:
        return cut_direction(self.alpha, robot)

    def base(self, robot: Robot) -> Point:
        return boundary_point(self.p, robot)

    def tip(self, robot: Robot) -> Point:
        return self.base(robot) + self.direction(robot) * self.d

    def as_dict(self) -> dict:
        return {'p': self.p, 'alpha': self.alpha, 'd': self.d}


@dataclass(frozen=True)
class StrategyParams:

    cuts: Tuple[CutSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'cuts', tuple(self.cuts))

    @property
    def k(self) -> int:
        return len(self.cuts)

    @property
    def total_depth(self) -> float:
        return sum(c.d for c in self.cuts)

    @property
    def end_time(self) -> float:
        """Time at which both robots reach I' if nobody finds the exit."""
        return 1.0 + math.pi + 2.0 * self.total_depth

    def vector(self) -> List[float]:
        """Flattened (p1, alpha1, d1, p2, ...) coordinates."""
        values = []
        for c in self.cuts:
            values.extend([c.p, c.alpha, c.d])
        return values

    @classmethod
    def from_vector(cls, values: Sequence[float]) -> 'StrategyParams':
        if len(values) % 3:
            raise ValueError('Expected a multiple of 3 values, got {0}'.format(len(values)))
        return cls(tuple(
            CutSpec(float(values[i]), float(values[i + 1]), float(values[i + 2]))
            for i in range(0, len(values), 3)
        ))

    def as_dict(self) -> dict:
        return {'cuts': [c.as_dict() for c in self.cuts]}

    @classmethod
    def from_dict(cls, data: dict) -> 'StrategyParams':
        try:
            cuts = data['cuts']
            return cls(tuple(
                CutSpec(float(c['p']), float(c['alpha']), float(c['d']))
                for c in cuts
            ))
        except (KeyError, TypeError, ValueError) as ex:
            raise InvalidParams(['malformed parameters ({0!r})'.format(ex)])


PAPER = StrategyParams((
    CutSpec(2.62666582851, 2.0 * math.pi / 9.0, 0.490011696287),
    CutSpec(2.97374843355, 0.05523991 * math.pi, 0.1670474016),
))

BASELINE = StrategyParams(())

BUILTIN = {
    'paper': PAPER,
    'baseline': BASELINE,
}


def cut_direction(alpha: float, robot: Robot) -> Point:
    return Point(robot.sign * math.cos(alpha), math.sin(alpha))


def validate(params: StrategyParams) -> List[str]:
    """Every violated invariant, empty when the parameters are usable."""
    violations = []
    previous = 0.0
    for i, cut in enumerate(params.cuts, 1):
        values = (cut.p, cut.alpha, cut.d)
        if not all(math.isfinite(v) for v in values):
            violations.append('cut {0}: non-finite value'.format(i))
            continue
        if not 0.0 < cut.p < math.pi:
            violations.append('cut {0}: position p={1!r} not in (0, pi)'.format(i, cut.p))
        if not 0.0 < cut.alpha < math.pi:
            violations.append('cut {0}: angle alpha={1!r} not in (0, pi)'.format(i, cut.alpha))
        if not cut.d > 0.0:
            violations.append('cut {0}: depth d={1!r} not positive'.format(i, cut.d))
        elif cut.tip(Robot.R2).norm() >= 1.0:
            violations.append('cut {0}: tip outside disk'.format(i))
        if i > 1 and not cut.p > previous:
            violations.append('cut {0}: position not after cut {1}'.format(i, i - 1))
        previous = cut.p
    return violations


def ensure_valid(params: StrategyParams) -> StrategyParams:
    violations = validate(params)
    if violations:
        raise InvalidParams(violations)
    return params


def load(fo) -> StrategyParams:
    try:
        data = json.load(fo)
    except ValueError as ex:
        raise InvalidParams(['not JSON ({0})'.format(ex)])
    if not isinstance(data, dict):
        raise InvalidParams(['expected an object with "cuts"'])
    return ensure_valid(StrategyParams.from_dict(data))


def dump(params: StrategyParams, fo):
    json.dump(params.as_dict(), fo, indent=4)
    fo.write('\n')


# trajectories

@dataclass(frozen=True)
class Segment:
    """
    One unit-speed piece of a trajectory. Straight pieces run from `origin`
    along `direction`, arcs start at arc position `arc_start`.
    """

    kind: SegmentKind
    start_time: float
    duration: float
    origin: Point
    direction: Point
    arc_start: float = 0.0
    cut: Optional[int] = None

    @property
    def end_time(self) -> float:
        return self.start_time + self.duration

    @property
    def is_arc(self) -> bool:
        return self.kind is SegmentKind.ARC

    def position(self, tau: float, robot: Robot) -> Point:
        if self.is_arc:
            return boundary_point(self.arc_start + tau, robot)
        return self.origin + self.direction * tau

    def heading(self, tau: float, robot: Robot) -> Point:
        if self.is_arc:
            return tangent(self.arc_start + tau, robot)
        return self.direction


@dataclass(frozen=True)
class Trajectory:

    robot: Robot
    segments: Tuple[Segment, ...]
    _starts: List[float] = field(init=False, repr=False, compare=False)
    _arrays: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        segments = self.segments
        object.__setattr__(self, '_starts', [s.start_time for s in segments])
        object.__setattr__(self, '_arrays', {
            'start': np.array([s.start_time for s in segments]),
            'end': np.array([s.end_time for s in segments]),
            'arc': np.array([s.is_arc for s in segments]),
            'origin': np.array([s.origin.as_tuple() for s in segments]),
            'direction': np.array([s.direction.as_tuple() for s in segments]),
            'arc_start': np.array([s.arc_start for s in segments]),
        })

    # scalar

    def segment_at(self, t: float, tol: float = CORNER_TOL) -> Tuple[int, bool]:
        """
        Index of the segment containing time `t` and whether `t` sits on a
        joint. At a joint the later segment is returned.
        """
        starts = self._starts
        i = max(bisect.bisect_right(starts, t) - 1, 0)
        if i + 1 < len(starts) and starts[i + 1] - t <= tol:
            i += 1
        corner = i > 0 and abs(t - starts[i]) <= tol
        return i, corner

    def position_at(self, t: float) -> Point:
        i = max(bisect.bisect_right(self._starts, t) - 1, 0)
        segment = self.segments[i]
        return segment.position(t - segment.start_time, self.robot)

    def heading_at(self, t: float) -> Point:
        i, _ = self.segment_at(t)
        segment = self.segments[i]
        return segment.heading(max(t - segment.start_time, 0.0), self.robot)

    # arrays

    def _index(self, ts: np.ndarray) -> np.ndarray:
        starts = self._arrays['start']
        idx = np.clip(np.searchsorted(starts, ts, side='right') - 1, 0, len(starts) - 1)
        return idx

    def positions(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        a = self._arrays
        idx = self._index(ts)
        tau = ts - a['start'][idx]
        line = a['origin'][idx] + a['direction'][idx] * tau[..., None]
        theta = 0.5 * np.pi + self.robot.sign * (a['arc_start'][idx] + tau)
        arc = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
        return np.where(a['arc'][idx][..., None], arc, line)

    def segments_at(self, ts, tol: float = CORNER_TOL) -> Tuple[np.ndarray, np.ndarray]:
        ts = np.asarray(ts, dtype=float)
        starts = self._arrays['start']
        idx = self._index(ts)
        nxt = np.minimum(idx + 1, len(starts) - 1)
        snap = (nxt > idx) & (starts[nxt] - ts <= tol)
        idx = np.where(snap, nxt, idx)
        corner = (idx > 0) & (np.abs(ts - starts[idx]) <= tol)
        return idx, corner

    def headings(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        a = self._arrays
        idx, _ = self.segments_at(ts)
        tau = np.maximum(ts - a['start'][idx], 0.0)
        theta = 0.5 * np.pi + self.robot.sign * (a['arc_start'][idx] + tau)
        sign = self.robot.sign
        arc = sign * np.stack([-np.sin(theta), np.cos(theta)], axis=-1)
        return np.where(a['arc'][idx][..., None], arc, a['direction'][idx])


@functools.lru_cache(maxsize=CACHE_SIZE)
def build_trajectory(params: StrategyParams, robot: Robot) -> Trajectory:
    ensure_valid(params)
    segments = [Segment(SegmentKind.RADIAL, 0.0, 1.0, ORIGIN, START)]
    t, s = 1.0, 0.0
    for i, cut in enumerate(params.cuts):
        segments.append(Segment(
            SegmentKind.ARC, t, cut.p - s, boundary_point(s, robot), ORIGIN, s,
        ))
        t, s = t + cut.p - s, cut.p
        base = cut.base(robot)
        u = cut.direction(robot)
        segments.append(Segment(SegmentKind.CUT_OUT, t, cut.d, base, u, s, i))
        t += cut.d
        segments.append(Segment(SegmentKind.CUT_BACK, t, cut.d, base + u * cut.d, -u, s, i))
        t += cut.d
    segments.append(Segment(
        SegmentKind.ARC, t, math.inf, boundary_point(s, robot), ORIGIN, s,
    ))
    logger.debug('built %s trajectory with %s segments', robot.value, len(segments))
    return Trajectory(robot, tuple(segments))


def position_at(traj: Trajectory, t: float) -> Point:
    return traj.position_at(t)


def cut_index(params: StrategyParams, x: float) -> Optional[int]:
    """0-based index of the cut positioned at arc `x`, if any."""
    for i, cut in enumerate(params.cuts):
        if abs(cut.p - x) <= CUT_MATCH_TOL:
            return i
    return None


def cut_points(params: StrategyParams, i: int, robot: Robot) -> Tuple[Point, Point]:
    """Base and tip of cut `i` (0-based) for `robot`."""
    cut = params.cuts[i]
    return cut.base(robot), cut.tip(robot)


def cut_start_time(params: StrategyParams, i: int) -> float:
    """Time at which either robot leaves the boundary for cut `i`."""
    return 1.0 + params.cuts[i].p + 2.0 * sum(c.d for c in params.cuts[:i])


def find_time(params: StrategyParams, x: float, variant: Variant = Variant.BEFORE_CUT) -> float:
    """
    First (before_cut) or second (after_cut) time the searching robot stands
    on the boundary point at arc `x`.
    """
    if variant is Variant.AFTER_CUT:
        i = cut_index(params, x)
        if i is None:
            raise ValueError('No cut at arc position {0!r}'.format(x))
        return 1.0 + x + 2.0 * sum(c.d for c in params.cuts[:i + 1])
    return 1.0 + x + 2.0 * sum(c.d for c in params.cuts if c.p < x)


def find_times(params: StrategyParams, xs) -> np.ndarray:
    """Vectorised `find_time` for the before_cut variant."""
    xs = np.asarray(xs, dtype=float)
    t0 = 1.0 + xs
    for cut in params.cuts:
        t0 = t0 + 2.0 * cut.d * (cut.p < xs)
    return t0
