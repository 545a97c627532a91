"""
Worst-case analysis of a strategy.

An interior exit whose trajectories are smooth around the exit E and the
meeting point M can only be a worst case if

    2 cos(beta) + cos(gamma) == 1

where beta is the angle between R1's direction g at E and the segment E->M,
and gamma the angle between R2's direction h at M and the segment M->E.
Everything else (corners of either trajectory, the ends of the search arc)
is a candidate regardless of the criterion. `worst_case` evaluates all
candidates, takes their maximum and cross-checks it with a dense scan.
"""
from __future__ import annotations

import bisect
import enum
import functools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from . import CACHE_SIZE
from .geom import (
    EPS,
    DegenerateGeometry,
    Point,
    Robot,
    angle_at,
    angle_between,
    angles_between_array,
    arc_of,
    boundary_point,
    line_circle_second_intersection,
    tangent,
    tangents_array,
)
from .meeting import (
    MeetingBatch,
    MeetingResult,
    bisect_predicate,
    evac_time,
    evac_times,
)
from .strategy import (
    SegmentKind,
    StrategyParams,
    Trajectory,
    Variant,
    build_trajectory,
    cut_points,
    cut_start_time,
    ensure_valid,
    find_time,
)

logger = logging.getLogger(__name__)

#: a defining equation counts as solved below this residual
ROOT_RESIDUAL = 1e-9

#: local maxima of the dense scan this close to its top get refined
REFINE_WINDOW = 1e-3

CHUNK = 50000


class SpecialPointError(ValueError):
    pass


class Movement(enum.Enum):

    CONFORM = 'conform'
    CONVERSE = 'converse'


class Continuation(enum.Enum):
    """How a robot is assumed to move on at a corner of its trajectory."""

    FORWARD = 'forward'
    BOUNDARY = 'boundary_continue'
    CUT = 'cut_continue'


class Reason(enum.Enum):

    R1_NONDIFF = 'R1_nondiff'
    R2_NONDIFF = 'R2_nondiff_at_meeting'
    CRITERION_ROOT = 'criterion_root'
    ENDPOINT = 'endpoint'


@dataclass(frozen=True)
class Directions:

    g: Point
    h: Point
    E: Point
    M: Point
    exit_nondiff: bool
    meeting_nondiff: bool


@dataclass(frozen=True)
class AngleReport:

    beta: float
    gamma: float
    movement: Movement
    criterion: float

    def as_dict(self) -> dict:
        return {
            'beta': self.beta,
            'gamma': self.gamma,
            'movement': self.movement.value,
            'criterion': self.criterion,
        }


@dataclass(frozen=True)
class Candidate:

    x: float
    variant: Variant
    reason: Reason
    evac: float
    angles: Optional[AngleReport] = None
    label: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            'x': self.x,
            'variant': self.variant.value,
            'reason': self.reason.value,
            'label': self.label,
            'evac': self.evac,
            'angles': self.angles.as_dict() if self.angles else None,
        }


# directions and angles

def _continued(traj: Trajectory, t: float, continuation: Continuation) -> Tuple[Point, bool]:
    i, corner = traj.segment_at(t)
    segment = traj.segments[i]
    if not corner:
        return segment.heading(t - segment.start_time, traj.robot), False
    previous = traj.segments[i - 1]
    if continuation is Continuation.BOUNDARY:
        if segment.is_arc:
            return segment.heading(0.0, traj.robot), True
        if previous.is_arc:
            return previous.heading(previous.duration, traj.robot), True
    elif continuation is Continuation.CUT:
        if segment.kind is SegmentKind.CUT_OUT:
            return segment.direction, True
        if previous.kind is SegmentKind.CUT_BACK:
            return previous.direction, True
    return segment.heading(0.0, traj.robot), True


def directions_at(
        params: StrategyParams,
        x: float,
        variant: Variant = Variant.BEFORE_CUT,
        continuation: Continuation = Continuation.BOUNDARY,
        meeting: Optional[MeetingResult] = None,
    ) -> Directions:
    """
    R1's direction at the exit and R2's at the meeting point. At corners the
    `continuation` decides which one-sided direction is used and the
    corresponding nondiff flag is raised.
    """
    if meeting is None:
        meeting = evac_time(params, x, variant)
    g, exit_nondiff = _continued(build_trajectory(params, Robot.R1), meeting.t0, continuation)
    h, meeting_nondiff = _continued(
        build_trajectory(params, Robot.R2), meeting.meeting_time, continuation,
    )
    return Directions(g, h, meeting.E, meeting.M, exit_nondiff, meeting_nondiff)


def classify_movement(g: Point, h: Point, E: Point, M: Point) -> Movement:
    s = M - E
    if s.norm() <= EPS:
        raise DegenerateGeometry('Exit and meeting point coincide at {0}'.format(E))
    side_g = s.cross(g)
    side_h = s.cross(h)
    # on-line ties count as conform
    if abs(side_g) <= EPS or abs(side_h) <= EPS:
        return Movement.CONFORM
    return Movement.CONFORM if (side_g > 0) == (side_h > 0) else Movement.CONVERSE


def decoupled_angles(X: Point, Y: Point, g: Point, h: Point) -> Tuple[float, float]:
    if X.distance(Y) <= EPS:
        raise DegenerateGeometry('Decoupled points coincide at {0}'.format(X))
    return angle_between(g, Y - X), angle_between(h, X - Y)


def angle_report(g: Point, h: Point, E: Point, M: Point) -> AngleReport:
    beta, gamma = decoupled_angles(E, M, g, h)
    return AngleReport(
        beta=beta,
        gamma=gamma,
        movement=classify_movement(g, h, E, M),
        criterion=2.0 * math.cos(beta) + math.cos(gamma),
    )


def angles(
        params: StrategyParams,
        x: float,
        variant: Variant = Variant.BEFORE_CUT,
        continuation: Continuation = Continuation.BOUNDARY,
        meeting: Optional[MeetingResult] = None,
    ) -> AngleReport:
    d = directions_at(params, x, variant, continuation, meeting)
    return angle_report(d.g, d.h, d.E, d.M)


def angles_boundary_formula(x: float, y: float) -> float:
    """beta = gamma for an exit at arc x met on the boundary at arc y."""
    return math.pi - 0.5 * (x + y)


@dataclass(frozen=True)
class Lemma3Report:

    samples: int
    checked: int
    skipped: int
    violations: Tuple[Tuple[float, float], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def lemma3_check(
        params: StrategyParams,
        X: Point,
        cut: int,
        samples: int = 1000,
        step: float = 1e-6,
    ) -> Lemma3Report:
    """
    Moving a decoupled meeting point Y along R2's returning cut towards the
    boundary must raise 2cos(beta') + cos(gamma') wherever
    2sin(beta') - sin(gamma') > 0. Samples where X is on the cut's line are
    skipped. Violations are reported as (fraction along the cut, difference).
    """
    base, tip = cut_points(params, cut, Robot.R2)
    h = (base - tip).unit()
    g = tangent(arc_of(X, Robot.R1), Robot.R1)
    checked = skipped = 0
    violations = []
    for j in range(samples):
        lam = j / float(samples)
        Y = tip + (base - tip) * lam
        w = X - Y
        if abs(h.cross(w)) <= 1e-9 * w.norm():
            skipped += 1
            continue
        beta, gamma = decoupled_angles(X, Y, g, h)
        if 2.0 * math.sin(beta) - math.sin(gamma) <= 0.0:
            continue
        checked += 1
        beta2, gamma2 = decoupled_angles(X, Y + h * step, g, h)
        diff = (2.0 * math.cos(beta2) + math.cos(gamma2)) - (2.0 * math.cos(beta) + math.cos(gamma))
        if diff <= 0.0:
            violations.append((lam, diff))
    if skipped:
        logger.debug('lemma3 check skipped %s collinear samples', skipped)
    return Lemma3Report(samples, checked, skipped, tuple(violations))


# special points

@dataclass(frozen=True)
class CutPoints:
    """
    Exits tied to one cut of R2: `arrive` is met exactly as R2 leaves the
    boundary, `leave` as it gets back, `S` at the cut's tip. Q is where the
    cut's line leaves the disk again. Only the first cut always has an
    `arrive`; the others are None when the pickup time is crossed at a jump.
    """

    index: int
    position: float
    arrive: Optional[float]
    leave: Optional[float]
    S: Optional[float]
    Q: Point
    base: Point
    tip: Point


@dataclass(frozen=True)
class SpecialPoints:

    cuts: Tuple[CutPoints, ...]

    def labels(self) -> List[Tuple[str, float, Variant]]:
        """E1, E2, ... in arc order, with the after-cut twins as Ei~."""
        out = []
        for cp in self.cuts:
            if cp.arrive is not None:
                out.append((cp.arrive, Variant.BEFORE_CUT))
            if cp.leave is not None:
                out.append((cp.leave, Variant.BEFORE_CUT))
            out.append((cp.position, Variant.BEFORE_CUT))
        labelled = []
        for n, (x, variant) in enumerate(out, 1):
            labelled.append(('E{0}'.format(n), x, variant))
            if any(x == cp.position for cp in self.cuts):
                labelled.append(('E{0}~'.format(n), x, Variant.AFTER_CUT))
        return labelled

    def arcs(self) -> dict:
        return dict((name, x) for name, x, _ in self.labels())

    def entry_label(self, i: int) -> str:
        """Label of the first exit met on cut `i`."""
        names = [n for n, x, _ in self.labels()]
        cp = self.cuts[i]
        if cp.arrive is not None:
            for name, x, _ in self.labels():
                if x == cp.arrive:
                    return name
        previous = self.cuts[i - 1].position
        for name, x, variant in self.labels():
            if x == previous and variant is Variant.AFTER_CUT:
                return name
        return names[0]

    def points(self) -> dict:
        """Named positions: E labels, and C', P', Q, S per cut (1-based)."""
        out = dict(
            (name.rstrip('~'), boundary_point(x, Robot.R1))
            for name, x, _ in self.labels()
        )
        for cp in self.cuts:
            n = cp.index + 1
            out["C{0}'".format(n)] = cp.base
            out["P{0}'".format(n)] = cp.tip
            out['Q{0}'.format(n)] = cp.Q
            if cp.S is not None:
                out['S{0}'.format(n)] = boundary_point(cp.S, Robot.R1)
        return out


def _meeting_gap(params: StrategyParams, x: float, target: Point, target_time: float) -> float:
    return find_time(params, x) + boundary_point(x, Robot.R1).distance(target) - target_time


def _solve_exit(params, target, target_time, name, required):
    """
    Exit arc whose pickup happens at `target` at `target_time`. The gap is
    nondecreasing in x (with upward jumps at cut positions), so its sign is a
    monotone predicate on [0, pi].
    """

    def gap(x):
        return _meeting_gap(params, x, target, target_time)

    if gap(math.pi) < 0.0:
        if required:
            raise SpecialPointError('{0}: no root in [0, pi]'.format(name))
        return None
    if gap(0.0) >= 0.0:
        x = 0.0
    else:
        x = bisect_predicate(lambda x: gap(x) >= 0.0, 0.0, math.pi)
    if abs(gap(x)) > ROOT_RESIDUAL:
        # the predicate flips at a jump, there is no exit met exactly there
        if required:
            raise SpecialPointError('{0}: no root in [0, pi], jump at {1!r}'.format(name, x))
        logger.debug('%s has no root, gap jumps at %s', name, x)
        return None
    logger.debug('%s at arc %s', name, x)
    return x


@functools.lru_cache(maxsize=CACHE_SIZE)
def special_points(params: StrategyParams) -> SpecialPoints:
    ensure_valid(params)
    out = []
    elapsed = 1.0
    for i, cut in enumerate(params.cuts):
        base, tip = cut_points(params, i, Robot.R2)
        arrive_time = elapsed + cut.p
        n = i + 1
        arrive = _solve_exit(params, base, arrive_time, 'arrive {0}'.format(n), required=(i == 0))
        leave = _solve_exit(params, base, arrive_time + 2.0 * cut.d, 'leave {0}'.format(n), False)
        S = _solve_exit(params, tip, arrive_time + cut.d, 'S{0}'.format(n), False)
        out.append(CutPoints(
            index=i,
            position=cut.p,
            arrive=arrive,
            leave=leave,
            S=S,
            Q=line_circle_second_intersection(base, tip),
            base=base,
            tip=tip,
        ))
        elapsed += 2.0 * cut.d
    return SpecialPoints(tuple(out))


# scans

def _map_chunks(func: Callable, xs: np.ndarray, threads: int) -> list:
    chunks = [xs[i:i + CHUNK] for i in range(0, len(xs), CHUNK)] or [xs]
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(func, chunks))
    return [func(c) for c in chunks]


def scan(params: StrategyParams, xs, threads: int = 1) -> np.ndarray:
    """Evacuation times (before_cut) for every exit arc in `xs`."""
    xs = np.asarray(xs, dtype=float)
    parts = _map_chunks(lambda c: evac_times(params, c).evac, xs, threads)
    return np.concatenate(parts) if parts else np.empty(0)


def _criteria(params: StrategyParams, xs: np.ndarray) -> Tuple[np.ndarray, np.ndarray, MeetingBatch]:
    batch = evac_times(params, xs)
    g = tangents_array(xs, Robot.R1)
    h = build_trajectory(params, Robot.R2).headings(batch.t0 + batch.t)
    s = batch.M - batch.E
    beta = angles_between_array(g, s)
    gamma = angles_between_array(h, -s)
    side_g = s[:, 0] * g[:, 1] - s[:, 1] * g[:, 0]
    side_h = s[:, 0] * h[:, 1] - s[:, 1] * h[:, 0]
    conform = (np.abs(side_g) <= EPS) | (np.abs(side_h) <= EPS) | ((side_g > 0) == (side_h > 0))
    return 2.0 * np.cos(beta) + np.cos(gamma), conform, batch


def criteria(params: StrategyParams, xs, threads: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Criterion values and conform flags for interior exits `xs`."""
    xs = np.asarray(xs, dtype=float)
    parts = _map_chunks(lambda c: _criteria(params, c)[:2], xs, threads)
    if not parts:
        return np.empty(0), np.empty(0, dtype=bool)
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


@dataclass(frozen=True)
class ProfileSample:

    x: float
    criterion: float
    movement: Movement


def criterion_profile(params: StrategyParams, lo: float, hi: float, samples: int = 20) -> List[ProfileSample]:
    """The criterion at `samples` interior points of the arc (lo, hi)."""
    ensure_valid(params)
    xs = np.linspace(lo, hi, samples + 2)[1:-1]
    values, conform = criteria(params, xs)
    return [
        ProfileSample(
            float(x), float(c), Movement.CONFORM if f else Movement.CONVERSE,
        )
        for x, c, f in zip(xs, values, conform)
    ]


def breakpoints(params: StrategyParams) -> List[float]:
    """Arc positions splitting [0, pi] into pieces with smooth evacuation time."""
    xs = {0.0, math.pi}
    if params.k:
        for cp in special_points(params).cuts:
            xs.add(cp.position)
            for x in (cp.arrive, cp.leave, cp.S):
                if x is not None:
                    xs.add(x)
    return sorted(xs)


def _criterion(params, x):
    return angles(params, x, Variant.BEFORE_CUT, Continuation.FORWARD).criterion


def criterion_roots(params: StrategyParams, grid: int = 10000, threads: int = 1) -> List[float]:
    """
    Roots of criterion - 1 on every smooth piece, located by sign changes on
    `grid` interior samples and refined with brentq.
    """
    roots = []
    edges = breakpoints(params)
    for a, b in zip(edges[:-1], edges[1:]):
        if b - a <= 1e-9:
            continue
        xs = np.linspace(a, b, grid + 2)[1:-1]
        values, _ = criteria(params, xs, threads)
        diff = values - 1.0
        roots.extend(float(x) for x in xs[diff == 0.0])
        for j in np.nonzero(diff[:-1] * diff[1:] < 0.0)[0]:
            lo, hi = float(xs[j]), float(xs[j + 1])
            f = lambda x: _criterion(params, x) - 1.0
            flo, fhi = f(lo), f(hi)
            if flo * fhi > 0.0:
                logger.debug('criterion sign change at %s vanished on refinement', lo)
                continue
            roots.append(lo if flo == 0.0 else hi if fhi == 0.0 else brentq(f, lo, hi, xtol=1e-12))
        logger.debug('piece (%s, %s): %s criterion roots so far', a, b, len(roots))
    return roots


# worst case

@dataclass(frozen=True)
class WorstCaseReport:

    candidates: Tuple[Candidate, ...]
    certified_max: float
    argmax: Candidate
    scan_max: Optional[Tuple[float, float]]
    disagreement: bool
    special: Optional[SpecialPoints]

    def as_dict(self) -> dict:
        return {
            'certified_max': self.certified_max,
            'argmax': self.argmax.as_dict(),
            'scan_max': (
                {'x': self.scan_max[0], 'evac': self.scan_max[1]}
                if self.scan_max else None
            ),
            'disagreement': self.disagreement,
            'candidates': [c.as_dict() for c in self.candidates],
        }


def _candidate(params, x, variant, reason, label=None):
    meeting = evac_time(params, x, variant)
    try:
        report = angles(params, x, variant, Continuation.BOUNDARY, meeting)
    except DegenerateGeometry:
        report = None
    return Candidate(x, variant, reason, meeting.evac, report, label)


def candidates(params: StrategyParams, grid: int = 10000, threads: int = 1) -> List[Candidate]:
    """Every exit the angle criterion cannot rule out."""
    ensure_valid(params)
    out = [
        _candidate(params, 0.0, Variant.BEFORE_CUT, Reason.ENDPOINT, 'I'),
        _candidate(params, math.pi, Variant.BEFORE_CUT, Reason.ENDPOINT, "I'"),
    ]
    if params.k:
        sp = special_points(params)
        for name, x, variant in sp.labels():
            reason = (
                Reason.R1_NONDIFF
                if any(x == cp.position for cp in sp.cuts)
                else Reason.R2_NONDIFF
            )
            out.append(_candidate(params, x, variant, reason, name))
        for cp in sp.cuts:
            if cp.S is not None:
                out.append(_candidate(
                    params, cp.S, Variant.BEFORE_CUT, Reason.R2_NONDIFF, 'S{0}'.format(cp.index + 1),
                ))
    for x in criterion_roots(params, grid, threads):
        out.append(_candidate(params, x, Variant.BEFORE_CUT, Reason.CRITERION_ROOT))
    out.sort(key=lambda c: (c.x, c.variant is Variant.AFTER_CUT))
    return out


def dense_scan(params: StrategyParams, grid: int = 100000, threads: int = 1) -> Tuple[float, float]:
    """
    Brute-force maximum of the evacuation time over [0, pi], with the best
    local maxima refined on their smooth piece.
    """
    xs = np.linspace(0.0, math.pi, grid)
    T = scan(params, xs, threads)
    top = T.max()
    peaks = [
        j for j in range(len(xs))
        if T[j] >= top - REFINE_WINDOW
        and (j == 0 or T[j] >= T[j - 1])
        and (j == len(xs) - 1 or T[j] >= T[j + 1])
    ]
    peaks = sorted(peaks, key=lambda j: -T[j])[:50]
    edges = breakpoints(params)
    best = (float(xs[int(np.argmax(T))]), float(top))
    for j in peaks:
        k = max(bisect.bisect_right(edges, xs[j]) - 1, 0)
        lo = max(xs[max(j - 1, 0)], edges[k])
        hi = min(xs[min(j + 1, len(xs) - 1)], edges[min(k + 1, len(edges) - 1)])
        if hi - lo <= 1e-12:
            continue
        res = minimize_scalar(
            lambda x: -evac_time(params, x).evac,
            bounds=(lo, hi),
            method='bounded',
            options={'xatol': 1e-10},
        )
        if -res.fun > best[1]:
            best = (float(res.x), float(-res.fun))
    return best


def worst_case(
        params: StrategyParams,
        grid: int = 10000,
        refine_tol: float = 1e-6,
        scan_grid: int = 100000,
        threads: int = 1,
    ) -> WorstCaseReport:
    """
    Certified worst case: the maximum over all candidates. With `scan_grid`
    > 0 a dense scan runs as an oracle and a scan value above the certified
    maximum by more than `refine_tol` is reported as a disagreement.
    """
    found = candidates(params, grid, threads)
    argmax = max(found, key=lambda c: c.evac)
    scan_max = None
    disagreement = False
    if scan_grid:
        scan_max = dense_scan(params, scan_grid, threads)
        if scan_max[1] > argmax.evac + refine_tol:
            disagreement = True
            logger.warning(
                'dense scan reaches %s at x=%s, above certified %s',
                scan_max[1], scan_max[0], argmax.evac,
            )
    logger.debug('certified max %s at %s (%s candidates)', argmax.evac, argmax.label or argmax.x, len(found))
    return WorstCaseReport(
        candidates=tuple(found),
        certified_max=argmax.evac,
        argmax=argmax,
        scan_max=scan_max,
        disagreement=disagreement,
        special=special_points(params) if params.k else None,
    )


# supplementary checks

@dataclass(frozen=True)
class AngleBound:

    name: str
    value: float


def angle_bounds(params: StrategyParams) -> List[AngleBound]:
    """
    Angles bounding beta and gamma on the arcs around each cut's Q point:
    beta at Q with the pickup taken at C', the angle at P' between the cut's
    first exit and Q, and the angle at P' between Q and S.
    """
    sp = special_points(params)
    arcs = sp.arcs()
    out = []
    for cp in sp.cuts:
        n = cp.index + 1
        g = tangent(arc_of(cp.Q, Robot.R1), Robot.R1)
        out.append(AngleBound('beta(Q{0})'.format(n), angle_between(g, cp.base - cp.Q)))
        entry = sp.entry_label(cp.index)
        E = boundary_point(arcs[entry], Robot.R1)
        out.append(AngleBound(
            "angle({0},P{1}',Q{1})".format(entry, n), angle_at(E, cp.tip, cp.Q),
        ))
        if cp.S is not None:
            S = boundary_point(cp.S, Robot.R1)
            out.append(AngleBound("angle(Q{0},P{0}',S{0})".format(n), angle_at(cp.Q, cp.tip, S)))
    return out


@dataclass(frozen=True)
class CutOrderReport:

    slacks: Tuple[float, ...]

    @property
    def ok(self) -> bool:
        return all(s >= -1e-12 for s in self.slacks)


def cut_order_check(params: StrategyParams) -> CutOrderReport:
    """
    Slack between the pickup of an exit found right after cut i and the
    moment R2 starts cut i + 1. Pickups for later exits only happen later.
    """
    slacks = []
    for i in range(params.k - 1):
        m = evac_time(params, params.cuts[i].p, Variant.AFTER_CUT)
        slacks.append(m.meeting_time - cut_start_time(params, i + 1))
    return CutOrderReport(tuple(slacks))


def artificial_dominance(params: StrategyParams) -> List[Tuple[int, float, float]]:
    """(cut, before, after) evacuation times at every cut position."""
    out = []
    for i, cut in enumerate(params.cuts):
        out.append((
            i,
            evac_time(params, cut.p, Variant.BEFORE_CUT).evac,
            evac_time(params, cut.p, Variant.AFTER_CUT).evac,
        ))
    return out


@dataclass(frozen=True)
class ArcPart:

    start_label: str
    end_label: str
    start: float
    end: float
    phase: str
    cut: Optional[int]

    def as_dict(self) -> dict:
        return {
            'from': self.start_label,
            'to': self.end_label,
            'x_from': self.start,
            'x_to': self.end,
            'phase': self.phase,
            'cut': None if self.cut is None else self.cut + 1,
        }


def partition(params: StrategyParams) -> List[ArcPart]:
    """The arc I -> I' split at the E points, with where R2 gets picked up."""
    ensure_valid(params)
    marks = [('I', 0.0)]
    if params.k:
        for name, x, variant in special_points(params).labels():
            if variant is Variant.BEFORE_CUT:
                marks.append((name, x))
    marks.append(("I'", math.pi))
    positions = set(c.p for c in params.cuts)
    r2 = build_trajectory(params, Robot.R2)
    parts = []
    for (a_name, a), (b_name, b) in zip(marks[:-1], marks[1:]):
        if a in positions:
            a_name += '~'
        m = evac_time(params, 0.5 * (a + b))
        segment = r2.segments[m.segment]
        parts.append(ArcPart(a_name, b_name, a, b, m.meeting_phase.value, segment.cut))
    return parts
