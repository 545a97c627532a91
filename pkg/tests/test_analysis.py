import math

import pytest

from disk_evac.analysis import (
    Continuation,
    Movement,
    Reason,
    angle_bounds,
    angles,
    angles_boundary_formula,
    artificial_dominance,
    breakpoints,
    candidates,
    classify_movement,
    criterion_profile,
    criterion_roots,
    cut_order_check,
    decoupled_angles,
    dense_scan,
    directions_at,
    lemma3_check,
    partition,
    special_points,
    worst_case,
)
from disk_evac.geom import DegenerateGeometry, Point, Robot, arc_of, tangent
from disk_evac.strategy import BASELINE, PAPER, StrategyParams, Variant

from .conftest import E1, E2, E4, GENERIC


def close(p, xy, tol):
    return abs(p.x - xy[0]) <= tol and abs(p.y - xy[1]) <= tol


# movement and angles

def test_classify_movement():
    E, M = Point(0.0, 0.0), Point(1.0, 0.0)
    up, down = Point(0.0, 1.0), Point(0.0, -1.0)
    assert classify_movement(up, up, E, M) is Movement.CONFORM
    assert classify_movement(down, down, E, M) is Movement.CONFORM
    assert classify_movement(up, down, E, M) is Movement.CONVERSE
    # on the line counts as conform
    assert classify_movement(Point(1.0, 0.0), down, E, M) is Movement.CONFORM


def test_classify_movement_coinciding_points():
    with pytest.raises(DegenerateGeometry):
        classify_movement(Point(0.0, 1.0), Point(0.0, 1.0), Point(0.5, 0.5), Point(0.5, 0.5))


def test_boundary_formula():
    assert angles_boundary_formula(0.629973871925, 2.62666582851) == pytest.approx(1.513274, abs=1e-5)
    assert angles_boundary_formula(2.972352082515, 2.97374843355) == pytest.approx(0.168552, abs=1e-5)


def test_equal_angles_at_e1(paper):
    report = angles(paper, E1, continuation=Continuation.BOUNDARY)
    assert report.beta == pytest.approx(1.51327, abs=2e-5)
    assert report.gamma == pytest.approx(report.beta, abs=1e-9)
    assert report.criterion < 1.0


def test_equal_angles_at_e2(paper):
    report = angles(paper, E2, continuation=Continuation.BOUNDARY)
    assert report.beta == pytest.approx(0.53325, abs=2e-5)
    assert report.criterion > 2.5834


def test_equal_angles_after_last_cut(paper, special):
    x = special.arcs()['E5~']
    report = angles(paper, x, Variant.AFTER_CUT, Continuation.BOUNDARY)
    assert report.beta == pytest.approx(0.08398, abs=2e-5)
    assert report.criterion > 2.9894


def test_directions_at_corner_meeting(paper):
    d = directions_at(paper, E1)
    assert d.meeting_nondiff
    assert not d.exit_nondiff
    # continuing on the boundary at C1'
    assert close(d.h, tangent(paper.cuts[0].p, Robot.R2).as_tuple(), 1e-12)
    cut = directions_at(paper, E1, continuation=Continuation.CUT)
    alpha = paper.cuts[0].alpha
    assert close(cut.h, (-math.cos(alpha), math.sin(alpha)), 1e-12)


def test_directions_on_cut_out(paper):
    d = directions_at(paper, 2.0)
    alpha = paper.cuts[0].alpha
    assert close(d.h, (-math.cos(alpha), math.sin(alpha)), 1e-12)
    assert not d.meeting_nondiff
    assert close(d.g, tangent(2.0, Robot.R1).as_tuple(), 1e-15)


def test_directions_at_cut_position(paper):
    p1 = paper.cuts[0].p
    before = directions_at(paper, p1, Variant.BEFORE_CUT, Continuation.BOUNDARY)
    assert before.exit_nondiff
    assert close(before.g, tangent(p1, Robot.R1).as_tuple(), 1e-12)
    forward = directions_at(paper, p1, Variant.BEFORE_CUT, Continuation.FORWARD)
    assert close(forward.g, paper.cuts[0].direction(Robot.R1).as_tuple(), 1e-15)


def test_directions_without_cuts(baseline):
    d = directions_at(baseline, 1.0)
    assert close(d.g, tangent(1.0, Robot.R1).as_tuple(), 1e-15)
    assert not d.exit_nondiff
    assert not d.meeting_nondiff


def test_movement_around_q1(paper):
    assert angles(paper, 1.0).movement is Movement.CONFORM
    assert angles(paper, 2.0).movement is Movement.CONVERSE


def test_decoupled_angles(paper, special):
    points = special.points()
    X = points['E2']
    base, tip = points["C1'"], points["P1'"]
    g = tangent(E2, Robot.R1)
    h = (base - tip).unit()
    beta, _ = decoupled_angles(X, base, g, h)
    _, gamma = decoupled_angles(X, tip, g, h)
    assert 2.0 * math.sin(beta) - math.sin(gamma) > 0.0
    with pytest.raises(DegenerateGeometry):
        decoupled_angles(X, X, g, h)


# special points

def test_special_point_arcs(special):
    arcs = special.arcs()
    assert arcs['E1'] == pytest.approx(E1, abs=1e-8)
    assert arcs['E2'] == pytest.approx(E2, abs=1e-8)
    assert arcs['E4'] == pytest.approx(E4, abs=1e-8)
    assert arcs['E3'] == PAPER.cuts[0].p
    assert arcs['E5'] == PAPER.cuts[1].p


def test_special_point_labels(special):
    names = [name for name, _, _ in special.labels()]
    assert names == ['E1', 'E2', 'E3', 'E3~', 'E4', 'E5', 'E5~']
    assert special.cuts[1].arrive is None
    assert special.entry_label(0) == 'E1'
    assert special.entry_label(1) == 'E3~'


@pytest.mark.parametrize('name, xy, tol', [
    ('E1', (-0.58912, 0.80804), 1e-4),
    ('E2', (-0.52403, -0.85170), 1e-4),
    ('Q1', (-0.94262, 0.33386), 1e-4),
    ('S1', (-0.82098, -0.57096), 1e-4),
    ('E4', (-0.16843, -0.98571), 1e-4),
    ('Q2', (-0.492471152, -0.870328768), 1e-6),
    ('S2', (-0.26963, -0.96296), 1e-4),
])
def test_special_point_coordinates(special, name, xy, tol):
    assert close(special.points()[name], xy, tol)


def test_q_lies_on_cut_line(special):
    for cp in special.cuts:
        assert cp.Q.norm() == pytest.approx(1.0, abs=1e-12)
        assert (cp.tip - cp.base).cross(cp.Q - cp.base) == pytest.approx(0.0, abs=1e-12)


def test_side_evacuation_times(paper, special):
    from disk_evac.meeting import evac_time

    s1 = evac_time(paper, special.cuts[0].S)
    assert s1.evac == pytest.approx(5.05489, abs=1e-4)
    assert close(s1.M, (0.11710, -0.55536), 1e-4)
    assert evac_time(paper, special.cuts[1].S).evac == pytest.approx(5.39304, abs=1e-4)


def test_special_points_without_leave_root():
    # deeper than the chord it saves: an exit just before the cut is found
    # too early for any pickup at the cut base on the way back
    params = StrategyParams.from_vector([3.0, 1.5, 0.3])
    sp = special_points(params)
    assert sp.cuts[0].arrive is not None
    assert sp.cuts[0].leave is None
    assert [name for name, _, _ in sp.labels()] == ['E1', 'E2', 'E2~']
    assert params.cuts[0].p in breakpoints(params)
    report = worst_case(params, grid=2000, scan_grid=20000)
    assert not report.disagreement


def test_worst_case_when_second_cut_has_no_leave_root():
    params = StrategyParams.from_vector([c for cut in GENERIC for c in cut])
    assert special_points(params).cuts[1].leave is None
    report = worst_case(params, grid=2000, scan_grid=20000)
    assert not report.disagreement
    assert report.certified_max == pytest.approx(6.1405, abs=1e-3)
    assert report.certified_max >= report.scan_max[1] - 1e-6


# criterion

@pytest.mark.parametrize('lo, hi, above', [
    ('I', 'E1', False),
    ('E2', 'E3', True),
    ('E4', 'E5', True),
    ('E5~', "I'", True),
])
def test_criterion_profile_signs(special, lo, hi, above):
    arcs = dict(special.arcs(), I=0.0, **{"I'": math.pi})
    samples = criterion_profile(PAPER, arcs[lo], arcs[hi])
    assert len(samples) == 20
    for s in samples:
        if above:
            assert s.criterion > 1.0 + 1e-3
        else:
            assert s.criterion < 1.0 - 1e-3


def test_criterion_profile_movement_on_q1s1(special):
    q1 = arc_of(special.cuts[0].Q, Robot.R1)
    samples = criterion_profile(PAPER, q1, special.cuts[0].S)
    assert all(s.movement is Movement.CONVERSE for s in samples)


def test_no_criterion_roots_for_paper_params():
    assert criterion_roots(PAPER, grid=2000) == []


def test_single_criterion_root_without_cuts():
    roots = criterion_roots(BASELINE, grid=2000)
    assert len(roots) == 1
    report = angles(BASELINE, roots[0])
    assert report.criterion == pytest.approx(1.0, abs=1e-9)


def test_breakpoints(special):
    edges = breakpoints(PAPER)
    assert edges[0] == 0.0 and edges[-1] == math.pi
    assert edges == sorted(edges)
    assert PAPER.cuts[0].p in edges
    assert special.cuts[0].S in edges
    assert breakpoints(BASELINE) == [0.0, math.pi]


# worst case

def test_candidates_cover_special_points():
    found = candidates(PAPER, grid=2000)
    labels = set(c.label for c in found if c.label)
    assert {'I', "I'", 'E1', 'E2', 'E3', 'E3~', 'E4', 'E5', 'E5~', 'S1', 'S2'} <= labels
    reasons = dict((c.label, c.reason) for c in found if c.label)
    assert reasons['E3~'] is Reason.R1_NONDIFF
    assert reasons['E2'] is Reason.R2_NONDIFF
    assert reasons['I'] is Reason.ENDPOINT
    after = [c for c in found if c.variant is Variant.AFTER_CUT]
    assert len(after) == 2


def test_worst_case_paper():
    report = worst_case(PAPER, grid=10000, scan_grid=0)
    assert 5.62335 <= report.certified_max <= 5.6234
    assert report.argmax.label in ('E1', 'E2', 'E3~', 'E4', 'E5~')
    assert report.scan_max is None
    assert not report.disagreement
    ties = [c for c in report.candidates if c.label in ('E1', 'E2', 'E3~', 'E4', 'E5~')]
    for c in ties:
        assert c.evac == pytest.approx(5.62335779, abs=1e-6)


def test_worst_case_baseline():
    report = worst_case(BASELINE, grid=10000, scan_grid=0)
    assert 5.73 <= report.certified_max <= 5.745
    assert report.argmax.reason is Reason.CRITERION_ROOT
    assert report.special is None


def test_antipode_is_not_the_worst_case():
    report = worst_case(PAPER, grid=2000, scan_grid=0)
    antipode = [c for c in report.candidates if c.label == "I'"][0]
    assert antipode.evac == pytest.approx(5.45572, abs=1e-4)
    assert antipode.evac < report.certified_max


def test_dense_scan_agrees_with_certificate():
    report = worst_case(PAPER, grid=2000, scan_grid=20000, threads=2)
    assert not report.disagreement
    assert report.scan_max[1] <= report.certified_max + 1e-6
    assert report.scan_max[1] >= report.certified_max - 1e-4


def test_dense_scan_without_cuts():
    x, value = dense_scan(BASELINE, grid=5000)
    certified = worst_case(BASELINE, grid=5000, scan_grid=0).certified_max
    assert value == pytest.approx(certified, abs=1e-8)


@pytest.mark.slow
def test_worst_case_paper_full_resolution():
    report = worst_case(PAPER, grid=1000000, scan_grid=100000, threads=4)
    assert report.certified_max == pytest.approx(5.623375, abs=2.5e-5)
    assert not report.disagreement


# supplementary checks

def test_lemma3_check_returning_cuts(special):
    points = special.points()
    for name, cut in (('E2', 0), ('E4', 1)):
        report = lemma3_check(PAPER, points[name], cut, samples=1000)
        assert report.ok
        assert report.checked > 0
        assert report.skipped == 0


def test_lemma3_check_skips_collinear_exit(special):
    cp = special.cuts[0]
    report = lemma3_check(PAPER, cp.Q, 0, samples=100)
    assert report.skipped == 100
    assert report.checked == 0
    assert report.ok


def test_angle_bounds(paper):
    bounds = dict((b.name, b.value) for b in angle_bounds(paper))
    assert bounds['beta(Q1)'] == pytest.approx(1.21306, abs=1e-5)
    assert bounds['beta(Q2)'] == pytest.approx(0.34138552, abs=1e-6)
    assert bounds["angle(E1,P1',Q1)"] == pytest.approx(0.39474, abs=1e-5)
    assert bounds["angle(Q1,P1',S1)"] == pytest.approx(0.71477, abs=1e-5)
    assert bounds["angle(Q2,P2',S2)"] == pytest.approx(0.195072, abs=5e-6)
    assert bounds["angle(E3~,P2',Q2)"] < 1e-6


def test_cut_order(paper):
    report = cut_order_check(paper)
    assert report.ok
    assert report.slacks[0] == pytest.approx(0.161251676967, abs=1e-7)
    assert cut_order_check(BASELINE).slacks == ()


def test_artificial_dominance(paper):
    rows = artificial_dominance(paper)
    assert [i for i, _, _ in rows] == [0, 1]
    for _, before, after in rows:
        assert after >= before


def test_partition(paper):
    parts = partition(paper)
    arcs = [(p.start_label, p.end_label) for p in parts]
    assert arcs == [
        ('I', 'E1'), ('E1', 'E2'), ('E2', 'E3'),
        ('E3~', 'E4'), ('E4', 'E5'), ('E5~', "I'"),
    ]
    phases = [p.phase for p in parts]
    assert phases[0] == 'boundary'
    assert phases[1] == 'cut_out'
    assert phases[2] == 'boundary'
    assert phases[3] in ('cut_out', 'cut_back')
    assert parts[3].cut == 1
    assert phases[4] == 'boundary'
    assert phases[5] == 'boundary'
    assert parts[3].as_dict()['cut'] == 2


def test_partition_without_cuts(baseline):
    parts = partition(baseline)
    assert len(parts) == 1
    assert parts[0].phase == 'boundary'
