import pytest

from arclab.arcs import (
    arc_ids,
    b_arc,
    cc_arc,
    crown,
    loop_b,
    loop_c,
    mobius_crown,
)
from arclab.build import induced_arc_complex
from arclab.strong import StrongTrace, dominated_vertices
from arclab.theorems import (
    Limits,
    TheoremError,
    run_all,
    thm_crown_strong,
    thm_inner_mobius,
    thm_mobius_collapse,
    thm_mobius_not_strong,
    thm_strip_strong,
)


# --- crown schedule -----------------------------------------------------------------


def test_crown_four_rounds_and_terminal():
    report = thm_crown_strong(4)
    details = report.claims[0].details
    assert details["rounds"] == [4, 4, 4]
    schedule = StrongTrace.from_json(details["schedule"])
    ids = arc_ids(crown(4))
    # loops leave first, each with its own c-arc as witness
    first_batch = schedule.steps[:4]
    assert {v for v, _ in first_batch} == {ids[loop_b(i)] for i in range(1, 5)}
    from arclab.arcs import c_arc

    for v, w in first_batch:
        loop_vertex = next(i for i in range(1, 5) if ids[loop_b(i)] == v)
        assert w == ids[c_arc(loop_vertex)]


def test_crown_one_is_trivial():
    assert thm_crown_strong(1).claims[0].status == "pass"


@pytest.mark.parametrize("n", range(1, 7))
def test_crown_schedule_passes(n):
    assert thm_crown_strong(n).all_passed


# --- inner mobius schedule -------------------------------------------------------------


def test_inner_mobius_three_removal_order_and_witnesses():
    report = thm_inner_mobius(3)
    schedule = StrongTrace.from_json(report.claims[0].details["schedule"])
    ids = arc_ids(mobius_crown(3))
    expected = [
        (ids[loop_c(3)], ids[cc_arc(1, 3)]),
        (ids[cc_arc(2, 3)], ids[cc_arc(1, 2)]),
        (ids[cc_arc(1, 3)], ids[loop_c(1)]),
        (ids[loop_c(2)], ids[cc_arc(1, 2)]),
        (ids[cc_arc(1, 2)], ids[loop_c(1)]),
    ]
    assert list(schedule.steps) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_inner_mobius_schedule_passes(n):
    assert thm_inner_mobius(n).all_passed


# --- mobius collapse ---------------------------------------------------------------------


def test_mobius_collapse_three_replays_to_a_point():
    report = thm_mobius_collapse(3)
    details = report.claims[0].details
    assert details["vertices"] == 12
    assert details["rounds"] == [3, 3]  # three loops, then three minimal arcs


def test_mobius_collapse_one_has_empty_schedule():
    report = thm_mobius_collapse(1)
    assert report.claims[0].details["trace_length"] == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_mobius_collapse_passes(n):
    assert thm_mobius_collapse(n).all_passed


# --- non-strong-collapsibility ---------------------------------------------------------


def test_mobius_four_stage_predictions():
    report = thm_mobius_not_strong(4)
    details = report.claims[0].details
    assert details["core_vertices"] == 14
    assert details["removed"] == 8


def test_ridge_arc_dominated_after_removing_two_adjacent_loops():
    # removing M_1 and M_2 makes the b-arc joining 1 and 2 dominated by (1,2)
    s = mobius_crown(4)
    ids = arc_ids(s)
    X = induced_arc_complex(s, [ids[loop_b(1)], ids[loop_b(2)]])
    dom = dict(dominated_vertices(X))
    ridge = ids[b_arc(2, 1)]
    assert ridge in dom and dom[ridge] == ids[cc_arc(1, 2)]


def test_mobius_not_strong_rejects_small_n():
    with pytest.raises(TheoremError):
        thm_mobius_not_strong(3)


# --- strips -----------------------------------------------------------------------------


def test_strip_three_two_worked_instance():
    report = thm_strip_strong(3, 2)
    claim = report.claims[0]
    assert claim.status == "pass"
    assert claim.details["vertices"] == 4
    schedule = StrongTrace.from_json(claim.details["schedule"])
    # two scheduled removals strip the top row, then the 1-simplex collapses
    assert len(schedule.steps) == 3


def test_strip_row_case_is_a_simplex():
    report = thm_strip_strong(1, 6)
    claim = report.claims[0]
    assert claim.status == "pass"
    assert claim.details["dimension"] == 3  # n - 3


def test_strip_two_two_is_reported_outside_hypothesis():
    report = thm_strip_strong(2, 2)
    claim = report.claims[0]
    assert claim.status == "info"
    assert "0-sphere" in claim.details["note"]


@pytest.mark.parametrize("m,n", [(4, 4), (2, 7), (7, 2), (3, 5)])
def test_strip_schedule_passes(m, n):
    assert thm_strip_strong(m, n).all_passed


# --- runner -----------------------------------------------------------------------------


def test_run_all_small_limits():
    limits = Limits(polygon=5, crown=3, mobius=3, inner_mobius=3, strip=5)
    report = run_all(limits, seed=7)
    assert report.all_passed
    assert report.to_json()["seed"] == 7
    claims = {c.claim for c in report.claims}
    assert "crown-strong-collapse" in claims
    assert "mobius-3-strong-collapsibility" in claims
    # not-a-paper-claim entries are informational
    info = [c for c in report.claims if c.claim == "mobius-3-strong-collapsibility"]
    assert info[0].status == "info" and info[0].paper_ref == "not-a-paper-claim"


def test_run_all_with_jobs_matches_serial():
    limits = Limits(polygon=4, crown=2, mobius=2, inner_mobius=2, strip=4)
    serial = run_all(limits, seed=0, jobs=1)
    parallel = run_all(limits, seed=0, jobs=4)
    strip_json = lambda r: [c.to_json() for c in r.claims]
    assert strip_json(serial) == strip_json(parallel)


def test_run_all_zero_limits_is_empty():
    limits = Limits(polygon=3, crown=0, mobius=0, inner_mobius=0, strip=1)
    report = run_all(limits)
    assert report.claims == []
