import json

import pytest

from pairswitch import (
    BoundExceeded,
    Design,
    State,
    double_factorial,
    enumerate_pair_lists,
    lower_bound,
    route,
    verify_design,
    verify_minimality,
    worst_case_pair_list,
)
from pairswitch.verification import report_to_json


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_pair_lists(2)) == 1
    assert sum(1 for _ in enumerate_pair_lists(4)) == 3
    assert sum(1 for _ in enumerate_pair_lists(12)) == 10395
    assert double_factorial(11) == 10395


def test_enumeration_unique_and_valid():
    seen = set()
    for demand in enumerate_pair_lists(8):
        assert demand.ports == 8
        assert demand.pairs not in seen
        seen.add(demand.pairs)
    assert len(seen) == double_factorial(7) == 105


def test_worst_case_pair_lists():
    assert worst_case_pair_list(4).pairs == ((0, 3), (1, 2))
    assert worst_case_pair_list(2).pairs == ((0, 1),)
    assert worst_case_pair_list(12).to_text() == "0-11,1-10,2-9,3-8,4-7,5-6"


def test_lower_bound_values():
    assert lower_bound(4) == 2
    assert lower_bound(12) == 30
    assert lower_bound(2) == 0
    # closed form agrees with the layer sum
    for n in range(2, 33, 2):
        assert lower_bound(n) == sum(n - 2 * k for k in range(1, n // 2))


def test_verify_triangular_8_exhaustive():
    report = verify_design(Design.TRIANGULAR, 8, mode="exhaustive")
    assert report.demands_checked == 105
    assert report.failures == ()
    assert report.passed


def test_verify_chevron_2_exhaustive():
    report = verify_design(Design.CHEVRON, 2, mode="exhaustive")
    assert report.demands_checked == 1
    assert report.passed


def test_verify_cap_enforced():
    with pytest.raises(BoundExceeded):
        verify_design(Design.TRIANGULAR, 14, mode="exhaustive")
    # opting in with a larger cap is allowed (not executed here: slow)


def test_verify_unknown_mode_rejected():
    with pytest.raises(ValueError):
        verify_design(Design.TRIANGULAR, 4, mode="sometimes")


def test_random_mode_is_seed_stable():
    a = verify_design(Design.BRICKWORK, 16, mode="random", samples=40, seed=9)
    b = verify_design(Design.BRICKWORK, 16, mode="random", samples=40, seed=9)
    assert a.to_dict() == b.to_dict()
    assert a.passed and a.demands_checked == 40


def test_minimality_chevron_4():
    report = verify_minimality(Design.CHEVRON, 4)
    assert report.passed
    assert len(report.outcomes) == 2
    assert all(not routable for _, routable in report.outcomes)


def test_cross_count_bounded_with_equality_on_worst_case():
    for design in Design:
        n = 6
        bound = n * (n - 2) // 4
        worst = worst_case_pair_list(n)
        for demand in enumerate_pair_lists(n):
            plan = route(design, n, demand)
            crosses = sum(1 for s in plan.states.values() if s is State.CROSS)
            assert crosses <= bound
            if demand == worst:
                assert crosses == bound


def test_report_json_shape():
    report = verify_design(Design.TRIANGULAR, 4, mode="exhaustive")
    doc = json.loads(report_to_json(report))
    assert list(doc) == [
        "design", "ports", "mode", "samples", "seed",
        "demands_checked", "failures", "max_depth", "min_depth",
    ]
    assert doc["design"] == "triangular"
    assert doc["demands_checked"] == 3
    assert doc["failures"] == []

    mreport = verify_minimality(Design.TRIANGULAR, 4)
    mdoc = json.loads(report_to_json(mreport))
    assert mdoc["passed"] is True
    assert len(mdoc["outcomes"]) == 2
