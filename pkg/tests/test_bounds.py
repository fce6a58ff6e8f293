import json
import os

import pytest
from hypothesis import given, settings

from conftest import graphs
from qtrd.bounds import (
    CHECKS,
    BoundCheck,
    BoundReport,
    GraphProfile,
    bound_report,
    check_chain,
    check_corpus,
    check_gamma_bounds,
    check_maxdeg,
    check_nordhaus_gaddum,
    check_packing,
    check_small_values,
    check_total_sandwich,
    check_v2_bridge,
    enumerate_and_check,
    in_ng_lower_class,
    is_c5,
    is_f1,
    is_f1_prime,
    is_k4_minus_e,
    labeled_graph,
    resolve_checks,
    worker_count,
)
from qtrd.corpus import random_corpus
from qtrd.families import complete, cycle, empty, g2k, gprime_k, path, star
from qtrd.graph import Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + [(i, i + 5) for i in range(5)])


def test_chain_examples():
    c = check_chain(cycle(5))
    assert c.holds and c.witness == {"gamma_R": 4, "gamma_qtR": 5, "gamma_tR": 5}
    c = check_chain(complete(4))
    assert c.holds and (c.lhs, c.witness["gamma_qtR"], c.rhs) == (2, 3, 3)
    c = check_chain(path(2))
    assert c.holds and (c.lhs, c.rhs) == (2, 2)


def test_v2_bridge_examples():
    c = check_v2_bridge(g2k(cycle(3), 3))
    assert c.holds and c.lhs == c.rhs == 9
    c = check_v2_bridge(gprime_k(cycle(3), 3))
    assert c.holds
    assert c.witness["gamma_tR"] == c.witness["gamma_qtR"] + c.witness["V1_of_gamma_qtR_function"] == 12
    c = check_v2_bridge(complete(5))
    assert c.holds and (c.lhs, c.rhs) == (3, 3)


def test_total_sandwich_examples():
    c = check_total_sandwich(path(2))
    assert c.holds and c.witness["gamma_t"] == c.witness["gamma_qtR"] == 2
    c = check_total_sandwich(complete(7))
    assert c.holds and (c.witness["gamma_t"], c.witness["gamma_qtR"]) == (2, 3)
    c = check_total_sandwich(cycle(6))
    assert c.holds and c.witness["gamma_t"] == 4 and c.rhs == 8


def test_gamma_bounds_examples():
    c = check_gamma_bounds(cycle(6))
    assert c.holds and c.rhs == 6 and c.witness["gamma_qtR"] == 6
    c = check_gamma_bounds(star(7))
    assert c.holds and c.rhs == 3 and c.witness["gamma_qtR"] == 3
    c = check_gamma_bounds(path(5))
    assert c.holds and c.witness["gamma"] == 2 and c.rhs == 6


def test_maxdeg_examples():
    c = check_maxdeg(petersen())
    assert c.holds and (c.lhs, c.witness["gamma_qtR"], c.rhs) == (7, 7, 9)
    c = check_maxdeg(cycle(8))
    assert c.holds and c.lhs == c.rhs == 8
    c = check_maxdeg(complete(6))
    assert c.holds and c.lhs == c.rhs == 3


def test_small_values_examples():
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    c = check_small_values(g)
    assert c.holds and c.witness["gamma_qtR"] == 3
    c = check_small_values(cycle(4))
    assert c.holds and c.witness["gamma_qtR"] == 4 and c.witness["gamma"] == c.witness["gamma_t"] == 2
    c = check_small_values(path(7))
    assert c.holds and c.witness["gamma_qtR"] == 7 and c.witness["path_or_cycle"]


def test_packing_examples():
    c = check_packing(complete(5))
    assert c.holds and c.lhs == c.rhs == 3
    c = check_packing(cycle(6))
    assert c.holds and c.lhs == c.rhs == 6
    assert c.witness["efficient_dominating_set"] is not None and c.witness["three_rho"] == 6
    c = check_packing(cycle(4))
    assert c.witness["efficient_dominating_set"] is None and "three_rho" not in c.witness


def test_nordhaus_gaddum_examples():
    c = check_nordhaus_gaddum(complete(4))
    assert c.holds and c.witness["sum"] == 7
    c = check_nordhaus_gaddum(cycle(5))
    assert c.holds and c.witness["sum"] == 10 == c.rhs
    c = check_nordhaus_gaddum(path(4))
    assert c.holds and c.witness["sum"] == 8


@pytest.mark.parametrize("check, g", [
    (check_chain, Graph.from_edges(3, [(0, 1)])),
    (check_v2_bridge, empty(2)),
    (check_total_sandwich, Graph.from_edges(4, [(0, 1), (2, 3)])),
    (check_total_sandwich, Graph.empty(1)),
    (check_gamma_bounds, empty(3)),
    (check_maxdeg, path(2)),
    (check_small_values, path(2)),
    (check_nordhaus_gaddum, cycle(3)),
])
def test_inapplicable_checks_are_flagged(check, g):
    c = check(g)
    assert c.applicable is False and c.holds is None
    assert "reason" in c.witness


def test_all_hold_ignores_inapplicable():
    r = BoundReport("x", [BoundCheck("a", False), BoundCheck("b", True, 1, 2, True)])
    assert r.all_hold
    r.checks.append(BoundCheck("c", True, 3, 2, False))
    assert not r.all_hold and [c.name for c in r.failures] == ["c"]


def test_recognizers():
    assert is_c5(cycle(5)) and not is_c5(cycle(6))
    k4e = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert is_k4_minus_e(k4e)
    assert in_ng_lower_class(k4e) and in_ng_lower_class(k4e.complement())
    assert in_ng_lower_class(complete(4)) and in_ng_lower_class(empty(4))
    assert is_f1(star(6)) and is_f1_prime(star(6).complement())
    assert not is_f1(complete(5))  # every vertex dominating
    assert not is_f1(cycle(4))
    assert not in_ng_lower_class(cycle(4))


def test_report_json_is_plain():
    r = bound_report(cycle(5), "c5")
    data = json.loads(json.dumps(r.to_json()))
    assert data["graph_id"] == "c5" and data["all_hold"] is True
    assert [c["name"] for c in data["checks"]] == list(CHECKS)


def test_resolve_checks():
    assert resolve_checks(None) == list(CHECKS)
    with pytest.raises(ValueError):
        resolve_checks(["nope"])


def test_profile_caches_results():
    prof = GraphProfile(cycle(6))
    check_chain(cycle(6), prof)
    first = prof._results.copy()
    check_v2_bridge(cycle(6), prof)
    for p, res in first.items():
        assert prof._results[p] is res


def test_enumerate_n4():
    agg = enumerate_and_check(4, workers=1)
    assert agg.graphs_checked == 64 and agg.all_hold


def test_enumerate_n5_small_values_connected():
    agg = enumerate_and_check(5, ["small_values"], connected_only=True, workers=1)
    assert agg.graphs_checked == 728 and agg.all_hold
    assert agg.counts["small_values"]["applicable"] == 728


def test_enumeration_guards():
    with pytest.raises(ValueError):
        enumerate_and_check(7)
    with pytest.raises(ValueError):
        enumerate_and_check(8, deep=True)
    with pytest.raises(ValueError):
        enumerate_and_check(0)


def test_sharding_does_not_change_report():
    a = enumerate_and_check(5, workers=1).to_json()
    b = enumerate_and_check(5, workers=3).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    items = random_corpus(8, 0.5, 30, 11)
    c = check_corpus(items, workers=1).to_json()
    d = check_corpus(items, workers=2).to_json()
    assert c == d


def test_worker_count(monkeypatch):
    monkeypatch.setenv("QTRD_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("QTRD_THREADS", "0")
    assert worker_count() >= 1
    assert worker_count(2) == 2


def test_labeled_graph_encoding():
    assert labeled_graph(3, 0b001).edges() == [(0, 1)]
    assert labeled_graph(3, 0b100).edges() == [(1, 2)]
    assert labeled_graph(4, 63) == complete(4)


@settings(max_examples=40)
@given(graphs(max_n=9))
def test_random_graphs_satisfy_every_check(g):
    assert bound_report(g).all_hold


@pytest.mark.slow
@pytest.mark.skipif(os.environ.get("QTRD_DEEP") != "1", reason="set QTRD_DEEP=1 (n=7 takes many minutes)")
def test_enumerate_n7_deep():
    agg = enumerate_and_check(7, deep=True)
    assert agg.graphs_checked == 2 ** 21 and agg.all_hold
