"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v -s`` or
``python tests/test_acceptance.py``. ``QTRD_ACCEPT_COUNT`` sets the number of
random graphs per (n, p) pair in the bound-harness corpus (default 1000).
"""

from __future__ import annotations

import functools
import json
import math
import os
import subprocess
import sys
import time

import pytest

from qtrd import kernels
from qtrd.bounds import (
    GraphProfile,
    all_labeled_graphs,
    check_corpus,
    enumerate_and_check,
    in_ng_lower_class,
    is_c5,
    worker_count,
)
from qtrd.corpus import gnp, standard_corpus
from qtrd.families import (
    complete,
    cycle,
    g1,
    g1_labelings,
    g2k,
    g3k,
    g3k_labeling,
    gprime_k,
    reduction_gprime,
    reduction_labeling,
)
from qtrd.graph import Graph, is_cycle, is_path
from qtrd.greedy import greedy_qtrdf
from qtrd.labeling import is_qtrdf, is_rdf, is_trdf
from qtrd.solvers import BudgetExceeded, Parameter, brute_force, solve

P = Parameter
ACCEPT_COUNT = int(os.environ.get("QTRD_ACCEPT_COUNT", "1000"))
SIX_CHECKS = ["chain", "v2_bridge", "total_sandwich", "gamma_bounds", "maxdeg", "packing"]
RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def report(capsys):
    def _report(number: int, ok: bool, detail: str) -> None:
        RESULTS[number] = (ok, detail)
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail

    return _report


def best_within(g: Graph, p: Parameter, budget: float):
    """(value, exact) from the solver, falling back to its best certificate."""
    try:
        res = solve(g, p, budget=budget)
        return res.value, True, res.certificate
    except BudgetExceeded as exc:
        return exc.best.value, False, exc.best.certificate


# -- 1 -----------------------------------------------------------------------


def _oracle_corpus():
    for n in range(1, 6):
        for mask, g in all_labeled_graphs(n):
            yield f"n{n}-e{mask}", g
    probs = (0.2, 0.35, 0.5, 0.65, 0.8)
    for n in range(6, 10):
        for i in range(500):
            yield f"gnp-{n}-{i}", gnp(n, probs[i % 5], 2024, i)


def test_criterion_1_oracle_equivalence(report):
    t0 = time.perf_counter()
    graphs = discrepancies = comparisons = 0
    first_bad = None
    backends = ["python"] + (["compiled"] if kernels.has_compiled() else [])
    for gid, g in _oracle_corpus():
        graphs += 1
        for p in Parameter:
            if p.is_total and g.isolated_vertices():
                continue
            expected = brute_force(g, p).value
            for b in backends:
                comparisons += 1
                if solve(g, p, budget=None, backend=b).value != expected:
                    discrepancies += 1
                    first_bad = first_bad or (gid, p.value, b)
    elapsed = time.perf_counter() - t0
    ok = discrepancies == 0 and graphs == 1 + 2 + 8 + 64 + 1024 + 2000 and elapsed <= 600
    report(1, ok, f"{graphs} graphs, {comparisons} solve/brute_force comparisons over "
                  f"{'+'.join(backends)} backends, {discrepancies} discrepancies "
                  f"(first: {first_bad}), {elapsed:.1f} s")


# -- 2 -----------------------------------------------------------------------


def test_criterion_2_gap_family(report):
    notes = []
    ok = True
    t0 = time.perf_counter()
    g = g1(1)
    vals = {p: solve(g, p, budget=60).value for p in (P.GAMMA_R, P.GAMMA_QTR, P.GAMMA_TR)}
    exact_t1 = time.perf_counter() - t0
    ok &= (vals[P.GAMMA_R], vals[P.GAMMA_QTR], vals[P.GAMMA_TR]) == (8, 9, 10) and g.n == 15
    ok &= exact_t1 <= 60
    notes.append(f"t=1 exact (8,9,10) in {exact_t1:.2f} s")
    for t in (2, 3):
        g = g1(t)
        labs = g1_labelings(t)
        valid = is_rdf(g, labs["f1"]) and is_trdf(g, labs["f2"]) and is_qtrdf(g, labs["f3"])
        weights = (labs["f1"].weight, labs["f3"].weight, labs["f2"].weight)
        ok &= bool(valid) and weights == (7 * t + 1, 8 * t + 1, 9 * t + 1)
        found = []
        for p, w in zip((P.GAMMA_R, P.GAMMA_QTR, P.GAMMA_TR), weights):
            value, exact, _ = best_within(g, p, 120)
            ok &= value >= w
            found.append(f"{value}{'' if exact else '?'}")
        notes.append(f"t={t} labelings valid with weights {weights}, solver {tuple(found)}")
    report(2, ok, "; ".join(notes) + " (? marks a budget-limited value)")


# -- 3 -----------------------------------------------------------------------


def test_criterion_3_tightness(report):
    t0 = time.perf_counter()
    a = g2k(cycle(3), 3)
    r, q = solve(a, P.GAMMA_R, budget=300).value, solve(a, P.GAMMA_QTR, budget=300).value
    b = gprime_k(cycle(3), 3)
    q2, t2 = solve(b, P.GAMMA_QTR, budget=300).value, solve(b, P.GAMMA_TR, budget=300).value
    elapsed = time.perf_counter() - t0
    ok = (a.n, r, q) == (18, 6, 9) and (b.n, q2, t2) == (15, 9, 12) and elapsed <= 300
    report(3, ok, f"G2k(C3,3) order {a.n}: gamma_R={r}, gamma_qtR={q}; "
                  f"G'k(C3,3) order {b.n}: gamma_qtR={q2}, gamma_tR={t2}; {elapsed:.2f} s")


# -- 4 -----------------------------------------------------------------------


def test_criterion_4_reduction(report):
    k1 = Graph.empty(1)
    small = solve(reduction_gprime(k1), P.GAMMA_QTR, budget=60).value
    gr_k1 = solve(k1, P.GAMMA_R).value
    ok = small == 9 == 8 * 1 + gr_k1
    base = Graph.from_edges(3, [(0, 1), (1, 2)])
    g = reduction_gprime(base)
    f = reduction_labeling(base, solve(base, P.GAMMA_R).certificate)
    ok &= g.n == 45 and f.weight == 26 and bool(is_qtrdf(g, f))
    greedy = greedy_qtrdf(g).weight
    value, exact, cert = best_within(g, P.GAMMA_QTR, 120)
    ok &= greedy >= 26 and value >= 26 and bool(is_qtrdf(g, cert))
    report(4, ok, f"base K1: gamma_qtR={small} = 8+gamma_R(K1); base P3 (order {g.n}): "
                  f"f' weight {f.weight} valid, greedy {greedy}, solver {value} "
                  f"({'exact' if exact else 'budget-limited'})")


# -- 5 -----------------------------------------------------------------------


def test_criterion_5_g3k(report):
    base = complete(4)
    g = g3k(base, 3)
    f = g3k_labeling(base, 3)
    ok = g.n == 34 and f.weight == 18 and bool(is_qtrdf(g, f))
    t0 = time.perf_counter()
    value, exact, _ = best_within(g, P.GAMMA_QTR, 30 * 60)
    ok &= value >= 18
    report(5, ok, f"order {g.n}, certificate weight {f.weight} valid; solver "
                  f"{value} ({'exact lower bound confirmed' if exact else 'budget-limited'}) "
                  f"in {time.perf_counter() - t0:.2f} s")


# -- 6 -----------------------------------------------------------------------


def test_criterion_6_characterizations(report):
    t0 = time.perf_counter()
    bad = []
    counts = {"three": 0, "four": 0, "order": 0, "connected": 0}
    for n in range(3, 7):
        for mask, g in all_labeled_graphs(n, connected_only=True):
            counts["connected"] += 1
            prof = GraphProfile(g, budget=None)
            q = prof.value(P.GAMMA_QTR)
            three = g.max_degree == n - 1
            four = prof.value(P.GAMMA) == 2 and prof.value(P.GAMMA_T) == 2
            order = is_path(g) or is_cycle(g)
            counts["three"] += q == 3
            counts["four"] += q == 4
            counts["order"] += q == n
            if (q == 3) != three or (q == 4) != four or (q == n) != order:
                bad.append(f"n{n}-e{mask}")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed <= 900
    report(6, ok, f"{counts['connected']} connected labeled graphs with 3<=n<=6: "
                  f"{counts['three']} with value 3, {counts['four']} with value 4, "
                  f"{counts['order']} with value n; {len(bad)} counterexamples; {elapsed:.1f} s")


# -- 7 -----------------------------------------------------------------------


def test_criterion_7_nordhaus_gaddum(report):
    violations, seven, top = [], {}, {}
    for n in (4, 5, 6):
        seven[n] = top[n] = 0
        for mask, g in all_labeled_graphs(n):
            prof = GraphProfile(g, budget=None)
            s = prof.qtr_by_components() + prof.complement.qtr_by_components()
            if not 7 <= s <= n + 5:
                violations.append((n, mask, "range"))
            if (s == 7) != in_ng_lower_class(g):
                violations.append((n, mask, "seven"))
            if s == n + 5:
                top[n] += 1
                if not is_c5(g):
                    violations.append((n, mask, "top"))
            seven[n] += s == 7
    agg = enumerate_and_check(6, ["nordhaus_gaddum"], workers=worker_count())
    ok = not violations and top == {4: 0, 5: 12, 6: 0} and agg.all_hold
    report(7, ok, f"sum=7 counts {seven}, sum=n+5 counts {top} (12 = labeled C5s), "
                  f"{len(violations)} violations; check_nordhaus_gaddum over "
                  f"{agg.graphs_checked} graphs at n=6 all hold: {agg.all_hold}")


# -- 8 and 9 share the corpus ------------------------------------------------


@functools.lru_cache(maxsize=1)
def full_corpus():
    items = []
    for n in range(1, 7):
        items += [(f"n{n}-e{mask}", g) for mask, g in all_labeled_graphs(n)]
    items += standard_corpus(range(7, 13), (0.2, 0.5, 0.8), ACCEPT_COUNT, seed=0)
    return items


def test_criterion_8_greedy(report):
    checked = exact = 0
    bad = []
    for gid, g in full_corpus():
        if g.n < 2:
            continue
        checked += 1
        tr = greedy_qtrdf(g)
        ok_g = bool(is_qtrdf(g, tr.labeling)) and tr.weight == 3 * tr.q + len(tr.isolated_leftover)
        value = solve(g, P.GAMMA_QTR, budget=60).value
        exact += 1
        if not ok_g or tr.weight < value:
            bad.append(gid)
    report(8, not bad, f"{checked} corpus graphs (n>=2), exact value computed on {exact}; "
                       f"{len(bad)} failures")


def test_criterion_9_bound_harness(report):
    t0 = time.perf_counter()
    agg = check_corpus(full_corpus(), SIX_CHECKS, "acceptance", worker_count(), budget=60)
    applicable = {k: v["applicable"] for k, v in agg.counts.items()}
    violated = sum(v["violated"] for v in agg.counts.values())
    report(9, agg.all_hold, f"{agg.graphs_checked} graphs (exhaustive n<=6 + "
                            f"{ACCEPT_COUNT} per (n,p) for n=7..12, p in 0.2/0.5/0.8); "
                            f"applicable {applicable}; {violated} violations; "
                            f"{time.perf_counter() - t0:.1f} s")


# -- 10 ----------------------------------------------------------------------


def _cli(args, threads):
    env = dict(os.environ, QTRD_THREADS=str(threads))
    proc = subprocess.run([sys.executable, "-m", "qtrd", *args], env=env,
                          capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_10_determinism(report, tmp_path):
    runs = [
        ["verify-bounds", "--random", "10", "0.5", "60", "17"],
        ["verify-bounds", "--enumerate", "5"],
        ["enumerate", "5", "--list"],
        ["compute", "--all-params", "--no-timing", "g1:t=1"],
    ]
    mismatched = []
    for args in runs:
        outs = {_cli(args, t) for t in (1, 2, 3, 1)}
        if len(outs) != 1:
            mismatched.append(" ".join(args))
    manifests = []
    for i, threads in enumerate((1, 4)):
        d = tmp_path / f"c{i}"
        _cli(["--seed", "99", "corpus", "--n", "9", "--p", "0.3", "--count", "5", "--dir", str(d)],
             threads)
        manifests.append((d / "manifest.json").read_bytes())
    if manifests[0] != manifests[1]:
        mismatched.append("corpus")
    report(10, not mismatched, f"{len(runs)} report commands and one corpus run repeated with "
                               f"QTRD_THREADS in (1,2,3,4): mismatches {mismatched or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
