"""Per-graph verification of the inequalities and characterizations for gamma_qtR."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .graph import Graph, is_complete, is_cycle, is_edgeless, is_path
from .labeling import v12_star
from .solvers import (
    DEFAULT_BUDGET,
    Parameter,
    ParamResult,
    efficient_dominating_set,
    qtrd_disconnected,
    solve,
)


@dataclass(frozen=True)
class BoundCheck:
    name: str
    applicable: bool
    lhs: int = 0
    rhs: int = 0
    holds: bool | None = None  # None when not applicable
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "witness": self.witness,
        }


def _skip(name: str, why: str) -> BoundCheck:
    return BoundCheck(name, False, witness={"reason": why})


@dataclass
class BoundReport:
    graph_id: str
    checks: list[BoundCheck] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)

    @property
    def failures(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.applicable and not c.holds]

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "checks": [c.to_json() for c in self.checks],
            "all_hold": self.all_hold,
        }


class GraphProfile:
    """Lazily computed exact parameters of one graph, shared by all checks."""

    def __init__(self, g: Graph, budget: float | None = DEFAULT_BUDGET, backend: str | None = None):
        self.g = g
        self.budget = budget
        self.backend = backend
        self._results: dict[Parameter, ParamResult] = {}
        self._eds: frozenset[int] | None | bool = False
        self._split: int | None = None
        self._complement: GraphProfile | None = None

    def result(self, p: Parameter) -> ParamResult:
        if p not in self._results:
            self._results[p] = solve(self.g, p, budget=self.budget, backend=self.backend)
        return self._results[p]

    def value(self, p: Parameter) -> int:
        return self.result(p).value

    def efficient_set(self) -> frozenset[int] | None:
        if self._eds is False:
            self._eds = efficient_dominating_set(self.g, backend=self.backend)
        return self._eds  # type: ignore[return-value]

    def qtr_by_components(self) -> int:
        if self._split is None:
            self._split = qtrd_disconnected(self.g, self.budget, self.backend).value
        return self._split

    @property
    def complement(self) -> "GraphProfile":
        if self._complement is None:
            self._complement = GraphProfile(self.g.complement(), self.budget, self.backend)
        return self._complement


# -- structural recognizers --------------------------------------------------


def is_p2(g: Graph) -> bool:
    return g.n == 2 and g.size == 1


def is_c5(g: Graph) -> bool:
    return g.n == 5 and is_cycle(g)


def is_f1(g: Graph) -> bool:
    """Order >= 4, exactly one vertex of degree n-1, at least one vertex of degree 1."""
    if g.n < 4:
        return False
    degs = [len(nb) for nb in g.adj]
    return degs.count(g.n - 1) == 1 and 1 in degs


def is_f1_prime(g: Graph) -> bool:
    return is_f1(g.complement())


def is_k4_minus_e(g: Graph) -> bool:
    return g.n == 4 and g.degree_sequence() == [3, 3, 2, 2]


def in_ng_lower_class(g: Graph) -> bool:
    """K4, its complement, K4-e, its complement, or a member of F1 or F1'."""
    if g.n == 4 and (is_complete(g) or is_edgeless(g)):
        return True
    if is_k4_minus_e(g) or is_k4_minus_e(g.complement()):
        return True
    return is_f1(g) or is_f1_prime(g)


# -- checks ------------------------------------------------------------------


def _profile(g: Graph, profile: GraphProfile | None) -> GraphProfile:
    return profile if profile is not None else GraphProfile(g)


def check_chain(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "chain"
    if g.n == 0 or g.isolated_vertices():
        return _skip(name, "graph has an isolated vertex")
    pr = _profile(g, profile)
    r, q, t = (pr.value(p) for p in (Parameter.GAMMA_R, Parameter.GAMMA_QTR, Parameter.GAMMA_TR))
    return BoundCheck(name, True, r, t, r <= q <= t,
                      {"gamma_R": r, "gamma_qtR": q, "gamma_tR": t})


def check_v2_bridge(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "v2_bridge"
    if g.n == 0 or g.isolated_vertices():
        return _skip(name, "graph has an isolated vertex")
    pr = _profile(g, profile)
    r = pr.result(Parameter.GAMMA_R)
    q = pr.result(Parameter.GAMMA_QTR)
    t = pr.value(Parameter.GAMMA_TR)
    n2 = len(r.certificate.v2)
    n1 = len(q.certificate.v1)
    first = q.value <= r.value + n2
    second = t <= q.value + n1
    return BoundCheck(name, True, q.value, r.value + n2, first and second, {
        "gamma_R": r.value, "V2_of_gamma_R_function": n2,
        "gamma_qtR": q.value, "V1_of_gamma_qtR_function": n1, "gamma_tR": t,
        "qtR_le_R_plus_V2": first, "tR_le_qtR_plus_V1": second,
    })


def check_total_sandwich(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "total_sandwich"
    if g.n < 2 or not g.is_connected():
        return _skip(name, "needs a connected graph of order >= 2")
    pr = _profile(g, profile)
    gt, q, t = (pr.value(p) for p in (Parameter.GAMMA_T, Parameter.GAMMA_QTR, Parameter.GAMMA_TR))
    sandwich = gt <= q <= 2 * gt
    left = (q == gt) == is_p2(g)
    plus_one = (q == gt + 1) == (q == 3)
    right = (q == 2 * gt) == (q == t and t == 2 * gt)
    return BoundCheck(name, True, gt, 2 * gt, sandwich and left and plus_one and right, {
        "gamma_t": gt, "gamma_qtR": q, "gamma_tR": t, "is_P2": is_p2(g),
        "sandwich": sandwich, "equal_iff_P2": left, "plus_one_iff_3": plus_one,
        "double_iff_total_roman": right,
    })


def check_gamma_bounds(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "gamma_bounds"
    if g.n == 0 or g.isolated_vertices():
        return _skip(name, "graph has an isolated vertex")
    pr = _profile(g, profile)
    gamma = pr.value(Parameter.GAMMA)
    q = pr.result(Parameter.GAMMA_QTR)
    f = q.certificate
    n2, star = len(f.v2), len(v12_star(g, f))
    lower = gamma + n2 + star
    return BoundCheck(name, True, lower, 3 * gamma, lower <= q.value <= 3 * gamma, {
        "gamma": gamma, "V2": n2, "V12_star": star, "gamma_qtR": q.value,
    })


def check_maxdeg(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "maxdeg"
    delta = g.max_degree
    if delta < 2:
        return _skip(name, "maximum degree below 2")
    pr = _profile(g, profile)
    q = pr.value(Parameter.GAMMA_QTR)
    lo, hi = math.ceil(2 * g.n / delta), g.n - delta + 2
    return BoundCheck(name, True, lo, hi, lo <= q <= hi,
                      {"n": g.n, "Delta": delta, "gamma_qtR": q})


def check_small_values(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "small_values"
    if g.n < 3 or not g.is_connected():
        return _skip(name, "needs a connected graph of order >= 3")
    pr = _profile(g, profile)
    q = pr.value(Parameter.GAMMA_QTR)
    gamma, gt = pr.value(Parameter.GAMMA), pr.value(Parameter.GAMMA_T)
    dominating_vertex = g.max_degree == g.n - 1
    path_or_cycle = is_path(g) or is_cycle(g)
    range_ok = 3 <= q <= g.n
    three = (q == 3) == dominating_vertex
    four = (q == 4) == (gamma == 2 and gt == 2)
    order = (q == g.n) == path_or_cycle
    return BoundCheck(name, True, 3, g.n, range_ok and three and four and order, {
        "gamma_qtR": q, "gamma": gamma, "gamma_t": gt, "Delta": g.max_degree,
        "path_or_cycle": path_or_cycle, "three_iff_dominating_vertex": three,
        "four_iff_gamma_and_gamma_t_two": four, "n_iff_path_or_cycle": order,
    })


def check_packing(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "packing"
    if g.n == 0:
        return _skip(name, "empty graph")
    pr = _profile(g, profile)
    q = pr.value(Parameter.GAMMA_QTR)
    rho = pr.value(Parameter.RHO)
    bound = g.n - rho * (g.min_degree - 2)
    eds = pr.efficient_set()
    witness = {"gamma_qtR": q, "rho": rho, "delta": g.min_degree,
               "efficient_dominating_set": None if eds is None else sorted(eds)}
    holds = q <= bound
    if eds is not None:
        witness["three_rho"] = 3 * rho
        witness["qtR_le_three_rho"] = q <= 3 * rho
        holds = holds and q <= 3 * rho
    return BoundCheck(name, True, q, bound, holds, witness)


def check_nordhaus_gaddum(g: Graph, profile: GraphProfile | None = None) -> BoundCheck:
    name = "nordhaus_gaddum"
    if g.n < 4:
        return _skip(name, "needs order >= 4")
    pr = _profile(g, profile)
    a, b = pr.qtr_by_components(), pr.complement.qtr_by_components()
    s = a + b
    in_class = in_ng_lower_class(g)
    c5 = is_c5(g)
    sandwich = 7 <= s <= g.n + 5
    low = (s == 7) == in_class
    high = (s == g.n + 5) == c5
    return BoundCheck(name, True, 7, g.n + 5, sandwich and low and high, {
        "gamma_qtR": a, "gamma_qtR_complement": b, "sum": s,
        "in_lower_class": in_class, "is_C5": c5,
        "seven_iff_lower_class": low, "n_plus_5_iff_C5": high,
    })


CHECKS: dict[str, Callable[[Graph, GraphProfile | None], BoundCheck]] = {
    "chain": check_chain,
    "v2_bridge": check_v2_bridge,
    "total_sandwich": check_total_sandwich,
    "gamma_bounds": check_gamma_bounds,
    "maxdeg": check_maxdeg,
    "small_values": check_small_values,
    "packing": check_packing,
    "nordhaus_gaddum": check_nordhaus_gaddum,
}


def resolve_checks(names: Iterable[str] | None) -> list[str]:
    if names is None:
        return list(CHECKS)
    out = []
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
        out.append(name)
    return out


def bound_report(
    g: Graph,
    graph_id: str = "graph",
    checks: Iterable[str] | None = None,
    budget: float | None = DEFAULT_BUDGET,
    backend: str | None = None,
) -> BoundReport:
    profile = GraphProfile(g, budget, backend)
    report = BoundReport(graph_id)
    for name in resolve_checks(checks):
        report.checks.append(CHECKS[name](g, profile))
    return report


# -- corpora -----------------------------------------------------------------


@dataclass
class AggregateReport:
    """Check outcomes over many graphs; violations keep the full failing report."""

    label: str
    checks: list[str]
    graphs_checked: int = 0
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)

    def __post_init__(self) -> None:
        for name in self.checks:
            self.counts.setdefault(name, {"applicable": 0, "held": 0, "violated": 0})

    def add(self, report: BoundReport) -> None:
        self.graphs_checked += 1
        bad = False
        for c in report.checks:
            if not c.applicable:
                continue
            slot = self.counts[c.name]
            slot["applicable"] += 1
            if c.holds:
                slot["held"] += 1
            else:
                slot["violated"] += 1
                bad = True
        if bad:
            self.violations.append(report.to_json())

    def merge(self, other: "AggregateReport") -> None:
        self.graphs_checked += other.graphs_checked
        for name, slot in other.counts.items():
            for key, val in slot.items():
                self.counts[name][key] += val
        self.violations.extend(other.violations)

    @property
    def all_hold(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "checks": self.checks,
            "graphs_checked": self.graphs_checked,
            "counts": self.counts,
            "violations": self.violations,
            "all_hold": self.all_hold,
        }


def worker_count(requested: int | None = None) -> int:
    """Workers from the argument or ``QTRD_THREADS`` (0 or unset means one per CPU)."""
    if requested is None:
        env = os.environ.get("QTRD_THREADS", "0").strip() or "0"
        requested = int(env)
    if requested <= 0:
        requested = os.cpu_count() or 1
    return requested


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def labeled_graph(n: int, mask: int) -> Graph:
    """The labeled graph whose edge set is encoded by ``mask`` over sorted vertex pairs."""
    return Graph.from_edges(n, [e for i, e in enumerate(_pairs(n)) if mask >> i & 1])


def all_labeled_graphs(n: int, connected_only: bool = False):
    """Yield ``(mask, graph)`` for every labeled graph of order ``n``."""
    for mask in range(1 << len(_pairs(n))):
        g = labeled_graph(n, mask)
        if connected_only and not g.is_connected():
            continue
        yield mask, g


def _enumerate_chunk(args) -> AggregateReport:
    n, lo, hi, checks, connected_only, budget, backend = args
    agg = AggregateReport(f"n={n}", checks)
    for mask in range(lo, hi):
        g = labeled_graph(n, mask)
        if connected_only and not g.is_connected():
            continue
        agg.add(bound_report(g, f"n{n}-e{mask}", checks, budget, backend))
    return agg


def _run_sharded(fn, tasks: Sequence, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    import multiprocessing as mp

    with mp.get_context("fork").Pool(workers) as pool:
        return pool.map(fn, tasks)  # preserves task order


def enumerate_and_check(
    n: int,
    checks: Iterable[str] | None = None,
    connected_only: bool = False,
    deep: bool = False,
    workers: int | None = None,
    budget: float | None = DEFAULT_BUDGET,
    backend: str | None = None,
) -> AggregateReport:
    """Run checks on every labeled graph of order ``n`` (n = 7 requires ``deep``)."""
    if n < 1:
        raise ValueError("order must be positive")
    if n > 7:
        raise ValueError("exhaustive enumeration is limited to n <= 7")
    if n == 7 and not deep:
        raise ValueError("n = 7 enumerates 2,097,152 graphs; pass deep=True")
    names = resolve_checks(checks)
    total = 1 << len(_pairs(n))
    shards = max(1, min(total, 64))
    step = -(-total // shards)
    tasks = [(n, lo, min(lo + step, total), names, connected_only, budget, backend)
             for lo in range(0, total, step)]
    out = AggregateReport(f"exhaustive n={n}" + (" connected" if connected_only else ""), names)
    for part in _run_sharded(_enumerate_chunk, tasks, worker_count(workers)):
        out.merge(part)
    return out


def _corpus_chunk(args) -> AggregateReport:
    items, checks, budget, backend, label = args
    agg = AggregateReport(label, checks)
    for graph_id, g in items:
        agg.add(bound_report(g, graph_id, checks, budget, backend))
    return agg


def check_corpus(
    items: Sequence[tuple[str, Graph]],
    checks: Iterable[str] | None = None,
    label: str = "corpus",
    workers: int | None = None,
    budget: float | None = DEFAULT_BUDGET,
    backend: str | None = None,
) -> AggregateReport:
    names = resolve_checks(checks)
    items = list(items)
    shards = max(1, min(len(items), 64))
    step = -(-len(items) // shards) if items else 1
    tasks = [(items[i:i + step], names, budget, backend, label) for i in range(0, len(items), step)]
    out = AggregateReport(label, names)
    for part in _run_sharded(_corpus_chunk, tasks, worker_count(workers)):
        out.merge(part)
    return out
