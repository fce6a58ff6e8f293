"""Exact domination-type parameters: exhaustive oracles and branch and bound."""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum

from . import kernels
from .graph import Graph, GraphError
from .greedy import greedy_qtrdf
from .labeling import RomanLabeling, is_qtrdf, is_rdf, is_trdf

DEFAULT_BUDGET = 60.0


class Parameter(str, Enum):
    GAMMA = "gamma"
    GAMMA_T = "gamma_t"
    GAMMA_R = "gamma_R"
    GAMMA_TR = "gamma_tR"
    GAMMA_QTR = "gamma_qtR"
    RHO = "rho"

    @classmethod
    def parse(cls, text: str) -> "Parameter":
        key = text.strip()
        if key in _ALIASES:
            return _ALIASES[key]
        raise ValueError(f"unknown parameter {text!r}; choose from {sorted(_ALIASES)}")

    @property
    def is_roman(self) -> bool:
        return self in (Parameter.GAMMA_R, Parameter.GAMMA_TR, Parameter.GAMMA_QTR)

    @property
    def is_total(self) -> bool:
        return self in (Parameter.GAMMA_T, Parameter.GAMMA_TR)


_ALIASES = {p.value: p for p in Parameter}
_ALIASES.update(
    {
        "g": Parameter.GAMMA,
        "t": Parameter.GAMMA_T,
        "R": Parameter.GAMMA_R,
        "tR": Parameter.GAMMA_TR,
        "qtR": Parameter.GAMMA_QTR,
    }
)

_KIND = {
    Parameter.GAMMA_R: kernels.ROMAN,
    Parameter.GAMMA_QTR: kernels.QUASI_TOTAL,
    Parameter.GAMMA_TR: kernels.TOTAL_ROMAN,
}


class SolverError(Exception):
    pass


class CapExceeded(SolverError):
    pass


class IsolatedVertexError(SolverError, GraphError):
    pass


class BudgetExceeded(SolverError):
    """Time budget ran out; ``best`` holds the best certificate found (``exact=False``)."""

    def __init__(self, best: "ParamResult") -> None:
        super().__init__(
            f"budget exhausted computing {best.parameter.value}; best known value {best.value}"
        )
        self.best = best

    def __reduce__(self):
        return (type(self), (self.best,))


@dataclass(frozen=True)
class Caps:
    """Largest graph orders accepted by the exhaustive and exact routines."""

    labeling: int = 15
    subset: int = 20
    exact: int = 64


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class ParamResult:
    parameter: Parameter
    value: int
    certificate: RomanLabeling | frozenset[int]
    nodes_explored: int
    elapsed: float
    exact: bool = True

    def to_json(self, timing: bool = True) -> dict:
        cert = self.certificate
        out = {
            "parameter": self.parameter.value,
            "value": self.value,
            "certificate": str(cert) if isinstance(cert, RomanLabeling) else sorted(cert),
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else 0,
            "exact": self.exact,
        }
        return out


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def _set_to_mask(s) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def _masks(f: RomanLabeling) -> tuple[int, int]:
    return _set_to_mask(f.v1), _set_to_mask(f.v2)


def _require_no_isolated(g: Graph, parameter: Parameter) -> None:
    iso = g.isolated_vertices()
    if iso:
        raise IsolatedVertexError(
            f"{parameter.value} is undefined: vertex {iso[0]} is isolated"
        )


def certificate_valid(g: Graph, result: ParamResult) -> bool:
    """Does the certificate satisfy its predicate and realise the reported value?"""
    p, cert = result.parameter, result.certificate
    if p.is_roman:
        if not isinstance(cert, RomanLabeling) or cert.weight != result.value:
            return False
        check = {Parameter.GAMMA_R: is_rdf, Parameter.GAMMA_QTR: is_qtrdf,
                 Parameter.GAMMA_TR: is_trdf}[p]
        return bool(check(g, cert))
    if len(cert) != result.value:
        return False
    if p is Parameter.GAMMA:
        return all(v in cert or g.adj[v] & cert for v in range(g.n))
    if p is Parameter.GAMMA_T:
        return all(g.adj[v] & cert for v in range(g.n))
    return is_packing(g, cert)


def is_packing(g: Graph, s) -> bool:
    seen: set[int] = set()
    for v in s:
        nb = g.closed_neighborhood(v)
        if seen & nb:
            return False
        seen |= nb
    return True


# -- exhaustive oracles ------------------------------------------------------


def brute_force(
    g: Graph, parameter: Parameter | str, caps: Caps = DEFAULT_CAPS, backend: str | None = None
) -> ParamResult:
    """Exhaustive optimum with the lexicographically least certificate.

    Labelings are enumerated over all ``3**n`` digit strings, vertex subsets
    over all ``2**n`` masks.
    """
    p = Parameter.parse(parameter) if isinstance(parameter, str) else parameter
    if p.is_total:
        _require_no_isolated(g, p)
    k = kernels.backend(g.n, backend)
    t0 = time.perf_counter()
    if p.is_roman:
        if g.n > caps.labeling:
            raise CapExceeded(f"labeling brute force capped at n={caps.labeling}, got {g.n}")
        w, ones, twos, visited = k.brute_labeling(list(g.masks), g.n, _KIND[p])
        cert: RomanLabeling | frozenset[int] = RomanLabeling.from_masks(g.n, ones, twos)
    else:
        if g.n > caps.subset:
            raise CapExceeded(f"subset brute force capped at n={caps.subset}, got {g.n}")
        kind = {
            Parameter.GAMMA: kernels.DOMINATING,
            Parameter.GAMMA_T: kernels.TOTAL_DOMINATING,
            Parameter.RHO: kernels.PACKING,
        }[p]
        w, mask, visited = k.brute_subset(list(g.masks), g.n, kind)
        cert = _mask_to_set(mask)
    return ParamResult(p, int(w), cert, int(visited), time.perf_counter() - t0)


def efficient_dominating_set_brute(
    g: Graph, caps: Caps = DEFAULT_CAPS, backend: str | None = None
) -> frozenset[int] | None:
    if g.n > caps.subset:
        raise CapExceeded(f"subset brute force capped at n={caps.subset}, got {g.n}")
    size, mask, _ = kernels.backend(g.n, backend).brute_subset(
        list(g.masks), g.n, kernels.EFFICIENT
    )
    return None if size < 0 else _mask_to_set(mask)


# -- branch and bound --------------------------------------------------------


def search_order(g: Graph) -> list[int]:
    """Vertices by decreasing degree, smaller id first on ties."""
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def _deadline(budget: float | None) -> float:
    if budget is None:
        return 0.0
    if budget <= 0:
        raise ValueError("budget must be positive")
    return time.monotonic() + budget


def _greedy_dominating(g: Graph, closed: bool) -> frozenset[int]:
    todo = set(range(g.n))
    chosen: set[int] = set()
    while todo:
        best = max(
            range(g.n),
            key=lambda x: (len(todo & (g.adj[x] | {x} if closed else g.adj[x])), -x),
        )
        chosen.add(best)
        todo -= g.adj[best] | {best} if closed else g.adj[best]
    return frozenset(chosen)


def _extend_to_total(g: Graph, f: RomanLabeling) -> RomanLabeling:
    """Give label 1 to a neighbor of every positive vertex lacking a positive neighbor."""
    vals = list(f.values)
    for v in range(g.n):
        if vals[v] and not any(vals[u] for u in g.adj[v]):
            vals[min(g.adj[v])] = 1
    return RomanLabeling(vals)


def _roman_upper_bound(g: Graph, p: Parameter) -> RomanLabeling:
    best = RomanLabeling([1] * g.n)
    if g.n >= 2:
        greedy = greedy_qtrdf(g).labeling
        if p is Parameter.GAMMA_TR:
            greedy = _extend_to_total(g, greedy)
        if greedy.weight < best.weight:
            best = greedy
    return best


def solve(
    g: Graph,
    parameter: Parameter | str,
    budget: float | None = DEFAULT_BUDGET,
    rules: int = kernels.ALL_RULES,
    backend: str | None = None,
    upper_bound: RomanLabeling | None = None,
) -> ParamResult:
    """Exact value by branch and bound.

    Raises :class:`BudgetExceeded` (carrying the best certificate found) when
    ``budget`` seconds elapse first. ``rules`` toggles the pruning rules for
    differential testing; ``upper_bound`` optionally seeds the incumbent.
    """
    p = Parameter.parse(parameter) if isinstance(parameter, str) else parameter
    if p.is_total:
        _require_no_isolated(g, p)
    if p is Parameter.RHO:
        return packing_number(g, budget=budget, backend=backend, cap=None)
    k = kernels.backend(g.n, backend)
    deadline = _deadline(budget)
    t0 = time.perf_counter()
    order = search_order(g)
    adj = list(g.masks)
    if p.is_roman:
        start = _roman_upper_bound(g, p)
        if upper_bound is not None and upper_bound.weight < start.weight:
            start = upper_bound
        ones, twos = _masks(start)
        w, ones, twos, nodes, complete = k.bnb_labeling(
            adj, g.n, _KIND[p], order, rules, start.weight, ones, twos, deadline
        )
        cert: RomanLabeling | frozenset[int] = RomanLabeling.from_masks(g.n, ones, twos)
    else:
        closed = p is Parameter.GAMMA
        sets = [a | (1 << v) for v, a in enumerate(adj)] if closed else adj
        start_set = _greedy_dominating(g, closed)
        w, mask, nodes, complete = k.bnb_cover(
            sets, g.n, order, rules, len(start_set), _set_to_mask(start_set), deadline
        )
        cert = _mask_to_set(mask)
    result = ParamResult(p, int(w), cert, int(nodes), time.perf_counter() - t0, complete)
    if not complete:
        raise BudgetExceeded(result)
    return result


def packing_number(
    g: Graph,
    budget: float | None = DEFAULT_BUDGET,
    backend: str | None = None,
    cap: int | None = DEFAULT_CAPS.exact,
) -> ParamResult:
    """Maximum set of vertices with pairwise disjoint closed neighborhoods."""
    if cap is not None and g.n > cap:
        raise CapExceeded(f"packing search capped at n={cap}, got {g.n}")
    k = kernels.backend(g.n, backend)
    deadline = _deadline(budget)
    t0 = time.perf_counter()
    order = sorted(range(g.n), key=lambda v: (len(g.adj[v]), v))
    size, mask, nodes, complete = k.bnb_packing(list(g.masks), g.n, order, deadline)
    result = ParamResult(
        Parameter.RHO, int(size), _mask_to_set(mask), int(nodes),
        time.perf_counter() - t0, complete,
    )
    if not complete:
        raise BudgetExceeded(result)
    return result


def efficient_dominating_set(
    g: Graph, cap: int = DEFAULT_CAPS.exact, backend: str | None = None
) -> frozenset[int] | None:
    """A set whose closed neighborhoods partition V, or ``None`` if none exists."""
    if g.n > cap:
        raise CapExceeded(f"efficient domination search capped at n={cap}, got {g.n}")
    k = kernels.backend(g.n + 1, backend)  # compiled exact cover needs n < 64
    mask, _ = k.efficient_search(list(g.masks), g.n)
    return None if mask < 0 else _mask_to_set(mask)


def qtrd_disconnected(
    g: Graph, budget: float | None = DEFAULT_BUDGET, backend: str | None = None
) -> ParamResult:
    """``gamma_qtR`` assembled component by component.

    Isolated vertices take label 1; each larger component is solved on its
    own and the certificates are stitched back together.
    """
    t0 = time.perf_counter()
    deadline = _deadline(budget)
    vals = [0] * g.n
    nodes = 0
    for comp in g.connected_components():
        if len(comp) == 1:
            (v,) = comp
            vals[v] = 1
            continue
        sub, remap = g.induced_subgraph(comp)
        remaining = None if budget is None else max(deadline - time.monotonic(), 1e-3)
        try:
            part = solve(sub, Parameter.GAMMA_QTR, budget=remaining, backend=backend)
        except BudgetExceeded as exc:
            part = exc.best
            for old, new in remap.items():
                vals[old] = part.certificate[new]
            # remaining components still need valid labels for the partial certificate
            for other in g.connected_components():
                if min(other) > min(comp):
                    for v in other:
                        vals[v] = 1
            cert = RomanLabeling(vals)
            raise BudgetExceeded(
                ParamResult(Parameter.GAMMA_QTR, cert.weight, cert, nodes + part.nodes_explored,
                            time.perf_counter() - t0, False)
            ) from None
        nodes += part.nodes_explored
        for old, new in remap.items():
            vals[old] = part.certificate[new]
    cert = RomanLabeling(vals)
    return ParamResult(Parameter.GAMMA_QTR, cert.weight, cert, nodes, time.perf_counter() - t0)
