"""Greedy construction of a quasi-total Roman dominating function."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError
from .labeling import RomanLabeling


@dataclass(frozen=True)
class GreedyStep:
    center: int  # labelled 2
    partner: int  # neighbor labelled 1
    removed: frozenset[int]  # closed neighborhood of center in the residual graph


@dataclass(frozen=True)
class GreedyTrace:
    labeling: RomanLabeling
    steps: tuple[GreedyStep, ...]
    isolated_leftover: frozenset[int]

    @property
    def q(self) -> int:
        return len(self.steps)

    @property
    def weight(self) -> int:
        return self.labeling.weight

    @property
    def centers(self) -> list[int]:
        return [s.center for s in self.steps]

    def to_json(self) -> dict:
        return {
            "steps": [
                {"center": s.center, "partner": s.partner, "removed": sorted(s.removed)}
                for s in self.steps
            ],
            "q": self.q,
            "I": sorted(self.isolated_leftover),
            "weight": self.weight,
            "labeling": str(self.labeling),
        }


def greedy_qtrdf(g: Graph) -> GreedyTrace:
    """Repeatedly label a maximum-degree vertex of the residual graph 2.

    Each round picks ``v`` of maximum residual degree (smallest id on ties),
    gives label 1 to its residual neighbor of minimum residual degree
    (smallest id on ties), label 0 to its other residual neighbors, and
    deletes ``N[v]``. Vertices left isolated get label 1. The weight is
    ``3q + |I|``.
    """
    if g.n < 2:
        raise GraphError("greedy construction needs a graph of order >= 2")
    alive = set(range(g.n))
    resdeg = [len(nb) for nb in g.adj]
    vals = [0] * g.n
    steps = []
    while True:
        v = max(alive, key=lambda x: (resdeg[x], -x), default=None)
        if v is None or resdeg[v] == 0:
            break
        nbrs = [u for u in g.adj[v] if u in alive]
        partner = min(nbrs, key=lambda x: (resdeg[x], x))
        vals[v] = 2
        vals[partner] = 1
        removed = frozenset(nbrs) | {v}
        steps.append(GreedyStep(v, partner, removed))
        alive -= removed
        for x in removed:
            for y in g.adj[x]:
                if y in alive:
                    resdeg[y] -= 1
    for x in alive:
        vals[x] = 1
    return GreedyTrace(RomanLabeling(vals), tuple(steps), frozenset(alive))


def delta_order_bound(g: Graph, centers: Sequence[int]) -> int | None:
    """``n + 3q - sum(d(v_i) + 1)`` when the chosen centers qualify, else ``None``.

    Centers qualify when there is at least one, each has degree > 2, any two
    are at distance >= 3, and the vertices outside their closed
    neighborhoods are pairwise non-adjacent.
    """
    for v in centers:
        g._check(v)
    cs = list(dict.fromkeys(centers))
    if not cs or len(cs) != len(centers):
        return None
    if any(g.degree(v) <= 2 for v in cs):
        return None
    for u, v in combinations(cs, 2):
        if g.distance(u, v) < 3:
            return None
    covered = set()
    for v in cs:
        covered |= g.closed_neighborhood(v)
    rest = [v for v in range(g.n) if v not in covered]
    for u, v in combinations(rest, 2):
        if v in g.adj[u]:
            return None
    return g.n + 3 * len(cs) - sum(g.degree(v) + 1 for v in cs)
