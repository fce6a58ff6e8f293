"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

import math
from collections import deque
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs, bad vertex ids and unparsable input."""


class Graph:
    """A simple undirected graph on vertices ``0..n-1``.

    Neighbor sets are frozensets; a parallel list of integer bitmasks is kept
    for the search kernels. Instances are never mutated after construction.
    """

    def __init__(
        self,
        n: int,
        adj: Sequence[Iterable[int]],
        labels: Sequence[str] | None = None,
    ) -> None:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows, expected {n}")
        rows = tuple(frozenset(nb) for nb in adj)
        for v, nb in enumerate(rows):
            for u in nb:
                if not 0 <= u < n:
                    raise GraphError(f"neighbor id {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in rows[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        if labels is not None and len(labels) != n:
            raise GraphError(f"{len(labels)} labels for {n} vertices")
        self.n = n
        self.adj = rows
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj, labels)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [()] * n)

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.size})"

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighborhoods as bitmasks, bit ``u`` set iff ``u`` is a neighbor."""
        out = []
        for nb in self.adj:
            m = 0
            for u in nb:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def size(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def vertex(self, name: str) -> int:
        """Resolve a display label to its vertex id."""
        if self.labels is None:
            raise GraphError("graph has no vertex labels")
        try:
            return self.labels.index(name)
        except ValueError:
            raise GraphError(f"no vertex labelled {name!r}") from None

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex id {v} out of range for n={self.n}")

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(nb) for nb in self.adj), default=0)

    def degree_sequence(self) -> list[int]:
        """Degrees sorted in non-increasing order."""
        return sorted((len(nb) for nb in self.adj), reverse=True)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    # -- transformations -------------------------------------------------

    def complement(self) -> "Graph":
        everything = frozenset(range(self.n))
        return Graph(self.n, [everything - nb - {v} for v, nb in enumerate(self.adj)])

    def induced_subgraph(self, s: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph induced by ``s`` plus the old-id to new-id remapping.

        New ids follow increasing old ids.
        """
        keep = sorted(set(s))
        for v in keep:
            self._check(v)
        remap = {old: new for new, old in enumerate(keep)}
        adj = [[remap[u] for u in self.adj[old] if u in remap] for old in keep]
        labels = [self.labels[v] for v in keep] if self.labels is not None else None
        return Graph(len(keep), adj, labels), remap

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Isomorphic copy where old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel expects a permutation of 0..n-1")
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v, nb in enumerate(self.adj):
            adj[perm[v]] = [perm[u] for u in nb]
        return Graph(self.n, adj)

    # -- connectivity and distance ---------------------------------------

    def connected_components(self) -> list[frozenset[int]]:
        """Components ordered by their minimum vertex id."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def bfs_distances(self, source: int) -> list[float]:
        self._check(source)
        dist: list[float] = [math.inf] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if dist[u] == math.inf:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist

    def distance(self, u: int, v: int) -> float:
        """Shortest-path length; ``math.inf`` when ``u`` and ``v`` are disconnected."""
        self._check(v)
        return self.bfs_distances(u)[v]

    # -- private neighbors -----------------------------------------------

    def private_neighbors(self, v: int, x: Iterable[int]) -> frozenset[int]:
        """Vertices ``y`` with ``N[y] & x == {v}``."""
        xs = frozenset(x)
        for u in xs:
            self._check(u)
        if v not in xs:
            raise GraphError(f"vertex {v} is not in the given set")
        out = []
        for y in range(self.n):
            hit = xs & self.adj[y]
            if y in xs:
                hit = hit | {y}
            if hit == {v}:
                out.append(y)
        return frozenset(out)

    def external_private_neighbors(self, v: int, s: Iterable[int]) -> frozenset[int]:
        ss = frozenset(s)
        return self.private_neighbors(v, ss) - ss


# -- module-level aliases matching the operation names ---------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.closed_neighborhood(v)


def complement(g: Graph) -> Graph:
    return g.complement()


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    return g.induced_subgraph(s)


def connected_components(g: Graph) -> list[frozenset[int]]:
    return g.connected_components()


def distance(g: Graph, u: int, v: int) -> float:
    return g.distance(u, v)


def private_neighbors(g: Graph, v: int, x: Iterable[int]) -> frozenset[int]:
    return g.private_neighbors(v, x)


def external_private_neighbors(g: Graph, v: int, s: Iterable[int]) -> frozenset[int]:
    return g.external_private_neighbors(v, s)


# -- structural recognizers --------------------------------------------------


def is_path(g: Graph) -> bool:
    """True for a path on at least two vertices."""
    if g.n < 2 or not g.is_connected():
        return False
    degs = [len(nb) for nb in g.adj]
    return max(degs) <= 2 and degs.count(1) == 2


def is_cycle(g: Graph) -> bool:
    if g.n < 3 or not g.is_connected():
        return False
    return all(len(nb) == 2 for nb in g.adj)


def is_complete(g: Graph) -> bool:
    return all(len(nb) == g.n - 1 for nb in g.adj)


def is_edgeless(g: Graph) -> bool:
    return all(not nb for nb in g.adj)
