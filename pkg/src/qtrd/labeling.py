"""Roman labelings and the RDF / QTRDF / TRDF validity predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError


class LabelingError(ValueError):
    pass


@dataclass(frozen=True)
class RomanLabeling:
    """A vertex labeling ``f: V -> {0, 1, 2}`` stored as a tuple indexed by vertex id."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int]) -> None:
        vals = tuple(int(x) for x in values)
        for v, x in enumerate(vals):
            if x not in (0, 1, 2):
                raise LabelingError(f"label {x} at vertex {v} is not in {{0, 1, 2}}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_sets(cls, n: int, ones: Iterable[int] = (), twos: Iterable[int] = ()) -> "RomanLabeling":
        vals = [0] * n
        for v in ones:
            vals[v] = 1
        for v in twos:
            if vals[v]:
                raise LabelingError(f"vertex {v} given two labels")
            vals[v] = 2
        return cls(vals)

    @classmethod
    def from_masks(cls, n: int, ones: int, twos: int) -> "RomanLabeling":
        return cls(2 if twos >> v & 1 else 1 if ones >> v & 1 else 0 for v in range(n))

    @classmethod
    def parse(cls, text: str) -> "RomanLabeling":
        """Parse the ``2,0,1,...`` text form."""
        body = text.strip()
        if not body:
            return cls(())
        try:
            return cls(int(tok) for tok in body.split(","))
        except ValueError as exc:
            raise LabelingError(f"malformed labeling {body!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @property
    def weight(self) -> int:
        return sum(self.values)

    def level(self, i: int) -> frozenset[int]:
        """``V_i``: the vertices labelled ``i``."""
        return frozenset(v for v, x in enumerate(self.values) if x == i)

    @property
    def v0(self) -> frozenset[int]:
        return self.level(0)

    @property
    def v1(self) -> frozenset[int]:
        return self.level(1)

    @property
    def v2(self) -> frozenset[int]:
        return self.level(2)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Weight first, then the digit string over vertex ids."""
        return (self.weight, self.values)


def weight(f: RomanLabeling) -> int:
    return f.weight


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity predicate; truthy iff valid.

    ``witness`` is the smallest vertex violating a condition, ``reason`` says which.
    """

    valid: bool
    witness: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


_OK = Verdict(True)


def _check_lengths(g: Graph, f: RomanLabeling | Sequence[int]) -> Sequence[int]:
    vals = f.values if isinstance(f, RomanLabeling) else tuple(f)
    if len(vals) != g.n:
        raise LabelingError(f"labeling has {len(vals)} entries, graph has {g.n} vertices")
    return vals


def _rdf_violation(g: Graph, vals: Sequence[int]) -> int | None:
    for v in range(g.n):
        if vals[v] == 0 and not any(vals[u] == 2 for u in g.adj[v]):
            return v
    return None


def is_rdf(g: Graph, f: RomanLabeling) -> Verdict:
    """Every 0-vertex has a neighbor labelled 2."""
    vals = _check_lengths(g, f)
    bad = _rdf_violation(g, vals)
    if bad is not None:
        return Verdict(False, bad, "label-0 vertex without a label-2 neighbor")
    return _OK


def is_qtrdf(g: Graph, f: RomanLabeling) -> Verdict:
    """Quasi-total Roman dominating function check.

    The second condition ("a vertex isolated in the subgraph induced by the
    positive labels has label 1") is checked in the equivalent form "every
    label-2 vertex has a neighbor with positive label": a positive vertex that
    is isolated among positives must not be a 2, and label-1 vertices are
    unconstrained.
    """
    vals = _check_lengths(g, f)
    witnesses = []
    bad = _rdf_violation(g, vals)
    if bad is not None:
        witnesses.append((bad, "label-0 vertex without a label-2 neighbor"))
    for v in range(g.n):
        if vals[v] == 2 and not any(vals[u] for u in g.adj[v]):
            witnesses.append((v, "label-2 vertex isolated among positive labels"))
            break
    if witnesses:
        v, why = min(witnesses)
        return Verdict(False, v, why)
    return _OK


def is_trdf(g: Graph, f: RomanLabeling) -> Verdict:
    """Total Roman dominating function check; ``g`` must have no isolated vertex."""
    vals = _check_lengths(g, f)
    iso = g.isolated_vertices()
    if iso:
        raise GraphError(f"total Roman domination undefined: vertex {iso[0]} is isolated")
    witnesses = []
    bad = _rdf_violation(g, vals)
    if bad is not None:
        witnesses.append((bad, "label-0 vertex without a label-2 neighbor"))
    for v in range(g.n):
        if vals[v] and not any(vals[u] for u in g.adj[v]):
            witnesses.append((v, "positive vertex isolated among positive labels"))
            break
    if witnesses:
        v, why = min(witnesses)
        return Verdict(False, v, why)
    return _OK


def v12_star(g: Graph, f: RomanLabeling) -> frozenset[int]:
    """Label-1 vertices having a label-2 neighbor."""
    vals = _check_lengths(g, f)
    return frozenset(
        v for v in range(g.n) if vals[v] == 1 and any(vals[u] == 2 for u in g.adj[v])
    )
