"""Deterministic generators for the graph families used throughout the package.

Vertex layout is fixed per family: base-graph vertices first (when the family
is built from a base graph), then per-vertex or per-copy blocks in order,
then per-edge blocks in sorted edge order. Every generated vertex carries a
display label such as ``"copy2.w1"`` or ``"e0-1.mid"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .graph import Graph, GraphError
from .labeling import RomanLabeling


class RecipeError(GraphError):
    pass


# -- classic graphs ----------------------------------------------------------


def path(n: int) -> Graph:
    if n < 1:
        raise RecipeError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise RecipeError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise RecipeError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}``: ``n`` is the order, vertex 0 is the center."""
    if n < 1:
        raise RecipeError("star needs n >= 1")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise RecipeError("empty graph needs n >= 1")
    return Graph.empty(n)


CLASSIC: dict[str, Callable[[int], Graph]] = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "empty": empty,
}


def classic(family: str, n: int) -> Graph:
    try:
        make = CLASSIC[family]
    except KeyError:
        raise RecipeError(f"unknown classic family {family!r}") from None
    return make(n)


# -- the 14-vertex gadget ----------------------------------------------------

# Leaf counts (2 on w1, 3 on w2, 3 on w3) are read off the drawing; the
# figure names only w, w1, w2, w3, x', x.
H_NAMES = (
    "w", "w1", "w2", "w3", "x'", "x",
    "w1.a1", "w1.a2",
    "w2.a1", "w2.a2", "w2.a3",
    "w3.a1", "w3.a2", "w3.a3",
)
H_EDGES = (
    (0, 1), (0, 2), (0, 3),
    (1, 6), (1, 7), (1, 4),
    (4, 5),
    (2, 8), (2, 9), (2, 10),
    (3, 11), (3, 12), (3, 13),
)
H_ORDER = len(H_NAMES)
H_W, H_W1, H_W2, H_W3, H_XP, H_X = range(6)


def gadget_h() -> Graph:
    """The 14-vertex tree ``H`` with named vertices (ids as in ``H_NAMES``)."""
    return Graph.from_edges(H_ORDER, H_EDGES, H_NAMES)


def _attach_h_copies(
    n_base: int, anchors: list[int], base_edges, base_labels, prefix: str
) -> Graph:
    edges = list(base_edges)
    labels = list(base_labels)
    for i, z in enumerate(anchors):
        off = n_base + H_ORDER * i
        edges.extend((off + u, off + v) for u, v in H_EDGES)
        labels.extend(f"{prefix}{i}.{name}" for name in H_NAMES)
        edges.append((z, off + H_W))
    return Graph.from_edges(n_base + H_ORDER * len(anchors), edges, labels)


def g1(t: int) -> Graph:
    """A center ``u`` (id 0) joined to the ``w`` vertex of ``t`` copies of ``H``."""
    if t < 1:
        raise RecipeError("G1 needs t >= 1")
    return _attach_h_copies(1, [0] * t, [], ["u"], "copy")


def h_offset(copy: int, n_base: int = 1) -> int:
    """Id of the first vertex (``w``) of the given ``H`` copy."""
    return n_base + H_ORDER * copy


def reduction_gprime(base: Graph) -> Graph:
    """Attach a copy of ``H`` to every base vertex ``z`` via the edge ``z w``."""
    labels = [f"base{v}" for v in range(base.n)]
    return _attach_h_copies(base.n, list(range(base.n)), base.edges(), labels, "copy")


# -- families built on a base graph -------------------------------------------


def _check_base(base: Graph, k: int, min_deg: int, name: str) -> None:
    if k < 3:
        raise RecipeError(f"{name} needs k >= 3, got {k}")
    if base.n == 0 or base.min_degree < min_deg:
        raise RecipeError(f"{name} needs a base graph of minimum degree >= {min_deg}")


def _pendants(base: Graph, k: int, edges: list, labels: list) -> None:
    n = base.n
    for v in range(n):
        for j in range(k):
            leaf = len(labels)
            labels.append(f"base{v}.p{j}")
            edges.append((v, leaf))
    assert len(labels) == n + n * k


def g2k(base: Graph, k: int) -> Graph:
    """``k`` pendants per base vertex; each base edge ``uv`` becomes ``u-x-z-v``."""
    _check_base(base, k, 2, "G2k")
    edges: list[tuple[int, int]] = []
    labels = [f"base{v}" for v in range(base.n)]
    _pendants(base, k, edges, labels)
    for u, v in base.edges():
        x = len(labels)
        labels += [f"e{u}-{v}.x", f"e{u}-{v}.z"]
        edges += [(u, x), (x, x + 1), (x + 1, v)]
    return Graph.from_edges(len(labels), edges, labels)


def gprime_k(base: Graph, k: int) -> Graph:
    """``k`` pendants per base vertex, the first pendant edge subdivided once.

    Per base vertex ``v`` the block is ``[s, leaf0, leaf1, ..., leaf_{k-1}]``
    with ``v-s-leaf0`` and ``v-leaf_j`` for ``j >= 1``.
    """
    _check_base(base, k, 2, "Gprime_k")
    edges = list(base.edges())
    labels = [f"base{v}" for v in range(base.n)]
    for v in range(base.n):
        s = len(labels)
        labels.append(f"base{v}.s")
        labels.extend(f"base{v}.p{j}" for j in range(k))
        edges += [(v, s), (s, s + 1)]
        edges += [(v, s + 1 + j) for j in range(1, k)]
    return Graph.from_edges(len(labels), edges, labels)


def g3k(base: Graph, k: int) -> Graph:
    """``k`` pendants per base vertex; each base edge ``uv`` becomes ``u-a-b-c-v``."""
    _check_base(base, k, 3, "G3k")
    edges: list[tuple[int, int]] = []
    labels = [f"base{v}" for v in range(base.n)]
    _pendants(base, k, edges, labels)
    for u, v in base.edges():
        a = len(labels)
        labels += [f"e{u}-{v}.a", f"e{u}-{v}.mid", f"e{u}-{v}.c"]
        edges += [(u, a), (a, a + 1), (a + 1, a + 2), (a + 2, v)]
    return Graph.from_edges(len(labels), edges, labels)


def f1_member(n: int, pendant_count: int) -> Graph:
    """Canonical graph with exactly one dominating vertex and a pendant vertex.

    Vertex 0 is adjacent to everything, vertices ``1..pendant_count`` are
    pendants, the remaining vertices form a clique. ``pendant_count = n - 1``
    gives the star.
    """
    if n < 4:
        raise RecipeError("F1 member needs n >= 4")
    if not 1 <= pendant_count <= n - 1:
        raise RecipeError(f"pendant_count must be in [1, {n - 1}], got {pendant_count}")
    edges = [(0, v) for v in range(1, n)]
    rest = range(pendant_count + 1, n)
    edges += [(u, v) for u in rest for v in rest if u < v]
    return Graph.from_edges(n, edges)


# Center, four arms c-inner-outer, four pendant leaves.
FIGURE1_NAMES = (
    "c",
    "arm0.in", "arm0.out", "arm1.in", "arm1.out",
    "arm2.in", "arm2.out", "arm3.in", "arm3.out",
    "leaf0", "leaf1", "leaf2", "leaf3",
)


def figure1_graph() -> Graph:
    edges = []
    for i in range(4):
        inner, outer = 1 + 2 * i, 2 + 2 * i
        edges += [(0, inner), (inner, outer)]
    edges += [(0, 9 + i) for i in range(4)]
    return Graph.from_edges(13, edges, FIGURE1_NAMES)


# -- recipes -----------------------------------------------------------------

FAMILY_ALIASES = {
    "gadget_h": "gadget_H",
    "h": "gadget_H",
    "g1": "G1",
    "g2k": "G2k",
    "gprime_k": "Gprime_k",
    "gprimek": "Gprime_k",
    "g3k": "G3k",
    "reduction": "reduction_Gprime",
    "reduction_gprime": "reduction_Gprime",
    "f1": "F1_member",
    "f1_member": "F1_member",
    "figure1": "figure1_graph",
    "figure1_graph": "figure1_graph",
    **{name: name for name in CLASSIC},
}


@dataclass(frozen=True)
class GraphRecipe:
    """Declarative description of one family instance."""

    family: str
    params: dict[str, int] = field(default_factory=dict)
    base: "GraphRecipe | Graph | None" = None

    def __post_init__(self) -> None:
        fam = FAMILY_ALIASES.get(self.family.lower())
        if fam is None:
            raise RecipeError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)

    def __hash__(self) -> int:
        return hash((self.family, tuple(sorted(self.params.items())), str(self.base)))

    def _param(self, key: str, *aliases: str) -> int:
        for k in (key, *aliases):
            if k in self.params:
                return int(self.params[k])
        raise RecipeError(f"recipe {self.family} is missing parameter {key!r}")

    def base_graph(self) -> Graph:
        if self.base is None:
            raise RecipeError(f"recipe {self.family} needs a base graph")
        if isinstance(self.base, Graph):
            return self.base
        return self.base.build()

    def build(self) -> Graph:
        fam = self.family
        if fam in CLASSIC:
            return classic(fam, self._param("n"))
        if fam == "gadget_H":
            return gadget_h()
        if fam == "figure1_graph":
            return figure1_graph()
        if fam == "G1":
            return g1(self._param("t"))
        if fam == "G2k":
            return g2k(self.base_graph(), self._param("k"))
        if fam == "Gprime_k":
            return gprime_k(self.base_graph(), self._param("k"))
        if fam == "G3k":
            return g3k(self.base_graph(), self._param("k"))
        if fam == "reduction_Gprime":
            return reduction_gprime(self.base_graph())
        if fam == "F1_member":
            return f1_member(self._param("n"), self._param("pendant_count", "pendants", "p"))
        raise RecipeError(f"no generator for {fam}")  # pragma: no cover

    def __str__(self) -> str:
        if self.family in CLASSIC:
            return f"classic:{self.family}:{self.params['n']}"
        parts = [f"{k}={v}" for k, v in self.params.items()]
        if self.base is not None:
            b = str(self.base) if isinstance(self.base, GraphRecipe) else "<graph>"
            parts.insert(0, f"base=[{b}]" if "," in b else f"base={b}")
        name = self.family.lower()
        return f"{name}:{','.join(parts)}" if parts else name


def _split_top(text: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise RecipeError(f"unbalanced brackets in {text!r}")
    out.append("".join(cur))
    return [p for p in out if p]


def parse_recipe(text: str) -> GraphRecipe:
    """Parse a recipe string.

    Grammar::

        classic:<path|cycle|complete|star|empty>:<n>
        <family>[:key=value,...]
        base=<recipe> | base=[<recipe with commas>] | base=file:<path>

    e.g. ``g2k:base=classic:cycle:3,k=3``, ``g1:t=2``, ``f1:n=5,pendants=2``.
    """
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    head, _, rest = text.partition(":")
    if head == "classic":
        fam, _, n = rest.partition(":")
        try:
            return GraphRecipe(fam, {"n": int(n)})
        except ValueError:
            raise RecipeError(f"bad classic recipe {text!r}") from None
    params: dict[str, int] = {}
    base: GraphRecipe | Graph | None = None
    for item in _split_top(rest):
        key, eq, value = item.partition("=")
        if not eq:
            raise RecipeError(f"expected key=value in {item!r}")
        if key == "base":
            base = _parse_base(value)
        else:
            try:
                params[key] = int(value)
            except ValueError:
                raise RecipeError(f"parameter {key} must be an integer, got {value!r}") from None
    return GraphRecipe(head, params, base)


def _parse_base(value: str) -> GraphRecipe | Graph:
    if value.startswith("file:"):
        from .graphio import read_graph

        return read_graph(value[5:])
    if Path(value).is_file():
        from .graphio import read_graph

        return read_graph(value)
    return parse_recipe(value)


def build_graph(spec: str) -> Graph:
    """Graph from a recipe string or an edge-list file path."""
    if Path(spec).is_file():
        from .graphio import read_graph

        return read_graph(spec)
    return parse_recipe(spec).build()


# -- explicit labelings from the constructions -----------------------------------


def _g1_like(n_base: int, copies: int, base_vals, h_ones) -> RomanLabeling:
    vals = list(base_vals) + [0] * (H_ORDER * copies)
    for i in range(copies):
        off = n_base + H_ORDER * i
        for w in (H_W1, H_W2, H_W3):
            vals[off + w] = 2
        for v in h_ones:
            vals[off + v] = 1
    return RomanLabeling(vals)


def g1_labelings(t: int) -> dict[str, RomanLabeling]:
    """``f1`` (RDF, 7t+1), ``f2`` (TRDF, 9t+1) and ``f3`` (QTRDF, 8t+1) on ``G1(t)``."""
    return {
        "f1": _g1_like(1, t, [1], (H_X,)),
        "f2": _g1_like(1, t, [1], (H_X, H_XP, H_W)),
        "f3": _g1_like(1, t, [1], (H_X, H_W)),
    }


def reduction_labeling(base: Graph, base_rdf: RomanLabeling) -> RomanLabeling:
    """``f'``: a Roman dominating function on the base, 2 on each w_i, 1 on w and x."""
    if len(base_rdf) != base.n:
        raise RecipeError("base labeling does not match the base graph")
    return _g1_like(base.n, base.n, base_rdf.values, (H_W, H_X))


def g2k_labelings(base: Graph, k: int) -> dict[str, RomanLabeling]:
    """The Roman function with V2 = base (weight 2n) and its extension by one pendant each."""
    g = g2k(base, k)
    n = base.n
    rdf = RomanLabeling.from_sets(g.n, twos=range(n))
    qt = RomanLabeling.from_sets(g.n, ones=[n + v * k for v in range(n)], twos=range(n))
    return {"gamma_R": rdf, "qtrdf_3n": qt}


def gprime_labelings(base: Graph, k: int) -> dict[str, RomanLabeling]:
    """The QTRDF with V2 = base and V1 = far leaves (3n), and the TRDF adding the ``s`` vertices (4n)."""
    g = gprime_k(base, k)
    n = base.n
    block = k + 1
    far = [n + block * v + 1 for v in range(n)]
    mids = [n + block * v for v in range(n)]
    return {
        "qtrdf_3n": RomanLabeling.from_sets(g.n, ones=far, twos=range(n)),
        "trdf_4n": RomanLabeling.from_sets(g.n, ones=far + mids, twos=range(n)),
    }


def g3k_labeling(base: Graph, k: int) -> RomanLabeling:
    """Weight ``3n + m``: 2 on base vertices, 1 on their first pendant and on each middle vertex."""
    g = g3k(base, k)
    n = base.n
    pendants = [n + v * k for v in range(n)]
    mids = [n + n * k + 3 * i + 1 for i in range(base.size)]
    return RomanLabeling.from_sets(g.n, ones=pendants + mids, twos=range(n))


def figure_labelings() -> dict[str, RomanLabeling]:
    """The three drawn labelings of ``figure1_graph``."""
    inner = [1, 3, 5, 7]
    outer = [2, 4, 6, 8]
    return {
        "fig1_left": RomanLabeling.from_sets(13, ones=inner + outer, twos=[0]),
        "fig1_right": RomanLabeling.from_sets(13, twos=[0] + inner),
        "fig2": RomanLabeling.from_sets(13, ones=outer + [12], twos=[0]),
    }


def family_labelings(recipe: GraphRecipe) -> dict[str, RomanLabeling]:
    fam = recipe.family
    if fam == "G1":
        return g1_labelings(recipe._param("t"))
    if fam == "reduction_Gprime":
        from .solvers import Parameter, solve

        base = recipe.base_graph()
        rdf = solve(base, Parameter.GAMMA_R).certificate
        return {"f_prime": reduction_labeling(base, rdf)}
    if fam == "G2k":
        return g2k_labelings(recipe.base_graph(), recipe._param("k"))
    if fam == "Gprime_k":
        return gprime_labelings(recipe.base_graph(), recipe._param("k"))
    if fam == "G3k":
        return {"qtrdf_3n_plus_m": g3k_labeling(recipe.base_graph(), recipe._param("k"))}
    if fam == "figure1_graph":
        return figure_labelings()
    raise RecipeError(f"no explicit labelings for family {fam}")


# Which function class each named labeling is constructed to belong to.
LABELING_CLAIMS = {
    "f1": "rdf",
    "f2": "trdf",
    "f3": "qtrdf",
    "f_prime": "qtrdf",
    "gamma_R": "rdf",
    "qtrdf_3n": "qtrdf",
    "trdf_4n": "trdf",
    "qtrdf_3n_plus_m": "qtrdf",
    "fig1_left": "trdf",
    "fig1_right": "trdf",
    "fig2": "qtrdf",
}
