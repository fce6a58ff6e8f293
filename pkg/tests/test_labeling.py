import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from conftest import graphs
from qtrd.families import cycle, figure1_graph, figure_labelings, g1_labelings, path
from qtrd.graph import Graph, GraphError
from qtrd.labeling import LabelingError, RomanLabeling, is_qtrdf, is_rdf, is_trdf, v12_star, weight

L = RomanLabeling


def test_weight_examples():
    assert weight(L([0] * 5)) == 0
    assert weight(g1_labelings(1)["f3"]) == 9
    assert weight(L([2, 2, 0, 0])) == 4


def test_levels():
    f = L([2, 1, 0, 1])
    assert f.v0 == {2} and f.v1 == {1, 3} and f.v2 == {0}
    assert f.weight == len(f.v1) + 2 * len(f.v2)


def test_bad_labels():
    with pytest.raises(LabelingError):
        L([0, 3])
    with pytest.raises(LabelingError):
        L.parse("1,a,0")
    assert str(L.parse(" 2,0,1 ")) == "2,0,1"


def test_rdf_examples():
    c4 = cycle(4)
    assert is_rdf(c4, L([2, 0, 2, 0]))
    v = is_rdf(c4, L([2, 0, 0, 0]))
    assert not v and v.witness == 2
    assert not is_rdf(Graph.empty(1), L([0]))


def test_qtrdf_examples():
    c4 = cycle(4)
    assert is_qtrdf(c4, L([2, 2, 0, 0]))
    v = is_qtrdf(c4, L([2, 0, 1, 0]))
    assert not v and v.witness == 0
    assert is_qtrdf(path(2), L([1, 1]))


def test_trdf_examples():
    g = figure1_graph()
    assert is_trdf(g, figure_labelings()["fig1_left"])
    assert is_trdf(cycle(4), L([2, 2, 0, 0]))
    v = is_trdf(path(3), L([2, 0, 1]))
    assert not v and v.witness == 0


def test_trdf_rejects_isolated_vertices():
    with pytest.raises(GraphError):
        is_trdf(Graph.empty(2), L([1, 1]))


def test_length_mismatch():
    with pytest.raises(LabelingError):
        is_rdf(cycle(4), L([2, 0, 2]))


def test_v12_star_examples():
    assert v12_star(cycle(4), L([2, 1, 0, 1])) == {1, 3}
    assert v12_star(cycle(4), L([1, 1, 1, 1])) == set()
    assert v12_star(path(4), L([1, 2, 0, 1])) == {0}


def test_isolated_vertex_must_be_one():
    # an isolated vertex is dominated only by its own label, and a 2 would be
    # isolated among positive vertices
    g = Graph.empty(1)
    assert is_qtrdf(g, L([1]))
    assert not is_qtrdf(g, L([2]))


labelings = st.data()


@given(graphs(max_n=7), st.data())
def test_predicates_match_definitions(g, data):
    f = L(data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n)))
    adj = [set(a) for a in g.adj]
    assert is_rdf(g, f).valid == oracle.rdf_ok(adj, f.values)
    assert is_qtrdf(g, f).valid == oracle.qtrdf_ok(adj, f.values)
    if not g.isolated_vertices():
        assert is_trdf(g, f).valid == oracle.trdf_ok(adj, f.values)


@given(graphs(max_n=7, no_isolated=True), st.data())
def test_implication_chain(g, data):
    f = L(data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n)))
    if is_trdf(g, f):
        assert is_qtrdf(g, f)
    if is_qtrdf(g, f):
        assert is_rdf(g, f)


@given(graphs(max_n=8, no_isolated=True))
def test_all_twos_is_qtrdf(g):
    assert is_qtrdf(g, L([2] * g.n))


@given(graphs(max_n=7), st.data())
def test_qtrdf_isomorphism_invariant(g, data):
    f = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    perm = data.draw(st.permutations(range(g.n)))
    moved = [0] * g.n
    for v, x in enumerate(f):
        moved[perm[v]] = x
    assert is_qtrdf(g, L(f)).valid == is_qtrdf(g.relabel(perm), L(moved)).valid


@given(graphs(max_n=7), st.data())
def test_witness_is_smallest_violation(g, data):
    f = L(data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n)))
    v = is_rdf(g, f)
    if not v:
        bad = [x for x in range(g.n) if f[x] == 0 and not any(f[u] == 2 for u in g.adj[x])]
        assert v.witness == min(bad)
