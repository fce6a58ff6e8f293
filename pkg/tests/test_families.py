import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtrd.bounds import is_f1
from qtrd.families import (
    H_W,
    H_W1,
    H_W2,
    H_W3,
    H_X,
    H_XP,
    LABELING_CLAIMS,
    GraphRecipe,
    RecipeError,
    build_graph,
    classic,
    complete,
    cycle,
    f1_member,
    figure1_graph,
    g1,
    g1_labelings,
    g2k,
    g3k,
    gadget_h,
    gprime_k,
    family_labelings,
    parse_recipe,
    path,
    reduction_gprime,
    star,
)
from qtrd.graph import Graph
from qtrd.labeling import is_qtrdf, is_rdf, is_trdf
from qtrd.solvers import Parameter, solve

PRED = {"rdf": is_rdf, "qtrdf": is_qtrdf, "trdf": is_trdf}


def test_gadget_h_shape():
    h = gadget_h()
    assert (h.n, h.size) == (14, 13)
    assert h.is_connected()
    assert [h.degree(v) for v in (H_W, H_W1, H_W2, H_W3, H_XP, H_X)] == [3, 4, 4, 4, 2, 1]
    assert h.vertex("x'") == H_XP and h.vertex("x") == H_X


def test_gadget_h_values():
    h = gadget_h()
    # frozen from the exhaustive oracle in tests/oracle.py
    assert solve(h, Parameter.GAMMA_QTR).value == 8
    assert solve(h, Parameter.GAMMA_R).value == 7
    assert solve(h, Parameter.GAMMA_TR).value == 9


def test_g1_examples():
    g = g1(1)
    assert g.n == 15
    vals = [solve(g, p).value for p in (Parameter.GAMMA_R, Parameter.GAMMA_QTR, Parameter.GAMMA_TR)]
    assert vals == [8, 9, 10]
    g = g1(2)
    assert solve(g, Parameter.GAMMA_QTR).value - solve(g, Parameter.GAMMA_R).value == 2


def test_g2k_examples():
    g = g2k(cycle(3), 3)
    assert g.n == 18
    assert solve(g, Parameter.GAMMA_R).value == 6
    assert solve(g, Parameter.GAMMA_QTR).value == 9


def test_gprime_examples():
    g = gprime_k(cycle(3), 3)
    assert g.n == 15
    assert solve(g, Parameter.GAMMA_QTR).value == 9
    assert solve(g, Parameter.GAMMA_TR).value == 12


def test_g3k_examples():
    g = g3k(complete(4), 3)
    assert (g.n, g.size) == (34, 36)
    f = family_labelings(GraphRecipe("g3k", {"k": 3}, complete(4)))["qtrdf_3n_plus_m"]
    assert f.weight == 18 and is_qtrdf(g, f)


def test_reduction_examples():
    g = reduction_gprime(Graph.empty(1))
    assert g == g1(1)
    assert solve(g, Parameter.GAMMA_QTR).value == 9
    recipe = parse_recipe("reduction_gprime:base=classic:path:3")
    f = family_labelings(recipe)["f_prime"]
    assert f.weight == 26 and is_qtrdf(recipe.build(), f)


def test_f1_members():
    from qtrd.solvers import qtrd_disconnected

    for n, p in [(4, 1), (5, 2), (4, 3)]:
        g = f1_member(n, p)
        assert is_f1(g)
        total = qtrd_disconnected(g).value + qtrd_disconnected(g.complement()).value
        assert total == 7
    assert f1_member(4, 3) == star(4)
    with pytest.raises(RecipeError):
        f1_member(3, 1)
    with pytest.raises(RecipeError):
        f1_member(5, 0)


def test_classic_examples():
    assert solve(classic("path", 6), Parameter.GAMMA_QTR).value == 6
    c6 = classic("cycle", 6)
    assert solve(c6, Parameter.GAMMA_QTR).value == 6 == 3 * solve(c6, Parameter.GAMMA).value
    assert solve(classic("complete", 7), Parameter.GAMMA_QTR).value == 3
    with pytest.raises(RecipeError):
        classic("cycle", 2)
    with pytest.raises(RecipeError):
        classic("path", 0)


def test_explicit_labeling_examples():
    labs = g1_labelings(2)
    assert [labs[k].weight for k in ("f1", "f2", "f3")] == [15, 19, 17]
    figs = family_labelings(GraphRecipe("figure1"))
    assert figs["fig2"].weight == 7
    assert is_qtrdf(figure1_graph(), figs["fig2"])
    assert figs["fig1_left"].weight == figs["fig1_right"].weight == 10
    g2 = family_labelings(GraphRecipe("g2k", {"k": 3}, cycle(3)))["gamma_R"]
    assert g2.weight == 6 and g2.v2 == {0, 1, 2}


def test_figure_graph_optimum():
    # no lighter quasi-total labeling exists than the drawn one
    assert solve(figure1_graph(), Parameter.GAMMA_QTR).value == 7


def test_unsupported_labeling_recipe():
    with pytest.raises(RecipeError):
        family_labelings(parse_recipe("classic:cycle:5"))


@pytest.mark.parametrize("text", [
    "g1:t=2", "g2k:base=classic:cycle:3,k=3", "gprime_k:base=classic:cycle:4,k=3",
    "g3k:base=classic:complete:4,k=3", "reduction_gprime:base=classic:path:3",
    "figure1",
])
def test_family_labelings_pass_claims(text):
    recipe = parse_recipe(text)
    g = recipe.build()
    for name, f in family_labelings(recipe).items():
        assert PRED[LABELING_CLAIMS[name]](g, f), (text, name)


def test_recipe_grammar():
    assert build_graph("classic:star:5") == star(5)
    nested = parse_recipe("reduction_gprime:base=[f1:n=5,pendants=1]")
    assert nested.base == GraphRecipe("f1", {"n": 5, "pendants": 1})
    assert nested.build().n == 75
    assert str(nested) == "reduction_gprime:base=[f1_member:n=5,pendants=1]"
    assert parse_recipe(str(nested)).build() == nested.build()
    for bad in ("nope:k=3", "g1:t=x", "g1:t", "classic:cycle:x", "g2k:base=[classic:cycle:3,k=3"):
        with pytest.raises(RecipeError):
            parse_recipe(bad).build()
    with pytest.raises(RecipeError):
        build_graph("g2k:base=classic:path:4,k=3")  # min degree 1
    with pytest.raises(RecipeError):
        build_graph("g3k:base=classic:cycle:4,k=3")
    with pytest.raises(RecipeError):
        build_graph("g2k:base=classic:cycle:4,k=2")


def test_base_from_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert build_graph(f"g2k:base=file:{p},k=3") == g2k(cycle(4), 3)


base_graphs = st.sampled_from([cycle(3), cycle(4), cycle(5), complete(4), complete(5)])


@settings(max_examples=30)
@given(base_graphs, st.integers(3, 6))
def test_order_formulas(base, k):
    n, m = base.n, base.size
    assert g2k(base, k).n == n + n * k + 2 * m
    assert gprime_k(base, k).n == n * (k + 1) + n
    if base.min_degree >= 3:
        g = g3k(base, k)
        assert g.n == n * (k + 1) + 3 * m
        assert g.size == 4 * m + n * k
    assert reduction_gprime(base).n == 15 * n


@given(st.integers(1, 6))
def test_g1_order(t):
    g = g1(t)
    assert g.n == 14 * t + 1
    assert g.degree(0) == t


@settings(max_examples=20)
@given(base_graphs, st.integers(3, 5))
def test_generators_are_deterministic(base, k):
    assert g2k(base, k) == g2k(base, k)
    assert g2k(base, k).edges() == g2k(base, k).edges()
    recipe = GraphRecipe("gprime_k", {"k": k}, base)
    assert recipe.build() == recipe.build()


@given(st.integers(4, 10), st.data())
def test_f1_recognizer_accepts_generated_members(n, data):
    p = data.draw(st.integers(1, n - 1))
    assert is_f1(f1_member(n, p))


def test_gprime_subdivides_first_pendant():
    g = gprime_k(cycle(3), 3)
    # block for base vertex 0 starts at id 3: s=3 then leaves 4, 5, 6
    assert g.neighbors(3) == {0, 4}
    assert g.neighbors(4) == {3}
    assert g.neighbors(5) == {0}


def test_path_family_is_path():
    from qtrd.graph import is_path

    assert is_path(path(5))
