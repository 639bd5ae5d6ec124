"""Weighted oriented graphs: covers, decomposition, classification."""

import random

import pytest

from idealkit import (
    CmStatus,
    DigraphError,
    HypothesisError,
    PolyContext,
    ResourceCapError,
    WeightedDigraph,
    alexander_dual,
    depth_reduction_step,
    irreducible_decomposition,
    is_unmixed,
    polarize,
    star_dual,
)

from oracles import random_forest_digraph, random_oriented_digraph


def _single_arc(d2=1):
    return WeightedDigraph.of([("x1", 1), ("x2", d2)], [("x1", "x2")])


# ---------------------------------------------------------------------------
# construction and validation

def test_two_cycle_rejected():
    with pytest.raises(DigraphError):
        WeightedDigraph.of([("x1", 1), ("x2", 1)], [("x1", "x2"), ("x2", "x1")])


def test_loop_and_bad_weight_rejected():
    with pytest.raises(DigraphError):
        WeightedDigraph.of([("x1", 1)], [("x1", "x1")])
    with pytest.raises(DigraphError):
        WeightedDigraph.of([("x1", 0), ("x2", 1)], [("x1", "x2")])


def test_source_weight_normalized_with_warning():
    with pytest.warns(UserWarning, match="source vertex x1"):
        D = WeightedDigraph.of([("x1", 3), ("x2", 2)], [("x1", "x2")])
    assert D.weight("x1") == 1 and D.weight("x2") == 2


# ---------------------------------------------------------------------------
# edge ideals

def test_edge_ideal_fig1(fig1_digraph, fig1_ideal):
    ctx = fig1_digraph.context
    assert fig1_ideal == ctx.ideal("x1^2*x3", "x1*x2^2", "x3*x2^2",
                                   "x3*x4^2", "x4^2*x5", "x2^2*x5")


def test_edge_ideal_transitive_example(transitive_example_digraph):
    D = transitive_example_digraph
    assert D.edge_ideal() == D.context.ideal("x1*x2", "x2^2*x3", "x3*x4", "x1*x3")


def test_unit_weights_give_squarefree_graph_ideal():
    D = WeightedDigraph.of([("x1", 1), ("x2", 1), ("x3", 1)],
                           [("x1", "x2"), ("x2", "x3")])
    assert D.edge_ideal() == D.context.ideal("x1*x2", "x2*x3")


# ---------------------------------------------------------------------------
# cover partitions

def test_cover_partition_single_arc():
    part = _single_arc().cover_partition({"x1"})
    assert part.cover == ("x1",) and part.L1 == ("x1",)
    assert part.L2 == () and part.L3 == ()


def test_cover_partition_all_vertices(fig1_digraph):
    part = fig1_digraph.cover_partition(fig1_digraph.names)
    assert part.L3 == fig1_digraph.names and part.L1 == () and part.L2 == ()


def test_cover_partition_fig1_mixed(fig1_digraph):
    part = fig1_digraph.cover_partition({"x2", "x3", "x5"})
    assert "x3" in part.L1  # the arc (x3, x4) leaves the cover
    assert part.L3 == ()    # this cover is minimal
    assert part.is_minimal()


def test_not_a_cover_rejected(fig1_digraph):
    with pytest.raises(DigraphError):
        fig1_digraph.cover_partition({"x1", "x2"})


# ---------------------------------------------------------------------------
# strong covers

def test_minimal_covers_are_strong(fig1_digraph):
    for c in ({"x2", "x3", "x5"}, {"x2", "x3", "x4"}):
        part = fig1_digraph.cover_partition(c)
        assert part.is_minimal()
        assert fig1_digraph.is_strong_cover(c)


def test_fig1_nonminimal_strong_cover(fig1_digraph):
    assert fig1_digraph.is_strong_cover({"x1", "x2", "x4"})


def test_acyclic_tournament_full_set_not_strong():
    arcs = [(f"x{i}", f"x{j}") for i in range(1, 5) for j in range(i + 1, 5)]
    D = WeightedDigraph.of([(f"x{i}", 2 if i > 1 else 1) for i in range(1, 5)],
                           arcs)
    assert not D.is_strong_cover({"x1", "x2", "x3", "x4"})


def test_strong_covers_single_arc():
    covers = [p.cover for p in _single_arc().strong_covers()]
    assert covers == [("x1",), ("x2",)]


def test_strong_covers_fig1_count(fig1_digraph):
    assert len(fig1_digraph.strong_covers()) == 4


def test_strong_covers_radical_example(radical_example_digraph):
    assert len(radical_example_digraph.strong_covers()) == 4


def test_vertex_cap(fig1_digraph):
    with pytest.raises(ResourceCapError):
        fig1_digraph.strong_covers(max_vertices=3)


def test_prt_rejects_arcless_digraph():
    from idealkit import ImproperIdealError
    D = WeightedDigraph.of([("x1", 1), ("x2", 1)], [])
    with pytest.raises(ImproperIdealError):
        D.prt_decomposition()


# ---------------------------------------------------------------------------
# cover-wise decomposition

def test_prt_fig1(fig1_digraph, fig1_ideal):
    dec = fig1_digraph.prt_decomposition()
    assert dec == irreducible_decomposition(fig1_ideal)
    assert [str(c) for c in dec] == [
        "(x1^2, x2^2, x4^2)", "(x1, x3, x5)",
        "(x2^2, x3, x4^2)", "(x2^2, x3, x5)"]


def test_prt_radical_example(radical_example_digraph, radical_example_ideal):
    dec = radical_example_digraph.prt_decomposition()
    assert dec == irreducible_decomposition(radical_example_ideal)
    assert {str(c) for c in dec} == {
        "(x1, x3)", "(x2, x3)", "(x1, x2^2, x4)", "(x2, x4)"}


def test_prt_unit_weights_matches_minimal_covers():
    D = WeightedDigraph.of([("x1", 1), ("x2", 1), ("x3", 1)],
                           [("x1", "x2"), ("x2", "x3")])
    dec = D.prt_decomposition()
    assert {str(c) for c in dec} == {"(x2)", "(x1, x3)"}


def test_prt_matches_decomposition_on_randoms():
    rng = random.Random(11)
    for _ in range(30):
        D = random_oriented_digraph(rng)
        assert D.prt_decomposition() == irreducible_decomposition(D.edge_ideal())


def test_associated_primes_are_exactly_strong_covers():
    from idealkit import associated_primes
    rng = random.Random(3535)
    for _ in range(25):
        D = random_oriented_digraph(rng)
        got = {p.names for p in associated_primes(D.edge_ideal())}
        want = {part.cover for part in D.strong_covers()}
        assert got == want


# ---------------------------------------------------------------------------
# structure flags

def test_structure_transitive_example(transitive_example_digraph):
    st = transitive_example_digraph.structure()
    assert st.transitive and st.acyclic and not st.tournament


def test_structure_path_not_transitive():
    D = WeightedDigraph.of([("x1", 1), ("x2", 1), ("x3", 1)],
                           [("x1", "x2"), ("x2", "x3")])
    st = D.structure()
    assert st.acyclic and not st.transitive
    assert st.topological_order == ("x1", "x2", "x3")


def test_structure_acyclic_tournament():
    arcs = [(f"x{i}", f"x{j}") for i in range(1, 5) for j in range(i + 1, 5)]
    D = WeightedDigraph.of([(f"x{i}", 1) for i in range(1, 5)], arcs)
    st = D.structure()
    assert st.acyclic and st.transitive and st.tournament


def test_structure_cycle():
    D = WeightedDigraph.of([("x1", 1), ("x2", 1), ("x3", 1)],
                           [("x1", "x2"), ("x2", "x3"), ("x3", "x1")])
    st = D.structure()
    assert not st.acyclic and st.topological_order is None


def test_transitive_duality():
    rng = random.Random(9000)
    from oracles import random_transitive_digraph
    for _ in range(20):
        D = random_transitive_digraph(rng)
        assert D.structure().transitive
        I = D.edge_ideal()
        assert star_dual(I) == alexander_dual(I)


# ---------------------------------------------------------------------------
# Cohen-Macaulay classification

def test_single_arc_is_cm():
    res = _single_arc().cm_classify()
    assert res.status is CmStatus.COHEN_MACAULAY
    assert res.rule == "forest"


def test_forest_with_heavy_tail_into_leaf_not_cm():
    # matching edge (x2, y2) oriented into the leaf with d(x2) = 2
    D = WeightedDigraph.of(
        [("x1", 1), ("y1", 1), ("x2", 2), ("y2", 1)],
        [("x1", "y1"), ("x1", "x2"), ("x2", "y2")])
    res = D.cm_classify()
    assert res.status is CmStatus.NOT_COHEN_MACAULAY
    assert not is_unmixed(D.edge_ideal())
    # the proof's witness: a strong cover one vertex larger than the height
    heights = {len(p.cover) for p in D.strong_covers()}
    assert len(heights) > 1


def test_acyclic_tournament_cm_any_weights():
    arcs = [(f"x{i}", f"x{j}") for i in range(1, 5) for j in range(i + 1, 5)]
    D = WeightedDigraph.of(
        [("x1", 1), ("x2", 3), ("x3", 2), ("x4", 5)], arcs)
    res = D.cm_classify()
    assert res.status is CmStatus.COHEN_MACAULAY
    assert res.rule == "acyclic-tournament"


def test_whisker_matching_rule_beyond_forests():
    # a 3-cycle with a leaf whisker on every vertex
    D = WeightedDigraph.of(
        [("x1", 1), ("x2", 2), ("x3", 1), ("y1", 1), ("y2", 1), ("y3", 3)],
        [("x1", "x2"), ("x2", "x3"), ("x1", "x3"),
         ("y1", "x1"), ("y2", "x2"), ("x3", "y3")])
    res = D.cm_classify()
    assert res.rule == "whisker-matching"
    assert res.status is CmStatus.COHEN_MACAULAY
    assert is_unmixed(D.edge_ideal())
    # flip: orient the matched arc into the leaf from a weight-2 vertex
    D2 = WeightedDigraph.of(
        [("x1", 1), ("x2", 2), ("x3", 1), ("y1", 1), ("y2", 2), ("y3", 3)],
        [("x1", "x2"), ("x2", "x3"), ("x1", "x3"),
         ("y1", "x1"), ("x2", "y2"), ("x3", "y3")])
    res2 = D2.cm_classify()
    assert res2.status is CmStatus.NOT_COHEN_MACAULAY
    assert not is_unmixed(D2.edge_ideal())


def test_isolated_vertex_inapplicable():
    D = WeightedDigraph.of([("x1", 1), ("x2", 1), ("x3", 1)], [("x1", "x2")])
    res = D.cm_classify()
    assert res.status is CmStatus.CRITERION_INAPPLICABLE
    assert "isolated" in res.reason


def test_odd_cycle_inapplicable():
    D = WeightedDigraph.of(
        [("x1", 1), ("x2", 1), ("x3", 1), ("x4", 1), ("x5", 1)],
        [("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x5", "x1")])
    assert D.cm_classify().status is CmStatus.CRITERION_INAPPLICABLE


def test_forest_classifier_matches_unmixedness():
    rng = random.Random(4242)
    for _ in range(25):
        D = random_forest_digraph(rng, max_vertices=8)
        res = D.cm_classify()
        assert res.status is not CmStatus.CRITERION_INAPPLICABLE
        assert (res.status is CmStatus.COHEN_MACAULAY) == is_unmixed(D.edge_ideal())


# ---------------------------------------------------------------------------
# weight reduction

def test_weight_reduce_examples():
    D = WeightedDigraph.of([("x1", 1), ("x2", 5), ("x3", 3)],
                           [("x1", "x2"), ("x2", "x3")])
    R = D.weight_reduce()
    assert R.weights == (1, 2, 2)
    assert R.weight_reduce() == R  # fixed point


def test_weight_reduce_preserves_classification():
    rng = random.Random(5757)
    for _ in range(20):
        D = random_forest_digraph(rng, max_vertices=8, max_weight=5)
        assert D.cm_classify().status == D.weight_reduce().cm_classify().status


# ---------------------------------------------------------------------------
# depth reduction and polarization

def test_depth_reduction_examples(ctx3):
    I = ctx3.ideal("x1^4*x2", "x1*x3")
    assert depth_reduction_step(I, "x1") == ctx3.ideal("x1^3*x2", "x1*x3")
    with pytest.raises(HypothesisError, match="p=0, q=3"):
        depth_reduction_step(ctx3.ideal("x1^3*x2", "x3"), "x1")
    with pytest.raises(HypothesisError):
        depth_reduction_step(ctx3.ideal("x1^2*x2", "x1*x3"), "x1")  # q - p = 1


def test_iterated_depth_reduction_reproduces_weight_reduce():
    D = WeightedDigraph.of([("x1", 1), ("x2", 5), ("x3", 1)],
                           [("x1", "x2"), ("x2", "x3")])
    I = D.edge_ideal()
    j = "x2"
    while max(v[I.context.index(j)] for v in I.exponents) > 2:
        I = depth_reduction_step(I, j)
    assert I == D.weight_reduce().edge_ideal()


def test_polarize_examples():
    ctx1 = PolyContext.default(1)
    J, vmap = polarize(ctx1.ideal("x1^2"))
    assert J == J.context.ideal("x1_1*x1_2")
    assert vmap == {"x1_1": ("x1", 1), "x1_2": ("x1", 2)}

    ctx2 = PolyContext.default(2)
    J2, _ = polarize(ctx2.ideal("x1^2*x2", "x2^2"))
    assert J2 == J2.context.ideal("x1_1*x1_2*x2_1", "x2_1*x2_2")


def test_polarize_edge_ideal_structure(fig1_ideal):
    J, vmap = polarize(fig1_ideal)
    assert all(all(e <= 1 for e in v) for v in J.exponents)  # squarefree
    assert len(J.exponents) == len(fig1_ideal.exponents)
    assert set(vmap) == set(J.context.names)
