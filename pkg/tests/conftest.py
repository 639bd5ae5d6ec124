"""Shared fixtures: the worked examples used throughout the suite."""

import pytest

from idealkit import PolyContext, WeightedDigraph


@pytest.fixture(scope="session")
def ctx3():
    return PolyContext.default(3)


@pytest.fixture(scope="session")
def ctx5():
    return PolyContext.default(5)


@pytest.fixture(scope="session")
def fig1_digraph(ctx5):
    """The five-vertex digraph with weights (2, 2, 1, 2, 1)."""
    return WeightedDigraph.of(
        [("x1", 2), ("x2", 2), ("x3", 1), ("x4", 2), ("x5", 1)],
        [("x1", "x2"), ("x3", "x2"), ("x5", "x2"),
         ("x3", "x4"), ("x5", "x4"), ("x3", "x1")])


@pytest.fixture(scope="session")
def fig1_reversed_digraph():
    """Same digraph with the arc (x5, x2) reversed."""
    return WeightedDigraph.of(
        [("x1", 2), ("x2", 2), ("x3", 1), ("x4", 2), ("x5", 1)],
        [("x1", "x2"), ("x3", "x2"), ("x2", "x5"),
         ("x3", "x4"), ("x5", "x4"), ("x3", "x1")])


@pytest.fixture(scope="session")
def fig1_ideal(fig1_digraph):
    return fig1_digraph.edge_ideal()


@pytest.fixture(scope="session")
def ex2_10_ideal(ctx5):
    """(x2x3, x4x5, x3x4, x2x5, x1^2x3, x1x2^2); also the Hilbert-basis example."""
    return ctx5.ideal("x2*x3", "x4*x5", "x3*x4", "x2*x5", "x1^2*x3", "x1*x2^2")


@pytest.fixture(scope="session")
def ex2_12_ideal(ctx3):
    """(x1x2^2, x1^2x3, x2x3^2): distinct minimal and associated symbolic powers."""
    return ctx3.ideal("x1*x2^2", "x1^2*x3", "x2*x3^2")


@pytest.fixture(scope="session")
def ex3_16_ideal(ctx3):
    """(x1x2^2, x1x3^2, x2x3^2): Alexander duality holds."""
    return ctx3.ideal("x1*x2^2", "x1*x3^2", "x2*x3^2")


@pytest.fixture(scope="session")
def ex3_17_ideal(ctx3):
    """Same as the 2.12 ideal; duality fails with a strict inclusion."""
    return ctx3.ideal("x1*x2^2", "x1^2*x3", "x2*x3^2")


@pytest.fixture(scope="session")
def principal_mixed_ideal(ctx3):
    """(x1x2^2, x1^2x3): the dual strictly contains the star dual."""
    return ctx3.ideal("x1*x2^2", "x1^2*x3")


@pytest.fixture(scope="session")
def radical_example_digraph():
    """Arcs (x2,x1), (x3,x2), (x3,x4) with weights (1, 2, 1, 1)."""
    return WeightedDigraph.of(
        [("x1", 1), ("x2", 2), ("x3", 1), ("x4", 1)],
        [("x2", "x1"), ("x3", "x2"), ("x3", "x4")])


@pytest.fixture(scope="session")
def radical_example_ideal(radical_example_digraph):
    return radical_example_digraph.edge_ideal()


@pytest.fixture(scope="session")
def terai_ideal():
    """(x1,x2)^2 ∩ (x2,x3)^2 ∩ (x3,x4)^2: unmixed."""
    ctx = PolyContext.default(4)
    parts = [ctx.ideal("x1", "x2"), ctx.ideal("x2", "x3"), ctx.ideal("x3", "x4")]
    out = parts[0] ** 2
    for p in parts[1:]:
        out = out & (p ** 2)
    return out


@pytest.fixture(scope="session")
def transitive_example_digraph():
    """Arcs (x2,x1), (x3,x2), (x3,x4), (x3,x1) with weights (1, 2, 1, 1)."""
    return WeightedDigraph.of(
        [("x1", 1), ("x2", 2), ("x3", 1), ("x4", 1)],
        [("x2", "x1"), ("x3", "x2"), ("x3", "x4"), ("x3", "x1")])
