"""Alexander duality beyond the squarefree case: three ideals, three outcomes.

The Alexander dual multiplies out each irreducible component; the star dual
intersects one irreducible ideal per minimal generator.  They agree on
squarefree ideals and on edge ideals of transitive oriented graphs, and can
differ in either direction in general.

Run from the repository root:

    python3 demos/alexander_duality.py
"""

from idealkit import (
    PolyContext,
    WeightedDigraph,
    alexander_dual,
    irreducible_decomposition,
    star_dual,
)


def show(I):
    print("I   =", I)
    print("dec =", irreducible_decomposition(I))
    dual, star = alexander_dual(I), star_dual(I)
    print("I^v =", dual)
    print("I^* =", star)
    if dual == star:
        verdict = "duality holds"
    elif star.contains_ideal(dual):
        verdict = "I^v strictly below I^*"
    else:
        verdict = "I^v strictly above I^*"
    print("  ->", verdict)
    print()


def main():
    ctx = PolyContext.default(3)
    show(ctx.ideal("x1*x2^2", "x1*x3^2", "x2*x3^2"))
    show(ctx.ideal("x1*x2^2", "x1^2*x3", "x2*x3^2"))
    show(ctx.ideal("x1*x2^2", "x1^2*x3"))

    D = WeightedDigraph.of(
        [("x1", 1), ("x2", 2), ("x3", 1), ("x4", 1)],
        [("x2", "x1"), ("x3", "x2"), ("x3", "x4"), ("x3", "x1")])
    print("transitive digraph:", D)
    print("transitive:", D.structure().transitive)
    I = D.edge_ideal()
    print("edge ideal:", I)
    print("duality holds:", alexander_dual(I) == star_dual(I))


if __name__ == "__main__":
    main()
