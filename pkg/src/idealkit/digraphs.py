"""Vertex-weighted oriented graphs and their edge ideals.

An oriented graph has no 2-cycles; each vertex carries a positive integer
weight and sources are normalized to weight 1 (the edge ideal never sees a
source weight).  The module covers strong vertex covers and the cover-wise
irreducible decomposition of the edge ideal, structural predicates, the
weight reduction that preserves Cohen-Macaulayness, a partial-polarization
style generator transform, full polarization, and the combinatorial
Cohen-Macaulay classifier for forests, whiskered graphs and acyclic
tournaments.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass, field

from .core import MonomialIdeal, PolyContext, _minimal_vecs
from .decomposition import Decomposition, IrreducibleIdeal
from .errors import DigraphError, HypothesisError, ResourceCapError

DEFAULT_VERTEX_CAP = 20


@dataclass(frozen=True)
class WeightedDigraph:
    """Oriented graph on the variables of a context, with vertex weights."""

    context: PolyContext
    weights: tuple[int, ...]
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        ctx = self.context
        ws = tuple(int(w) for w in self.weights)
        if len(ws) != ctx.n:
            raise DigraphError(f"need {ctx.n} weights, got {len(ws)}")
        if any(w < 1 for w in ws):
            raise DigraphError(f"weights must be positive integers: {ws}")
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if i == j:
                raise DigraphError(f"loop at {ctx.names[i]} is not allowed")
            if not (0 <= i < ctx.n and 0 <= j < ctx.n):
                raise DigraphError(f"arc ({i}, {j}) out of range")
            if (j, i) in arcs:
                raise DigraphError(
                    f"2-cycle between {ctx.names[i]} and {ctx.names[j]}")
        heads = {j for _, j in arcs}
        fixed = list(ws)
        for i in range(ctx.n):
            has_out = any(a == i for a, _ in arcs)
            if has_out and i not in heads and fixed[i] != 1:
                warnings.warn(
                    f"source vertex {ctx.names[i]} has weight {fixed[i]}; "
                    f"normalized to 1", stacklevel=3)
                fixed[i] = 1
        object.__setattr__(self, "weights", tuple(fixed))
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def of(cls, vertices, arcs):
        """Build from ``vertices`` as (name, weight) pairs and name arcs."""
        names = tuple(nm for nm, _ in vertices)
        ctx = PolyContext(names)
        ws = tuple(w for _, w in vertices)
        idx_arcs = frozenset((ctx.index(a), ctx.index(b)) for a, b in arcs)
        return cls(ctx, ws, idx_arcs)

    # -- basic structure ------------------------------------------------
    @property
    def names(self):
        return self.context.names

    def weight(self, v):
        if isinstance(v, str):
            v = self.context.index(v)
        return self.weights[v]

    def edges(self):
        """Underlying undirected edges as sorted index pairs."""
        return sorted({(min(i, j), max(i, j)) for i, j in self.arcs})

    def neighbors(self, v):
        out = set()
        for i, j in self.arcs:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def isolated_vertices(self):
        touched = {v for arc in self.arcs for v in arc}
        return [v for v in range(self.context.n) if v not in touched]

    def _resolve_set(self, vertices):
        out = set()
        for v in vertices:
            out.add(self.context.index(v) if isinstance(v, str) else int(v))
        return out

    # -- edge ideal -------------------------------------------------------
    def edge_ideal(self) -> MonomialIdeal:
        """Ideal generated by x_i * x_j^{d_j} over the arcs (x_i, x_j)."""
        n = self.context.n
        vecs = []
        for i, j in self.arcs:
            v = [0] * n
            v[i] += 1
            v[j] += self.weights[j]
            vecs.append(tuple(v))
        return MonomialIdeal(self.context, _minimal_vecs(vecs))

    # -- covers -------------------------------------------------------------
    def is_vertex_cover(self, vertices) -> bool:
        c = self._resolve_set(vertices)
        return all(i in c or j in c for i, j in self.arcs)

    def cover_partition(self, vertices) -> "CoverPartition":
        c = self._resolve_set(vertices)
        if not self.is_vertex_cover(c):
            raise DigraphError(
                f"{sorted(self.names[v] for v in c)} is not a vertex cover")
        l1 = {x for x in c
              if any(i == x and j not in c for i, j in self.arcs)}
        l3 = {x for x in c if self.neighbors(x) <= c}
        l2 = c - l1 - l3
        nm = self.context.names
        srt = lambda s: tuple(nm[v] for v in sorted(s))
        return CoverPartition(srt(c), srt(l1), srt(l2), srt(l3),
                              tuple(nm[v] for v in range(self.context.n)))

    def is_strong_cover(self, vertices) -> bool:
        """Minimal covers are strong; otherwise every L3 vertex needs an
        in-arc from an L2/L3 vertex of weight at least 2."""
        part = self.cover_partition(vertices)
        c = self._resolve_set(part.cover)
        inner = self._resolve_set(part.L2) | self._resolve_set(part.L3)
        for x in self._resolve_set(part.L3):
            if not any(j == x and i in inner and self.weights[i] >= 2
                       for i, j in self.arcs):
                return False
        return True

    def strong_covers(self, max_vertices: int = DEFAULT_VERTEX_CAP):
        """All strong vertex covers, as partitions, in canonical order.

        Isolated vertices are skipped: they would sit in L3 with no in-arc,
        so no strong cover contains them."""
        active = [v for v in range(self.context.n)
                  if v not in set(self.isolated_vertices())]
        if len(active) > max_vertices:
            raise ResourceCapError(
                f"{len(active)} vertices exceed the enumeration cap "
                f"{max_vertices}")
        arcs = list(self.arcs)
        out = []
        for size in range(len(active) + 1):
            for combo in itertools.combinations(active, size):
                c = set(combo)
                if not all(i in c or j in c for i, j in arcs):
                    continue
                if self.is_strong_cover(c):
                    out.append(self.cover_partition(c))
        return out

    def prt_decomposition(self, max_vertices: int = DEFAULT_VERTEX_CAP) -> Decomposition:
        """Irreducible decomposition of the edge ideal, one component per
        strong cover: L1 vertices enter with exponent 1, L2/L3 vertices with
        their weight."""
        from .errors import ImproperIdealError
        if not self.arcs:
            raise ImproperIdealError(
                "the digraph has no arcs, so its edge ideal is zero and has "
                "no decomposition")
        comps = []
        for part in self.strong_covers(max_vertices):
            powers = [(self.context.index(x), 1) for x in part.L1]
            powers += [(self.context.index(x), self.weight(x))
                       for x in part.L2 + part.L3]
            comps.append(IrreducibleIdeal(self.context, tuple(powers)))
        return Decomposition(tuple(comps))

    # -- structural predicates ---------------------------------------------
    def structure(self) -> "DigraphStructure":
        n = self.context.n
        order = self._topological_order()
        transitive = True
        by_tail = {}
        for i, j in self.arcs:
            by_tail.setdefault(i, set()).add(j)
        for i, j in self.arcs:
            for k in by_tail.get(j, ()):
                if k != i and k not in by_tail.get(i, set()):
                    transitive = False
                    break
            if not transitive:
                break
        pairs = {(min(i, j), max(i, j)) for i, j in self.arcs}
        tournament = all((a, b) in pairs
                         for a in range(n) for b in range(a + 1, n))
        topo = None
        if order is not None:
            topo = tuple(self.context.names[v] for v in order)
        return DigraphStructure(order is not None, transitive, tournament, topo)

    def _topological_order(self):
        n = self.context.n
        indeg = [0] * n
        for _, j in self.arcs:
            indeg[j] += 1
        ready = sorted(v for v in range(n) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for i, j in sorted(self.arcs):
                if i == v:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
            ready.sort()
        return order if len(order) == n else None

    def is_forest(self) -> bool:
        """The underlying graph has no cycle."""
        parent = list(range(self.context.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i, j in self.edges():
            ri, rj = find(i), find(j)
            if ri == rj:
                return False
            parent[ri] = rj
        return True

    # -- Cohen-Macaulay classification ----------------------------------
    def _whisker_matching(self):
        """Perfect matching pairing every vertex with a leaf, or None.

        Each leaf must be matched to its unique neighbor, which forces the
        matching (up to labels inside a two-leaf component).  Pairs come back
        as (x, y) with y the leaf."""
        touched = {v for arc in self.arcs for v in arc}
        if len(touched) != self.context.n:
            return None
        deg = {v: len(self.neighbors(v)) for v in touched}
        matched = {}
        pairs = []
        for leaf in sorted(v for v in touched if deg[v] == 1):
            if leaf in matched:
                continue
            nb = next(iter(self.neighbors(leaf)))
            if nb in matched:
                return None
            matched[leaf] = nb
            matched[nb] = leaf
            pairs.append((nb, leaf))
        if any(v not in matched for v in touched):
            return None
        return pairs

    def _matching_weight_check(self, pairs):
        """Condition on a leaf matching: d(x) = 1 whenever the arc (x, y)
        points into the leaf y.  Two-leaf components can always be labeled so
        the arc points out of the leaf."""
        deg = {v: len(self.neighbors(v)) for v in
               {u for arc in self.arcs for u in arc}}
        labeled = []
        for x, y in pairs:
            if deg[x] == 1 and deg[y] == 1:
                # isolated edge: let y be the arc's tail, then (x, y) is no arc
                if (x, y) in self.arcs:
                    x, y = y, x
                labeled.append((x, y))
                continue
            if deg[x] == 1:
                x, y = y, x
            if (x, y) in self.arcs and self.weights[x] >= 2:
                return None, (x, y)
            labeled.append((x, y))
        return labeled, None

    def cm_classify(self) -> "CmResult":
        """Cohen-Macaulay or not, where a combinatorial criterion applies.

        Forests (without isolated vertices) and graphs with a perfect
        matching into leaf whiskers are decided by the matching-plus-weights
        condition; acyclic tournaments are always Cohen-Macaulay.  Everything
        else is out of the proven families."""
        nm = self.context.names

        def as_names(pairs):
            return tuple((nm[a], nm[b]) for a, b in pairs)

        if self.is_forest():
            if self.isolated_vertices():
                bad = [nm[v] for v in self.isolated_vertices()]
                return CmResult(CmStatus.CRITERION_INAPPLICABLE, None, None,
                                f"forest has isolated vertices {bad}")
            pairs = self._whisker_matching()
            if pairs is None:
                return CmResult(CmStatus.NOT_COHEN_MACAULAY, "forest", None,
                                "no perfect matching into leaf whiskers")
            labeled, bad = self._matching_weight_check(pairs)
            if bad is not None:
                return CmResult(
                    CmStatus.NOT_COHEN_MACAULAY, "forest", as_names(pairs),
                    f"matched arc ({nm[bad[0]]}, {nm[bad[1]]}) enters a leaf "
                    f"but d({nm[bad[0]]}) = {self.weights[bad[0]]} >= 2")
            return CmResult(CmStatus.COHEN_MACAULAY, "forest",
                            as_names(labeled), "leaf matching with unit "
                            "weights on arcs into leaves")
        st = self.structure()
        if st.tournament and st.acyclic and self.arcs:
            return CmResult(CmStatus.COHEN_MACAULAY, "acyclic-tournament", None,
                            f"acyclic tournament with topological order "
                            f"{st.topological_order}")
        pairs = self._whisker_matching()
        if pairs is not None:
            labeled, bad = self._matching_weight_check(pairs)
            if bad is not None:
                return CmResult(
                    CmStatus.NOT_COHEN_MACAULAY, "whisker-matching",
                    as_names(pairs),
                    f"matched arc ({nm[bad[0]]}, {nm[bad[1]]}) enters a leaf "
                    f"but d({nm[bad[0]]}) = {self.weights[bad[0]]} >= 2")
            return CmResult(CmStatus.COHEN_MACAULAY, "whisker-matching",
                            as_names(labeled), "leaf matching with unit "
                            "weights on arcs into leaves")
        return CmResult(CmStatus.CRITERION_INAPPLICABLE, None, None,
                        "no combinatorial criterion covers this digraph")

    def weight_reduce(self) -> "WeightedDigraph":
        """Replace every weight >= 2 by 2; Cohen-Macaulayness is preserved."""
        ws = tuple(2 if w >= 2 else 1 for w in self.weights)
        return WeightedDigraph(self.context, ws, self.arcs)

    def __str__(self):
        arcs = sorted((self.names[i], self.names[j]) for i, j in self.arcs)
        ws = ", ".join(f"{n}={w}" for n, w in zip(self.names, self.weights))
        return f"WeightedDigraph({ws}; {arcs})"


@dataclass(frozen=True)
class CoverPartition:
    """A vertex cover C split into L1 (arc out of C), L3 (neighborhood inside
    C) and L2 (the rest); C is minimal exactly when L3 is empty."""

    cover: tuple[str, ...]
    L1: tuple[str, ...]
    L2: tuple[str, ...]
    L3: tuple[str, ...]
    _order: tuple[str, ...] = field(default=(), compare=False, repr=False)

    def is_minimal(self):
        return not self.L3

    def sort_key(self):
        order = self._order or tuple(sorted(self.cover))
        return (len(self.cover), tuple(order.index(v) for v in self.cover))

    def __str__(self):
        fmt = lambda s: "{" + ", ".join(s) + "}"
        return (f"C={fmt(self.cover)} L1={fmt(self.L1)} "
                f"L2={fmt(self.L2)} L3={fmt(self.L3)}")


@dataclass(frozen=True)
class DigraphStructure:
    acyclic: bool
    transitive: bool
    tournament: bool
    topological_order: tuple[str, ...] | None


class CmStatus(enum.Enum):
    COHEN_MACAULAY = "cohen_macaulay"
    NOT_COHEN_MACAULAY = "not_cohen_macaulay"
    CRITERION_INAPPLICABLE = "criterion_inapplicable"


@dataclass(frozen=True)
class CmResult:
    status: CmStatus
    rule: str | None
    matching: tuple[tuple[str, str], ...] | None
    reason: str


# ---------------------------------------------------------------------------
# generator-level transforms on monomial ideals

def depth_reduction_step(I: MonomialIdeal, var) -> MonomialIdeal:
    """Divide the top x_i-degree generators once by x_i.

    With q the top x_i-degree and p the next one, depth is preserved whenever
    p >= 1 and q - p >= 2; outside that range the step is refused."""
    I.require_proper_nonzero("the depth reduction step")
    i = I.context.index(var) if isinstance(var, str) else int(var)
    q = max(v[i] for v in I.exponents)
    lower = [v[i] for v in I.exponents if v[i] < q]
    p = max(lower) if lower else 0
    if p < 1 or q - p < 2:
        raise HypothesisError(
            f"depth reduction at {I.context.names[i]} needs p >= 1 and "
            f"q - p >= 2, got p={p}, q={q}")
    vecs = [tuple(e - 1 if j == i else e for j, e in enumerate(v))
            if v[i] == q else v
            for v in I.exponents]
    return MonomialIdeal(I.context, _minimal_vecs(vecs))


def polarize(I: MonomialIdeal):
    """Full polarization: x_i^e becomes x_{i,1} ... x_{i,e} in fresh variables.

    Returns the squarefree ideal in its extended context and the provenance
    map new name -> (old name, copy number).
    """
    I.require_proper_nonzero("polarization")
    ctx = I.context
    n = ctx.n
    copies = [max((v[j] for v in I.exponents), default=0) for j in range(n)]
    copies = [max(c, 1) for c in copies]
    new_names = []
    var_map = {}
    slot = {}  # (orig index, copy) -> new index
    for j in range(n):
        for c in range(1, copies[j] + 1):
            nm = f"{ctx.names[j]}_{c}"
            slot[(j, c)] = len(new_names)
            var_map[nm] = (ctx.names[j], c)
            new_names.append(nm)
    if len(set(new_names)) != len(new_names):
        raise ValueError(f"polarized variable names collide: {new_names}")
    new_ctx = PolyContext(tuple(new_names))
    vecs = []
    for v in I.exponents:
        w = [0] * len(new_names)
        for j, e in enumerate(v):
            for c in range(1, e + 1):
                w[slot[(j, c)]] = 1
        vecs.append(tuple(w))
    return MonomialIdeal(new_ctx, _minimal_vecs(vecs)), var_map
