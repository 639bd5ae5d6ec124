"""Exact rational polyhedral cone kernel.

Rees cones, Simis cones, V/H conversion by the double description method,
minimal Hilbert bases via a placing triangulation, normality certificates,
integral closure and symbolic Rees algebra generators.  Every computation is
exact over the integers: primitive vectors, rational elimination, no floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import floor, lcm, prod

from ._linalg import (
    diagonalize,
    dot,
    frac_inverse,
    independent_rows,
    kernel_lattice_basis,
    primitive,
    rank,
)
from .core import Monomial, MonomialIdeal, _minimal_vecs
from .errors import HypothesisError, NonPointedConeError, ResourceCapError

#: Default ceiling on enumerated parallelepiped lattice points per call.
DEFAULT_LATTICE_CAP = 10**6


def _canonical_vectors(vecs):
    out = {primitive(tuple(int(x) for x in v)) for v in vecs}
    out.discard(())
    out = {v for v in out if any(v)}
    return tuple(sorted(out))


@dataclass(frozen=True)
class RationalCone:
    """A cone in Z^dim held in V-representation (rays) and/or H-representation
    (inequality normals h with cone = {y : <h,y> >= 0 for all h}).

    Vectors are stored primitive, deduplicated and lexicographically sorted.
    An empty ray tuple is the zero cone; an empty inequality tuple is the
    whole space; ``None`` means the representation is absent.
    """

    dim: int
    rays: tuple | None = None
    inequalities: tuple | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("cone dimension must be >= 1")
        if self.rays is None and self.inequalities is None:
            raise ValueError("a cone needs rays or inequalities")
        for attr in ("rays", "inequalities"):
            vecs = getattr(self, attr)
            if vecs is None:
                continue
            vecs = _canonical_vectors(vecs)
            for v in vecs:
                if len(v) != self.dim:
                    raise ValueError(f"vector {v} has wrong dimension for dim={self.dim}")
            object.__setattr__(self, attr, vecs)
        if self.rays is not None and self.inequalities is not None:
            for r in self.rays:
                for h in self.inequalities:
                    if dot(h, r) < 0:
                        raise ValueError(
                            f"inconsistent representations: ray {r} violates {h}")

    def contains(self, v):
        if self.inequalities is None:
            raise ValueError("membership needs the H-representation; "
                             "run dual_description first")
        return all(dot(h, v) >= 0 for h in self.inequalities)

    def __str__(self):
        parts = []
        if self.rays is not None:
            parts.append(f"{len(self.rays)} rays")
        if self.inequalities is not None:
            parts.append(f"{len(self.inequalities)} inequalities")
        return f"RationalCone(dim={self.dim}, {', '.join(parts)})"


# ---------------------------------------------------------------------------
# double description: extreme rays of {x : Ax >= 0}

def _dd_pointed(rows, d):
    """Extreme rays of {x : <a,x> >= 0 for a in rows}; needs rank(rows) == d."""
    sel = independent_rows(rows, need=d)
    if len(sel) < d:
        raise ValueError("cone is not pointed (inequality matrix rank deficient)")
    B = [rows[i] for i in sel]
    Binv = frac_inverse(B)
    rays = []
    actives = []
    for j in range(d):
        col = [Binv[i][j] for i in range(d)]
        denom = lcm(*(x.denominator for x in col))
        v = primitive(tuple(int(x * denom) for x in col))
        rays.append(v)
        actives.append(frozenset(sel[i] for i in range(d) if i != j))

    processed = list(sel)
    for row_id in range(len(rows)):
        if row_id in sel:
            continue
        a = rows[row_id]
        vals = [dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            actives = [act | {row_id} if val == 0 else act
                       for act, val in zip(actives, vals)]
            processed.append(row_id)
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays = []
        for ip in pos:
            for im in neg:
                s = actives[ip] & actives[im]
                adjacent = not any(
                    k != ip and k != im and s <= actives[k]
                    for k in range(len(rays)))
                if not adjacent:
                    continue
                r = primitive(tuple(
                    vals[ip] * x - vals[im] * y
                    for x, y in zip(rays[im], rays[ip])))
                new_rays.append(r)
        processed.append(row_id)
        keep_rays = [rays[i] for i in pos + zer]
        keep_acts = [actives[i] | ({row_id} if i in zer else frozenset())
                     for i in pos + zer]
        for r in new_rays:
            keep_rays.append(r)
            keep_acts.append(frozenset(
                i for i in processed if dot(rows[i], r) == 0))
        rays, actives = keep_rays, keep_acts
    return sorted(set(rays))


def _cone_generators(rows, d):
    """Generators of {x : <a,x> >= 0 for a in rows} in Z^d.

    Returns (extreme rays of the pointed part, lineality lattice basis); the
    cone is generated by the rays plus +-each lineality vector.
    """
    seen = []
    for r in rows:
        p = primitive(tuple(int(x) for x in r))
        if any(p) and p not in seen:
            seen.append(p)
    if not seen:
        basis = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
        return [], basis
    lin = kernel_lattice_basis(seen)
    if lin:
        aug = seen + [tuple(l) for l in lin] + [tuple(-x for x in l) for l in lin]
        rays = _dd_pointed(aug, d)
    else:
        rays = _dd_pointed(seen, d)
    return rays, [tuple(l) for l in lin]


def _with_lineality(rays, lin):
    return list(rays) + [tuple(l) for l in lin] + [tuple(-x for x in l) for l in lin]


def dual_description(cone: RationalCone) -> RationalCone:
    """Return the cone with both representations populated.

    From rays, the inequalities are the generators of the dual cone; from
    inequalities, the rays are the cone's generators (extreme rays, plus a
    +-lineality pair when the cone contains a line).  Starting from rays, the
    ray list is normalized to the extreme rays on the way back.
    """
    if cone.rays is not None and cone.inequalities is not None:
        return cone
    d = cone.dim
    if cone.inequalities is not None:
        rays, lin = _cone_generators(list(cone.inequalities), d)
        return RationalCone(d, rays=tuple(_with_lineality(rays, lin)),
                            inequalities=cone.inequalities)
    ineq_rays, ineq_lin = _cone_generators(list(cone.rays), d)
    ineqs = _with_lineality(ineq_rays, ineq_lin)
    rays, lin = _cone_generators(ineqs, d)
    return RationalCone(d, rays=tuple(_with_lineality(rays, lin)),
                        inequalities=tuple(ineqs))


def is_pointed(cone: RationalCone) -> bool:
    cone = dual_description(cone)
    return rank(list(cone.inequalities)) == cone.dim if cone.inequalities else cone.dim == 0


def cones_equal(c1: RationalCone, c2: RationalCone) -> bool:
    """Mutual containment, checked ray-against-inequality."""
    if c1.dim != c2.dim:
        raise ValueError(f"ambient dimensions differ: {c1.dim} vs {c2.dim}")
    c1 = dual_description(c1)
    c2 = dual_description(c2)
    return (all(c2.contains(r) for r in c1.rays)
            and all(c1.contains(r) for r in c2.rays))


# ---------------------------------------------------------------------------
# cones attached to monomial ideals

def rees_cone(I: MonomialIdeal) -> RationalCone:
    """Cone in Z^(n+1) over the unit vectors e_1..e_n and the lifted
    minimal generators (v, 1)."""
    I.require_proper_nonzero("the Rees cone")
    n = I.context.n
    rays = [tuple(1 if j == i else 0 for j in range(n + 1)) for i in range(n)]
    rays += [v + (1,) for v in I.exponents]
    return RationalCone(n + 1, rays=tuple(rays))


def simis_cone(I: MonomialIdeal) -> RationalCone:
    """Intersection of the Rees cones of the primary components.

    Built by concatenating the components' H-representations; the inequality
    list is then pruned to the facets (inequalities whose saturated extreme
    rays span a hyperplane), with a fallback to the unpruned list if the
    pruned system fails to reproduce the same ray set.
    """
    from .decomposition import has_embedded_primes, primary_decomposition
    from .errors import EmbeddedPrimeError

    I.require_proper_nonzero("the Simis cone")
    if has_embedded_primes(I):
        raise EmbeddedPrimeError("the Simis cone needs an ideal without embedded primes")
    d = I.context.n + 1
    ineqs = []
    for comp in primary_decomposition(I):
        rc = dual_description(rees_cone(comp.ideal))
        ineqs.extend(rc.inequalities)
    ineqs = list(_canonical_vectors(ineqs))
    rays, lin = _cone_generators(ineqs, d)
    gens = _with_lineality(rays, lin)
    facets = [h for h in ineqs
              if rank([r for r in gens if dot(h, r) == 0] or [(0,) * d]) == d - 1]
    check, check_lin = _cone_generators(facets, d) if facets else ([], [])
    if set(_with_lineality(check, check_lin)) != set(gens):
        facets = ineqs
    return RationalCone(d, rays=tuple(gens), inequalities=tuple(facets))


# ---------------------------------------------------------------------------
# Hilbert bases

@dataclass(frozen=True)
class HilbertBasis:
    """The unique minimal Hilbert basis of a pointed rational cone."""

    dim: int
    elements: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        elems = tuple(sorted(set(tuple(int(x) for x in v) for v in self.elements),
                             key=lambda v: (v[-1], v)))
        object.__setattr__(self, "elements", elems)

    def as_set(self):
        return frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _placing_triangulation(rays):
    """Cover a pointed cone with simplicial subcones on its extreme rays.

    Incremental placing: a ray inside the current span is joined to every
    boundary facet visible from it; a ray outside the span is joined to every
    simplex (pyramid step).
    """
    simplices = []
    span_rows = []
    for i, r in enumerate(rays):
        if not simplices:
            simplices = [(i,)]
            span_rows = [r]
            continue
        if rank(span_rows + [r]) > len(span_rows):
            simplices = [s + (i,) for s in simplices]
            span_rows.append(r)
            continue
        m = len(simplices[0])
        if m == 1:
            raise ValueError("two dependent extreme rays: cone is not pointed")
        facets = {}
        for s in simplices:
            for k in range(m):
                f = s[:k] + s[k + 1:]
                facets.setdefault(f, []).append(s[k])
        new = []
        for f, apexes in facets.items():
            if len(apexes) != 1:
                continue
            h = _facet_normal([rays[j] for j in f], rays[apexes[0]], span_rows)
            if dot(h, r) < 0:
                new.append(tuple(sorted(f + (i,))))
        simplices.extend(new)
    return simplices


def _facet_normal(facet_rays, apex_ray, span_rows):
    """Integer normal of a simplex facet, inside the current span, oriented
    towards the apex."""
    m = len(span_rows)
    # h = sum_k c_k * span_rows[k], with <h, f> = 0 for every facet ray f
    M = [[dot(f, b) for b in span_rows] for f in facet_rays]
    kern = kernel_lattice_basis(M) if M else [(1,) * m]
    c = kern[0]
    d = len(span_rows[0])
    h = tuple(sum(c[k] * span_rows[k][j] for k in range(m)) for j in range(d))
    s = dot(h, apex_ray)
    if s == 0:
        raise ValueError("degenerate simplex facet")
    if s < 0:
        h = tuple(-x for x in h)
    return h


def _parallelepiped_points(rays, budget):
    """Lattice points of {sum lambda_i r_i : 0 <= lambda_i < 1} for linearly
    independent integer rays, via an integer diagonalization of the ray
    matrix.  Returns (points including 0, lattice index)."""
    t = len(rays)
    d = len(rays[0])
    A = [[rays[j][i] for j in range(t)] for i in range(d)]  # columns are rays
    U, D, V = diagonalize(A)
    diag = [D[k][k] for k in range(t)]
    if any(x == 0 for x in diag):
        raise ValueError("parallelepiped rays are linearly dependent")
    index = prod(abs(x) for x in diag)
    if index > budget:
        raise ResourceCapError(
            f"parallelepiped holds {index} lattice points, over the remaining "
            f"budget of {budget}; raise max_lattice_points to proceed")
    Uinv = frac_inverse(U)
    sel = independent_rows(A, need=t)
    Ainv_sel = frac_inverse([A[i] for i in sel])
    points = []
    for combo in itertools.product(*(range(x) for x in diag)):
        g = list(combo) + [0] * (d - t)
        zprime = [sum(Uinv[i][k] * g[k] for k in range(d)) for i in range(d)]
        assert all(x.denominator == 1 for x in zprime)
        zprime = [int(x) for x in zprime]
        lam = [sum(Ainv_sel[j][k] * zprime[sel[k]] for k in range(t))
               for j in range(t)]
        shift = [floor(x) for x in lam]
        z = tuple(zprime[i] - sum(A[i][j] * shift[j] for j in range(t))
                  for i in range(d))
        points.append(z)
    assert len(set(points)) == index
    return points, index


def semigroup_member(v, elements, inequalities):
    """Is v a nonnegative integer combination of ``elements``?

    All elements must lie in the pointed cone cut out by ``inequalities``;
    residuals leaving the cone are pruned, which is sound because any partial
    remainder of a valid combination stays inside the cone.
    """
    v = tuple(v)
    zero = (0,) * len(v)
    if v == zero:
        return True
    elems = [tuple(e) for e in elements if any(e)]
    memo = {}

    def rec(u):
        if u == zero:
            return True
        got = memo.get(u)
        if got is not None:
            return got
        memo[u] = False
        for e in elems:
            w = tuple(a - b for a, b in zip(u, e))
            if all(dot(h, w) >= 0 for h in inequalities) and rec(w):
                memo[u] = True
                break
        return memo[u]

    return rec(v)


def _reduce_generators(cands, ineqs):
    """Unique minimal Hilbert basis from a generating candidate set.

    Graded by the sum of all inequality values (strictly positive on the
    pointed cone minus the origin), so scanning in increasing grade and
    dropping anything generated by the kept elements is exact.
    """
    def grade(v):
        return sum(dot(h, v) for h in ineqs)

    kept = []
    for v in sorted(set(cands), key=lambda v: (grade(v), v)):
        if not semigroup_member(v, kept, ineqs):
            kept.append(v)
    return kept


def hilbert_basis(cone: RationalCone,
                  max_lattice_points: int = DEFAULT_LATTICE_CAP) -> HilbertBasis:
    """The unique minimal Hilbert basis of a pointed cone.

    Triangulates over the extreme rays, enumerates the lattice points of each
    simplicial fundamental parallelepiped, adds the primitive extreme rays
    and reduces the union to the minimal basis.
    """
    cone = dual_description(cone)
    d = cone.dim
    if cone.rays and rank(list(cone.inequalities) or [(0,) * d]) < d:
        raise NonPointedConeError(
            "the cone contains a line; its Hilbert basis is not unique")
    rays = list(cone.rays)
    if not rays:
        return HilbertBasis(d, ())
    cands = set(rays)
    budget = max_lattice_points
    for simplex in _placing_triangulation(rays):
        pts, index = _parallelepiped_points([rays[i] for i in simplex], budget)
        budget -= index
        cands.update(p for p in pts if any(p))
    basis = _reduce_generators(cands, cone.inequalities)
    return HilbertBasis(d, tuple(basis))


# ---------------------------------------------------------------------------
# normality, integral closure, symbolic Rees generators

def _power_member(a, b, gens, memo):
    """x^a in I^b, by peeling one generator per level (b >= 0)."""
    if b == 0:
        return True
    key = (a, b)
    got = memo.get(key)
    if got is not None:
        return got
    memo[key] = False
    for g in gens:
        if all(x <= y for x, y in zip(g, a)):
            rest = tuple(y - x for x, y in zip(g, a))
            if _power_member(rest, b - 1, gens, memo):
                memo[key] = True
                break
    return memo[key]


def is_normal(I: MonomialIdeal,
              max_lattice_points: int = DEFAULT_LATTICE_CAP) -> bool:
    """True iff the lifted generator set is a Hilbert basis of the Rees cone,
    i.e. every Hilbert basis element (a, b) satisfies x^a in I^b."""
    I.require_proper_nonzero("the normality test")
    hb = hilbert_basis(rees_cone(I), max_lattice_points)
    memo = {}
    return all(_power_member(v[:-1], v[-1], I.exponents, memo)
               for v in hb.elements)


def integral_closure(I: MonomialIdeal,
                     max_lattice_points: int = DEFAULT_LATTICE_CAP) -> MonomialIdeal:
    """Monomials x^a with (a, 1) in the Rees cone.

    Minimal generators of the closure are bounded componentwise by the
    maxima of the generator exponents, so a box search at level one suffices.
    """
    I.require_proper_nonzero("the integral closure")
    rc = dual_description(rees_cone(I))
    n = I.context.n
    box = [max(g[j] for g in I.exponents) for j in range(n)]
    count = prod(b + 1 for b in box)
    if count > max_lattice_points:
        raise ResourceCapError(
            f"level-one box holds {count} points, over max_lattice_points="
            f"{max_lattice_points}")
    found = []
    for a in itertools.product(*(range(b + 1) for b in box)):
        if all(dot(h, a + (1,)) >= 0 for h in rc.inequalities):
            found.append(a)
    return MonomialIdeal(I.context, _minimal_vecs(found))


def check_symbolic_rees_normal(I: MonomialIdeal,
                               max_lattice_points: int = DEFAULT_LATTICE_CAP) -> bool:
    """Normality of the symbolic Rees algebra: every primary component normal."""
    from .decomposition import has_embedded_primes, primary_decomposition
    from .errors import EmbeddedPrimeError

    I.require_proper_nonzero("the symbolic Rees normality check")
    if has_embedded_primes(I):
        raise EmbeddedPrimeError(
            "the symbolic Rees normality criterion needs no embedded primes")
    return all(is_normal(c.ideal, max_lattice_points)
               for c in primary_decomposition(I))


def symbolic_rees_generators(I: MonomialIdeal,
                             max_lattice_points: int = DEFAULT_LATTICE_CAP):
    """Generators x^a t^b of the symbolic Rees algebra, as (monomial, t-degree).

    Valid when I has no embedded primes and every primary component is
    normal: then the Hilbert basis of the Simis cone generates."""
    from .decomposition import has_embedded_primes, primary_decomposition
    from .errors import EmbeddedPrimeError

    I.require_proper_nonzero("symbolic Rees generators")
    if has_embedded_primes(I):
        raise EmbeddedPrimeError("symbolic Rees generators need no embedded primes")
    for comp in primary_decomposition(I):
        if not is_normal(comp.ideal, max_lattice_points):
            raise HypothesisError(
                f"primary component {comp.ideal} is not normal, so the "
                f"Hilbert basis recipe does not apply")
    hb = hilbert_basis(simis_cone(I), max_lattice_points)
    return tuple((Monomial(I.context, v[:-1]), v[-1]) for v in hb.elements)
