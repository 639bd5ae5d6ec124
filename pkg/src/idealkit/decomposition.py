"""Irreducible and primary decomposition of monomial ideals.

The decomposition algorithm is recursive coprime splitting: a generator that
mixes two coprime parts u, v splits the ideal into the two ideals gaining u
resp. v; once every generator is a pure power the ideal is irreducible.
Redundant components are pruned afterwards.  The result is the unique
irredundant irreducible decomposition, whose components are exactly the
minimal irreducible ideals containing I.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    _minimal_vecs,
    _same_context,
    intersect_all,
)
from .errors import ImproperIdealError


@dataclass(frozen=True)
class IrreducibleIdeal:
    """(x_{i1}^{a1}, ..., x_{ir}^{ar}) with all a_j >= 1, as a partial map."""

    context: "PolyContext"
    powers: tuple[tuple[int, int], ...]  # (variable index, exponent), sorted

    def __post_init__(self):
        ps = tuple(sorted((int(i), int(e)) for i, e in self.powers))
        object.__setattr__(self, "powers", ps)
        if not ps:
            raise ValueError("an irreducible ideal needs at least one pure power")
        idxs = [i for i, _ in ps]
        if len(set(idxs)) != len(idxs):
            raise ValueError(f"repeated variable in {ps}")
        if any(e < 1 for _, e in ps):
            raise ValueError(f"pure-power exponents must be >= 1: {ps}")
        if idxs[0] < 0 or idxs[-1] >= self.context.n:
            raise ValueError(f"variable index out of range: {ps}")

    @property
    def variables(self):
        return tuple(i for i, _ in self.powers)

    def exponent(self, i):
        for j, e in self.powers:
            if j == i:
                return e
        return 0

    def radical(self):
        return MonomialPrime(self.context, self.variables)

    def as_ideal(self):
        n = self.context.n
        vecs = [tuple(e if j == i else 0 for j in range(n)) for i, e in self.powers]
        return MonomialIdeal(self.context, _minimal_vecs(vecs))

    def contains_component(self, other):
        """Ideal containment other <= self, specialised to irreducibles."""
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= e for i, e in other.powers)

    def sort_key(self):
        return (self.variables, tuple(e for _, e in self.powers))

    def __str__(self):
        parts = []
        for i, e in self.powers:
            nm = self.context.names[i]
            parts.append(nm if e == 1 else f"{nm}^{e}")
        return "(" + ", ".join(parts) + ")"

    def __repr__(self):
        return f"IrreducibleIdeal{self}"


@dataclass(frozen=True)
class PrimaryIdeal:
    """A monomial primary ideal together with its radical prime.

    The shape requirement: a pure power of every radical variable is a
    generator and every generator is supported inside the radical variables.
    """

    ideal: MonomialIdeal
    radical_prime: MonomialPrime

    def __post_init__(self):
        p = is_primary(self.ideal)
        if p is None:
            raise ValueError(f"{self.ideal} is not a primary monomial ideal")
        if p != self.radical_prime:
            raise ValueError(
                f"radical of {self.ideal} is {p}, not {self.radical_prime}")

    def sort_key(self):
        return (self.radical_prime.variables, self.ideal.exponents)

    def __str__(self):
        return str(self.ideal)


@dataclass(frozen=True)
class Decomposition:
    """An irredundant list of components intersecting to the source ideal."""

    components: tuple

    def __post_init__(self):
        comps = tuple(sorted(self.components, key=lambda c: c.sort_key()))
        object.__setattr__(self, "components", comps)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def ideals(self):
        return tuple(c.as_ideal() if isinstance(c, IrreducibleIdeal) else c.ideal
                     for c in self.components)

    def intersection(self):
        return intersect_all(self.ideals())

    def __str__(self):
        return " ∩ ".join(str(c) for c in self.components)


# ---------------------------------------------------------------------------
# irreducible decomposition by coprime splitting

def _splittable(vecs):
    """Pick the generator with largest support having >= 2 variables, or None."""
    best = None
    best_supp = 1
    for v in vecs:
        supp = sum(1 for e in v if e > 0)
        if supp > best_supp:
            best, best_supp = v, supp
    return best


def _split(vecs, memo):
    """Set of irreducible components (as powers tuples) of the ideal (vecs)."""
    found = memo.get(vecs)
    if found is not None:
        return found
    g = _splittable(vecs)
    if g is None:
        # every generator is a pure power of a distinct variable
        comp = tuple(sorted((i, e) for i, e in _pure_powers(vecs)))
        out = frozenset([comp])
    else:
        i = next(j for j, e in enumerate(g) if e > 0)
        u = tuple(g[j] if j == i else 0 for j in range(len(g)))
        v = tuple(0 if j == i else g[j] for j in range(len(g)))
        rest = tuple(w for w in vecs if w != g)
        left = _minimal_vecs(rest + (u,))
        right = _minimal_vecs(rest + (v,))
        out = _split(left, memo) | _split(right, memo)
    memo[vecs] = out
    return out


def _pure_powers(vecs):
    """(variable, exponent) pairs of a pure-power generator list."""
    for v in vecs:
        i = next(j for j, e in enumerate(v) if e > 0)
        yield i, v[i]


def _prune(comps):
    """Keep the inclusion-minimal components.

    A component is redundant iff it contains another one: an irreducible
    ideal containing the intersection must contain one of the intersected
    components, so pairwise containment decides redundancy.
    """
    out = []
    for c in comps:
        if any(o != c and c.contains_component(o) for o in comps):
            continue
        out.append(c)
    return out


def irreducible_decomposition(I: MonomialIdeal) -> Decomposition:
    """The unique irredundant irreducible decomposition of a proper nonzero ideal."""
    I.require_proper_nonzero("irreducible decomposition")
    memo = {}
    raw = _split(I.exponents, memo)
    comps = [IrreducibleIdeal(I.context, ps) for ps in raw]
    return Decomposition(tuple(_prune(comps)))


def minimal_irreducibles(I: MonomialIdeal) -> Decomposition:
    """The minimal irreducible monomial ideals containing I.

    These coincide with the irreducible components; exposed separately so the
    minimality property can be tested against the decomposition directly.
    """
    return irreducible_decomposition(I)


def is_primary(I: MonomialIdeal):
    """Radical prime of I when I is primary (shape test), else None."""
    I.require_proper_nonzero("the primary shape test")
    pure = set()
    for v in I.exponents:
        supp = [j for j, e in enumerate(v) if e > 0]
        if len(supp) == 1:
            pure.add(supp[0])
    for v in I.exponents:
        if any(e > 0 and j not in pure for j, e in enumerate(v)):
            return None
    return MonomialPrime(I.context, tuple(sorted(pure)))


def primary_decomposition(I: MonomialIdeal) -> Decomposition:
    """Minimal primary decomposition: irreducible components grouped by radical."""
    dec = irreducible_decomposition(I)
    groups = {}
    for comp in dec:
        groups.setdefault(comp.variables, []).append(comp)
    out = []
    for vs, comps in groups.items():
        ideal = intersect_all([c.as_ideal() for c in comps])
        out.append(PrimaryIdeal(ideal, MonomialPrime(I.context, vs)))
    return Decomposition(tuple(out))


def associated_primes(I: MonomialIdeal):
    """Radicals of the irreducible components, deduplicated."""
    dec = irreducible_decomposition(I)
    seen = {}
    for comp in dec:
        seen[comp.variables] = comp.radical()
    return tuple(seen[k] for k in sorted(seen))


def minimal_primes(I: MonomialIdeal):
    """Inclusion-minimal associated primes."""
    primes = associated_primes(I)
    return tuple(p for p in primes
                 if not any(q is not p and q.issubset(p) for q in primes))


def has_embedded_primes(I: MonomialIdeal) -> bool:
    return len(associated_primes(I)) != len(minimal_primes(I))


def is_unmixed(I: MonomialIdeal) -> bool:
    """True iff all associated primes share one height."""
    return len({p.height for p in associated_primes(I)}) == 1


def localize(I: MonomialIdeal, p: MonomialPrime) -> MonomialIdeal:
    """Contraction I R_p intersected back with R.

    Variables outside p become units: their exponents are dropped from each
    generator and the result is minimalized.
    """
    _same_context(I, p)
    inside = set(p.variables)
    vecs = [tuple(e if j in inside else 0 for j, e in enumerate(v))
            for v in I.exponents]
    return MonomialIdeal(I.context, _minimal_vecs(vecs))


def alexander_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Ideal generated by the products of each component's pure powers."""
    dec = irreducible_decomposition(I)
    n = I.context.n
    gens = []
    for comp in dec:
        v = [0] * n
        for i, e in comp.powers:
            v[i] = e
        gens.append(tuple(v))
    return MonomialIdeal(I.context, _minimal_vecs(gens))


def star_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Intersection over minimal generators x^a of ({x_i^{a_i} : a_i >= 1})."""
    I.require_proper_nonzero("the star dual")
    if any(not any(v) for v in I.exponents):
        raise ImproperIdealError("the star dual requires a proper ideal")
    pieces = []
    for v in I.exponents:
        powers = tuple((i, e) for i, e in enumerate(v) if e > 0)
        pieces.append(IrreducibleIdeal(I.context, powers).as_ideal())
    return intersect_all(pieces)
