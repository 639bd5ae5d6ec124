"""Monomials and monomial ideals with exact integer exponents.

A :class:`PolyContext` pins the number of variables and their names; every
monomial and ideal carries its context and cross-context arithmetic is
rejected.  Ideals are stored as their unique minimal generating set, sorted
lexicographically by exponent vector, so equal ideals compare equal and
serialize identically.  All values are immutable and all operations are pure
functions, safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContextMismatchError, ExponentOverflowError, ImproperIdealError

#: Exponents are kept within the signed 64-bit range so canonical
#: serializations stay portable; arithmetic that would exceed it raises.
MAX_EXPONENT = 2**63 - 1


# ---------------------------------------------------------------------------
# raw exponent-vector helpers (hot paths work on plain int tuples)

def _vec_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _vec_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _vec_gcd(a, b):
    return tuple(x if x <= y else y for x, y in zip(a, b))


def _vec_mul(a, b):
    c = tuple(x + y for x, y in zip(a, b))
    if any(x > MAX_EXPONENT for x in c):
        raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}")
    return c


def _minimal_vecs(vecs):
    """Divisibility-minimal subset of exponent vectors, canonically sorted."""
    kept = []
    # scanning by increasing total degree guarantees divisors come first
    for v in sorted(set(vecs), key=lambda v: (sum(v), v)):
        if not any(_vec_divides(u, v) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


def _same_context(a, b):
    if a.context != b.context:
        raise ContextMismatchError(
            f"operands live in different contexts: {a.context!r} vs {b.context!r}")


@dataclass(frozen=True)
class PolyContext:
    """A fixed list of distinct variable names (the ambient polynomial ring).

    The coefficient field is never materialized: everything downstream is
    characteristic-free.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 1:
            raise ValueError("a context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        if any(not n or not isinstance(n, str) for n in names):
            raise ValueError("variable names must be nonempty strings")
        object.__setattr__(self, "_pos", {n: i for i, n in enumerate(names)})

    @classmethod
    def default(cls, n):
        """Context with variables x1..xn."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._pos[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in context {self.names}") from None

    def monomial(self, spec):
        """Build a monomial from an exponent sequence or text like ``x1^2*x3``."""
        if isinstance(spec, str):
            from . import formats
            return formats.parse_monomial(self, spec)
        return Monomial(self, tuple(spec))

    def ideal(self, *specs):
        """Build an ideal from monomial specs (see :meth:`monomial`)."""
        return MonomialIdeal.from_generators(self, [self.monomial(s) for s in specs])

    def one(self):
        return Monomial(self, (0,) * self.n)

    def variable(self, i):
        if isinstance(i, str):
            i = self.index(i)
        return Monomial(self, tuple(1 if j == i else 0 for j in range(self.n)))

    def __repr__(self):
        return f"PolyContext({', '.join(self.names)})"


@dataclass(frozen=True, order=False)
class Monomial:
    """x^a for a nonnegative integer exponent vector a."""

    context: PolyContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.context.n:
            raise ValueError(
                f"expected {self.context.n} exponents, got {len(exps)}")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        if any(e > MAX_EXPONENT for e in exps):
            raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}")

    # -- structure ----------------------------------------------------------
    def degree(self):
        return sum(self.exponents)

    def degree_in(self, i):
        if isinstance(i, str):
            i = self.context.index(i)
        return self.exponents[i]

    def support(self):
        """Indices of variables that occur."""
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def is_one(self):
        return not any(self.exponents)

    # -- arithmetic ---------------------------------------------------------
    def divides(self, other):
        _same_context(self, other)
        return _vec_divides(self.exponents, other.exponents)

    def lcm(self, other):
        _same_context(self, other)
        return Monomial(self.context, _vec_lcm(self.exponents, other.exponents))

    def gcd(self, other):
        _same_context(self, other)
        return Monomial(self.context, _vec_gcd(self.exponents, other.exponents))

    def __mul__(self, other):
        _same_context(self, other)
        return Monomial(self.context, _vec_mul(self.exponents, other.exponents))

    def __truediv__(self, other):
        """Exact division; ``other`` must divide ``self``."""
        _same_context(self, other)
        if not _vec_divides(other.exponents, self.exponents):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.context,
                        tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a monomial")
        c = tuple(e * k for e in self.exponents)
        if any(e > MAX_EXPONENT for e in c):
            raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}")
        return Monomial(self.context, c)

    def __lt__(self, other):
        _same_context(self, other)
        return self.exponents < other.exponents

    def __str__(self):
        from . import formats
        return formats.monomial_to_text(self)

    def __repr__(self):
        return f"Monomial({self})"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its unique minimal generating set.

    The zero ideal is the empty generator list; the unit ideal is the single
    monomial 1.  Construction enforces minimality and canonical order.
    """

    context: PolyContext
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        vecs = tuple(tuple(int(e) for e in v) for v in self.exponents)
        object.__setattr__(self, "exponents", vecs)
        n = self.context.n
        for v in vecs:
            if len(v) != n:
                raise ValueError(f"generator {v} has wrong length for n={n}")
            if any(e < 0 for e in v):
                raise ValueError(f"negative exponent in generator {v}")
            if any(e > MAX_EXPONENT for e in v):
                raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}")
        if vecs != _minimal_vecs(vecs):
            raise ValueError(
                "generators are not a canonical minimal generating set; "
                "use MonomialIdeal.from_generators")

    @classmethod
    def from_generators(cls, context, gens):
        """Minimalize an arbitrary generator collection (monomials or vectors)."""
        vecs = []
        for g in gens:
            if isinstance(g, Monomial):
                if g.context != context:
                    raise ContextMismatchError(f"{g!r} lives in another context")
                vecs.append(g.exponents)
            else:
                vecs.append(tuple(int(e) for e in g))
        return cls(context, _minimal_vecs(vecs))

    # -- structure ----------------------------------------------------------
    @property
    def generators(self):
        return tuple(Monomial(self.context, v) for v in self.exponents)

    def is_zero(self):
        return not self.exponents

    def is_unit(self):
        return len(self.exponents) == 1 and not any(self.exponents[0])

    def is_proper_nonzero(self):
        return bool(self.exponents) and not self.is_unit()

    def require_proper_nonzero(self, what="this operation"):
        if self.is_zero():
            raise ImproperIdealError(f"{what} requires a nonzero ideal")
        if self.is_unit():
            raise ImproperIdealError(f"{what} requires a proper ideal")
        return self

    # -- membership ---------------------------------------------------------
    def contains(self, m):
        if isinstance(m, Monomial):
            _same_context(self, m)
            v = m.exponents
        else:
            v = tuple(int(e) for e in m)
        return any(_vec_divides(g, v) for g in self.exponents)

    def __contains__(self, m):
        return self.contains(m)

    def contains_ideal(self, other):
        """True iff other is a subset of self."""
        _same_context(self, other)
        return all(self.contains(v) for v in other.exponents)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        _same_context(self, other)
        return MonomialIdeal(self.context,
                             _minimal_vecs(self.exponents + other.exponents))

    def __mul__(self, other):
        if isinstance(other, Monomial):
            _same_context(self, other)
            return MonomialIdeal(
                self.context,
                _minimal_vecs(tuple(_vec_mul(g, other.exponents)
                                    for g in self.exponents)))
        _same_context(self, other)
        prods = [_vec_mul(g, h) for g in self.exponents for h in other.exponents]
        return MonomialIdeal(self.context, _minimal_vecs(prods))

    def __pow__(self, k):
        if k < 1:
            raise ValueError("ideal powers need k >= 1")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def intersect(self, other):
        _same_context(self, other)
        lcms = [_vec_lcm(g, h) for g in self.exponents for h in other.exponents]
        return MonomialIdeal(self.context, _minimal_vecs(lcms))

    def __and__(self, other):
        return self.intersect(other)

    def colon(self, m):
        """(I : m) for a monomial m."""
        _same_context(self, m)
        vecs = [tuple(max(g_i - m_i, 0) for g_i, m_i in zip(g, m.exponents))
                for g in self.exponents]
        return MonomialIdeal(self.context, _minimal_vecs(vecs))

    def radical(self):
        vecs = [tuple(1 if e > 0 else 0 for e in g) for g in self.exponents]
        return MonomialIdeal(self.context, _minimal_vecs(vecs))

    def __str__(self):
        from . import formats
        return formats.ideal_to_text(self)

    def __repr__(self):
        return f"MonomialIdeal{self}"


def minimalize(context, gens):
    """Minimal generating set of the ideal generated by ``gens``."""
    return MonomialIdeal.from_generators(context, gens)


def intersect_all(ideals):
    """Intersection of a nonempty iterable of ideals in one context."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersect_all needs at least one ideal")
    out = ideals[0]
    for J in ideals[1:]:
        out = out.intersect(J)
    return out


@dataclass(frozen=True)
class MonomialPrime:
    """A monomial prime ideal: the variables of a nonempty subset."""

    context: PolyContext
    variables: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(sorted({int(i) for i in self.variables}))
        object.__setattr__(self, "variables", vs)
        if not vs:
            raise ValueError("a monomial prime needs at least one variable")
        if vs[0] < 0 or vs[-1] >= self.context.n:
            raise ValueError(f"variable index out of range: {vs}")

    @classmethod
    def of_names(cls, context, names):
        return cls(context, tuple(context.index(nm) for nm in names))

    @property
    def height(self):
        return len(self.variables)

    @property
    def names(self):
        return tuple(self.context.names[i] for i in self.variables)

    def issubset(self, other):
        _same_context(self, other)
        return set(self.variables) <= set(other.variables)

    def as_ideal(self):
        n = self.context.n
        vecs = [tuple(1 if j == i else 0 for j in range(n)) for i in self.variables]
        return MonomialIdeal(self.context, _minimal_vecs(vecs))

    def __str__(self):
        return "(" + ", ".join(self.names) + ")"

    def __repr__(self):
        return f"MonomialPrime{self}"
