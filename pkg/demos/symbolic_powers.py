"""Symbolic powers by both definitions, and where they differ.

Two ideals drive the tour: a six-generator ideal whose symbolic square
strictly exceeds its ordinary square, and a three-generator ideal with an
embedded prime, where the minimal-primes and all-associated-primes symbolic
powers already differ at k = 1.

Run from the repository root:

    python3 demos/symbolic_powers.py
"""

from idealkit import (
    PolyContext,
    associated_primes,
    minimal_primes,
    ntf_probe,
    symbolic_power_ass,
    symbolic_power_min,
)


def main():
    ctx = PolyContext.default(5)
    I = ctx.ideal("x2*x3", "x4*x5", "x3*x4", "x2*x5", "x1^2*x3", "x1*x2^2")
    print("I =", I)

    sp2 = symbolic_power_min(I, 2)
    ordinary = I ** 2
    extra = [g for g in sp2.generators if g not in ordinary]
    print("\nI^(2) has", len(sp2.exponents), "minimal generators;",
          "I^2 has", len(ordinary.exponents))
    print("generators of I^(2) outside I^2:", ", ".join(map(str, extra)))

    report = ntf_probe(I, 4)
    print("\nI^k == I^(k)?  ", list(zip(range(1, 5), report.equal)))
    print("first failure at k =", report.first_failure)

    ctx3 = PolyContext.default(3)
    J = ctx3.ideal("x1*x2^2", "x1^2*x3", "x2*x3^2")
    print("\nJ =", J)
    print("associated primes:", ", ".join(str(p) for p in associated_primes(J)))
    print("minimal primes:   ", ", ".join(str(p) for p in minimal_primes(J)))
    print("J^(1) =", symbolic_power_min(J, 1), " (gains x1*x2*x3)")
    print("J^<1> =", symbolic_power_ass(J, 1), " (equals J)")

    K = ctx3.ideal("x1*x2")
    print("\na complete intersection collapses: (x1*x2)^(3) == (x1*x2)^3:",
          symbolic_power_min(K, 3) == K ** 3)


if __name__ == "__main__":
    main()
