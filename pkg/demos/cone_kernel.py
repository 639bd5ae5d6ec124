"""The exact cone kernel on its own: dual descriptions, Hilbert bases,
normality and integral closure.

Everything is integer arithmetic end to end; rays and inequality normals are
primitive vectors and the Hilbert basis is the unique minimal one.

Run from the repository root:

    python3 demos/cone_kernel.py
"""

from idealkit import (
    PolyContext,
    RationalCone,
    dual_description,
    hilbert_basis,
    integral_closure,
    is_normal,
    rees_cone,
)


def main():
    wedge = RationalCone(2, rays=((1, 0), (1, 2)))
    both = dual_description(wedge)
    print("cone over (1,0) and (1,2)")
    print("  facet normals:", both.inequalities)
    print("  Hilbert basis:", tuple(hilbert_basis(both)))

    ctx = PolyContext.default(2)
    I = ctx.ideal("x1^2", "x2^2")
    rc = dual_description(rees_cone(I))
    print("\nRees cone of (x1^2, x2^2): rays", rc.rays)
    hb = hilbert_basis(rc)
    print("  Hilbert basis:", tuple(hb))
    print("  the witness (1, 1, 1) says x1*x2 is integral over I but outside it")
    print("  is_normal:", is_normal(I))
    print("  integral closure:", integral_closure(I))

    ctx5 = PolyContext.default(5)
    J = ctx5.ideal("x1^2*x3", "x1*x2^2", "x3*x2^2", "x3*x4^2", "x4^2*x5",
                   "x2^2*x5")
    print("\nfive-variable edge ideal: closure gains",
          [str(g) for g in integral_closure(J).generators
           if not J.contains(g)])


if __name__ == "__main__":
    main()
