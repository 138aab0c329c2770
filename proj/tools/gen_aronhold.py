#!/usr/bin/env python3
"""Regenerates src/core/aronhold_tables.cpp.

S and T span the sl(3)-invariant subspaces of the weight-balanced monomials of
degree 4 and 6 in the ten coefficients of a ternary cubic. Each is normalized
to coprime integer coefficients; the sign is fixed so that on
y^2 z - x^3 - a x z^2 - b z^3 we get S = -48 a and T = 864 b.
"""
import itertools
import sys

import sympy as sp

x, y, z = sp.symbols("x y z")
# Must match kCubicCoefficientOrder in invariants.hpp.
EXPS = [(3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
        (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3)]
C = sp.symbols("c0:10")
F = sum(c * x**e[0] * y**e[1] * z**e[2] for c, e in zip(C, EXPS))
V = [x, y, z]


def balanced_monomials(d):
    out = []
    for comb in itertools.combinations_with_replacement(range(10), d):
        w = [sum(EXPS[k][t] for k in comb) for t in range(3)]
        if w[0] == w[1] == w[2]:
            out.append(comb)
    return out


def derivation(src, dst):
    g = sp.Poly(sp.expand(V[dst] * sp.diff(F, V[src])), x, y, z)
    return [g.coeff_monomial(x**e[0] * y**e[1] * z**e[2]) for e in EXPS]


DERS = [derivation(s, d) for s in range(3) for d in range(3) if s != d]


def invariant(d):
    ms = balanced_monomials(d)
    u = sp.symbols("u0:%d" % len(ms))
    inv = sum(ui * sp.Mul(*[C[k] for k in m]) for ui, m in zip(u, ms))
    eqs = []
    for dv in DERS:
        dI = sp.expand(sum(dv[k] * sp.diff(inv, C[k]) for k in range(10)))
        eqs += sp.Poly(dI, *C).coeffs()
    (sol,) = sp.linsolve(eqs, u)
    free = sorted(set().union(*[e.free_symbols for e in sol]), key=str)
    assert len(free) == 1, "invariant space must be one-dimensional"
    expr = sp.expand(inv.subs(dict(zip(u, sol))).subs(free[0], 1))
    poly = sp.Poly(expr, *C)
    g = sp.gcd_list(poly.coeffs())
    return sp.Poly(sp.expand(expr / g), *C)


def weierstrass_value(poly):
    a, b = sp.symbols("a b")
    w = sp.Poly(y**2 * z - x**3 - a * x * z**2 - b * z**3, x, y, z)
    sub = {C[k]: w.coeff_monomial(x**e[0] * y**e[1] * z**e[2]) for k, e in enumerate(EXPS)}
    return sp.expand(poly.as_expr().subs(sub)), a, b


def main(out_path):
    S = invariant(4)
    T = invariant(6)
    sw, a, b = weierstrass_value(S)
    if sp.expand(sw + 48 * a) != 0:
        S = sp.Poly(-S.as_expr(), *C)
    tw, a, b = weierstrass_value(T)
    if sp.expand(tw - 864 * b) != 0:
        T = sp.Poly(-T.as_expr(), *C)

    def rows(poly, deg):
        lines = []
        for mono, coeff in sorted(poly.terms()):
            idx = [k for k in range(10) for _ in range(mono[k])]
            assert len(idx) == deg
            lines.append("    {%d, {%s}}," % (coeff, ", ".join(map(str, idx))))
        return "\n".join(lines)

    with open(out_path, "w") as fh:
        fh.write("// Generated by tools/gen_aronhold.py. Do not edit.\n")
        fh.write('#include "core/aronhold_tables.hpp"\n\n')
        fh.write("namespace netconics::detail {\n\n")
        fh.write("const std::array<InvariantTerm<4>, %d> kAronholdS = {{\n" % len(S.terms()))
        fh.write(rows(S, 4) + "\n}};\n\n")
        fh.write("const std::array<InvariantTerm<6>, %d> kAronholdT = {{\n" % len(T.terms()))
        fh.write(rows(T, 6) + "\n}};\n\n")
        fh.write("}  // namespace netconics::detail\n")
    print("S terms:", len(S.terms()), "T terms:", len(T.terms()))
    print("max |coeff|:", max(abs(c) for c in S.coeffs() + T.coeffs()))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/core/aronhold_tables.cpp")
