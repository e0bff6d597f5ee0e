"""Independent reference computations through sympy, used only by the tests."""

import sympy

from symbpow.polyring import GradedRing, Polynomial


def to_sympy(f: Polynomial, gens):
    out = 0
    for c, e in f.terms():
        term = sympy.Rational(str(c))
        for g, k in zip(gens, e):
            term *= g ** k
        out += term
    return out


def sympy_reduced_gb(polys, ring: GradedRing, order="grevlex"):
    """Reduced monic GB as a set of sorted (exponent, coefficient-string) tuples."""
    gens = sympy.symbols(ring.names)
    G = sympy.groebner([to_sympy(f, gens) for f in polys], *gens, order=order)
    out = set()
    for g in G.exprs:
        P = sympy.Poly(g, *gens)
        lc = P.coeffs(order=order)[0]
        out.add(tuple(sorted((m, str(sympy.Rational(c) / lc)) for m, c in zip(P.monoms(), P.coeffs()))))
    return out


def our_gb_set(G):
    out = set()
    for g in G.elements:
        lc = g.lc()
        out.add(tuple(sorted((e, str(c / lc)) for c, e in g.terms())))
    return out
