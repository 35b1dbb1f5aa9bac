"""Independent reference computations built on sympy."""

import sympy

from cisupport.algebra import Polynomial


def to_sympy(p: Polynomial, symbols):
    return sympy.sympify(str(p).replace("^", "**"), locals=symbols) if p else sympy.Integer(0)


def symbols_of(ring):
    return {v: sympy.Symbol(v) for v in ring.variables}


def sympy_order(ring) -> str:
    return {"grevlex": "grevlex", "lex": "lex"}[ring.order.kind]


def sympy_groebner(polys, ring):
    syms = symbols_of(ring)
    gens = [syms[v] for v in ring.variables]
    exprs = [to_sympy(p, syms) for p in polys]
    kw = {"modulus": ring.field.p} if ring.field.p else {}
    G = sympy.groebner(exprs, *gens, order=sympy_order(ring), **kw)
    return G, gens


def same_polynomials(ours, theirs, ring) -> bool:
    """Equal as sets of polynomials (both monic reduced bases)."""
    syms = symbols_of(ring)
    gens = [syms[v] for v in ring.variables]
    kw = {"modulus": ring.field.p} if ring.field.p else {}
    a = {sympy.Poly(to_sympy(p, syms), *gens, **kw).monic().as_expr() for p in ours}
    b = {sympy.Poly(e, *gens, **kw).monic().as_expr() for e in theirs}
    return a == b


def hilbert_function_by_counting(gens, ring, upto):
    """dim_k (ring/I)_d for d <= upto via the normal-form monomials of a sympy basis."""
    G, vars_ = sympy_groebner(gens, ring) if gens else (None, [sympy.Symbol(v) for v in ring.variables])
    leads = []
    if G is not None:
        for g in G.exprs:
            P = sympy.Poly(g, *vars_)
            leads.append(P.monoms(order=sympy_order(ring))[0])
    out = []
    for d in range(upto + 1):
        count = 0
        for m in sympy.itermonomials(vars_, d, d):
            e = sympy.Poly(m, *vars_).monoms()[0]
            if not any(all(a >= b for a, b in zip(e, l)) for l in leads):
                count += 1
        out.append(count)
    return out
