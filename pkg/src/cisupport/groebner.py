"""Buchberger engine for ideals and submodules of free modules.

Elements of a free module Q^r are stored as dicts {(component, exponent): coeff};
ideals are the rank-one case.  Module orders are position-over-term with
component 0 largest.  Pairs are selected by smallest sugar degree (the lcm
degree on homogeneous input), or by smallest lcm in the order itself for lex,
where degree-driven selection blows up; ties go to the lower pair index.
The Gebauer-Moller criteria prune pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import (
    MonomialOrder,
    PolyMatrix,
    PolyRing,
    Polynomial,
    block_order,
    make_ring,
)
from .errors import NonHomogeneousInput, RingMismatch


def _divides(a, b) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


class _Ctx:
    """Arithmetic context for module elements over one ring."""

    def __init__(self, ring: PolyRing, comp_degrees: Sequence[int] | None = None):
        self.ring = ring
        self.F = ring.field
        self.p = ring.field.p
        self.w = ring.weights
        self.comp_degrees = list(comp_degrees) if comp_degrees is not None else None
        key = ring.key
        cache: dict = {}
        self._cache = cache

        def mkey(m):
            k = cache.get(m)
            if k is None:
                k = (-m[0], key(m[1]))
                cache[m] = k
            return k

        self.mkey = mkey

    def deg(self, m) -> int:
        c, e = m
        d = sum(w * x for w, x in zip(self.w, e))
        if self.comp_degrees is not None:
            d += self.comp_degrees[c]
        return d

    def lead(self, f):
        return max(f, key=self.mkey)

    def axpy(self, f: dict, coeff, shift, g: dict):
        """f -= coeff * x^shift * g (in place)."""
        p = self.p
        for (c, e), v in g.items():
            m = (c, tuple(a + b for a, b in zip(e, shift)))
            t = f.get(m)
            nv = (0 if t is None else t) - coeff * v
            if p:
                nv %= p
            if nv:
                f[m] = nv
            elif t is not None:
                del f[m]

    def monic(self, f: dict) -> dict:
        if not f:
            return f
        lc = f[self.lead(f)]
        if lc == 1:
            return f
        inv = self.F.inv(lc)
        p = self.p
        if p:
            return {m: v * inv % p for m, v in f.items()}
        return {m: v * inv for m, v in f.items()}


class _Basis:
    """Leading-term index used during reduction."""

    def __init__(self, ctx: _Ctx):
        self.ctx = ctx
        self.polys: list[dict] = []
        self.leads: list = []
        self.by_comp: dict[int, list[int]] = {}

    def add(self, f: dict) -> int:
        i = len(self.polys)
        self.polys.append(f)
        lm = self.ctx.lead(f)
        self.leads.append(lm)
        self.by_comp.setdefault(lm[0], []).append(i)
        return i

    def find_divisor(self, m, active=None):
        c, e = m
        for i in self.by_comp.get(c, ()):
            if active is not None and i not in active:
                continue
            if _divides(self.leads[i][1], e):
                return i
        return None

    def reduce(self, f: dict, active=None, full=True, track=None, reps=None):
        """Return the normal form of f w.r.t. the (active) basis.

        When ``track`` (a list of cofactor dicts) is given it is updated so that
        the invariant f_original = remainder + sum(track_k * basis_k) holds.
        """
        ctx = self.ctx
        f = dict(f)
        rem: dict = {}
        mkey = ctx.mkey
        F = ctx.F
        p = ctx.p
        while f:
            lm = max(f, key=mkey)
            lc = f[lm]
            i = self.find_divisor(lm, active)
            if i is None:
                rem[lm] = lc
                del f[lm]
                if not full:
                    rem.update(f)
                    break
                continue
            g = self.polys[i]
            glm = self.leads[i]
            coeff = lc * F.inv(g[glm])
            if p:
                coeff %= p
            shift = _sub(lm[1], glm[1])
            ctx.axpy(f, coeff, shift, g)
            if track is not None:
                track.append((i, coeff, shift))
        return rem


def _spoly(ctx: _Ctx, f, lf, g, lg):
    L = _lcm(lf[1], lg[1])
    F = ctx.F
    s: dict = {}
    cf = F.inv(f[lf])
    cg = F.inv(g[lg])
    sf = _sub(L, lf[1])
    sg = _sub(L, lg[1])
    ctx.axpy(s, F.neg(cf), sf, f)
    ctx.axpy(s, cg, sg, g)
    return s, (cf, sf, cg, sg)


def buchberger(elements: Sequence[dict], ring: PolyRing, comp_degrees=None,
               track: bool = False, is_ideal: bool | None = None):
    """Core Buchberger loop on module elements.

    Returns (reduced basis as list of dicts, cofactors or None). With ``track``
    each basis element comes with a list of cofactor dicts (component 0) over
    the input elements, so basis_k = sum_j cof[k][j] * input_j.
    """
    ctx = _Ctx(ring, comp_degrees)
    n_in = len(elements)
    if is_ideal is None:
        is_ideal = all(m[0] == 0 for f in elements for m in f)
    B = _Basis(ctx)
    reps: list[list[dict]] = []
    sugar: list[int] = []
    G: list[int] = []
    pairs: list[tuple] = []

    def rep_of_reduction(start_rep, trace):
        rep = [dict(x) for x in start_rep]
        for i, coeff, shift in trace:
            for j, cof in enumerate(reps[i]):
                if cof:
                    ctx.axpy(rep[j], coeff, shift, cof)
        return rep

    def top_degree(f: dict) -> int:
        return max(ctx.deg(m) for m in f)

    def pair_sugar(g1, g2, L) -> int:
        c = B.leads[g1][0]
        return max(sugar[g] + ctx.deg((c, L)) - ctx.deg(B.leads[g]) for g in (g1, g2))

    def add_element(h: dict, hrep, h_sugar: int):
        nonlocal G, pairs
        h = ctx.monic(h)
        idx = B.add(h)
        sugar.append(max(h_sugar, top_degree(h)))
        if track:
            reps.append(hrep)
        lh = B.leads[idx]
        # Gebauer-Moller update
        C = [g for g in G if B.leads[g][0] == lh[0]]
        lcms = {g: _lcm(lh[1], B.leads[g][1]) for g in C}
        D = []
        for k, g1 in enumerate(C):
            L1 = lcms[g1]
            if is_ideal and _coprime(lh[1], B.leads[g1][1]):
                D.append(g1)
                continue
            dominated = False
            for g2 in C[k + 1:]:
                if _divides(lcms[g2], L1):
                    dominated = True
                    break
            if not dominated:
                for g2 in D:
                    if _divides(lcms[g2], L1):
                        dominated = True
                        break
            if not dominated:
                D.append(g1)
        E = [g for g in D if not (is_ideal and _coprime(lh[1], B.leads[g][1]))]
        newpairs = []
        for (g1, g2, L, d) in pairs:
            if (B.leads[g1][0] == lh[0] and _divides(lh[1], L)
                    and _lcm(B.leads[g1][1], lh[1]) != L and _lcm(B.leads[g2][1], lh[1]) != L):
                continue
            newpairs.append((g1, g2, L, d))
        for g in E:
            L = lcms[g]
            newpairs.append((g, idx, L, pair_sugar(g, idx, L)))
        pairs = newpairs
        G = [g for g in G if not (B.leads[g][0] == lh[0] and _divides(lh[1], B.leads[g][1]))]
        G.append(idx)

    # seed: reduce inputs against each other in degree order
    order = sorted(range(n_in), key=lambda i: (ctx.deg(ctx.lead(elements[i])) if elements[i] else 0, i))
    for i in order:
        f = elements[i]
        if not f:
            continue
        if track:
            trace: list = []
            r = B.reduce(f, active=set(G), track=trace)
            start = [dict() for _ in range(n_in)]
            start[i] = {(0, ring.zero_exp): ctx.F.one}
            rep = rep_of_reduction(start, trace)
        else:
            r = B.reduce(f, active=set(G))
            rep = None
        if r:
            if track:
                rep = _scale_rep(ctx, rep, r)
            add_element(r, rep, top_degree(f))

    by_order = ring.order.kind == "lex"

    def select_key(t):
        g1, g2, L, sg = pairs[t]
        if by_order:
            return (ctx.mkey((B.leads[g1][0], L)), g1, g2)
        return (sg, g1, g2)

    while pairs:
        k = min(range(len(pairs)), key=select_key)
        g1, g2, L, s_sugar = pairs.pop(k)
        f1, f2 = B.polys[g1], B.polys[g2]
        s, (cf, sf, cg, sg) = _spoly(ctx, f1, B.leads[g1], f2, B.leads[g2])
        if not s:
            continue
        if track:
            # s = cf * x^sf * f1 - cg * x^sg * f2
            start = [dict() for _ in range(n_in)]
            for j in range(n_in):
                if reps[g1][j]:
                    ctx.axpy(start[j], ctx.F.neg(cf), sf, reps[g1][j])
                if reps[g2][j]:
                    ctx.axpy(start[j], cg, sg, reps[g2][j])
            trace = []
            r = B.reduce(s, active=set(G), track=trace)
            if r:
                rep = rep_of_reduction(start, trace)
                rep = _scale_rep(ctx, rep, r)
        else:
            r = B.reduce(s, active=set(G))
            rep = None
        if r:
            add_element(r, rep, s_sugar)

    # minimal + reduced
    active = [g for g in G]
    minimal = []
    for g in active:
        lg = B.leads[g]
        if any(h != g and B.leads[h][0] == lg[0] and _divides(B.leads[h][1], lg[1])
               and (B.leads[h] != lg or h < g) for h in active):
            continue
        minimal.append(g)
    result = []
    result_reps = [] if track else None
    mset = set(minimal)
    for g in minimal:
        f = B.polys[g]
        lg = B.leads[g]
        tail = {m: v for m, v in f.items() if m != lg}
        trace = [] if track else None
        tr = B.reduce(tail, active=mset - {g}, track=trace)
        tr[lg] = f[lg]
        result.append(tr)
        if track:
            rep = rep_of_reduction(reps[g], trace)
            result_reps.append(rep)
    idx = sorted(range(len(result)), key=lambda i: ctx.mkey(ctx.lead(result[i])))
    result = [result[i] for i in idx]
    if track:
        result_reps = [result_reps[i] for i in idx]
    return result, result_reps


def _scale_rep(ctx, rep, r):
    """Cofactors for monic(r) given cofactors for r."""
    lc = r[ctx.lead(r)]
    inv = ctx.F.inv(lc)
    p = ctx.p
    out = []
    for cof in rep:
        if p:
            out.append({m: v * inv % p for m, v in cof.items()})
        else:
            out.append({m: v * inv for m, v in cof.items()})
    return out


# ---------------------------------------------------------------------------
# Ideal-level API
# ---------------------------------------------------------------------------


def _to_elem(p: Polynomial, comp: int = 0) -> dict:
    return {(comp, e): c for e, c in p.terms.items()}


def _from_elem(ring: PolyRing, f: dict, comp: int | None = 0) -> Polynomial:
    return Polynomial(ring, {e: c for (c_, e), c in f.items() if comp is None or c_ == comp})


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    basis: tuple[Polynomial, ...]
    original: tuple[Polynomial, ...]
    order: MonomialOrder

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.basis)

    def is_zero_ideal(self) -> bool:
        return not self.basis

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo the ideal."""
        if f.ring != self.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        ctx = _Ctx(self.ring)
        B = _Basis(ctx)
        for g in self.basis:
            B.add(_to_elem(g))
        return _from_elem(self.ring, B.reduce(_to_elem(f)))

    normal_form = reduce

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    def leading_monomials(self) -> list[tuple]:
        return [g.lead_exp() for g in self.basis]

    def is_groebner(self) -> bool:
        """Check Buchberger's criterion: every S-polynomial reduces to zero."""
        ctx = _Ctx(self.ring)
        B = _Basis(ctx)
        elems = [_to_elem(g) for g in self.basis]
        for e in elems:
            B.add(e)
        for i, j in combinations(range(len(elems)), 2):
            s, _ = _spoly(ctx, elems[i], B.leads[i], elems[j], B.leads[j])
            if s and B.reduce(s):
                return False
        return True

    def is_reduced(self) -> bool:
        leads = self.leading_monomials()
        for i, g in enumerate(self.basis):
            if g.lead_coeff() != 1:
                return False
            for e in g.terms:
                for j, l in enumerate(leads):
                    if j != i and _divides(l, e):
                        return False
        return True


def groebner_basis(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch(f"generator {g} not in {ring}")
    elems = [_to_elem(g) for g in gens if g]
    basis, _ = buchberger(elems, ring, is_ideal=True)
    polys = tuple(sorted((_from_elem(ring, f) for f in basis), key=lambda p: ring.key(p.lead_exp())))
    return GroebnerBasis(ring, polys, tuple(gens), ring.order)


def groebner_with_cofactors(gens: Sequence[Polynomial], ring: PolyRing | None = None):
    """Reduced basis plus a matrix T with basis_k = sum_j T[k][j] * gens_j."""
    ring = ring or gens[0].ring
    elems = [_to_elem(g) for g in gens]
    basis, reps = buchberger(elems, ring, track=True, is_ideal=True)
    polys = [_from_elem(ring, f) for f in basis]
    T = [[_from_elem(ring, c) for c in rep] for rep in reps]
    return GroebnerBasis(ring, tuple(polys), tuple(gens), ring.order), T


@dataclass(frozen=True)
class DivisionResult:
    remainder: Polynomial
    quotients: tuple[Polynomial, ...]


def normal_form_with_quotients(f: Polynomial, divisors: Sequence[Polynomial]) -> DivisionResult:
    """Multivariate division: f = sum q_i d_i + r with no term of r divisible by any LT(d_i)."""
    ring = f.ring
    for d in divisors:
        if d.ring != ring:
            raise RingMismatch("divisor ring differs")
        if not d:
            raise ValueError("zero divisor in division")
    F = ring.field
    p = F.p
    key = ring.key
    leads = [d.lead_exp() for d in divisors]
    lcs_inv = [F.inv(d.terms[l]) for d, l in zip(divisors, leads)]
    quots: list[dict] = [dict() for _ in divisors]
    rem: dict = {}
    cur = dict(f.terms)
    while cur:
        lm = max(cur, key=key)
        lc = cur[lm]
        for i, l in enumerate(leads):
            if _divides(l, lm):
                shift = _sub(lm, l)
                c = lc * lcs_inv[i]
                if p:
                    c %= p
                q = quots[i]
                q[shift] = q.get(shift, 0) + c
                if p:
                    q[shift] %= p
                if not q[shift]:
                    del q[shift]
                for e, v in divisors[i].terms.items():
                    m = tuple(a + b for a, b in zip(e, shift))
                    nv = cur.get(m, 0) - c * v
                    if p:
                        nv %= p
                    if nv:
                        cur[m] = nv
                    else:
                        cur.pop(m, None)
                break
        else:
            rem[lm] = lc
            del cur[lm]
    return DivisionResult(Polynomial(ring, rem), tuple(Polynomial(ring, q) for q in quots))


def lift_to_generators(f: Polynomial, gens: Sequence[Polynomial]) -> tuple[Polynomial, list[Polynomial]]:
    """Write f = sum c_j gens_j + r with r the normal form modulo (gens)."""
    GB, T = groebner_with_cofactors(list(gens))
    div = normal_form_with_quotients(f, list(GB.basis))
    ring = f.ring
    coeffs = [ring.zero() for _ in gens]
    for q, row in zip(div.quotients, T):
        if q:
            for j, t in enumerate(row):
                if t:
                    coeffs[j] = coeffs[j] + q * t
    return div.remainder, coeffs


# ---------------------------------------------------------------------------
# Elimination
# ---------------------------------------------------------------------------


def eliminate(gens: Sequence[Polynomial], drop: Sequence[str], ring: PolyRing | None = None,
              keep_ring: PolyRing | None = None) -> list[Polynomial]:
    """Generators of I intersected with the subring on the kept variables.

    The result lives in ``keep_ring`` (default: the kept variables with the
    original order kind).
    """
    ring = ring or gens[0].ring
    drop = list(drop)
    for v in drop:
        ring.index(v)
    kept = [v for v in ring.variables if v not in drop]
    if keep_ring is None:
        kw = [ring.weights[ring.index(v)] for v in kept]
        kind = ring.order if ring.order.kind != "block" else MonomialOrder("grevlex")
        keep_ring = make_ring(ring.field, kept, kind, kw)
    dw = [ring.weights[ring.index(v)] for v in drop]
    kw = [ring.weights[ring.index(v)] for v in kept]
    elim_ring = make_ring(ring.field, drop + kept, block_order(len(drop)), dw + kw)
    kept_ring = make_ring(ring.field, kept, keep_ring.order, kw)
    GB = groebner_basis([elim_ring.coerce(g) for g in gens if g], elim_ring)
    nd = len(drop)
    out = []
    for g in GB.basis:
        if all(not any(e[:nd]) for e in g.terms):
            out.append(Polynomial(kept_ring, {e[nd:]: c for e, c in g.terms.items()}))
    if kept_ring != keep_ring:
        out = [keep_ring.coerce(p) for p in out]
    return out


# ---------------------------------------------------------------------------
# Module Groebner bases and syzygies
# ---------------------------------------------------------------------------


def _column_elem(col: Sequence[Polynomial], offset: int = 0) -> dict:
    f = {}
    for i, p in enumerate(col):
        for e, c in p.terms.items():
            f[(i + offset, e)] = c
    return f


@dataclass(frozen=True)
class ModuleGB:
    ring: PolyRing
    rank: int
    basis: tuple[dict, ...]
    comp_degrees: tuple[int, ...] | None

    def leads(self):
        ctx = _Ctx(self.ring, self.comp_degrees)
        return [ctx.lead(f) for f in self.basis]

    def reduce_column(self, col: Sequence[Polynomial]) -> list[Polynomial]:
        ctx = _Ctx(self.ring, self.comp_degrees)
        B = _Basis(ctx)
        for f in self.basis:
            B.add(f)
        r = B.reduce(_column_elem(col))
        out = [dict() for _ in range(self.rank)]
        for (c, e), v in r.items():
            out[c][e] = v
        return [Polynomial(self.ring, d) for d in out]


def module_gb(columns: Sequence[Sequence[Polynomial]], rank: int, ring: PolyRing,
              comp_degrees=None) -> ModuleGB:
    elems = [_column_elem(c) for c in columns]
    basis, _ = buchberger([e for e in elems if e], ring, comp_degrees, is_ideal=(rank == 1))
    return ModuleGB(ring, rank, tuple(basis), tuple(comp_degrees) if comp_degrees is not None else None)


@dataclass(frozen=True)
class SyzygyModule:
    """Columns generate all relations among the columns of ``source``."""

    matrix: PolyMatrix
    source: PolyMatrix


def module_syzygies(m: PolyMatrix, modulus: Sequence[Polynomial] = (), minimal: bool = True) -> SyzygyModule:
    """Syzygies of the columns of m over ring/(modulus).

    Augmented elimination: the module generated by (m_j ; e_j), (f e_k ; 0) and
    (0 ; f e_j) in Q^{r+s} is computed with the m-components above the tracking
    components (position over term); basis elements with vanishing top part
    project to generators of the syzygy module.  For graded input the result is
    pruned to a minimal generating set.
    """
    ring = m.ring
    r, s = m.nrows, m.ncols
    modulus = [f for f in modulus if f]
    elems = []
    for j in range(s):
        f = _column_elem(m.column(j))
        f[(r + j, ring.zero_exp)] = ring.field.one
        elems.append(f)
    for f in modulus:
        for k in range(r):
            elems.append({(k, e): c for e, c in f.terms.items()})
        for j in range(s):
            elems.append({(r + j, e): c for e, c in f.terms.items()})
    comp_degrees = None
    graded = m.row_degrees is not None and m.col_degrees is not None and m.is_graded() \
        and all(f.is_homogeneous() for f in modulus)
    if graded:
        comp_degrees = list(m.row_degrees) + list(m.col_degrees)
    basis, _ = buchberger(elems, ring, comp_degrees, is_ideal=False)
    cols = []
    for f in basis:
        if all(c >= r for (c, _) in f):
            col = [dict() for _ in range(s)]
            for (c, e), v in f.items():
                col[c - r][e] = v
            cols.append([Polynomial(ring, d) for d in col])
    col_degrees = None
    if graded:
        col_degrees = []
        for col in cols:
            d = None
            for j, p in enumerate(col):
                if p:
                    d = p.homogeneity_check() + m.col_degrees[j]
                    break
            col_degrees.append(d)
    if cols:
        mat = PolyMatrix.from_columns(ring, cols, m.col_degrees, col_degrees, nrows=s)
    else:
        mat = PolyMatrix.zero(ring, s, 0, m.col_degrees, ())
    if graded and minimal and cols:
        from .graded import GradedAlgebra

        A = GradedAlgebra.get(ring, tuple(modulus))
        mat = A.prune_columns(mat)
    return SyzygyModule(mat, m)


# ---------------------------------------------------------------------------
# Dimension, Hilbert series, radicals
# ---------------------------------------------------------------------------


def _max_independent_set(leads: Sequence[tuple], n: int) -> int:
    if any(not any(e) for e in leads):
        return -1
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    best = 0

    def rec(start, chosen: frozenset):
        nonlocal best
        if len(chosen) + (n - start) <= best:
            return
        best = max(best, len(chosen))
        for v in range(start, n):
            cand = chosen | {v}
            if not any(s <= cand for s in supports):
                rec(v + 1, cand)

    rec(0, frozenset())
    return best


def krull_dimension(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> int:
    """Krull dimension of ring/I; -1 for the unit ideal."""
    ring = ring or gens[0].ring
    GB = groebner_basis(list(gens), ring) if not isinstance(gens, GroebnerBasis) else gens
    return _max_independent_set(GB.leading_monomials(), ring.nvars)


class HilbertSeries:
    """Rational function numerator(t) / prod(1 - t^w); numerator is a Laurent polynomial over Z."""

    __slots__ = ("numerator", "weights")

    def __init__(self, numerator: dict[int, int], weights: Sequence[int]):
        self.numerator = {d: c for d, c in numerator.items() if c}
        self.weights = tuple(sorted(weights))

    @staticmethod
    def _mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return {d: c for d, c in out.items() if c}

    @staticmethod
    def _den(weights) -> dict:
        out = {0: 1}
        for w in weights:
            out = HilbertSeries._mul(out, {0: 1, w: -1})
        return out

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        return HilbertSeries(self._mul(self.numerator, other.numerator), self.weights + other.weights)

    def _common(self, other):
        a = list(self.weights)
        b = list(other.weights)
        common = []
        for w in list(a):
            if w in b:
                b.remove(w)
                a.remove(w)
                common.append(w)
        # self = N1 / (common * a), other = N2 / (common * b)
        n1 = self._mul(self.numerator, self._den(b))
        n2 = self._mul(other.numerator, self._den(a))
        return n1, n2, tuple(common + a + b)

    def __add__(self, other):
        n1, n2, w = self._common(other)
        out = dict(n1)
        for d, c in n2.items():
            out[d] = out.get(d, 0) + c
        return HilbertSeries(out, w)

    def __neg__(self):
        return HilbertSeries({d: -c for d, c in self.numerator.items()}, self.weights)

    def __sub__(self, other):
        return self + (-other)

    def shift(self, k: int) -> "HilbertSeries":
        return HilbertSeries({d + k: c for d, c in self.numerator.items()}, self.weights)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        n1, n2, _ = self._common(other)
        return n1 == n2

    def __hash__(self):
        return hash(self.reduced())

    def is_zero(self) -> bool:
        return not self.numerator

    def coefficients(self, upto: int, start: int | None = None) -> list[int]:
        """Power-series coefficients for degrees start..upto."""
        if start is None:
            start = min(self.numerator, default=0)
            start = min(start, 0)
        n = upto - start + 1
        if n <= 0:
            return []
        series = [0] * n
        for d, c in self.numerator.items():
            if start <= d <= upto:
                series[d - start] += c
        for w in self.weights:
            for i in range(w, n):
                series[i] += series[i - w]
        return series

    def coefficient(self, d: int) -> int:
        lo = min(min(self.numerator, default=0), d)
        return self.coefficients(d, lo)[-1]

    def reduced(self) -> tuple[tuple[tuple[int, int], ...], int]:
        """For standard weights: cancel (1-t) factors; returns (numerator items, pole order)."""
        if any(w != 1 for w in self.weights):
            raise ValueError("reduced() needs standard grading")
        num = dict(self.numerator)
        k = len(self.weights)
        while k > 0 and num and sum(num.values()) == 0:
            # divide by (1 - t)
            lo, hi = min(num), max(num)
            q = {}
            carry = 0
            for d in range(lo, hi + 1):
                carry += num.get(d, 0)
                if carry:
                    q[d] = carry
            num = q
            k -= 1
        if not num:
            k = 0
        return tuple(sorted(num.items())), k

    def pole_order(self) -> int:
        """Order of the pole at t = 1 (the Krull dimension); -1 for the zero series."""
        if not self.numerator:
            return -1
        # evaluate derivatives of numerator * prod((1-t^w)/(1-t)) at t=1
        num = dict(self.numerator)
        for w in self.weights:
            num = self._mul(num, {i: 1 for i in range(w)})
        k = len(self.weights)
        while k > 0 and num and sum(num.values()) == 0:
            lo, hi = min(num), max(num)
            q = {}
            carry = 0
            for d in range(lo, hi + 1):
                carry += num.get(d, 0)
                if carry:
                    q[d] = carry
            num = q
            k -= 1
        return k if num else -1

    def __str__(self):
        def poly(d):
            if not d:
                return "0"
            parts = []
            for e, c in sorted(d.items()):
                mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
                if mono:
                    s = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
                else:
                    s = str(abs(c))
                parts.append(("-" if c < 0 else "+", s))
            out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sg, s in parts[1:]:
                out += f" {sg} {s}"
            return out
        try:
            num, k = self.reduced()
            den = "" if k == 0 else ("(1-t)" if k == 1 else f"(1-t)^{k}")
            n = poly(dict(num))
        except ValueError:
            n = poly(self.numerator)
            den = "*".join(f"(1-t^{w})" for w in self.weights)
        return f"({n})/{den}" if den else n

    __repr__ = __str__


def _monomial_hilbert_numerator(gens: list[tuple], weights) -> dict[int, int]:
    """Numerator of H(Q/J) for a monomial ideal J."""
    gens = _minimalize_monomials(gens)
    if not gens:
        return {0: 1}
    if any(not any(g) for g in gens):
        return {}
    # pairwise coprime: product formula
    if all(_coprime(a, b) for a, b in combinations(gens, 2)):
        out = {0: 1}
        for g in gens:
            d = sum(w * x for w, x in zip(weights, g))
            out = HilbertSeries._mul(out, {0: 1, d: -1})
        return out
    # pivot on the last generator
    m = gens[-1]
    rest = gens[:-1]
    a = _monomial_hilbert_numerator(rest, weights)
    quot = [tuple(max(x - y, 0) for x, y in zip(g, m)) for g in rest]
    b = _monomial_hilbert_numerator(quot, weights)
    d = sum(w * x for w, x in zip(weights, m))
    out = dict(a)
    for k, c in b.items():
        out[k + d] = out.get(k + d, 0) - c
    return {k: c for k, c in out.items() if c}


def _minimalize_monomials(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


def hilbert_series(obj, ring: PolyRing | None = None, comp_degrees: Sequence[int] | None = None) -> HilbertSeries:
    """Hilbert series of ring/I (obj = ideal generators) or of coker(obj) for a PolyMatrix.

    Homogeneous input only.
    """
    if isinstance(obj, PolyMatrix):
        m = obj
        ring = m.ring
        degs = list(comp_degrees if comp_degrees is not None else (m.row_degrees or (0,) * m.nrows))
        if m.ncols and m.col_degrees is None:
            raise NonHomogeneousInput("cokernel presentation needs column degrees")
        m2 = PolyMatrix(ring, m.entries, m.ncols, tuple(degs), m.col_degrees)
        if m.ncols and not m2.is_graded():
            raise NonHomogeneousInput("presentation is not homogeneous")
        gb = module_gb(m.columns(), m.nrows, ring, degs)
        per_comp: dict[int, list] = {i: [] for i in range(m.nrows)}
        for lm in gb.leads():
            per_comp[lm[0]].append(lm[1])
        total: dict = {}
        for i in range(m.nrows):
            num = _monomial_hilbert_numerator(per_comp[i], ring.weights)
            for d, c in num.items():
                total[d + degs[i]] = total.get(d + degs[i], 0) + c
        return HilbertSeries(total, ring.weights)
    gens = list(obj)
    ring = ring or gens[0].ring
    for g in gens:
        if not g.is_homogeneous():
            raise NonHomogeneousInput(f"{g} is not homogeneous")
    GB = groebner_basis(gens, ring)
    num = _monomial_hilbert_numerator(GB.leading_monomials(), ring.weights)
    return HilbertSeries(num, ring.weights)


def free_module_series(ring: PolyRing, degrees: Sequence[int]) -> HilbertSeries:
    num: dict = {}
    for d in degrees:
        num[d] = num.get(d, 0) + 1
    return HilbertSeries(num, ring.weights)


def radical_membership(g: Polynomial, gens: Sequence[Polynomial], ring: PolyRing | None = None) -> bool:
    """g in sqrt(I) iff 1 in I + (1 - z g) over ring[z]."""
    ring = ring or g.ring
    if not g:
        return True
    z = "z#rad"
    big = ring.extend([z], order=MonomialOrder("grevlex"))
    zz = big.var(z)
    gens2 = [big.coerce(f) for f in gens if f] + [big.one() - zz * big.coerce(g)]
    return groebner_basis(gens2, big).is_unit()


def ideal_intersection(I: Sequence[Polynomial], J: Sequence[Polynomial], ring: PolyRing) -> list[Polynomial]:
    """I cap J = (t I + (1 - t) J) cap ring."""
    t = "t#int"
    big = ring.extend([t], front=True)
    tt = big.var(t)
    gens = [tt * big.coerce(f) for f in I if f] + [(big.one() - tt) * big.coerce(f) for f in J if f]
    if not gens:
        return []
    return eliminate(gens, [t], big, keep_ring=ring)


def ideal_quotient(I: Sequence[Polynomial], g: Polynomial, ring: PolyRing) -> list[Polynomial]:
    """(I : g) computed as (I cap (g)) / g."""
    if not g:
        return [ring.one()]
    inter = ideal_intersection(list(I), [g], ring)
    out = []
    for h in inter:
        div = normal_form_with_quotients(h, [g])
        assert not div.remainder
        out.append(div.quotients[0])
    return out
