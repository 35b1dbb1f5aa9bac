"""Cohomology operators on a lifted minimal resolution and the S-module Ext(M, k).

For a minimal R-resolution (F, d) with lifts d~ over Q we have
d~_{j-1} d~_j = sum_i f_i Phi~_i^(j); the constant parts of the Phi_i give the
action of chi_i : E_j -> E_{j+2} on E_j = Hom(F_j, k).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .algebra import GREVLEX, PolyMatrix, PolyRing, Polynomial, make_ring, mat_inverse
from .ci import CIRing, Resolution
from .errors import CommutationFailure, LiftDecompositionFailure
from .groebner import groebner_with_cofactors, normal_form_with_quotients
from .linalg import Echelon, axpy, kernel


def operator_ring(ring: CIRing, prefix: str = "x") -> PolyRing:
    """S = k[chi_1..chi_c] with every variable in degree 2."""
    names = [f"{prefix}{i + 1}" for i in range(ring.codim)]
    return make_ring(ring.field, names, GREVLEX, [2] * ring.codim)


class _Decomposer:
    """Writes elements of (f) as sum f_i c_i with homogeneous c_i."""

    def __init__(self, ring: CIRing):
        self.ring = ring
        self.gb, self.T = groebner_with_cofactors(list(ring.sequence), ring.ambient)
        self.basis = list(self.gb.basis)
        self.degrees = ring.degrees

    def __call__(self, g: Polynomial) -> list[Polynomial]:
        Q = self.ring.ambient
        c = self.ring.codim
        if not g:
            return [Q.zero()] * c
        div = normal_form_with_quotients(g, self.basis)
        if div.remainder:
            raise LiftDecompositionFailure(f"{g} is not in the ideal of the relations")
        out = [Q.zero()] * c
        for q, row in zip(div.quotients, self.T):
            if q:
                for i, t in enumerate(row):
                    if t:
                        out[i] = out[i] + q * t
        D = g.homogeneity_check()
        if D is not None:
            # keep the homogeneous component of the expected degree
            clean = []
            for i, ci in enumerate(out):
                want = D - self.degrees[i]
                clean.append(Polynomial(Q, {e: v for e, v in ci.terms.items()
                                            if Q.degree_of(e) == want}))
            out = clean
        return out


def _sparse_columns(m: PolyMatrix):
    return [[(i, x) for i, x in enumerate(m.column(j)) if x] for j in range(m.ncols)]


@dataclass
class EisenbudOperators:
    """phi_lifted[j][i] is Phi~_i^(j): F_j -> F_{j-2} over Q (j >= 2)."""

    ring: CIRing
    resolution: Resolution
    phi_lifted: dict = field(default_factory=dict)

    def phi(self, i: int, j: int) -> PolyMatrix:
        """Phi_i^(j) over R."""
        m = self.phi_lifted[j][i]
        return m.map_entries(self.ring.reduce)

    def verify_identity(self, j: int) -> bool:
        """d~_{j-1} d~_j == sum_i f_i Phi~_i^(j) exactly over Q."""
        d1 = self.resolution.differential(j - 1)
        d2 = self.resolution.differential(j)
        prod = d1 * d2
        for r in range(prod.nrows):
            for s in range(prod.ncols):
                acc = self.ring.ambient.zero()
                for i, f in enumerate(self.ring.sequence):
                    x = self.phi_lifted[j][i].entries[r][s]
                    if x:
                        acc = acc + f * x
                if acc != prod.entries[r][s]:
                    return False
        return True


def extract_operators(res: Resolution, ring: CIRing, upto: int,
                      constant_only: bool = False) -> EisenbudOperators:
    """Lift and decompose d~^2 for j = 2..upto.

    With ``constant_only`` only entries that can carry a constant term of some
    Phi_i are decomposed (the rest of the lifted matrices is left zero); this is
    all the Ext action needs.
    """
    res.extend(upto)
    dec = _Decomposer(ring)
    Q = ring.ambient
    ops = EisenbudOperators(ring, res)
    fdeg = set(ring.degrees)
    c = ring.codim
    for j in range(2, upto + 1):
        d1 = res.differential(j - 1)  # F_{j-1} -> F_{j-2}
        d2 = res.differential(j)      # F_j -> F_{j-1}
        rows_deg = res.degrees[j - 2]
        cols_deg = res.degrees[j]
        nr, nc = len(rows_deg), len(cols_deg)
        mats = [[[Q.zero()] * nc for _ in range(nr)] for _ in range(c)]
        d1rows = [[(t, x) for t, x in enumerate(row) if x] for row in d1.entries]
        d2cols = _sparse_columns(d2)
        for s in range(nc):
            col = dict(d2cols[s])
            if not col:
                continue
            for r in range(nr):
                if constant_only and cols_deg[s] - rows_deg[r] not in fdeg:
                    continue
                acc = None
                for t, x in d1rows[r]:
                    y = col.get(t)
                    if y is not None:
                        acc = x * y if acc is None else acc + x * y
                if acc is None or not acc:
                    continue
                parts = dec(acc)
                for i in range(c):
                    if parts[i]:
                        mats[i][r][s] = parts[i]
        ops.phi_lifted[j] = [
            PolyMatrix.from_rows(Q, mats[i], rows_deg,
                                 tuple(d - ring.degrees[i] for d in cols_deg), ncols=nc)
            for i in range(c)
        ]
    return ops


# ---------------------------------------------------------------------------
# Ext(M, k) as a module over S
# ---------------------------------------------------------------------------


def _compose(B: list[dict], A: list[dict], p: int) -> list[dict]:
    """Columns of B∘A, matrices stored as lists of sparse columns."""
    out = []
    for col in A:
        acc: dict = {}
        for s, a in col.items():
            axpy(acc, -a, B[s], p)
        out.append(acc)
    return out


@dataclass
class ExtSModule:
    """E_j = k^{beta_j}; action[i][j] maps E_j -> E_{j+2} (list of sparse columns)."""

    ring: CIRing
    dims: list[int]
    action: list[dict]
    top: int

    @property
    def field(self):
        return self.ring.field

    def matrix(self, i: int, j: int) -> list[list]:
        """Dense action matrix A_i^(j) with dims[j+2] rows and dims[j] columns."""
        F = self.field
        cols = self.action[i][j]
        return [[cols[r].get(s, F.zero) for r in range(self.dims[j])] for s in range(self.dims[j + 2])]

    def check_commutation(self) -> None:
        p = self.field.p
        c = self.ring.codim
        for j in range(0, self.top - 3):
            for a in range(c):
                for b in range(a + 1, c):
                    left = _compose(self.action[a][j + 2], self.action[b][j], p)
                    right = _compose(self.action[b][j + 2], self.action[a][j], p)
                    if left != right:
                        raise CommutationFailure(f"chi_{a + 1} and chi_{b + 1} do not commute at degree {j}")

    def generation_degree(self, upto: int | None = None) -> int:
        """Last degree j <= upto in which E_j is not spanned by the images of E_{j-2}; -1 if E = 0."""
        upto = self.top if upto is None else min(upto, self.top)
        F = self.field
        last = -1
        for j in range(0, upto + 1):
            if not self.dims[j]:
                continue
            if j < 2:
                last = j
                continue
            E = Echelon(F)
            for i in range(self.ring.codim):
                for col in self.action[i][j - 2]:
                    E.add(col)
            if len(E) < self.dims[j]:
                last = j
        return last

    def monomial_action(self, alpha: tuple, j: int, cache: dict) -> list[dict]:
        """chi^alpha : E_j -> E_{j + 2|alpha|}."""
        key = (alpha, j)
        if key in cache:
            return cache[key]
        e = sum(alpha)
        p = self.field.p
        if e == 0:
            out = [{r: self.field.one} for r in range(self.dims[j])]
        else:
            i = max(k for k, a in enumerate(alpha) if a)
            rest = tuple(a - (1 if k == i else 0) for k, a in enumerate(alpha))
            inner = self.monomial_action(rest, j, cache)
            out = _compose(self.action[i][j + 2 * (e - 1)], inner, p)
        cache[key] = out
        return out

    def annihilator_piece(self, e: int, upto: int, S: PolyRing, cache: dict | None = None) -> list[Polynomial]:
        """Basis of the degree-e forms in chi that kill E_j for every j <= upto - 2e."""
        cache = {} if cache is None else cache
        c = self.ring.codim
        monos = []
        for combo in combinations_with_replacement(range(c), e):
            a = [0] * c
            for k in combo:
                a[k] += 1
            monos.append(tuple(a))
        vecs = []
        for alpha in monos:
            v = {}
            for j in range(0, upto - 2 * e + 1):
                if not self.dims[j]:
                    continue
                for r, col in enumerate(self.monomial_action(alpha, j, cache)):
                    for s, x in col.items():
                        v[(j, r, s)] = x
            vecs.append(v)
        out = []
        for comb in kernel(self.field, vecs):
            out.append(Polynomial(S, {monos[k]: x for k, x in comb.items()}).monic())
        return out


def ext_s_module(ops: EisenbudOperators, upto: int) -> ExtSModule:
    """Action matrices A_i^(j) = transpose of the constant part of Phi_i^(j+2), j + 2 <= upto."""
    res = ops.resolution
    ring = ops.ring
    dims = [res.rank(j) for j in range(upto + 1)]
    c = ring.codim
    action = [dict() for _ in range(c)]
    for i in range(c):
        for j in range(0, upto - 1):
            phi = ops.phi_lifted[j + 2][i]
            cols = []
            for r in range(dims[j]):
                col = {}
                for s in range(dims[j + 2]):
                    x = phi.entries[r][s]
                    if x:
                        k = x.constant_term()
                        if k:
                            col[s] = k
                cols.append(col)
            action[i][j] = cols
    E = ExtSModule(ring, dims, action, upto)
    E.check_commutation()
    return E


def transform_ideal(gens: Sequence[Polynomial], q: Sequence[Sequence], S: PolyRing | None = None) -> list[Polynomial]:
    """Rewrite an ideal of S in the coordinates of the regenerated sequence f'_j = sum_i q[i][j] f_i.

    A point b in the new coordinates corresponds to the point q b in the old
    ones, so g(chi) becomes g(q chi').
    """
    gens = list(gens)
    S = S or gens[0].ring
    F = S.field
    mat_inverse(F, q)
    c = S.nvars
    images = []
    for i in range(c):
        g = S.zero()
        for j in range(c):
            if q[i][j]:
                g = g + S.var(j).scale(F(q[i][j]))
        images.append(g)
    return [g.substitute(images, S) for g in gens]


def transform_point(point: Sequence, q: Sequence[Sequence], F) -> list:
    """New coordinates of an old point: solve q b = a."""
    inv = mat_inverse(F, q)
    return [F.norm(sum(F(inv[i][j]) * F(point[j]) for j in range(len(point)))) for i in range(len(point))]
