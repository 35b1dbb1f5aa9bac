"""Degree-by-degree linear algebra over a graded quotient A = Q/(relations).

A_d has the standard monomials (modulo a Groebner basis of the relations) as
a k-basis.  Elements of a graded free A-module in degree d are sparse vectors
keyed by (generator index, standard monomial).  On top of this sit minimal
pruning of generating sets and minimal kernel generators of graded maps, which
together give minimal free resolutions one degree at a time.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import PolyMatrix, PolyRing, Polynomial
from .errors import NonHomogeneousInput
from .groebner import _Basis, _Ctx, groebner_basis
from .linalg import Echelon


def _exponents_of_degree(weights: Sequence[int], d: int):
    """All exponent tuples of weighted degree d."""
    n = len(weights)
    if d < 0:
        return []
    out = []

    def rec(i, rem, cur):
        if i == n - 1:
            w = weights[i]
            if rem % w == 0:
                out.append(tuple(cur) + (rem // w,))
            return
        w = weights[i]
        for x in range(rem // w, -1, -1):
            cur.append(x)
            rec(i + 1, rem - w * x, cur)
            cur.pop()

    if n == 0:
        return [()] if d == 0 else []
    rec(0, d, [])
    return out


class GradedAlgebra:
    _registry: dict = {}

    @classmethod
    def get(cls, ring: PolyRing, relations: tuple = ()) -> "GradedAlgebra":
        key = (ring, tuple(sorted((tuple(sorted(r.terms.items(), key=str)) for r in relations if r), key=str)))
        A = cls._registry.get(key)
        if A is None:
            A = cls(ring, relations)
            cls._registry[key] = A
        return A

    def __init__(self, ring: PolyRing, relations: Sequence[Polynomial] = ()):
        self.ring = ring
        self.F = ring.field
        self.p = ring.field.p
        rels = [r for r in relations if r]
        for r in rels:
            if not r.is_homogeneous():
                raise NonHomogeneousInput(f"relation {r} is not homogeneous")
        self.relations = tuple(rels)
        self.gb = groebner_basis(rels, ring) if rels else None
        self.leads = self.gb.leading_monomials() if self.gb else []
        self.is_zero = bool(self.gb and self.gb.is_unit())
        self._basis: dict[int, list] = {}
        self._nf: dict = {}
        ctx = _Ctx(ring)
        self._reducer = _Basis(ctx)
        if self.gb:
            for g in self.gb.basis:
                self._reducer.add({(0, e): c for e, c in g.terms.items()})
        n = ring.nvars
        self.units = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]

    def is_standard(self, e) -> bool:
        for l in self.leads:
            if all(a <= b for a, b in zip(l, e)):
                return False
        return True

    def basis(self, d: int) -> list:
        b = self._basis.get(d)
        if b is None:
            if self.is_zero:
                b = []
            else:
                b = [e for e in _exponents_of_degree(self.ring.weights, d) if self.is_standard(e)]
            self._basis[d] = b
        return b

    def dim(self, d: int) -> int:
        return len(self.basis(d))

    def nf_mono(self, e) -> dict:
        r = self._nf.get(e)
        if r is None:
            if self.is_zero:
                r = {}
            elif self.is_standard(e):
                r = {e: self.F.one}
            else:
                red = self._reducer.reduce({(0, e): self.F.one})
                r = {m: c for (_, m), c in red.items()}
            self._nf[e] = r
        return r

    def nf(self, f: Polynomial) -> Polynomial:
        out: dict = {}
        p = self.p
        for e, c in f.terms.items():
            for m, v in self.nf_mono(e).items():
                out[m] = out.get(m, 0) + c * v
        if p:
            out = {m: v % p for m, v in out.items()}
        return Polynomial(self.ring, {m: v for m, v in out.items() if v})

    # free-module vectors ---------------------------------------------------
    def column_vector(self, col: Sequence[Polynomial]) -> dict:
        """Normal-form vector of a column (list of polynomials)."""
        out: dict = {}
        p = self.p
        for i, f in enumerate(col):
            for e, c in f.terms.items():
                for m, v in self.nf_mono(e).items():
                    k = (i, m)
                    nv = out.get(k, 0) + c * v
                    if p:
                        nv %= p
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def shifted_column(self, col_terms: Sequence[dict], shift) -> dict:
        """Vector of x^shift * column, with the column given as lists of term dicts."""
        out: dict = {}
        p = self.p
        for i, terms in enumerate(col_terms):
            for e, c in terms.items():
                for m, v in self.nf_mono(tuple(a + b for a, b in zip(e, shift))).items():
                    k = (i, m)
                    nv = out.get(k, 0) + c * v
                    if p:
                        nv %= p
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def times_var(self, vec: dict, v: int) -> dict:
        u = self.units[v]
        out: dict = {}
        p = self.p
        for (i, e), c in vec.items():
            for m, x in self.nf_mono(tuple(a + b for a, b in zip(e, u))).items():
                k = (i, m)
                nv = out.get(k, 0) + c * x
                if p:
                    nv %= p
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return out

    def vector_to_column(self, vec: dict, nrows: int) -> list[Polynomial]:
        comps: list[dict] = [dict() for _ in range(nrows)]
        for (i, e), c in vec.items():
            comps[i][e] = c
        return [Polynomial(self.ring, d) for d in comps]

    def free_dim(self, degrees: Sequence[int], d: int) -> int:
        return sum(self.dim(d - a) for a in degrees)

    # generating sets ---------------------------------------------------------
    def prune_columns(self, mat: PolyMatrix) -> PolyMatrix:
        """Drop columns of a graded matrix that are redundant as generators of its image."""
        if mat.ncols == 0:
            return mat
        keep = self.minimal_subset([mat.column(j) for j in range(mat.ncols)], list(mat.col_degrees))
        return mat.submatrix(cols=keep)

    def minimal_subset(self, cols: Sequence[Sequence[Polynomial]], degrees: Sequence[int]) -> list[int]:
        order = sorted(range(len(cols)), key=lambda j: (degrees[j], j))
        vecs = {j: self.column_vector(cols[j]) for j in order}
        nonzero = [j for j in order if vecs[j]]
        if not nonzero:
            return []
        lo = degrees[nonzero[0]]
        hi = degrees[nonzero[-1]]
        spans: dict[int, list[dict]] = {}
        keep = []
        w = self.ring.weights
        pos = 0
        for d in range(lo, hi + 1):
            E = Echelon(self.F)
            for v, wv in enumerate(w):
                for b in spans.get(d - wv, ()):
                    E.add(self.times_var(b, v))
            while pos < len(nonzero) and degrees[nonzero[pos]] == d:
                j = nonzero[pos]
                pos += 1
                r, _ = E.add(vecs[j])
                if r is not None:
                    keep.append(j)
            spans[d] = [row for row, _ in E.rows.values()]
        return sorted(keep)

    def graded_map_images(self, mat: PolyMatrix, d: int):
        """Basis of (source)_d as (j, monomial) and the image vectors under mat."""
        col_terms = [[f.terms for f in mat.column(j)] for j in range(mat.ncols)]
        keys = []
        images = []
        for j, b in enumerate(mat.col_degrees):
            for m in self.basis(d - b):
                keys.append((j, m))
                images.append(self.shifted_column(col_terms[j], m))
        return keys, images


class KernelBuilder:
    """Minimal generators of ker(mat) computed degree by degree, resumable."""

    def __init__(self, A: GradedAlgebra, mat: PolyMatrix):
        self.A = A
        self.mat = mat
        self.kernels: dict[int, list[dict]] = {}
        self.generators: list[tuple[int, dict]] = []
        self.done_upto = None
        self._lo = min(mat.col_degrees) if mat.ncols else 0
        self._col_terms = [[f.terms for f in mat.column(j)] for j in range(mat.ncols)]

    def _kernel_in_degree(self, d: int) -> list[dict]:
        A = self.A
        E = Echelon(A.F, track=True)
        out = []
        for j, b in enumerate(self.mat.col_degrees):
            for m in A.basis(d - b):
                img = A.shifted_column(self._col_terms[j], m)
                r, comb = E.add(img, {(j, m): A.F.one})
                if r is None:
                    out.append(comb)
        return out

    def extend(self, upto: int) -> list[tuple[int, dict]]:
        """Compute new kernel generators in degrees up to ``upto``; returns the new ones."""
        A = self.A
        start = self._lo if self.done_upto is None else self.done_upto + 1
        new = []
        w = A.ring.weights
        for d in range(start, upto + 1):
            K = self._kernel_in_degree(d)
            self.kernels[d] = K
            if not K:
                continue
            E = Echelon(A.F)
            for v, wv in enumerate(w):
                for b in self.kernels.get(d - wv, ()):
                    E.add(A.times_var(b, v))
            for vec in K:
                r, _ = E.add(vec)
                if r is not None:
                    new.append((d, vec))
        if upto >= start:
            self.done_upto = upto
        self.generators.extend(new)
        return new


def minimal_presentation(A: GradedAlgebra, pres: PolyMatrix) -> PolyMatrix:
    """Remove unit pivots and redundant relations from a graded presentation."""
    pres = pres.map_entries(A.nf)
    changed = True
    while changed:
        changed = False
        for i in range(pres.nrows):
            for j in range(pres.ncols):
                x = pres.entries[i][j]
                if x and x.is_constant():
                    pres = _eliminate_unit(pres, i, j)
                    pres = pres.map_entries(A.nf)
                    changed = True
                    break
            if changed:
                break
    nz = [j for j in range(pres.ncols) if any(pres.entries[i][j] for i in range(pres.nrows))]
    pres = pres.submatrix(cols=nz)
    return A.prune_columns(pres)


def _eliminate_unit(m: PolyMatrix, i: int, j: int) -> PolyMatrix:
    """Drop generator i and relation j using the unit entry m[i, j]."""
    F = m.ring.field
    u = m.entries[i][j].constant_term()
    inv = F.inv(u)
    colj = m.column(j)
    rows = [list(r) for r in m.entries]
    for l in range(m.ncols):
        if l == j:
            continue
        c = rows[i][l]
        if c:
            factor = c.scale(inv)
            for k in range(m.nrows):
                if colj[k]:
                    rows[k][l] = rows[k][l] - factor * colj[k]
    keep_r = [k for k in range(m.nrows) if k != i]
    keep_c = [l for l in range(m.ncols) if l != j]
    ent = [[rows[k][l] for l in keep_c] for k in keep_r]
    rd = tuple(m.row_degrees[k] for k in keep_r) if m.row_degrees is not None else None
    cd = tuple(m.col_degrees[l] for l in keep_c) if m.col_degrees is not None else None
    return PolyMatrix.from_rows(m.ring, ent, rd, cd, ncols=len(keep_c))
