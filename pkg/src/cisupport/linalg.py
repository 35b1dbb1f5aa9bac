"""Sparse exact linear algebra over QQ or F_p.

Vectors are dicts {key: coeff} with totally ordered keys.  ``Echelon`` keeps a
row-echelon basis whose pivot is the smallest key of each row, optionally
tracking how every row was combined from the inputs.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush

from .algebra import FieldSpec


def axpy(v: dict, c, w: dict, p: int) -> None:
    """v -= c * w in place."""
    for k, x in w.items():
        t = v.get(k)
        nv = (0 if t is None else t) - c * x
        if p:
            nv %= p
        if nv:
            v[k] = nv
        elif t is not None:
            del v[k]


def scale(v: dict, c, p: int) -> dict:
    if p:
        return {k: x * c % p for k, x in v.items()}
    return {k: x * c for k, x in v.items()}


class Echelon:
    def __init__(self, field: FieldSpec, track: bool = False):
        self.F = field
        self.p = field.p
        self.track = track
        self.rows: dict = {}  # pivot -> (vec, comb)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict, comb: dict | None = None):
        """Reduce v against the rows; returns (remainder, comb) with comb updated alongside."""
        v = dict(v)
        comb = dict(comb) if comb is not None else ({} if self.track else None)
        rows = self.rows
        if not rows or not v:
            return v, comb
        p = self.p
        heap = [k for k in v if k in rows]
        heapify(heap)
        seen = set()
        while heap:
            k = heappop(heap)
            if k in seen:
                continue
            seen.add(k)
            c = v.get(k)
            if c is None:
                continue
            row, rcomb = rows[k]
            for kk in row:
                if kk != k and kk in rows and kk not in seen and kk not in v:
                    heappush(heap, kk)
            axpy(v, c, row, p)
            if comb is not None:
                axpy(comb, c, rcomb, p)
        return v, comb

    def add(self, v: dict, comb: dict | None = None):
        """Insert v; returns the reduced vector if independent, else None (with its comb)."""
        r, comb = self.reduce(v, comb)
        if not r:
            return None, comb
        piv = min(r)
        inv = self.F.inv(r[piv])
        r = scale(r, inv, self.p)
        if comb is not None:
            comb = scale(comb, inv, self.p)
        self.rows[piv] = (r, comb)
        return r, comb

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)[0]


def kernel(field: FieldSpec, columns: list[dict]) -> list[dict]:
    """Basis of {c : sum c_j columns[j] = 0}, each as a dict {j: coeff}."""
    E = Echelon(field, track=True)
    out = []
    for j, col in enumerate(columns):
        r, comb = E.add(col, {j: field.one})
        if r is None:
            out.append(comb)
    return out


def rank(field: FieldSpec, vectors: list[dict]) -> int:
    E = Echelon(field)
    for v in vectors:
        E.add(v)
    return len(E)


def dense_kernel(field: FieldSpec, rows: list[list]) -> list[list]:
    """Right kernel of a dense matrix given by rows."""
    if not rows:
        return []
    n = len(rows[0])
    cols = [{i: r[j] for i, r in enumerate(rows) if r[j]} for j in range(n)]
    ker = kernel(field, cols)
    return [[k.get(j, field.zero) for j in range(n)] for k in ker]


def solve(field: FieldSpec, columns: list[dict], target: dict):
    """Find c with sum c_j columns[j] = target, or None."""
    E = Echelon(field, track=True)
    for j, col in enumerate(columns):
        E.add(col, {j: field.one})
    r, comb = E.reduce(target, {})
    if r:
        return None
    return {j: field.neg(c) for j, c in comb.items()}
