"""Joins, secants and linear spans of projective schemes by ruled-join elimination."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Polynomial, make_ring
from .errors import RingMismatch
from .groebner import eliminate
from .linalg import dense_kernel
from .support import ProjPoint, Scheme


@dataclass
class JoinReport:
    result: Scheme
    dim_a: int
    dim_b: int
    dim_join: int
    disjoint: bool
    formula_applies: bool
    formula_holds: bool | None

    @property
    def bound_holds(self) -> bool:
        return self.dim_join <= self.dim_a + self.dim_b + 1


def join(A: Scheme, B: Scheme) -> JoinReport:
    """Closure of the union of lines joining A and B; join(U, empty) = U."""
    if A.ring != B.ring:
        raise RingMismatch("schemes live in different projective spaces")
    S = A.ring
    c = S.nvars
    ys = [f"y#{i + 1}" for i in range(c)]
    zs = [f"z#{i + 1}" for i in range(c)]
    big = make_ring(S.field, ys + zs + list(S.variables), S.order, [2] * (3 * c))
    yv = [big.var(n) for n in ys]
    zv = [big.var(n) for n in zs]
    gens = [g.substitute(yv, big) for g in A.gens]
    gens += [g.substitute(zv, big) for g in B.gens]
    for i in range(c):
        gens.append(big.var(S.variables[i]) - yv[i] - zv[i])
    out = eliminate(gens, ys + zs, big, keep_ring=S)
    result = Scheme(S, out)
    da, db, dj = A.dim, B.dim, result.dim
    disjoint = A.intersect(B).is_empty()
    holds = (dj == da + db + 1) if disjoint else None
    return JoinReport(result, da, db, dj, disjoint, disjoint, holds)


def secant(A: Scheme) -> Scheme:
    return join(A, A).result


def linear_span(points: Sequence, S) -> Scheme:
    """Smallest linear subspace of Proj S containing the points."""
    points = [p.coords if isinstance(p, ProjPoint) else tuple(p) for p in points]
    if not points:
        raise ValueError("linear_span needs at least one point")
    F = S.field
    rows = [[F(x) for x in p] for p in points]
    forms = []
    for vec in dense_kernel(F, rows):
        forms.append(Polynomial(S, {S.var(i).lead_exp(): x for i, x in enumerate(vec) if x}))
    return Scheme(S, forms)


def coordinate_point(S, i: int) -> Scheme:
    """The i-th coordinate point (0-based) as a scheme."""
    p = [0] * S.nvars
    p[i] = 1
    return linear_span([p], S)
