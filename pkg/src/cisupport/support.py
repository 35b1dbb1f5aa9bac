"""Cohomological support varieties as projective schemes in P^{c-1}, up to radical."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import FieldSpec, PolyRing, Polynomial
from .ci import CIRing, RMod, change_ring, make_ci_ring, resolution
from .config import DEFAULT, EngineConfig
from .eisenbud import ExtSModule, ext_s_module, extract_operators, operator_ring
from .errors import (
    ComplexityMismatch,
    DegenerateForm,
    NonHomogeneousInput,
    RingMismatch,
    TruncationInsufficient,
)
from .groebner import groebner_basis, ideal_intersection, krull_dimension, radical_membership


class Scheme:
    """Closed subscheme of Proj S given by a homogeneous ideal; the empty scheme is the irrelevant ideal."""

    __slots__ = ("ring", "gens", "_dim")

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial]):
        gens = [g for g in gens if g]
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generator outside the operator ring")
            if not g.is_homogeneous():
                raise NonHomogeneousInput(f"{g} is not homogeneous")
        gb = groebner_basis(gens, ring) if gens else None
        if gb is not None and gb.is_unit():
            gb = groebner_basis(ring.gens(), ring)
        self.ring = ring
        self.gens = tuple(gb.basis) if gb is not None else ()
        self._dim = None

    @classmethod
    def empty(cls, ring: PolyRing) -> "Scheme":
        return cls(ring, ring.gens())

    @classmethod
    def whole(cls, ring: PolyRing) -> "Scheme":
        return cls(ring, [])

    @property
    def dim(self) -> int:
        if self._dim is None:
            self._dim = krull_dimension(list(self.gens), self.ring) - 1
        return self._dim

    def is_empty(self) -> bool:
        return self.dim == -1

    def _check(self, other: "Scheme"):
        if other.ring != self.ring:
            raise RingMismatch("schemes live in different projective spaces")

    def is_subscheme(self, other: "Scheme") -> bool:
        """Set-theoretic containment self ⊆ other."""
        self._check(other)
        if self.is_empty():
            return True
        return all(radical_membership(g, list(self.gens), self.ring) for g in other.gens)

    def equals(self, other: "Scheme") -> bool:
        return self.is_subscheme(other) and other.is_subscheme(self)

    def intersect(self, other: "Scheme") -> "Scheme":
        self._check(other)
        return Scheme(self.ring, list(self.gens) + list(other.gens))

    def union(self, other: "Scheme") -> "Scheme":
        self._check(other)
        if self.is_empty():
            return other
        if other.is_empty():
            return self
        if not self.gens or not other.gens:
            return Scheme.whole(self.ring)
        return Scheme(self.ring, ideal_intersection(list(self.gens), list(other.gens), self.ring))

    def contains_point(self, point: Sequence) -> bool:
        return all(not g.evaluate(list(point)) for g in self.gens)

    def ideal_strings(self) -> list[str]:
        return sorted(str(g) for g in self.gens)

    def __str__(self):
        if self.is_empty():
            return "empty"
        if not self.gens:
            return f"P^{self.ring.nvars - 1}"
        return "V(" + ", ".join(self.ideal_strings()) + ")"

    __repr__ = __str__


def scheme_compare(A: Scheme, B: Scheme, mode: str):
    if mode == "equal":
        return A.equals(B)
    if mode == "subscheme":
        return A.is_subscheme(B)
    if mode == "intersect":
        return A.intersect(B)
    if mode == "union":
        return A.union(B)
    if mode == "dim":
        A._check(B)
        return A.dim, B.dim
    if mode == "empty":
        return A.is_empty(), B.is_empty()
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple

    @classmethod
    def make(cls, F: FieldSpec, coords: Sequence) -> "ProjPoint":
        vals = [F(x) for x in coords]
        k = next((i for i, v in enumerate(vals) if v), None)
        if k is None:
            raise DegenerateForm("the zero vector is not a projective point")
        inv = F.inv(vals[k])
        return cls(tuple(F.norm(v * inv) for v in vals))

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"


# ---------------------------------------------------------------------------
# Annihilator and support
# ---------------------------------------------------------------------------


@dataclass
class AnnihilatorReport:
    ideal: list[Polynomial]
    N: int
    generation_degree: int
    per_step: dict = field(default_factory=dict)


def annihilator_stabilized(E: ExtSModule, window: int, S: PolyRing,
                           expected_dim: int | None = None) -> AnnihilatorReport:
    """First truncation level N whose annihilator ideal stays radical-equal for ``window`` more steps.

    I_N is generated by the degree-e forms that kill E_j for all j <= N - 2e,
    for e <= (N - G)/2 where G is the estimated generation degree of E.
    When ``expected_dim`` is given (from the growth of dim E_j) a level is only
    accepted if its zero set has that dimension.
    """
    if window < 1:
        raise ValueError("window must be positive")
    top = E.top
    if all(d == 0 for d in E.dims):
        return AnnihilatorReport([S.one()], 0, -1, {0: [S.one()]})
    G = E.generation_degree(top)
    cache: dict = {}
    pieces: dict = {}
    ideals: dict = {}

    def ideal_at(N: int) -> list[Polynomial]:
        if N not in ideals:
            gens = []
            for e in range(1, (N - G) // 2 + 1):
                key = (e, N)
                if key not in pieces:
                    pieces[key] = E.annihilator_piece(e, N, S, cache)
                gens.extend(pieces[key])
            ideals[N] = gens
        return ideals[N]

    schemes: dict = {}

    def scheme_at(N):
        if N not in schemes:
            schemes[N] = Scheme(S, ideal_at(N))
        return schemes[N]

    N = G + 2
    while N + 2 * window <= top:
        base = scheme_at(N)
        if expected_dim is not None and base.dim != expected_dim:
            N += 1
            continue
        if all(base.equals(scheme_at(N + 2 * k)) for k in range(1, window + 1)):
            return AnnihilatorReport(list(base.gens), N, G,
                                     {n: list(scheme_at(n).gens) for n in sorted(schemes)})
        N += 1
    raise TruncationInsufficient(
        f"annihilator did not stabilize within resolution length {top} (generation degree {G})")


@dataclass
class SupportResult:
    scheme: Scheme
    report: AnnihilatorReport | None
    ext: ExtSModule | None
    bound: int


_SUPPORT_CACHE: dict = {}


def support_details(M: RMod, config: EngineConfig = DEFAULT) -> SupportResult:
    ring = M.ring
    schedule = config.bound_schedule(ring.ambient.nvars)
    key = (ring, M.presentation, tuple(schedule), config.ann_window)
    hit = _SUPPORT_CACHE.get(key)
    if hit is not None:
        return hit
    S = operator_ring(ring)
    out = None
    if M.is_zero():
        out = SupportResult(Scheme.empty(S), None, None, schedule[0])
    for k, top in enumerate(schedule):
        if out is not None:
            break
        res = resolution(M)
        res.extend(top)
        if res.rank(top) == 0:
            out = SupportResult(Scheme.empty(S), None, None, top)
            break
        ops = extract_operators(res, ring, top, constant_only=True)
        E = ext_s_module(ops, top)
        growth = betti_growth([res.rank(i) for i in range(top + 1)], min_zeros=1)
        try:
            rep = annihilator_stabilized(E, config.ann_window, S, None if growth is None else growth - 1)
        except TruncationInsufficient:
            if k == len(schedule) - 1:
                raise
            continue
        out = SupportResult(Scheme(S, rep.ideal), rep, E, top)
    _SUPPORT_CACHE[key] = out
    return out


def support(M: RMod, config: EngineConfig = DEFAULT) -> Scheme:
    return support_details(M, config).scheme


def hypersurface_form(ring: CIRing, point: Sequence) -> Polynomial:
    F = ring.field
    Q = ring.ambient
    ell = Q.zero()
    for a, f in zip(point, ring.sequence):
        a = F(a)
        if a:
            ell = ell + f.scale(a)
    if not ell:
        raise DegenerateForm("the form sum a_i f_i vanishes")
    if not ell.is_homogeneous():
        raise NonHomogeneousInput("point mixes relations of different degrees")
    return ell


def point_membership(M: RMod, point) -> bool:
    """True iff M has infinite projective dimension over Q/(sum a_i f_i)."""
    ring = M.ring
    coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
    if len(coords) != ring.codim:
        raise ValueError("point has the wrong number of coordinates")
    ell = hypersurface_form(ring, coords)
    T = make_ci_ring(ring.ambient, [ell])
    MT = change_ring(M, T)
    res = resolution(MT)
    n = ring.ambient.nvars + 1
    res.extend(n)
    return all(res.rank(i) > 0 for i in range(n + 1))


# ---------------------------------------------------------------------------
# Complexity
# ---------------------------------------------------------------------------


def betti_growth(betti: Sequence[int], min_zeros: int = 2):
    """Estimated complexity from the Betti sequence, or None when inconclusive.

    Betti numbers over a complete intersection are eventually given by one
    polynomial on even and one on odd indices; the degree is read off finite
    differences over the upper half of the computed range. A difference
    sequence counts as vanishing once it has ``min_zeros`` zero entries.
    """
    n = len(betti)
    lo = n // 2
    degs = []
    for parity in (0, 1):
        cur = [betti[i] for i in range(lo, n) if i % 2 == parity]
        k = 0
        found = None
        while len(cur) >= min_zeros:
            if all(x == 0 for x in cur):
                found = k
                break
            cur = [b - a for a, b in zip(cur, cur[1:])]
            k += 1
        if found is None:
            return None
        degs.append(found - 1)
    return max(degs) + 1


def complexity(M: RMod, config: EngineConfig = DEFAULT) -> int:
    det = support_details(M, config)
    cx = det.scheme.dim + 1
    res = resolution(M)
    betti = [res.rank(i) for i in range(det.bound + 1)]
    est = betti_growth(betti)
    if est is not None and est != cx:
        raise ComplexityMismatch(f"support gives complexity {cx}, Betti growth gives {est}")
    return cx
