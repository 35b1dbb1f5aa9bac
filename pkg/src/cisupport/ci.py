"""Graded complete intersections R = Q/(f), finitely presented R-modules and their resolutions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .algebra import PolyMatrix, PolyRing, Polynomial, concat_columns
from .errors import (
    BoundExceeded,
    NonHomogeneousInput,
    NotRegularSequence,
    RingMismatch,
    ZeroModule,
)
from .graded import GradedAlgebra, KernelBuilder, minimal_presentation
from .groebner import HilbertSeries, hilbert_series, krull_dimension, module_syzygies

# hard cap on the length of any resolution; raising it is a config matter
MAX_RESOLUTION_LENGTH = 64


@dataclass(frozen=True)
class CIRing:
    ambient: PolyRing
    sequence: tuple[Polynomial, ...]

    @property
    def codim(self) -> int:
        return len(self.sequence)

    @property
    def field(self):
        return self.ambient.field

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.homogeneity_check() for f in self.sequence)

    @property
    def dim(self) -> int:
        return self.ambient.nvars - self.codim

    @cached_property
    def algebra(self) -> GradedAlgebra:
        return GradedAlgebra.get(self.ambient, self.sequence)

    @cached_property
    def ambient_algebra(self) -> GradedAlgebra:
        return GradedAlgebra.get(self.ambient, ())

    def reduce(self, p: Polynomial) -> Polynomial:
        return self.algebra.nf(p)

    def __call__(self, x) -> Polynomial:
        return self.reduce(self.ambient(x))

    def sub_sequence(self, indices: Sequence[int]) -> "CIRing":
        """Q/(f_i : i in indices), a complete intersection of smaller codimension."""
        return CIRing(self.ambient, tuple(self.sequence[i] for i in indices))

    def regenerate(self, q: Sequence[Sequence]) -> "CIRing":
        """Same ideal, new generators f'_j = sum_i q[i][j] f_i (q invertible over k)."""
        from .algebra import mat_inverse

        F = self.field
        c = self.codim
        mat_inverse(F, q)
        new = []
        for j in range(c):
            g = self.ambient.zero()
            for i in range(c):
                if q[i][j]:
                    g = g + self.sequence[i].scale(F(q[i][j]))
            new.append(g)
        return make_ci_ring(self.ambient, new)

    def __str__(self):
        return f"{self.ambient}/({', '.join(str(f) for f in self.sequence)})"


def _in_square_of_maximal_ideal(f: Polynomial) -> bool:
    return all(sum(e) >= 2 for e in f.terms)


def make_ci_ring(Q: PolyRing, f: Sequence[Polynomial]) -> CIRing:
    """Validate a homogeneous regular sequence inside m^2 and build R = Q/(f)."""
    f = [Q(g) for g in f]
    if not f:
        raise NotRegularSequence("a complete intersection needs at least one relation")
    for g in f:
        if g.ring != Q:
            raise RingMismatch(f"{g} is not in {Q}")
        if not g:
            raise NotRegularSequence("zero is not a regular element")
        if not g.is_homogeneous():
            raise NonHomogeneousInput(f"{g} is not homogeneous")
        if not _in_square_of_maximal_ideal(g):
            raise NotRegularSequence(f"{g} has a term of degree < 2")
    d = krull_dimension(f, Q)
    if d != Q.nvars - len(f):
        raise NotRegularSequence(
            f"dimension drops by {Q.nvars - d}, expected {len(f)}: not a regular sequence")
    return CIRing(Q, tuple(f))


# ---------------------------------------------------------------------------
# Modules
# ---------------------------------------------------------------------------


def infer_degrees(rows: Sequence[Sequence[Polynomial]], row_degrees=None):
    """Row/column degrees making a matrix graded (rows default to degree 0 per component)."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    deg = [[None] * nc for _ in range(nr)]
    for i in range(nr):
        for j in range(nc):
            x = rows[i][j]
            if x:
                d = x.homogeneity_check()
                if d is None:
                    raise NonHomogeneousInput(f"entry ({i},{j}) = {x} is not homogeneous")
                deg[i][j] = d
    r: list = list(row_degrees) if row_degrees is not None else [None] * nr
    c: list = [None] * nc
    # propagate along the bipartite graph of nonzero entries
    for start in range(nr):
        if r[start] is None:
            r[start] = 0
        stack = [("r", start)]
        while stack:
            kind, k = stack.pop()
            if kind == "r":
                for j in range(nc):
                    if deg[k][j] is not None:
                        want = r[k] + deg[k][j]
                        if c[j] is None:
                            c[j] = want
                            stack.append(("c", j))
                        elif c[j] != want:
                            raise NonHomogeneousInput("matrix admits no consistent grading")
            else:
                for i in range(nr):
                    if deg[i][k] is not None:
                        want = c[k] - deg[i][k]
                        if r[i] is None:
                            r[i] = want
                            stack.append(("r", i))
                        elif r[i] != want:
                            raise NonHomogeneousInput("matrix admits no consistent grading")
    if row_degrees is None and nr:
        # normalise each connected block so its smallest generator sits in degree 0
        lo = min(r)
        if lo < 0:
            shift = -lo
            r = [x + shift for x in r]
            c = [x + shift if x is not None else None for x in c]
    c = [x if x is not None else 0 for x in c]
    return tuple(r), tuple(c)


@dataclass(frozen=True)
class RMod:
    """coker(presentation) over a CIRing; rows are generators, columns relations."""

    ring: CIRing
    presentation: PolyMatrix
    name: str = ""

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return self.presentation.row_degrees

    @property
    def ngens(self) -> int:
        return self.presentation.nrows

    def __str__(self):
        return self.name or f"coker{self.presentation}"

    @cached_property
    def minimal(self) -> "RMod":
        pres = minimal_presentation(self.ring.algebra, self.presentation)
        return RMod(self.ring, pres, self.name)

    def is_zero(self) -> bool:
        return self.minimal.ngens == 0

    def ambient_presentation(self) -> PolyMatrix:
        return relax_presentation(self, ())

    @cached_property
    def hilbert_series(self) -> HilbertSeries:
        return hilbert_series(self.ambient_presentation())

    @cached_property
    def dim(self) -> int:
        """Krull dimension; -1 for the zero module."""
        if self.is_zero():
            return -1
        return self.hilbert_series.pole_order()

    def length(self) -> int:
        from .errors import NotFiniteLength

        if self.dim > 0:
            raise NotFiniteLength(f"{self} has dimension {self.dim}")
        h = self.hilbert_series
        hi = max(h.numerator, default=0)
        return sum(h.coefficients(hi))

    def rename(self, name: str) -> "RMod":
        return RMod(self.ring, self.presentation, name)


def relax_presentation(M: RMod, keep: Sequence[int]) -> PolyMatrix:
    """Presentation of M over Q/(f_i : i in keep): append the other f_i times the identity."""
    pres = M.presentation
    extra = []
    ring = M.ring
    Q = ring.ambient
    degs = []
    for i, f in enumerate(ring.sequence):
        if i in keep:
            continue
        d = f.homogeneity_check()
        for r in range(pres.nrows):
            col = [Q.zero()] * pres.nrows
            col[r] = f
            extra.append(col)
            degs.append(pres.row_degrees[r] + d)
    if not extra:
        return pres
    E = PolyMatrix.from_columns(Q, extra, pres.row_degrees, degs, nrows=pres.nrows)
    return concat_columns(pres, E)


def cokernel(ring: CIRing, rows, row_degrees=None, name: str = "") -> RMod:
    Q = ring.ambient
    rows = [[ring(x) for x in r] for r in rows]
    for r in rows:
        for x in r:
            if x.ring != Q:
                raise RingMismatch("entry outside the ambient ring")
    rd, cd = infer_degrees(rows, row_degrees)
    pres = PolyMatrix.from_rows(Q, rows, rd, cd, ncols=len(rows[0]) if rows else 0)
    return RMod(ring, pres, name)


def cyclic(ring: CIRing, ideal: Sequence, name: str = "") -> RMod:
    gens = [ring(g) for g in ideal]
    gens = [g for g in gens if g] or []
    if not gens:
        return free(ring, 1, name=name)
    return cokernel(ring, [gens], row_degrees=[0], name=name)


def residue_field(ring: CIRing) -> RMod:
    return cyclic(ring, ring.ambient.gens(), name="k")


def free(ring: CIRing, rank: int, degrees: Sequence[int] | None = None, name: str = "") -> RMod:
    degrees = tuple(degrees) if degrees is not None else (0,) * rank
    pres = PolyMatrix.zero(ring.ambient, rank, 0, degrees, ())
    return RMod(ring, pres, name or (f"R^{rank}" if rank != 1 else "R"))


def present_module(ring: CIRing, kind: str, data=None, degrees=None, name: str = "") -> RMod:
    """kind in {'cokernel', 'cyclic', 'residue_field', 'free'}."""
    if kind == "cokernel":
        return cokernel(ring, data, degrees, name)
    if kind == "cyclic":
        return cyclic(ring, data, name)
    if kind == "residue_field":
        return residue_field(ring)
    if kind == "free":
        return free(ring, int(data), degrees, name)
    raise ValueError(f"unknown module kind {kind!r}")


def direct_sum(M: RMod, N: RMod) -> RMod:
    from .algebra import block_diagonal

    if M.ring != N.ring:
        raise RingMismatch("modules over different rings")
    return RMod(M.ring, block_diagonal([M.presentation, N.presentation]), f"({M})+({N})")


def shift(M: RMod, k: int) -> RMod:
    p = M.presentation
    return RMod(M.ring, PolyMatrix(p.ring, p.entries, p.ncols,
                                   tuple(d + k for d in p.row_degrees),
                                   tuple(d + k for d in p.col_degrees)), M.name)


def change_ring(M: RMod, ring: CIRing) -> RMod:
    """View M over another CIRing on the same ambient ring whose ideal is contained in M's."""
    if ring.ambient != M.ring.ambient:
        raise RingMismatch("different ambient rings")
    A = ring.algebra
    for g in ring.sequence:
        if M.ring.reduce(g):
            raise RingMismatch(f"{g} does not annihilate the module")
    pres = relax_presentation(M, ())
    pres = pres.map_entries(A.nf)
    return RMod(ring, pres, M.name)


# ---------------------------------------------------------------------------
# Resolutions
# ---------------------------------------------------------------------------


@dataclass
class BettiTable:
    graded: list[Counter]

    @property
    def totals(self) -> list[int]:
        return [sum(c.values()) for c in self.graded]

    def __getitem__(self, n) -> int:
        return self.totals[n]

    def __len__(self):
        return len(self.graded)

    def __str__(self):
        return " ".join(str(b) for b in self.totals)


class Resolution:
    """Minimal graded free resolution; maps[n] is the differential F_{n+1} -> F_n."""

    def __init__(self, module: RMod, algebra: GradedAlgebra, base: str):
        self.module = module
        self.algebra = algebra
        self.base = base
        self.maps: list[PolyMatrix] = []
        self.degrees: list[tuple[int, ...]] = []
        self.minimal = True

    @property
    def length(self) -> int:
        """Number of computed differentials."""
        return len(self.maps)

    def rank(self, n: int) -> int:
        self.extend(n)
        return len(self.degrees[n]) if n < len(self.degrees) else 0

    def differential(self, n: int) -> PolyMatrix:
        """The map F_n -> F_{n-1} (n >= 1)."""
        self.extend(n)
        return self.maps[n - 1]

    def betti(self, n: int | None = None) -> BettiTable:
        if n is not None:
            self.extend(n)
        else:
            n = len(self.degrees) - 1
        return BettiTable([Counter(self.degrees[i]) if i < len(self.degrees) else Counter()
                           for i in range(n + 1)])

    def extend(self, n: int) -> None:
        raise NotImplementedError

    def verify(self) -> bool:
        """Consecutive differentials compose to zero over the base ring."""
        A = self.algebra
        for a, b in zip(self.maps, self.maps[1:]):
            prod = a * b
            if any(A.nf(x) for r in prod.entries for x in r):
                return False
        return True

    def is_minimal_check(self) -> bool:
        return all(not x.constant_term() for m in self.maps for r in m.entries for x in r)


class AmbientResolution(Resolution):
    """Finite minimal resolution over the polynomial ring Q."""

    def __init__(self, module: RMod):
        super().__init__(module, module.ring.ambient_algebra, "Q")
        A = self.algebra
        pres = minimal_presentation(A, module.ambient_presentation())
        self.degrees.append(tuple(pres.row_degrees))
        cur = pres
        while cur.ncols:
            self.maps.append(cur)
            self.degrees.append(tuple(cur.col_degrees))
            if len(self.maps) > module.ring.ambient.nvars + 1:
                raise BoundExceeded("resolution over the regular ring did not terminate")
            syz = module_syzygies(cur).matrix
            cur = syz
        self.complete = True

    def extend(self, n: int) -> None:
        pass

    @property
    def projective_dimension(self) -> int:
        return len(self.maps) if self.degrees[0] else -1

    def max_degree(self, i: int):
        if 0 <= i < len(self.degrees) and self.degrees[i]:
            return max(self.degrees[i])
        return None


class RResolution(Resolution):
    """Minimal graded resolution over R, extended lazily one homological degree at a time."""

    def __init__(self, module: RMod, cap: int = MAX_RESOLUTION_LENGTH):
        super().__init__(module, module.ring.algebra, "R")
        self.cap = cap
        A = self.algebra
        pres = minimal_presentation(A, module.presentation)
        self.degrees.append(tuple(pres.row_degrees))
        self._pending = pres
        self._builder = None
        self._ambient = None

    @property
    def ambient_resolution(self) -> AmbientResolution:
        if self._ambient is None:
            self._ambient = AmbientResolution(self.module)
        return self._ambient

    def degree_bound(self, n: int) -> int | None:
        """Upper bound for generator degrees of F_n (Eisenbud-Shamash construction)."""
        G = self.ambient_resolution
        top = max(self.module.ring.degrees)
        best = None
        j = 0
        while n - 2 * j >= 0:
            m = G.max_degree(n - 2 * j)
            if m is not None:
                v = m + j * top
                best = v if best is None else max(best, v)
            j += 1
        return best

    def extend(self, n: int) -> None:
        if n > self.cap:
            raise BoundExceeded(f"resolution length {n} exceeds the cap {self.cap}")
        A = self.algebra
        while len(self.degrees) <= n:
            k = len(self.degrees)  # computing F_k and the map F_k -> F_{k-1}
            if k == 1:
                mat = self._pending
            else:
                prev = self.maps[-1]
                if prev.ncols == 0:
                    mat = PolyMatrix.zero(A.ring, 0, 0, (), ())
                else:
                    bound = self.degree_bound(k)
                    kb = KernelBuilder(A, prev)
                    gens = kb.extend(bound) if bound is not None else []
                    cols = [A.vector_to_column(v, prev.ncols) for _, v in gens]
                    degs = [d for d, _ in gens]
                    if cols:
                        mat = PolyMatrix.from_columns(A.ring, cols, prev.col_degrees, degs,
                                                      nrows=prev.ncols)
                    else:
                        mat = PolyMatrix.zero(A.ring, prev.ncols, 0, prev.col_degrees, ())
            self.maps.append(mat)
            self.degrees.append(tuple(mat.col_degrees))


def minimal_free_resolution(M: RMod, bound: int) -> Resolution:
    if bound < 1:
        raise ValueError("bound must be at least 1")
    res = resolution(M)
    res.extend(bound)
    return res


_RES_CACHE: dict = {}


def resolution(M: RMod) -> RResolution:
    """Shared lazily-extended resolution of M (memoised per module value)."""
    key = (M.ring, M.presentation)
    res = _RES_CACHE.get(key)
    if res is None:
        res = RResolution(M)
        _RES_CACHE[key] = res
    return res


def resolve_over_ambient(M: RMod) -> AmbientResolution:
    return resolution(M).ambient_resolution


def syzygy_module(M: RMod, i: int) -> RMod:
    if i < 1:
        raise ValueError("syzygy index must be at least 1")
    res = resolution(M)
    res.extend(i + 1)
    d = res.differential(i + 1)
    rd = res.degrees[i]
    if d.nrows == 0:
        pres = PolyMatrix.zero(M.ring.ambient, 0, 0, (), ())
    else:
        pres = PolyMatrix(d.ring, d.entries, d.ncols, rd, d.col_degrees)
    return RMod(M.ring, pres, f"syz{i}({M})")


@dataclass(frozen=True)
class DepthDim:
    depth: int
    dim: int
    is_cm: bool
    is_mcm: bool


def depth_and_dim(M: RMod) -> DepthDim:
    if M.is_zero():
        raise ZeroModule("depth of the zero module is undefined")
    G = resolve_over_ambient(M)
    depth = M.ring.ambient.nvars - G.projective_dimension
    dim = M.dim
    return DepthDim(depth, dim, depth == dim, dim == M.ring.dim and depth == dim)


def grade_of(M: RMod) -> int:
    if M.is_zero():
        raise ZeroModule("grade of the zero module is undefined")
    return M.ring.dim - M.dim
