"""Tensor products, Tor, Ext and Hom of finitely presented graded modules over a CIRing."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import PolyMatrix, concat_columns, kronecker
from .ci import RMod, resolution
from .config import DEFAULT, EngineConfig
from .errors import EventualNonvanishing, NotFiniteLength, RingMismatch, ZeroModule
from .groebner import HilbertSeries, hilbert_series, module_syzygies


def _identity(Q, degrees):
    return PolyMatrix.identity(Q, len(degrees), tuple(degrees))


def _same_ring(M: RMod, N: RMod):
    if M.ring != N.ring:
        raise RingMismatch("modules over different rings")


def _reduce(M_ring, mat: PolyMatrix) -> PolyMatrix:
    return mat.map_entries(M_ring.reduce)


def tensor_product(M: RMod, N: RMod) -> RMod:
    """Generators e_i (x) g_k (index i * n + k); relations pres_M (x) 1 and 1 (x) pres_N."""
    _same_ring(M, N)
    Q = M.ring.ambient
    pm, pn = M.presentation, N.presentation
    left = kronecker(pm, _identity(Q, pn.row_degrees))
    right = kronecker(_identity(Q, pm.row_degrees), pn)
    pres = concat_columns(left, right)
    return RMod(M.ring, _reduce(M.ring, pres), f"{M}(x){N}")


def subquotient(ring, Z: PolyMatrix, K: PolyMatrix, name: str = "") -> RMod:
    """(im Z + im K) / im K as a presented module, Z and K maps into the same free module."""
    Q = ring.ambient
    if Z.ncols == 0:
        return RMod(ring, PolyMatrix.zero(Q, 0, 0, (), ()), name)
    both = concat_columns(Z, K) if K.ncols else Z
    syz = module_syzygies(both, ring.sequence).matrix
    top = syz.submatrix(rows=range(Z.ncols))
    pres = PolyMatrix(Q, top.entries, top.ncols, tuple(Z.col_degrees), top.col_degrees)
    return RMod(ring, _reduce(ring, pres), name).minimal


def kernel_module_generators(ring, phi: PolyMatrix, target_relations: PolyMatrix) -> PolyMatrix:
    """Generators of {x : phi x in im(target_relations)} in the source free module of phi."""
    both = concat_columns(phi, target_relations) if target_relations.ncols else phi
    syz = module_syzygies(both, ring.sequence).matrix
    z = syz.submatrix(rows=range(phi.ncols))
    keep = [j for j in range(z.ncols) if any(ring.reduce(x) for x in z.column(j))]
    z = z.submatrix(cols=keep)
    return PolyMatrix(z.ring, z.entries, z.ncols, tuple(phi.col_degrees), z.col_degrees)


def homology(ring, out_map: PolyMatrix | None, out_rel: PolyMatrix | None,
             mid_rel: PolyMatrix, in_map: PolyMatrix | None, mid_degrees, name: str = "") -> RMod:
    """ker(out_map) / im(in_map) for maps of presented modules (mid = coker mid_rel)."""
    Q = ring.ambient
    if out_map is None or out_map.ncols == 0 or out_map.nrows == 0:
        Z = _identity(Q, mid_degrees)
    else:
        Z = kernel_module_generators(ring, out_map, out_rel)
    K = mid_rel
    if in_map is not None and in_map.ncols:
        K = concat_columns(K, in_map) if K.ncols else in_map
    if K.ncols == 0:
        K = PolyMatrix.zero(Q, len(mid_degrees), 0, tuple(mid_degrees), ())
    return subquotient(ring, Z, K, name)


@dataclass
class TorProfile:
    modules: list[RMod]

    def __getitem__(self, i) -> RMod:
        return self.modules[i]

    def __len__(self):
        return len(self.modules)

    def vanishing(self) -> list[bool]:
        return [m.is_zero() for m in self.modules]

    def hilbert_series(self, i: int) -> HilbertSeries:
        return self.modules[i].hilbert_series

    def lengths(self) -> list[int | None]:
        out = []
        for m in self.modules:
            try:
                out.append(m.length())
            except NotFiniteLength:
                out.append(None)
        return out


def _with_degrees(m: PolyMatrix, rows, cols) -> PolyMatrix:
    return PolyMatrix(m.ring, m.entries, m.ncols, tuple(rows), tuple(cols))


def tor(M: RMod, N: RMod, n: int) -> TorProfile:
    """Tor_i(M, N) for 0 <= i <= n, from a resolution of M tensored with N."""
    _same_ring(M, N)
    ring = M.ring
    Q = ring.ambient
    res = resolution(M)
    res.extend(n + 1)
    pn = N.presentation
    bdeg = pn.row_degrees
    In = _identity(Q, bdeg)
    mods = []
    for i in range(n + 1):
        Fi = res.degrees[i]
        mid_deg = [a + b for a in Fi for b in bdeg]
        mid_rel = kronecker(_identity(Q, Fi), pn)
        if i >= 1 and res.degrees[i - 1]:
            out_map = _reduce(ring, kronecker(res.differential(i), In))
            out_rel = kronecker(_identity(Q, res.degrees[i - 1]), pn)
        else:
            out_map = out_rel = None
        if len(res.degrees) > i + 1 and res.degrees[i + 1]:
            in_map = _reduce(ring, kronecker(res.differential(i + 1), In))
        else:
            in_map = None
        if not mid_deg:
            mods.append(RMod(ring, PolyMatrix.zero(Q, 0, 0, (), ()), f"Tor{i}"))
            continue
        mods.append(homology(ring, out_map, out_rel, _reduce(ring, mid_rel), in_map, mid_deg, f"Tor{i}"))
    return TorProfile(mods)


def ext_pair(M: RMod, N: RMod, n: int) -> TorProfile:
    """Ext^i(M, N) for 0 <= i <= n as homology of Hom(F, N)."""
    _same_ring(M, N)
    ring = M.ring
    Q = ring.ambient
    res = resolution(M)
    res.extend(n + 1)
    pn = N.presentation
    bdeg = pn.row_degrees
    In = _identity(Q, bdeg)
    mods = []
    for i in range(n + 1):
        Fi = res.degrees[i]
        mid_deg = [b - a for a in Fi for b in bdeg]
        if not mid_deg:
            mods.append(RMod(ring, PolyMatrix.zero(Q, 0, 0, (), ()), f"Ext{i}"))
            continue
        mid_rel = kronecker(_identity(Q, [-a for a in Fi]), pn)
        # Hom(F_i, N) -> Hom(F_{i+1}, N) is d_{i+1}^T (x) 1
        if len(res.degrees) > i + 1 and res.degrees[i + 1]:
            d = res.differential(i + 1).transpose()
            out_map = _reduce(ring, kronecker(d, In))
            out_rel = kronecker(_identity(Q, [-a for a in res.degrees[i + 1]]), pn)
        else:
            out_map = out_rel = None
        if i >= 1 and res.degrees[i - 1]:
            d = res.differential(i).transpose()
            in_map = _reduce(ring, kronecker(d, In))
        else:
            in_map = None
        mods.append(homology(ring, out_map, out_rel, _reduce(ring, mid_rel), in_map, mid_deg, f"Ext{i}"))
    return TorProfile(mods)


def hom_module(M: RMod, N: RMod) -> RMod:
    m = ext_pair(M, N, 0)[0]
    return m.rename(f"Hom({M},{N})")


def auslander_transpose(M: RMod) -> RMod:
    """coker of the transposed minimal presentation."""
    pres = M.minimal.presentation
    Q = M.ring.ambient
    if pres.ncols == 0:
        return RMod(M.ring, PolyMatrix.zero(Q, 0, 0, (), ()), f"Tr({M})")
    t = pres.transpose()
    return RMod(M.ring, t, f"Tr({M})")


@dataclass
class IndependenceVerdict:
    verdict: str  # Independent | FailsEventually | FailsFinitely
    intersection: object = None
    nonzero: list[int] = field(default_factory=list)
    mcm_shortcut: bool = False


def tor_independence(M: RMod, N: RMod, config: EngineConfig = DEFAULT) -> IndependenceVerdict:
    from .ci import depth_and_dim
    from .support import support

    _same_ring(M, N)
    if M.is_zero() or N.is_zero():
        raise ZeroModule("Tor-independence needs nonzero modules")
    VM, VN = support(M, config), support(N, config)
    inter = VM.intersect(VN)
    if not inter.is_empty():
        return IndependenceVerdict("FailsEventually", intersection=inter)
    d = M.ring.dim
    prof = tor(M, N, max(d, 1))
    bad = [i for i in range(1, d + 1) if not prof[i].is_zero()]
    mcm = depth_and_dim(M).is_mcm and depth_and_dim(N).is_mcm
    if mcm and bad:
        raise AssertionError("MCM modules with disjoint supports must be Tor-independent")
    if bad:
        return IndependenceVerdict("FailsFinitely", intersection=inter, nonzero=bad)
    return IndependenceVerdict("Independent", intersection=inter, mcm_shortcut=mcm)


@dataclass
class EulerResult:
    chi: int | None
    series: HilbertSeries
    tor_series: list[HilbertSeries]


def ring_series(ring) -> HilbertSeries:
    return hilbert_series(list(ring.sequence), ring.ambient)


def euler_characteristics(M: RMod, N: RMod, config: EngineConfig = DEFAULT) -> EulerResult:
    from .support import support

    _same_ring(M, N)
    if not support(M, config).intersect(support(N, config)).is_empty():
        raise EventualNonvanishing("supports intersect, so Tor does not vanish eventually")
    d = M.ring.dim
    prof = tor(M, N, d)
    series = [prof.hilbert_series(i) for i in range(d + 1)]
    total = None
    for i, h in enumerate(series):
        term = h if i % 2 == 0 else -h
        total = term if total is None else total + term
    chi = None
    try:
        lengths = [prof[i].length() for i in range(d + 1)]
        chi = sum((-1) ** i * x for i, x in enumerate(lengths))
    except NotFiniteLength:
        chi = None
    return EulerResult(chi, total, series)


def euler_characteristic(M: RMod, N: RMod, config: EngineConfig = DEFAULT) -> int:
    r = euler_characteristics(M, N, config)
    if r.chi is None:
        raise NotFiniteLength("some Tor module has positive dimension")
    return r.chi


def hilbert_identity_holds(M: RMod, N: RMod, degree: int = 12, config: EngineConfig = DEFAULT) -> bool:
    """chi(M,N)(t) * H_R(t) == H_M(t) * H_N(t) as power series up to ``degree``."""
    r = euler_characteristics(M, N, config)
    lhs = r.series * ring_series(M.ring)
    rhs = M.hilbert_series * N.hilbert_series
    lo = min([0] + list(lhs.numerator) + list(rhs.numerator))
    return lhs.coefficients(degree, lo) == rhs.coefficients(degree, lo)
