"""Maximal Cohen-Macaulay modules whose support is a prescribed linear subspace."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import mat_inverse
from .ci import CIRing, RMod, depth_and_dim, residue_field, syzygy_module
from .config import DEFAULT, EngineConfig
from .errors import BoundExceeded, SingularMatrix
from .geometry import linear_span
from .eisenbud import operator_ring
from .homological import tensor_product, tor_independence
from .linalg import rank
from .support import support


@dataclass(frozen=True)
class ConstructionRecipe:
    ring: CIRing
    indices: tuple[int, ...]
    change: tuple[tuple, ...] | None = None


def _point_module_over(ring: CIRing, form_index: int, name: str) -> RMod:
    """X = syz^{d-1} of k over Q/(f_i), reduced modulo all of f."""
    Q = ring.ambient
    d = Q.nvars
    T = CIRing(Q, (ring.sequence[form_index],))
    k = residue_field(T)
    if d - 1 == 0:
        X = k
    else:
        X = syzygy_module(k, d - 1)
    pres = X.presentation.map_entries(ring.reduce)
    return RMod(ring, pres, name)


def point_support_module(ring: CIRing, i: int, config: EngineConfig = DEFAULT, check: bool = True) -> RMod:
    """MCM module with support the i-th coordinate point (0-based index)."""
    if not 0 <= i < ring.codim:
        raise ValueError(f"index {i} out of range for codimension {ring.codim}")
    if ring.ambient.nvars > config.bound_for(ring.ambient.nvars):
        raise BoundExceeded("syzygy depth exceeds the resolution bound")
    X = _point_module_over(ring, i, f"X{i + 1}")
    if check:
        dd = depth_and_dim(X)
        assert dd.is_mcm, f"{X} is not maximal Cohen-Macaulay"
        S = operator_ring(ring)
        p = [0] * ring.codim
        p[i] = 1
        assert support(X, config).equals(linear_span([p], S)), f"support of {X} is not the point {p}"
    return X


def _tensor_chain(mods: Sequence[RMod], config: EngineConfig, check: bool) -> RMod:
    acc = mods[0]
    for X in mods[1:]:
        if check:
            v = tor_independence(acc, X, config)
            assert v.verdict == "Independent", f"{acc} and {X} are not Tor-independent: {v}"
        acc = tensor_product(acc, X).minimal
    return acc


def linear_support_module(ring: CIRing, indices: Sequence[int], change=None,
                          config: EngineConfig = DEFAULT, check: bool = True) -> RMod:
    """Tensor product of point modules.

    Without ``change`` the support is the span of the chosen coordinate points.
    With an invertible matrix ``change`` = q the point modules are built for
    the regenerated sequence f'_j = sum_i q[i][j] f_i, and the support (in the
    original coordinates) is the span of the columns q[:, j], j in indices.
    """
    indices = list(indices)
    if not indices:
        raise ValueError("need at least one index")
    work = ring
    if change is not None:
        mat_inverse(ring.field, change)
        work = ring.regenerate(change)
    mods = [_point_module_over(work, i, f"X{i + 1}") for i in indices]
    X = _tensor_chain(mods, config, check)
    X = RMod(ring, X.presentation.map_entries(ring.reduce), "(x)".join(f"X{i + 1}" for i in indices))
    if check:
        assert depth_and_dim(X).is_mcm, "tensor chain lost the MCM property"
        S = operator_ring(ring)
        pts = []
        for j in indices:
            if change is None:
                p = [0] * ring.codim
                p[j] = 1
            else:
                p = [change[i][j] for i in range(ring.codim)]
            pts.append(p)
        assert support(X, config).equals(linear_span(pts, S)), "support is not the expected span"
    return X


def completion_matrix(F, points: Sequence[Sequence]) -> list[list]:
    """An invertible matrix whose first columns are the given (independent) points."""
    c = len(points[0])
    cols = [[F(x) for x in p] for p in points]
    if rank(F, [{i: x for i, x in enumerate(col) if x} for col in cols]) < len(cols):
        raise SingularMatrix("points are linearly dependent")
    for e in range(c):
        if len(cols) == c:
            break
        cand = [F.one if i == e else F.zero for i in range(c)]
        trial = cols + [cand]
        vecs = [{i: x for i, x in enumerate(col) if x} for col in trial]
        if rank(F, vecs) == len(trial):
            cols.append(cand)
    if len(cols) != c:
        raise SingularMatrix("points are linearly dependent")
    return [[cols[j][i] for j in range(c)] for i in range(c)]


def module_with_span_support(ring: CIRing, points: Sequence[Sequence], config: EngineConfig = DEFAULT,
                             check: bool = True) -> RMod:
    """MCM module whose support is the linear span of the given independent points."""
    q = completion_matrix(ring.field, points)
    return linear_support_module(ring, range(len(points)), q, config, check)
