import random

import pytest
from hypothesis import given, settings, strategies as st

from cisupport import instances as inst
from cisupport.algebra import GF, QQ, make_ring
from cisupport.ci import (
    cokernel, cyclic, depth_and_dim, direct_sum, free, grade_of, make_ci_ring, minimal_free_resolution,
    present_module, resolve_over_ambient, residue_field, syzygy_module,
)
from cisupport.errors import NonHomogeneousInput, NotRegularSequence, ZeroModule
from cisupport.graded import minimal_presentation
from cisupport.groebner import module_syzygies


def test_make_ci_ring_examples():
    A = inst.hypersurface_xy()
    assert A.codim == 1 and A.dim == 1
    D = inst.three_points()
    assert D.codim == 3 and D.dim == 0
    Q = make_ring(QQ, ["x", "y"])
    with pytest.raises(NotRegularSequence):
        make_ci_ring(Q, [Q("x"), Q("x")])
    with pytest.raises(NotRegularSequence):
        make_ci_ring(Q, [Q("x^2"), Q("x^2")])
    with pytest.raises(NonHomogeneousInput):
        make_ci_ring(Q, [Q("x^2 + y")])


def test_present_module_examples(ring_d, ring_xy):
    M = present_module(ring_d, "cyclic", ["b"])
    assert M.ngens == 1 and M.presentation.ncols == 1
    k = present_module(ring_xy, "residue_field")
    assert k.length() == 1
    F = present_module(ring_xy, "free", 2)
    assert F.ngens == 2 and F.presentation.ncols == 0


def test_betti_residue_field_hypersurface(ring_xy):
    res = minimal_free_resolution(residue_field(ring_xy), 5)
    assert res.betti(5).totals == [1, 2, 2, 2, 2, 2]
    assert res.verify() and res.is_minimal_check()


def test_betti_residue_field_codim_two(ring_two_points):
    res = minimal_free_resolution(residue_field(ring_two_points), 5)
    assert res.betti(5).totals == [1, 2, 3, 4, 5, 6]


def _poincare_coefficients(n_vars, degs, upto):
    """Coefficients of (1+t)^n / (1-t^2)^c: the Poincare series of k over a complete intersection."""
    num = [1]
    for _ in range(n_vars):
        num = [a + b for a, b in zip(num + [0], [0] + num)]
    series = (num + [0] * (upto + 1))[: upto + 1]
    for _ in degs:
        for i in range(2, upto + 1):
            series[i] += series[i - 2]
    return series


@pytest.mark.parametrize("ring", [inst.hypersurface_xy(), inst.two_points(), inst.three_points(),
                                  inst.line_pair(), inst.twisted_pair()], ids=str)
def test_residue_field_poincare_series(ring):
    res = minimal_free_resolution(residue_field(ring), 6)
    assert res.betti(6).totals == _poincare_coefficients(ring.ambient.nvars, ring.degrees, 6)


def test_free_module_resolution(ring_xy):
    res = minimal_free_resolution(free(ring_xy, 1), 3)
    assert res.betti(3).totals == [1, 0, 0, 0]


def test_ambient_resolutions(ring_xy):
    assert resolve_over_ambient(free(ring_xy, 1)).betti().totals == [1, 1]
    assert resolve_over_ambient(residue_field(ring_xy)).betti().totals == [1, 2, 1]


def test_depth_and_dim_examples(ring_xy):
    k = depth_and_dim(residue_field(ring_xy))
    assert (k.depth, k.dim, k.is_cm, k.is_mcm) == (0, 0, True, False)
    m = depth_and_dim(cyclic(ring_xy, ["x"]))
    assert (m.depth, m.dim, m.is_mcm) == (1, 1, True)
    r = depth_and_dim(free(ring_xy, 1))
    assert r.depth == r.dim == 1 and r.is_mcm
    with pytest.raises(ZeroModule):
        depth_and_dim(cyclic(ring_xy, ["1"]))


def test_syzygy_examples(ring_xy):
    m = syzygy_module(residue_field(ring_xy), 1)
    assert m.minimal.ngens == 2
    assert syzygy_module(free(ring_xy, 1), 1).is_zero()
    s2 = syzygy_module(cyclic(ring_xy, ["x"]), 2)
    assert [str(x) for x in s2.minimal.presentation.entries[0]] == ["x"]
    s1 = syzygy_module(cyclic(ring_xy, ["x"]), 1)
    assert [str(x) for x in s1.minimal.presentation.entries[0]] == ["y"]


def test_grade_examples(ring_xy):
    assert grade_of(residue_field(ring_xy)) == 1
    assert grade_of(free(ring_xy, 1)) == 0
    assert grade_of(cyclic(ring_xy, ["x"])) == 0


# ---------------------------------------------------------------------------
# properties on random graded modules
# ---------------------------------------------------------------------------

RINGS = [inst.hypersurface_xy(GF(32003)), inst.two_points(GF(32003)), inst.line_pair(GF(32003)),
         inst.twisted_pair(GF(32003))]


def _random_cyclic(rng, ring):
    Q = ring.ambient
    gens = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, 2)
        g = Q.zero()
        for _ in range(rng.randint(1, 3)):
            e = [0] * Q.nvars
            for _ in range(d):
                e[rng.randrange(Q.nvars)] += 1
            g = g + Q.monomial(e, rng.randint(1, 5))
        gens.append(g)
    return cyclic(ring, gens)


def _random_module(rng, ring):
    if rng.random() < 0.6:
        return _random_cyclic(rng, ring)
    Q = ring.ambient
    rows = [[sum((Q.var(i).scale(Q.field(rng.randint(-2, 2))) for i in range(Q.nvars)), Q.zero())
             for _ in range(2)] for _ in range(2)]
    return cokernel(ring, rows, row_degrees=[0, 0])


modules = st.builds(lambda seed, r: _random_module(random.Random(seed), RINGS[r]),
                    st.integers(0, 10**6), st.integers(0, len(RINGS) - 1))


@settings(max_examples=30)
@given(modules)
def test_resolution_invariants(M):
    res = minimal_free_resolution(M, 5)
    assert res.verify() and res.is_minimal_check()
    assert res.betti(0).totals[0] == M.minimal.ngens


@settings(max_examples=20)
@given(modules)
def test_betti_dual_route(M):
    """Ranks from the linear-algebra resolution match minimal syzygies from the Groebner engine."""
    res = minimal_free_resolution(M, 4)
    ring = M.ring
    for n in range(1, 4):
        d = res.differential(n)
        if d.ncols == 0:
            assert res.rank(n + 1) == 0
            continue
        syz = module_syzygies(d, list(ring.sequence)).matrix
        syz = minimal_presentation(ring.algebra, syz.map_entries(ring.reduce)) if syz.ncols else syz
        nonzero = [j for j in range(syz.ncols) if any(ring.reduce(x) for x in syz.column(j))]
        assert len(nonzero) == res.rank(n + 1)


@settings(max_examples=50)
@given(st.integers(0, 10**6), st.integers(0, len(RINGS) - 1))
def test_auslander_buchsbaum(seed, r):
    M = _random_cyclic(random.Random(seed), RINGS[r])
    if M.is_zero():
        return
    G = resolve_over_ambient(M)
    assert depth_and_dim(M).depth + G.projective_dimension == M.ring.ambient.nvars


@settings(max_examples=20)
@given(modules)
def test_syzygy_shift(M):
    res = minimal_free_resolution(M, 5)
    S = syzygy_module(M, 1)
    sres = minimal_free_resolution(S, 4)
    assert sres.betti(4).totals == res.betti(5).totals[1:]


def test_direct_sum_betti_additive():
    ring = inst.two_points()
    M, N = residue_field(ring), cyclic(ring, ["x"])
    a = minimal_free_resolution(M, 4).betti(4).totals
    b = minimal_free_resolution(N, 4).betti(4).totals
    c = minimal_free_resolution(direct_sum(M, N), 4).betti(4).totals
    assert c == [x + y for x, y in zip(a, b)]
