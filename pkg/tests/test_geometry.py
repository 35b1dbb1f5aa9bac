import itertools
import random

import pytest

from cisupport.algebra import GF, QQ, make_ring
from cisupport.errors import RingMismatch
from cisupport.geometry import coordinate_point, join, linear_span, secant
from cisupport.support import Scheme


def S(c, field=QQ):
    return make_ring(field, [f"x{i + 1}" for i in range(c)], weights=[2] * c)


def test_join_of_two_points_is_line():
    R = S(3)
    J = join(coordinate_point(R, 0), coordinate_point(R, 1))
    assert J.result.equals(Scheme(R, [R("x3")]))
    assert J.formula_applies and J.formula_holds


def test_join_with_empty():
    R = S(3)
    A = Scheme(R, [R("x1")])
    assert join(A, Scheme.empty(R)).result.equals(A)
    assert join(Scheme.empty(R), A).result.equals(A)
    assert join(Scheme.empty(R), Scheme.empty(R)).result.is_empty()


def test_join_point_on_line():
    R = S(3)
    J = join(Scheme(R, [R("x1"), R("x3")]), Scheme(R, [R("x1")]))
    assert J.result.equals(Scheme(R, [R("x1")]))
    assert not J.disjoint and J.bound_holds


def test_join_ring_mismatch():
    with pytest.raises(RingMismatch):
        join(Scheme.whole(S(2)), Scheme.whole(S(3)))


def test_secant_examples():
    R = S(3)
    L = Scheme(R, [R("x3")])
    assert secant(L).equals(L)
    assert secant(Scheme.empty(R)).is_empty()
    two = coordinate_point(R, 0).union(coordinate_point(R, 1))
    assert secant(two).equals(join(coordinate_point(R, 0), coordinate_point(R, 1)).result)


def test_secant_of_conic_fills_plane():
    R = S(3)
    conic = Scheme(R, [R("x1*x3 - x2^2")])
    assert not secant(conic).gens


def test_linear_span_examples():
    R = S(3)
    assert linear_span([[1, 0, 0]], R).equals(Scheme(R, [R("x2"), R("x3")]))
    assert linear_span([[1, 0, 0], [0, 1, 0]], R).equals(Scheme(R, [R("x3")]))
    assert not linear_span([[1, 2, 3], [0, 1, 5], [7, 0, 1]], R).gens


def _random_subspace(rng, R, k):
    c = R.nvars
    pts = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(k + 1)]
    return linear_span(pts, R)


def test_join_dimension_formula_on_disjoint_linear_pairs():
    rng = random.Random(11)
    done = 0
    while done < 50:
        c = rng.randint(3, 5)
        R = S(c, GF(32003))
        a = rng.randint(0, c - 2)
        b = rng.randint(0, c - 2 - a)
        A, B = _random_subspace(rng, R, a), _random_subspace(rng, R, b)
        if A.dim != a or B.dim != b or not A.intersect(B).is_empty():
            continue
        J = join(A, B)
        assert J.dim_join == a + b + 1 and J.formula_holds
        assert A.is_subscheme(J.result) and B.is_subscheme(J.result)
        done += 1


def test_join_overlapping_bound_and_symmetry():
    rng = random.Random(5)
    R = S(4, GF(32003))
    for _ in range(15):
        A, B = _random_subspace(rng, R, rng.randint(0, 2)), _random_subspace(rng, R, rng.randint(0, 2))
        J1, J2 = join(A, B), join(B, A)
        assert J1.bound_holds and J1.result.equals(J2.result)


def test_join_associative_on_coordinate_points():
    R = S(4)
    p, q, r = (coordinate_point(R, i) for i in range(3))
    left = join(join(p, q).result, r).result
    right = join(p, join(q, r).result).result
    assert left.equals(right) and left.equals(Scheme(R, [R("x4")]))


def _points_p2_f5():
    pts = []
    for v in itertools.product(range(5), repeat=3):
        if any(v):
            k = next(i for i, x in enumerate(v) if x)
            inv = pow(v[k], -1, 5)
            n = tuple(x * inv % 5 for x in v)
            if n not in pts:
                pts.append(n)
    return pts


def _line_points(p, q):
    out = set()
    for s, t in itertools.product(range(5), repeat=2):
        v = tuple((s * a + t * b) % 5 for a, b in zip(p, q))
        if any(v):
            k = next(i for i, x in enumerate(v) if x)
            inv = pow(v[k], -1, 5)
            out.add(tuple(x * inv % 5 for x in v))
    return out


def _finite_scheme(R, pts):
    acc = Scheme.empty(R)
    for p in pts:
        acc = acc.union(linear_span([p], R))
    return acc


@pytest.mark.parametrize("seed", range(6))
def test_join_point_sets_brute_force_f5(seed):
    rng = random.Random(seed)
    R = S(3, GF(5))
    allpts = _points_p2_f5()
    A = rng.sample(allpts, rng.randint(1, 2))
    B = rng.sample(allpts, rng.randint(1, 2))
    J = join(_finite_scheme(R, A), _finite_scheme(R, B)).result
    expected = set()
    for p in A:
        for q in B:
            expected |= _line_points(p, q) if p != q else {p}
    got = {p for p in allpts if J.contains_point(p)}
    assert got == expected
