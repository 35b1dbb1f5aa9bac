import sympy
from hypothesis import given, strategies as st

from cisupport.algebra import GF, QQ
from cisupport.linalg import dense_kernel, kernel, rank, solve

F7 = GF(7)

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m)))


def _cols(rows, F):
    n = len(rows[0])
    return [{i: F(r[j]) for i, r in enumerate(rows) if F(r[j])} for j in range(n)]


@given(matrices)
def test_rank_matches_sympy(rows):
    assert rank(QQ, [{j: QQ(x) for j, x in enumerate(r) if x} for r in rows]) == sympy.Matrix(rows).rank()


@given(matrices)
def test_kernel_dimension_and_vanishing(rows):
    for F in (QQ, F7):
        ker = dense_kernel(F, [[F(x) for x in r] for r in rows])
        n = len(rows[0])
        for v in ker:
            for r in rows:
                assert F.norm(sum(F(a) * b for a, b in zip(r, v))) == 0
        if F is QQ:
            assert len(ker) == n - sympy.Matrix(rows).rank()


@given(matrices, st.data())
def test_solve_reproduces_target(rows, data):
    F = QQ
    cols = _cols(rows, F)
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=len(cols), max_size=len(cols)))
    target: dict = {}
    for c, col in zip(coeffs, cols):
        for k, x in col.items():
            target[k] = target.get(k, 0) + c * x
    target = {k: v for k, v in target.items() if v}
    sol = solve(F, cols, target)
    assert sol is not None
    got: dict = {}
    for j, c in sol.items():
        for k, x in cols[j].items():
            got[k] = got.get(k, 0) + c * x
    assert {k: v for k, v in got.items() if v} == target


def test_solve_inconsistent():
    assert solve(QQ, [{0: QQ(1)}], {1: QQ(1)}) is None


def test_kernel_of_dependent_columns():
    ker = kernel(QQ, [{0: QQ(1)}, {0: QQ(2)}])
    assert len(ker) == 1
