import pytest

from cisupport import instances as inst
from cisupport import lab
from cisupport.ci import depth_and_dim
from cisupport.constructions import (
    completion_matrix, linear_support_module, module_with_span_support, point_support_module,
)
from cisupport.eisenbud import operator_ring
from cisupport.errors import SingularMatrix
from cisupport.geometry import linear_span
from cisupport.support import Scheme, point_membership, support


@pytest.mark.parametrize("make, c", [(inst.two_points, 2), (inst.three_points, 3)])
def test_point_modules(make, c):
    R = make()
    S = operator_ring(R)
    for i in range(c):
        X = point_support_module(R, i, check=False)
        assert depth_and_dim(X).is_mcm
        p = [1 if j == i else 0 for j in range(c)]
        assert support(X).equals(linear_span([p], S))


def test_point_module_codim_one():
    R = inst.hypersurface_xy()
    X = point_support_module(R, 0)
    assert support(X).equals(Scheme.whole(operator_ring(R)))
    with pytest.raises(ValueError):
        point_support_module(R, 1)


def test_linear_support_two_of_three():
    R = inst.three_points()
    S = operator_ring(R)
    X = linear_support_module(R, [0, 1], check=False)
    assert depth_and_dim(X).is_mcm
    assert support(X).equals(Scheme(S, [S.var(2)]))


def test_linear_support_everything():
    R = inst.two_points()
    X = linear_support_module(R, [0, 1])
    assert support(X).equals(Scheme.whole(operator_ring(R)))


def test_full_tensor_codim_three_spot_check():
    # 64 generators with cubic Betti growth; the full annihilator route is out of desk range,
    # so check MCM and membership of sampled points through the hypersurface oracle
    R = inst.three_points(lab.DEFAULT_FIELD)
    X = linear_support_module(R, [0, 1, 2], check=False)
    assert depth_and_dim(X).is_mcm
    for p in ([1, 0, 0], [0, 0, 1], [1, 1, 1], [2, 7, 5]):
        assert point_membership(X, p)


def test_linear_support_with_change():
    R = inst.two_points()
    q = [[1, 1], [0, 1]]
    X = linear_support_module(R, [1], change=q, check=False)
    S = operator_ring(R)
    assert support(X).equals(linear_span([[1, 1]], S))


def test_span_support_module():
    R = inst.three_points()
    S = operator_ring(R)
    X = module_with_span_support(R, [[1, 2, 0]], check=False)
    assert support(X).equals(linear_span([[1, 2, 0]], S))


def test_singular_inputs():
    R = inst.two_points()
    with pytest.raises(SingularMatrix):
        linear_support_module(R, [0], change=[[1, 2], [2, 4]])
    with pytest.raises(SingularMatrix):
        completion_matrix(R.field, [[1, 1], [2, 2]])
    with pytest.raises(ValueError):
        linear_support_module(R, [])
