"""Named rings and modules used by the golden checks, the lab and the CLI."""

from __future__ import annotations

from .algebra import FieldSpec, make_ring
from .ci import CIRing, cokernel, cyclic, make_ci_ring, syzygy_module

QQ = FieldSpec.parse("QQ")


def ci(field, names, relations) -> CIRing:
    Q = make_ring(field, list(names))
    return make_ci_ring(Q, [Q.parse(r) for r in relations])


def hypersurface_xy(field=QQ) -> CIRing:
    return ci(field, "xy", ["x*y"])


def example_a(field=QQ) -> dict:
    R = hypersurface_xy(field)
    return {"ring": R, "M": cyclic(R, ["x+y"], "R/(x+y)"), "N": cyclic(R, ["x-y"], "R/(x-y)")}


B_M_ROWS = [
    ["8*a*b^2*c^2+4*a*b*c^3+6*b^2*c^3+8*a*c^4+6*b*c^4+c^5", "3*a*b+4*b^2+7*a*c+7*b*c+4*c^2"],
    ["4*a*b^2*c^2+6*a*b*c^3+9*b^2*c^3+a*c^4+9*b*c^4+4*c^5", "4*a*b+5*b^2+3*a*c+5*b*c+5*c^2"],
]
B_N_GENS = ["8*a*b^2*c+8*b^2*c^2+6*a*c^3+5*b*c^3+c^4", "3*a*b+2*b^2+3*a*c+2*b*c+9*c^2"]


def example_b(field=QQ) -> dict:
    R = ci(field, "abc", ["a^2-b^2", "b^3-c^3"])
    return {"ring": R, "M": cokernel(R, B_M_ROWS, name="M"), "N": cyclic(R, B_N_GENS, "N")}


C_IDEAL = ["3/5*a+8/7*b+5/2*c", "2*a+1/2*b+3*c", "d"]
C_RELATIONS = ["a^2-b^2", "b^2-c^2", "d^2"]
C_RELATIONS_ALT = ["b^2-c^2", "a^2-c^2", "d^2"]
# f' = f q with f = C_RELATIONS and f' = C_RELATIONS_ALT
C_CHANGE = [[0, 1, 0], [1, 1, 0], [0, 0, 1]]


def example_c(field=QQ, relations=C_RELATIONS) -> dict:
    R = ci(field, "abcd", relations)
    I = syzygy_module(cyclic(R, C_IDEAL), 1).rename("I")
    return {"ring": R, "I": I}


D_RELATIONS = ["a^2", "b^2", "c^2"]
D_RELATIONS_REVERSED = ["c^2", "b^2", "a^2"]


def example_d(field=QQ, relations=D_RELATIONS) -> dict:
    R = ci(field, "abc", relations)
    return {
        "ring": R,
        "R/I": cyclic(R, ["b"], "R/(b)"),
        "R/J": cyclic(R, ["a*b"], "R/(ab)"),
        "R/(I+J)": cyclic(R, ["b", "a*b"], "R/(b,ab)"),
    }


def example_e(field=QQ) -> dict:
    R = hypersurface_xy(field)
    return {"ring": R, "M": cyclic(R, ["x"], "R/(x)"), "N": cyclic(R, ["y"], "R/(y)")}


def two_points(field=QQ) -> CIRing:
    """k[x,y]/(x^2, y^2)."""
    return ci(field, "xy", ["x^2", "y^2"])


def three_points(field=QQ, relations=D_RELATIONS) -> CIRing:
    """k[a,b,c]/(a^2, b^2, c^2)."""
    return ci(field, "abc", relations)


def line_pair(field=QQ) -> CIRing:
    """k[x,y,z]/(x^2, y^2), a one-dimensional codimension-2 ring."""
    return ci(field, "xyz", ["x^2", "y^2"])


def twisted_pair(field=QQ) -> CIRing:
    """k[x,y]/(x^2 - y^2, xy)."""
    return ci(field, "xy", ["x^2-y^2", "x*y"])
