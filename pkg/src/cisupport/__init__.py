"""Support varieties over graded complete intersections."""

from .algebra import GF, QQ, FieldSpec, make_ring
from .ci import CIRing, RMod, cokernel, cyclic, free, make_ci_ring, minimal_free_resolution, residue_field
from .config import DEFAULT, ENGINE_VERSION, EngineConfig
from .constructions import linear_support_module, module_with_span_support, point_support_module
from .geometry import join, linear_span, secant
from .homological import ext_pair, hom_module, tensor_product, tor, tor_independence
from .support import Scheme, complexity, point_membership, support

__version__ = ENGINE_VERSION

__all__ = [
    "GF", "QQ", "FieldSpec", "make_ring",
    "CIRing", "RMod", "cokernel", "cyclic", "free", "make_ci_ring", "minimal_free_resolution", "residue_field",
    "DEFAULT", "ENGINE_VERSION", "EngineConfig",
    "linear_support_module", "module_with_span_support", "point_support_module",
    "join", "linear_span", "secant",
    "ext_pair", "hom_module", "tensor_product", "tor", "tor_independence",
    "Scheme", "complexity", "point_membership", "support",
]
