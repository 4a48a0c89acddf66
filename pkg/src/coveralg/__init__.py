"""Vertex cover algebras of simplicial complexes: covers, cycles, leaves and ideals."""

from .complex_core import (
    ComplexError,
    SimplicialComplex,
    ZeroOneMatrix,
    dual,
    incidence_matrix,
    new_complex,
    one_skeleton,
    polarize,
)
from .covers import decompose_cover, generator_set, is_standard_graded, minimal_k_covers
from .cycles import CycleWitness, find_special_cycle, is_balanced, is_totally_balanced
from .limits import GuardExceeded, limits
from .mengerian import is_mengerian_bounded, min_max_gap
from .structure import good_leaf_order, is_forest, is_quasi_forest, leaf_order

__version__ = "0.1.0"

__all__ = [
    "ComplexError", "CycleWitness", "GuardExceeded", "SimplicialComplex", "ZeroOneMatrix",
    "decompose_cover", "dual", "find_special_cycle", "generator_set", "good_leaf_order",
    "incidence_matrix", "is_balanced", "is_forest", "is_mengerian_bounded", "is_quasi_forest",
    "is_standard_graded", "is_totally_balanced", "leaf_order", "limits", "min_max_gap",
    "minimal_k_covers", "new_complex", "one_skeleton", "polarize",
]
