"""Constructions of triangular realisations, one per covered class of sequences."""

from .biregular import (
    havel_hakimi_graph,
    is_dense,
    realize_dense,
    realize_exceptional,
    realize_gap_alpha,
    realize_p_ge_b,
    realize_p_lt_b_gap4,
    realize_small_regular,
)
from .dispatch import realize, realize_spec
from .realization import ConstructionTrace, Realization, certify
from .width1 import realize_regular, realize_width1, standard_regular

__all__ = [
    "ConstructionTrace",
    "Realization",
    "certify",
    "havel_hakimi_graph",
    "is_dense",
    "realize",
    "realize_dense",
    "realize_exceptional",
    "realize_gap_alpha",
    "realize_p_ge_b",
    "realize_p_lt_b_gap4",
    "realize_regular",
    "realize_small_regular",
    "realize_spec",
    "realize_width1",
    "standard_regular",
]
