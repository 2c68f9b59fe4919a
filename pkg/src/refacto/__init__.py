"""Exact counts of factorizations of Coxeter elements in complex reflection groups.

Closed forms live in :mod:`refacto.closed_forms`; brute-force ground truth in
:mod:`refacto.oracle`; exceptional groups are handled through the character
tables in :mod:`refacto.characters`.
"""
from .closed_forms import (
    all_weights_poly,
    chapuy_stump_counts,
    cycle_type_rhs,
    gd1n_poly,
    gddn_nontransitive_poly,
    gddn_poly,
    gddn_transitive_poly,
    genus0_cycle_type,
    jackson_poly,
    n1cycle_transitive_poly,
    rank2_poly,
    rank3_poly,
    theorem_poly,
)
from .characters import CharTable, exceptional_F, load_char_table
from .oracle import FactorQuery, count_by_fixdim
from .perm_core import Permutation
from .polys import ExpPoly, UniPoly
from .wreath import GenPerm, GroupSpec

__version__ = "0.1.0"

__all__ = [
    "CharTable", "ExpPoly", "FactorQuery", "GenPerm", "GroupSpec", "Permutation", "UniPoly",
    "all_weights_poly", "chapuy_stump_counts", "count_by_fixdim", "cycle_type_rhs", "exceptional_F",
    "gd1n_poly", "gddn_nontransitive_poly", "gddn_poly", "gddn_transitive_poly", "genus0_cycle_type",
    "jackson_poly", "load_char_table", "n1cycle_transitive_poly", "rank2_poly", "rank3_poly", "theorem_poly",
]
