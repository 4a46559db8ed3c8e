"""Partial orders on standard Young tableaux and their cross-checks."""

from .partitions import Partition, conjugate, partition_covers, shape_geq
from .tableaux import (
    Tableau,
    col_insert,
    enumerate_tableaux,
    phi_chain,
    row_insert,
    shift_entries,
    standardize,
    taquin_project,
    tau,
    transpose,
    varphi_grid,
)
from .permutations import Word, duflo_leq, rs, rs_inverse, tau_word
from .vogan import AdjacentPair, in_domain, t_ab_reachable, t_ab_tableau, t_ab_word
from .orders import (
    OrderRelation,
    chain_pair,
    chain_relation,
    diff,
    duflo_vogan,
    hasse_covers,
    induced_duflo,
    is_extension,
    transitive_closure,
    vogan_chain,
)
from .kl import KLTable, cell_preorder, kl_table, left_cells
from .spaltenstein import jordan_type, sample_generic, steinberg_support, verify_double_chain

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
