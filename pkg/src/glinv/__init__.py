"""Exact combinatorics and homological invariants of GL-stable ideals in the
coordinate ring of generic m x n matrices.

The classification layer (partitions, ideals) encodes every invariant ideal
as a canonical antichain of partitions. The homological layer (homology,
loccoh, betti) computes graded Ext characters, regularity, local cohomology
multiplicity tables, and equivariant Betti numbers, all in exact integer
arithmetic.
"""

from .betti import BettiPolynomial, BettiTable, betti_polynomial, betti_table, h_rect
from .homology import (
    DegreeWindow,
    ExtComponent,
    ZPair,
    attainable_indices,
    ext_components,
    ext_jzl,
    ext_map_analysis,
    ext_min_degree,
    ext_quotient,
    modules_of,
    regularity,
    saturation_filter,
    zset,
    zset_of_generators,
    zset_power_closed,
)
from .ideals import (
    InvariantIdeal,
    MatrixContext,
    generator_degree,
    ideal_leq,
    make_ideal,
    power_of_minors,
    saturate,
    saturated_power,
    saturation_generators,
    strip_short_columns,
    succ_min,
    symbolic_power,
)
from .loccoh import LCTable, ds_character, lc_support, lc_table
from .partitions import (
    QPolynomial,
    attach,
    conjugate,
    dominant_weight,
    dual_weight,
    enumerate_in_box,
    leq,
    minimalize,
    part,
    partition,
    partitions_of_size_in_box,
    qbinomial,
    size,
    truncate_columns,
)
from .golden import run_golden_checks
from .schur import EquivariantCharacter, IrredTerm, dim_schur, dim_term, ssyt_count

__version__ = "0.1.0"

__all__ = [
    "BettiPolynomial", "BettiTable", "betti_polynomial", "betti_table", "h_rect",
    "DegreeWindow", "ExtComponent", "ZPair", "attainable_indices",
    "ext_components", "ext_jzl", "ext_map_analysis", "ext_min_degree",
    "ext_quotient", "modules_of", "regularity", "saturation_filter", "zset",
    "zset_of_generators", "zset_power_closed", "run_golden_checks",
    "InvariantIdeal", "MatrixContext", "generator_degree", "ideal_leq",
    "make_ideal", "power_of_minors", "saturate", "saturated_power",
    "saturation_generators", "strip_short_columns", "succ_min", "symbolic_power",
    "LCTable", "ds_character", "lc_support", "lc_table",
    "QPolynomial", "attach", "conjugate", "dominant_weight", "dual_weight",
    "enumerate_in_box", "leq", "minimalize", "part", "partition",
    "partitions_of_size_in_box", "qbinomial", "size", "truncate_columns",
    "EquivariantCharacter", "IrredTerm", "dim_schur", "dim_term", "ssyt_count",
    "__version__",
]
