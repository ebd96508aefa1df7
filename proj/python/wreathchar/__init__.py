"""Products of irreducible characters of the wreath product C_p wr C_p.

Thin python surface over the C++ core: the tuple calculus for induced
characters, the exact cyclotomic referee, and the distinct-constituent
search harness.
"""

from ._core import (
    BoundCheck,
    CyclotomicInt,
    Decomposition,
    InducedChar,
    LinearExtChar,
    OrbitRep,
    PairWitness,
    Prime,
    SearchConfig,
    SearchMode,
    SearchReport,
    ShardSpec,
    SymmetryFlags,
    TheoremReport,
    Tuple,
    add,
    canonical_rotation,
    count_distinct,
    decompose,
    enumerate_faithful_reps,
    faithfulness_oracle,
    induced_value_on_A,
    inner_product_over_A,
    is_faithful_inducing,
    is_irreducible_inducing,
    linear_char_value,
    merge_reports,
    oracle_decompose,
    product_sums,
    reduced_pair_stream,
    rotated,
    rotations,
    run_search,
    scale,
    verify_theorem,
)

from ._core import __version__ as __version__

__all__ = [
    "BoundCheck",
    "CyclotomicInt",
    "Decomposition",
    "InducedChar",
    "LinearExtChar",
    "OrbitRep",
    "PairWitness",
    "Prime",
    "SearchConfig",
    "SearchMode",
    "SearchReport",
    "ShardSpec",
    "SymmetryFlags",
    "TheoremReport",
    "Tuple",
    "add",
    "canonical_rotation",
    "count_distinct",
    "decompose",
    "enumerate_faithful_reps",
    "faithfulness_oracle",
    "induced_value_on_A",
    "inner_product_over_A",
    "is_faithful_inducing",
    "is_irreducible_inducing",
    "linear_char_value",
    "merge_reports",
    "oracle_decompose",
    "product_sums",
    "reduced_pair_stream",
    "rotated",
    "rotations",
    "run_search",
    "scale",
    "verify_theorem",
]
