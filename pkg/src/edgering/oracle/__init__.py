"""Exact semigroup machinery used to cross-check the combinatorial decisions."""
from .cone import cone_member
from .lattice import lattice_member
from .semigroup import (
    GenerationVerdict,
    OracleVerdict,
    T1Result,
    T2Result,
    oracle_normality,
    t1_member,
    t2_member_bounded,
    verify_generation,
)
from .walks import (
    ClosedWalk,
    Reduction,
    WalkDecomposition,
    find_reducing_closed_walk,
    is_forest_unicyclic_odd,
    is_reducing_closed_walk,
    reduce_to_forest_unicyclic,
    verify_identity_weights,
)
