"""Cellular homology over GF(2), homological Conley indices, and connection matrices."""

from .chain_complex import (
    ChainComplex,
    CwComplex,
    HomologyData,
    NotAComplex,
    builtin,
    disjoint_union,
    from_cw,
    homology,
    reduce,
)
from .conley_index import (
    BettiVector,
    attractor_index,
    hyperbolic_equilibrium_index,
    periodic_orbit_index,
    wedge,
)
from .gf2 import Gf2Matrix, block_assemble, image_basis, kernel_basis, rank, solve as gf2_solve
from .morse import (
    Interval,
    IntervalConstraint,
    MorseComponent,
    MorseDecomposition,
    MorseSet,
    interval_subspace,
    total_space,
    validate,
)
from .scenarios import chafee_infante, delay_scenario
from .solver import (
    ConnectionMatrix,
    EntryVariable,
    SolverOptions,
    SolverReport,
    VariableBudgetExceeded,
    check_interval,
    check_symmetry,
    enumerate_variables,
    solve,
)
from .zigzag import (
    ChainMap,
    ShortExactSequence,
    check_exactness,
    connecting_homomorphism,
    long_exact_sequence,
    split_ses,
    twist_extension,
    validate_ses,
)

__version__ = "0.1.0"
