"""Comparative text analysis over finite Boolean rings."""
from .cluster import (
    ClusterWitness,
    cluster_atoms,
    cluster_via_gram,
    cluster_via_m,
    pattern_feasible,
    stack_characteristics,
    witness_partition,
)
from .corpus import CodedText, StatementCatalog, code_text, load_catalog, rho
from .module import (
    BrMatrix,
    KernelBasis,
    Modus,
    gramian,
    in_kernel,
    is_invariant_submodule,
    kernel_basis,
    matvec,
    pair_dot,
    random_kernel_element,
    similarity_matrix,
    split_kernel_element,
)
from .pext import Order, Pext, and_, compare, complement, is_zero_divisor_pair, restrict, union, union_fold, xor
from .transform import ComplexityReport, TransformSpec, apply_transform, complexity_report, eigen_restrict, galerkin
from .zerodiv import Assignment, SearchStats, check_assignment, solve_bruteforce, solve_random

__version__ = "0.1.0"
