"""Fundamental decompositions, fundamental symmetries and J-norms of
finite-dimensional Krein spaces, with constructions of symmetries that give
a vector any admissible norm."""

from .catalog import (
    alternating_l2,
    eg1_closed_form,
    eg1_solve_norm,
    eg1_symmetry,
    example_final_decomposition,
    minkowski,
)
from .decomposition import (
    FundamentalDecomposition,
    FundamentalSymmetry,
    SymmetryReport,
    canonical_decomposition,
    complete_basis,
    decomposition_from_bases,
    decomposition_from_positive_subspace,
    j_inner,
    j_norm,
    symmetry_from_matrix,
    symmetry_of,
    verify_symmetry,
)
from .errors import KreinError
from .prescribe import (
    NormRange,
    TargetTrace,
    norm_range,
    sandwich,
    scaling_symmetry,
    strictly_larger,
    target_norm,
)
from .sequences import SequenceRow, diverging, ratio_neutral, ratio_orthogonal, vanishing
from .space import KreinSpace, VectorClass, classify, inner, is_neutral, make_space

__version__ = "0.1.0"
