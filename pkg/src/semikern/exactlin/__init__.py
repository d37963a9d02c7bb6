"""Exact linear algebra over F_p and over the integers."""

from .matrix import Matrix
from .modp import (
    Subspace,
    all_subspaces,
    complement_projection,
    contains,
    full_subspace,
    image_basis,
    image_of,
    inverse,
    is_prime,
    kernel_basis,
    preimage_of,
    rank,
    rref,
    rref_with_pivots,
    solve,
    span,
    subspace_join,
    subspace_leq,
    subspace_meet,
    zero_subspace,
)
from .integer import (
    SnfResult,
    determinant,
    hnf_rows,
    int_inverse,
    int_kernel,
    snf,
    solve_congruences,
    solve_int,
)
