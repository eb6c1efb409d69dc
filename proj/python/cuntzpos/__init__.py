"""Positivity of Hermitian elements of M_p(S_n), the operator system of the
Cuntz isometries, with primal/dual certificates and Fock-space oracles."""

from ._core import (
    NotContractionError,
    ShapeError,
    choi_min_eig,
    compress_element,
    creation_matrix,
    criterion_matrix,
    decide_positivity,
    dilate,
    fock_min_eig,
    psi_choi_check,
    scalar_law,
    ucp_evaluate,
    verify_dual,
    verify_primal,
    words_mul,
)

__all__ = [
    "NotContractionError",
    "ShapeError",
    "choi_min_eig",
    "compress_element",
    "creation_matrix",
    "criterion_matrix",
    "decide_positivity",
    "dilate",
    "fock_min_eig",
    "psi_choi_check",
    "scalar_law",
    "ucp_evaluate",
    "verify_dual",
    "verify_primal",
    "words_mul",
]
