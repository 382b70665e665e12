"""Free-group words, finite presentations, the Adjan-Rabin construction and
the bookkeeping around it, backed by a C++ core."""

from ._core import (
    Error,
    InputError,
    ParseError,
    PreconditionError,
    Presentation,
    Word,
    abelian_invariants,
    build_pw,
    build_qw,
    check_condition_21,
    enumerate_cosets,
    extended_gcd,
    generator_orders,
    hom_count,
    is_free_basis,
    nielsen_reduce,
    predict_boundary,
    rhs_basis_set,
    run_pipeline,
    slide_reduce,
    tietze_eliminate,
    wp_cyclic_free_product,
)

__all__ = [
    "Error",
    "InputError",
    "ParseError",
    "PreconditionError",
    "Presentation",
    "Word",
    "abelian_invariants",
    "build_pw",
    "build_qw",
    "check_condition_21",
    "enumerate_cosets",
    "extended_gcd",
    "generator_orders",
    "hom_count",
    "is_free_basis",
    "nielsen_reduce",
    "predict_boundary",
    "rhs_basis_set",
    "run_pipeline",
    "slide_reduce",
    "tietze_eliminate",
    "wp_cyclic_free_product",
]
