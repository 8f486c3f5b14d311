"""Flopping algebras: hypersurfaces, matrix factorizations and contraction algebras."""

from ._core import (
    BudgetExceeded,
    DomainError,
    FlopcalcError,
    ParseError,
    UsageError,
    builtin_names,
    classifying_map_names,
    contraction,
    dimension,
    gv_invariants,
    hypersurface,
    matrix_factorization,
    normal_form,
    presentation,
    run,
    verify_representation,
    verify_superpotential,
)

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "FlopcalcError",
    "ParseError",
    "UsageError",
    "builtin_names",
    "classifying_map_names",
    "contraction",
    "dimension",
    "gv_invariants",
    "hypersurface",
    "matrix_factorization",
    "normal_form",
    "presentation",
    "run",
    "verify_representation",
    "verify_superpotential",
]
