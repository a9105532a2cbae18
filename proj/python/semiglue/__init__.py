"""Numerical and affine semigroup rings: gluings, toric ideals, Betti numbers."""

from ._semiglue import (
    AlgebraError,
    InputError,
    ResourceError,
    acm_projective_closure,
    betti_table,
    cm_tangent_cone,
    contains,
    frobenius,
    gaps,
    gorenstein_projective_closure,
    hilbert_function,
    pseudo_frobenius,
    pseudo_frobenius_affine,
    run,
    schema_version,
    toric_ideal,
)

__all__ = [
    "AlgebraError",
    "InputError",
    "ResourceError",
    "acm_projective_closure",
    "betti_table",
    "cm_tangent_cone",
    "contains",
    "frobenius",
    "gaps",
    "gorenstein_projective_closure",
    "hilbert_function",
    "pseudo_frobenius",
    "pseudo_frobenius_affine",
    "run",
    "schema_version",
    "toric_ideal",
]
