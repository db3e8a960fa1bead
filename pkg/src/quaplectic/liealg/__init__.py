"""Lie algebras by structure constants: Jacobi checks, central extensions, contractions."""

from .algebra import (
    LieAlgebra,
    bracket,
    center,
    fingerprint,
    from_matrices,
    jacobi_residual,
    jacobi_tensor,
    killing_form,
)
from .catalog import (
    CATALOG_NAMES,
    abelian,
    builtin_algebra,
    hamilton,
    hamilton_matrices,
    heisenberg,
    inhom_unitary,
    parse_algebra_name,
    poincare,
    quaplectic,
    unitary,
)
from .cohomology import (
    CocycleSolution,
    central_extensions,
    coboundary_distance,
    cocycle_residual,
    extend,
)
from .contraction import ContractionWeights, bracket_degrees, contract, preset_weights

__all__ = [
    "LieAlgebra", "bracket", "center", "fingerprint", "from_matrices", "jacobi_residual",
    "jacobi_tensor", "killing_form", "CATALOG_NAMES", "abelian", "builtin_algebra", "hamilton",
    "hamilton_matrices", "heisenberg", "inhom_unitary", "parse_algebra_name", "poincare",
    "quaplectic", "unitary", "CocycleSolution", "central_extensions", "coboundary_distance",
    "cocycle_residual", "extend", "ContractionWeights", "bracket_degrees", "contract",
    "preset_weights",
]
