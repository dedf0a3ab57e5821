"""
Spectral layer: Schmidt basis, reduced operators, Pauli triple and Bloch projector.
"""
from .pauli import (
    Axis,
    BlochVector,
    PauliTriple,
    bch_conjugate,
    bch_expansion,
    bloch_projector,
    bloch_state,
    generator_eigenvectors,
    mode_exp,
    pauli_residuals,
    pauli_triple,
    projected_triple,
)
from .reduced import (
    ReducedOperators,
    generator_spectrum_residual,
    mode_diag,
    projection_residuals,
    reduced_from_eigenvalues,
    reduced_operators,
)
from .schmidt import (
    SchmidtBasis,
    SchmidtSample,
    eigen_residual,
    pairing_residual,
    sample_schmidt,
    schmidt_basis,
)

__all__ = [
    "SchmidtBasis",
    "SchmidtSample",
    "schmidt_basis",
    "sample_schmidt",
    "pairing_residual",
    "eigen_residual",
    "ReducedOperators",
    "reduced_operators",
    "reduced_from_eigenvalues",
    "projection_residuals",
    "generator_spectrum_residual",
    "mode_diag",
    "Axis",
    "PauliTriple",
    "pauli_triple",
    "projected_triple",
    "pauli_residuals",
    "mode_exp",
    "bch_conjugate",
    "bch_expansion",
    "BlochVector",
    "bloch_projector",
    "bloch_state",
    "generator_eigenvectors",
]
