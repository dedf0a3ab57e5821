"""
Reduced density matrix of mode m and its von Neumann entropy (natural log).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import entr

from ..errors import NumericalValidityError
from .bell import EvolvedState

VALIDITY_TOLERANCE = 1e-10
LOG_BASE = "e"


@dataclass(frozen=True)
class ReducedDensity:
    """
    Attributes:
        rho: 2×2 Hermitian density matrix of mode m
        lambda1: Eigenvalue paired with the |+⟩⟨+| population
        lambda2: The other eigenvalue (λ₁ + λ₂ = 1)
    """
    rho: np.ndarray
    lambda1: float
    lambda2: float


def _density(rho: np.ndarray) -> ReducedDensity:
    rho = 0.5 * (rho + rho.conj().T)
    low, high = np.linalg.eigvalsh(rho)
    if rho[0, 0].real >= rho[1, 1].real:
        return ReducedDensity(rho=rho, lambda1=float(high), lambda2=float(low))
    return ReducedDensity(rho=rho, lambda1=float(low), lambda2=float(high))


def partial_trace(state: EvolvedState) -> ReducedDensity:
    """
    Traces out mode n: ρᵐ = ΛΛ† with Λ the 2×2 coefficient matrix of χ.

    This is the reduced density of the evolved state itself. It is not
    ½diag(1 + sinθ·cos2Δ, 1 − sinθ·cos2Δ): the evolution acts locally on each
    mode, so the eigenvalues of ΛΛ† stay at ½(1 ± sinθ) for every t. The
    Δ-dependent weights are given by closed_form_lambdas.
    """
    coefficients = np.asarray(state.chi).reshape(2, 2)
    return _density(coefficients @ coefficients.conj().T)


def reduced_density_by_contraction(chi: np.ndarray) -> ReducedDensity:
    """Partial trace of |χ⟩⟨χ| by explicit index contraction ρ_ik = Σ_j P_(ij),(kj)."""
    projector = np.outer(chi, np.conj(chi))
    rho = np.zeros((2, 2), dtype=complex)
    for i in range(2):
        for k in range(2):
            for j in range(2):
                rho[i, k] += projector[2 * i + j, 2 * k + j]
    return _density(rho)


def closed_form_lambdas(theta: float, delta: np.ndarray | float) -> tuple[np.ndarray, np.ndarray]:
    """λ₁,₂ = ½(1 ± sinθ·cos2Δ)."""
    contrast = math.sin(theta) * np.cos(2.0 * np.asarray(delta, dtype=float))
    return 0.5 * (1.0 + contrast), 0.5 * (1.0 - contrast)


def entropy_from_lambdas(lambda1: np.ndarray | float, lambda2: np.ndarray | float) -> np.ndarray:
    """−λ₁lnλ₁ − λ₂lnλ₂ with 0·ln0 = 0."""
    return entr(np.clip(lambda1, 0.0, 1.0)) + entr(np.clip(lambda2, 0.0, 1.0))


def von_neumann(rho: ReducedDensity, tolerance: float = VALIDITY_TOLERANCE) -> float:
    """
    Raises:
        NumericalValidityError: If an eigenvalue lies outside [−tol, 1 + tol]
    """
    for value in (rho.lambda1, rho.lambda2):
        if not -tolerance <= value <= 1.0 + tolerance:
            raise NumericalValidityError(f"Density eigenvalue {value:.3e} outside [0, 1]")
    return float(entropy_from_lambdas(rho.lambda1, rho.lambda2))
