"""
Reduced operators Û, R̂, Ŝ, T̂ in the ordered basis (|x_1⟩…|x_M⟩, |y_1⟩…|y_M⟩).

Ŝ is built with √x_k on both blocks (the scaling that gives it the
eigenvalues ±√x_k).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np

from ..ensemble import OperatorQuartet, max_abs
from .schmidt import RANK_TOLERANCE, SchmidtBasis


def mode_diag(values: np.ndarray) -> np.ndarray:
    """diag(v_1…v_M, v_1…v_M): a per-mode function of Û as a 2M×2M matrix."""
    values = np.asarray(values)
    return np.diag(np.concatenate([values, values]))


@dataclass(frozen=True)
class ReducedOperators:
    """
    Attributes:
        x: Mode eigenvalues x_k (descending)
        u_hat, r_hat, s_hat, t_hat: 2M×2M complex matrices
    """
    x: np.ndarray
    u_hat: np.ndarray
    r_hat: np.ndarray
    s_hat: np.ndarray
    t_hat: np.ndarray

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def dim(self) -> int:
        return 2 * len(self.x)

    @property
    def tol_alg(self) -> float:
        return 1e-10 * max(1.0, float(np.max(self.x)))

    @property
    def tol_rank(self) -> float:
        return RANK_TOLERANCE * float(np.max(self.x))

    def is_full_rank(self) -> bool:
        return bool(np.all(self.x > self.tol_rank))

    def u_power(self, exponent: float) -> np.ndarray:
        """Û^exponent, evaluated on the diagonal."""
        return mode_diag(self.x ** exponent).astype(complex)

    def mode_indices(self, k: int) -> list[int]:
        """Positions of |x_k⟩ and |y_k⟩ (k is 1-based)."""
        return [k - 1, self.m + k - 1]


def reduced_from_eigenvalues(x: np.ndarray) -> ReducedOperators:
    """Analytic reduced operators for a given spectrum x_k."""
    x = np.asarray(x, dtype=float)
    m = len(x)
    root = np.diag(np.sqrt(x)).astype(complex)
    zero = np.zeros((m, m), dtype=complex)
    diag_x = np.diag(x).astype(complex)

    u_hat = mode_diag(x).astype(complex)
    t_hat = np.block([[diag_x, zero], [zero, -diag_x]])
    r_hat = np.block([[zero, root], [root, zero]])
    s_hat = np.block([[zero, -1j * root], [1j * root, zero]])
    for array in (u_hat, r_hat, s_hat, t_hat):
        array.setflags(write=False)
    return ReducedOperators(x=x, u_hat=u_hat, r_hat=r_hat, s_hat=s_hat, t_hat=t_hat)


def reduced_operators(basis: SchmidtBasis) -> ReducedOperators:
    return reduced_from_eigenvalues(np.array(basis.x))


def projection_residuals(
        quartet: OperatorQuartet,
        basis: SchmidtBasis,
        ops: ReducedOperators
) -> Dict[str, float]:
    """
    Compares V†·X·V with the analytic reduced form for X in R, S, T, U.
    """
    v = basis.basis_matrix
    pairs = {
        "R": (quartet.r, ops.r_hat),
        "S": (quartet.s, ops.s_hat),
        "T": (quartet.t, ops.t_hat),
        "U": (quartet.u, ops.u_hat),
    }
    return {name: max_abs(v.conj().T @ full @ v - reduced) for name, (full, reduced) in pairs.items()}


def generator_spectrum_residual(ops: ReducedOperators) -> float:
    """Distance of the spectra of r̂, ŝ and t̂·Û^{-1/2} from the multiset {±√x_k}.

    t̂ itself is diag(x, −x); its spectrum {±x_k} is covered by rescaling.
    """
    expected = np.sort(np.concatenate([np.sqrt(ops.x), -np.sqrt(ops.x)]))
    worst = 0.0
    for op in (ops.r_hat, ops.s_hat, ops.t_hat @ ops.u_power(-0.5)):
        values = np.sort(np.linalg.eigvalsh(op))
        worst = max(worst, float(np.max(np.abs(values - expected))))
    return worst
