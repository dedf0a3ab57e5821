"""
Dyson's formula h = μAμ⁻¹ + iμ̇μ⁻¹ and the density-matrix consistency check.

The metrics are assembled from the Pauli triple, mode by mode:
    A₁: μ = exp(−βŜ)·exp(αT̂)
    A₂: μ = exp(βŜ)·exp(αÛ·g₁)
With these signs the flow equations remove every non-Hermitian term, leaving
h = Û + νR̂ for A₁ and h = Û + ν·T̂/√Û for A₂.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..ensemble import max_abs
from ..errors import ConditioningError
from ..spectral import PauliTriple, ReducedOperators, mode_diag, mode_exp, pauli_triple
from .flow import FlowSolution
from .hamiltonian import HamiltonianKind, PseudoHermitianPair
from .oracle import rk4_integrate

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12
ODE_TOLERANCE = 1e-6


def dyson_tolerance(ops: ReducedOperators) -> float:
    return 1e-8 * (1.0 + max_abs(ops.u_hat))


def metric(
        kind: HamiltonianKind,
        ops: ReducedOperators,
        flow: FlowSolution,
        t: float,
        triple: Optional[PauliTriple] = None
) -> tuple[np.ndarray, np.ndarray]:
    """
    Returns (μ, μ̇) at time t. A precomputed Pauli triple of ops may be passed in.
    """
    if triple is None:
        triple = pauli_triple(ops)
    x = ops.x
    root = np.sqrt(x)
    alpha, beta = flow.alpha(x, t), flow.beta(x, t)
    alpha_dot, beta_dot = flow.alpha_dot(x, t), flow.beta_dot(x, t)

    if HamiltonianKind(kind) == HamiltonianKind.A1:
        e_s = mode_exp(-beta * root, triple.g2)
        e_t = mode_exp(alpha * x, triple.g3)
        mu = e_s @ e_t
        mu_dot = -mode_diag(beta_dot) @ ops.s_hat @ mu + e_s @ (mode_diag(alpha_dot) @ ops.t_hat) @ e_t
    else:
        e_s = mode_exp(beta * root, triple.g2)
        e_r = mode_exp(alpha * x, triple.g1)
        mu = e_s @ e_r
        mu_dot = mode_diag(beta_dot) @ ops.s_hat @ mu + e_s @ (mode_diag(alpha_dot * x) @ triple.g1) @ e_r
    return mu, mu_dot


def hermitian_target(kind: HamiltonianKind, ops: ReducedOperators, flow: FlowSolution, t: float) -> np.ndarray:
    """Û + νR̂ (A₁) or Û + ν·T̂/√Û (A₂)."""
    nu = mode_diag(flow.nu(ops.x, t))
    if HamiltonianKind(kind) == HamiltonianKind.A1:
        return ops.u_hat + nu @ ops.r_hat
    return ops.u_hat + nu @ ops.t_hat @ ops.u_power(-0.5)


def dyson_transform(a: PseudoHermitianPair, mu: np.ndarray, mu_dot: np.ndarray) -> np.ndarray:
    """
    μAμ⁻¹ + i·μ̇·μ⁻¹.

    Raises:
        ConditioningError: If cond(μ) exceeds 1e12
    """
    condition = float(np.linalg.cond(mu))
    if not np.isfinite(condition) or condition > CONDITION_LIMIT:
        raise ConditioningError(f"Metric condition number {condition:.3e} exceeds {CONDITION_LIMIT:.0e}")
    return _conjugate(a.a_matrix, mu, mu_dot)


def _conjugate(a_matrix: np.ndarray, mu: np.ndarray, mu_dot: np.ndarray) -> np.ndarray:
    mu_inv = np.linalg.inv(mu)
    return mu @ a_matrix @ mu_inv + 1j * mu_dot @ mu_inv


@dataclass(frozen=True)
class DensityEvolutionReport:
    """
    Outcome of the ρ_A versus ρ_h comparison.

    Attributes:
        t: Time grid
        entry_residual: max |μρ_Aμ⁻¹ − ρ_h| per sample
        eigen_residual: max eigenvalue distance per sample
        tolerance: Acceptance threshold for the entrywise residual
    """
    t: np.ndarray
    entry_residual: np.ndarray
    eigen_residual: np.ndarray
    tolerance: float

    @property
    def max_entry_residual(self) -> float:
        return float(np.max(self.entry_residual))

    @property
    def max_eigen_residual(self) -> float:
        return float(np.max(self.eigen_residual))

    @property
    def passed(self) -> bool:
        return self.max_entry_residual < self.tolerance and self.max_eigen_residual < self.tolerance


def _sorted_eigenvalues(rho: np.ndarray) -> np.ndarray:
    values = np.linalg.eigvals(rho)
    return values[np.lexsort((values.imag, values.real))]


def density_evolution_check(
        a: PseudoHermitianPair,
        flow: FlowSolution,
        t_grid: Sequence[float],
        psi: Optional[np.ndarray] = None,
        zero_mu_dot: bool = False,
        tolerance: float = ODE_TOLERANCE
) -> DensityEvolutionReport:
    """
    Evolves ρ_A under iρ̇_A = [A, ρ_A] and ρ_h under the Dyson-transformed h,
    then compares μρ_Aμ⁻¹ with ρ_h at every sample.

    Both evolutions run in the frame rotating with Û, which commutes with A, h
    and μ.

    Args:
        a: Generator A₁ or A₂
        flow: Closed-form flow for a's couplings
        t_grid: Strictly increasing sample times
        psi: Initial pure state of ρ_h (default: normalized (|x_1⟩ + |y_1⟩)/√2)
        zero_mu_dot: Drop the iμ̇μ⁻¹ term from h (fault injection)
        tolerance: Entrywise acceptance threshold
    """
    ops = a.ops
    grid = np.asarray(t_grid, dtype=float)
    if psi is None:
        psi = np.zeros(ops.dim, dtype=complex)
        psi[ops.mode_indices(1)] = 1.0
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)

    triple = pauli_triple(ops)

    def metric_at(t: float) -> tuple[np.ndarray, np.ndarray]:
        mu, mu_dot = metric(a.kind, ops, flow, t, triple=triple)
        return mu, np.zeros_like(mu_dot) if zero_mu_dot else mu_dot

    def transformed(t: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        mu, mu_dot = metric_at(t)
        return mu, np.linalg.inv(mu), dyson_transform(a, mu, mu_dot)

    mu0, mu0_inv, _ = transformed(grid[0])
    rho_h0 = np.outer(psi, psi.conj())
    rho_a0 = mu0_inv @ rho_h0 @ mu0

    a_rot = a.a_matrix - ops.u_hat

    def rhs_a(_t: float, rho: np.ndarray) -> np.ndarray:
        return -1j * (a_rot @ rho - rho @ a_rot)

    # conditioning is checked on the output samples only
    def rhs_h(t: float, rho: np.ndarray) -> np.ndarray:
        h_rot = _conjugate(a.a_matrix, *metric_at(t)) - ops.u_hat
        return -1j * (h_rot @ rho - rho @ h_rot)

    rho_a = rk4_integrate(rhs_a, grid, rho_a0)
    rho_h = rk4_integrate(rhs_h, grid, rho_h0)

    entry = np.empty(grid.size)
    eigen = np.empty(grid.size)
    for i, t in enumerate(grid):
        mu, mu_inv, _ = transformed(t)
        mapped = mu @ rho_a[i] @ mu_inv
        entry[i] = max_abs(mapped - rho_h[i])
        eigen[i] = float(np.max(np.abs(_sorted_eigenvalues(mapped) - _sorted_eigenvalues(rho_h[i]))))

    report = DensityEvolutionReport(t=grid, entry_residual=entry, eigen_residual=eigen, tolerance=tolerance)
    logger.debug(
        f"Density evolution ({a.kind.value}, zero_mu_dot={zero_mu_dot}): "
        f"entry {report.max_entry_residual:.3e}, eigen {report.max_eigen_residual:.3e}"
    )
    return report
