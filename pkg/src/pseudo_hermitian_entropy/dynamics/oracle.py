"""
Fixed-step fourth-order Runge-Kutta oracle for the flow equations.

The step is refined by doubling the number of sub-steps per grid interval
until two successive refinements agree at every sample (Richardson test).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..errors import ConfigurationError, OracleError
from .flow import a1_rhs, a2_rhs, flow_closed_form
from .params import CouplingParams

logger = logging.getLogger(__name__)

RICHARDSON_TOLERANCE = 1e-8
INITIAL_SUBSTEPS = 8
MAX_DOUBLINGS = 12

Derivative = Callable[[float, np.ndarray], np.ndarray]


def rk4_step(rhs: Derivative, t: float, y: np.ndarray, dt: float) -> np.ndarray:
    k1 = np.asarray(rhs(t, y))
    k2 = np.asarray(rhs(t + 0.5 * dt, y + 0.5 * dt * k1))
    k3 = np.asarray(rhs(t + 0.5 * dt, y + 0.5 * dt * k2))
    k4 = np.asarray(rhs(t + dt, y + dt * k3))
    return y + (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4)


def _check_grid(t_grid: Sequence[float]) -> np.ndarray:
    grid = np.asarray(t_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ConfigurationError("t_grid must be a non-empty 1-D sequence", field="t_grid")
    if np.any(np.diff(grid) <= 0.0):
        raise ConfigurationError("t_grid must be strictly increasing", field="t_grid")
    return grid


def _sweep(rhs: Derivative, grid: np.ndarray, y0: np.ndarray, substeps: int) -> np.ndarray:
    samples = np.empty((grid.size,) + y0.shape, dtype=y0.dtype)
    samples[0] = y0
    y = y0
    for i in range(1, grid.size):
        dt = (grid[i] - grid[i - 1]) / substeps
        t = grid[i - 1]
        for j in range(substeps):
            y = rk4_step(rhs, t + j * dt, y, dt)
        samples[i] = y
    return samples


def rk4_integrate(
        rhs: Derivative,
        t_grid: Sequence[float],
        y0: np.ndarray | Sequence[float],
        tolerance: float = RICHARDSON_TOLERANCE,
        substeps: int = INITIAL_SUBSTEPS,
        max_doublings: int = MAX_DOUBLINGS
) -> np.ndarray:
    """
    Integrates y' = rhs(t, y) and returns y at every grid point.

    The result is accepted once doubling the sub-steps changes no sample by
    more than tolerance·(1 + |y|).

    Raises:
        ConfigurationError: If t_grid is empty or not strictly increasing
        OracleError: If max_doublings refinements do not converge
    """
    grid = _check_grid(t_grid)
    y0 = np.array(y0, dtype=complex if np.iscomplexobj(y0) else float)
    if grid.size == 1:
        return y0[np.newaxis].copy()

    coarse = _sweep(rhs, grid, y0, substeps)
    for doubling in range(max_doublings):
        substeps *= 2
        fine = _sweep(rhs, grid, y0, substeps)
        with np.errstate(invalid="ignore"):
            change = float(np.max(np.abs(fine - coarse) / (1.0 + np.abs(fine))))
        logger.debug(f"RK4 {substeps} sub-steps/interval: max change {change:.3e}")
        if math.isfinite(change) and change < tolerance:
            return fine
        coarse = fine
    raise OracleError(
        f"RK4 did not converge to {tolerance:.1e} after {max_doublings} doublings"
    )


@dataclass(frozen=True)
class OracleTrajectory:
    """
    Numerically integrated flow parameters on a time grid.

    Attributes:
        t: Time grid
        alpha, beta: Integrated trajectories
    """
    t: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray


def flow_ode_oracle(
        params: CouplingParams,
        x: float,
        t_grid: Sequence[float],
        init: Optional[tuple[float, float]] = None
) -> OracleTrajectory:
    """
    Integrates the (α, β) equations for one mode.

    Args:
        params: Couplings
        x: Mode eigenvalue
        t_grid: Strictly increasing sample times
        init: (α₀, β₀) at t_grid[0]; defaults to the closed form there

    Returns:
        OracleTrajectory; a single-point grid returns init unchanged
    """
    grid = _check_grid(t_grid)
    if init is None:
        flow = flow_closed_form(params, x)
        init = (float(flow.alpha(x, grid[0])), float(flow.beta(x, grid[0])))
    samples = rk4_integrate(a1_rhs(params, x), grid, np.array(init, dtype=float))
    return OracleTrajectory(t=grid, alpha=samples[:, 0], beta=samples[:, 1])


@dataclass(frozen=True)
class A2FlowFinding:
    """
    Comparison of the A₂ flow equations with ξ_I = ν_I.

    Attributes:
        x: Mode eigenvalue
        t: Time grid
        xi_integral: Integrated ξ from the A₂ equations, relative to t_grid[0]
        gamma_shift: γ(t) − γ(t₀) from the closed form
        discrepancy: max |√x·ξ_I − (γ(t) − γ(t₀))|
    """
    x: float
    t: np.ndarray
    xi_integral: np.ndarray
    gamma_shift: np.ndarray
    discrepancy: float


def a2_flow_discrepancy(params: CouplingParams, x: float, t_grid: Sequence[float]) -> A2FlowFinding:
    """
    Integrates the A₂ equations for (δ, ζ) and accumulates ξ.

    Initial values map the A₁ closed form (δ₀ = α√x, ζ₀ = β) at t_grid[0].
    """
    grid = _check_grid(t_grid)
    flow = flow_closed_form(params, x)
    t0 = grid[0]
    y0 = np.array([float(flow.delta(x, t0)), float(flow.zeta(x, t0)), 0.0])
    samples = rk4_integrate(a2_rhs(params, x), grid, y0)
    xi_integral = samples[:, 2]
    gamma_shift = flow.gamma(x, grid) - flow.gamma(x, t0)
    discrepancy = float(np.max(np.abs(math.sqrt(x) * xi_integral - gamma_shift)))
    logger.debug(f"A2 flow at x={x:.6g}: discrepancy {discrepancy:.3e}")
    return A2FlowFinding(
        x=x, t=grid, xi_integral=xi_integral, gamma_shift=gamma_shift, discrepancy=discrepancy
    )
