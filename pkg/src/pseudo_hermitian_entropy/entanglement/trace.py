"""
Entropy traces S(t) for a Bell pair, plus the figure diagnostics built on Δ(t).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd
from scipy import optimize

from ..dynamics import CouplingParams, FlowSolution, flow_closed_form
from ..spectral import ReducedOperators
from .bell import BellPair, evolve, evolve_brute_force, initial_state
from .density import (
    closed_form_lambdas,
    entropy_from_lambdas,
    partial_trace,
    reduced_density_by_contraction,
    von_neumann,
)

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ["t", "delta", "lambda1", "lambda2", "entropy"]


@dataclass(frozen=True)
class EntropyTrace:
    """
    Sampled entropy of one experiment.

    lambda1/lambda2/entropy follow ½(1 ± sinθ·cos2Δ). When the trace is
    cross-checked, state_entropy holds the entropy of the evolved χ(t) itself
    and the residuals compare the closed-form evolution with the dense oracle.

    Attributes:
        t, delta, lambda1, lambda2, entropy: Per-sample arrays
        theta: Initial mixing angle
        pair: Bell pair
        state_entropy: Entropy from the partial trace of χ(t), if cross-checked
        evolve_residual: max |χ_closed − χ_dense| over the samples
        contraction_residual: max |λ(ΛΛ†) − λ(index contraction)| over the samples
    """
    t: np.ndarray
    delta: np.ndarray
    lambda1: np.ndarray
    lambda2: np.ndarray
    entropy: np.ndarray
    theta: float
    pair: BellPair
    state_entropy: Optional[np.ndarray] = None
    evolve_residual: Optional[float] = None
    contraction_residual: Optional[float] = None

    @property
    def model_gap(self) -> Optional[float]:
        """max |S_closed − S_state|; None without cross-check."""
        if self.state_entropy is None:
            return None
        return float(np.max(np.abs(self.entropy - self.state_entropy)))

    def records(self) -> list[tuple[float, float, float, float, float]]:
        return list(zip(*(self.t, self.delta, self.lambda1, self.lambda2, self.entropy)))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "t": self.t,
            "delta": self.delta,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "entropy": self.entropy,
        }, columns=TRACE_COLUMNS)


def delta_of_t(flow: FlowSolution, pair: BellPair, t: np.ndarray | float) -> np.ndarray:
    return flow.gamma(pair.x_m, t) + flow.gamma(pair.x_n, t)


def entropy_trace(
        ops: ReducedOperators,
        params: CouplingParams,
        pair: BellPair,
        theta: float,
        t_grid: Sequence[float],
        flow: Optional[FlowSolution] = None,
        cross_check: bool = True
) -> EntropyTrace:
    """
    Computes S(t) on t_grid from λ₁,₂ = ½(1 ± sinθ·cos2Δ(t)).

    With cross_check, every sample is also evolved by the closed-form rule and
    by the dense 4×4 oracle, and reduced by both partial-trace routes.
    """
    if flow is None:
        flow = flow_closed_form(params, [pair.x_m, pair.x_n])
    grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    delta = delta_of_t(flow, pair, grid)
    lambda1, lambda2 = closed_form_lambdas(theta, delta)
    entropy = entropy_from_lambdas(lambda1, lambda2)

    state_entropy = None
    evolve_residual = None
    contraction_residual = None
    if cross_check:
        start = initial_state(theta, pair, t=float(grid[0]))
        state_entropy = np.empty(grid.size)
        evolve_residual = 0.0
        contraction_residual = 0.0
        for i, t in enumerate(grid):
            closed = evolve(start, flow, float(t))
            dense = evolve_brute_force(start, ops, flow, float(t))
            evolve_residual = max(evolve_residual, float(np.max(np.abs(closed.chi - dense.chi))))
            reduced = partial_trace(dense)
            contracted = reduced_density_by_contraction(dense.chi)
            contraction_residual = max(
                contraction_residual,
                abs(reduced.lambda1 - contracted.lambda1),
                float(np.max(np.abs(reduced.rho - contracted.rho))),
            )
            state_entropy[i] = von_neumann(reduced)

    trace = EntropyTrace(
        t=grid,
        delta=delta,
        lambda1=lambda1,
        lambda2=lambda2,
        entropy=entropy,
        theta=theta,
        pair=pair,
        state_entropy=state_entropy,
        evolve_residual=evolve_residual,
        contraction_residual=contraction_residual,
    )
    logger.debug(
        f"Entropy trace ({pair.generator.value}, m={pair.m_index}, n={pair.n_index}): "
        f"{grid.size} samples, S max {float(np.max(entropy)):.6f}"
    )
    return trace


def first_time_at(
        flow: FlowSolution,
        pair: BellPair,
        delta_target: float,
        t_start: float,
        t_end: float,
        scan_points: int = 2001
) -> Optional[float]:
    """
    First t in [t_start, t_end] with Δ(t) = delta_target, refined by brentq.

    Returns:
        The crossing time, or None if Δ never reaches the target in the window
    """
    grid = np.linspace(t_start, t_end, scan_points)
    offset = delta_of_t(flow, pair, grid) - delta_target
    if offset[0] == 0.0:
        return float(grid[0])
    crossings = np.nonzero(np.sign(offset[:-1]) * np.sign(offset[1:]) <= 0)[0]
    if crossings.size == 0:
        return None
    i = int(crossings[0])
    if offset[i + 1] == 0.0:
        return float(grid[i + 1])
    return float(optimize.brentq(
        lambda t: float(delta_of_t(flow, pair, t)) - delta_target, grid[i], grid[i + 1], xtol=1e-14
    ))


def entropy_at_delta(theta: float, delta: float) -> float:
    lambda1, lambda2 = closed_form_lambdas(theta, delta)
    return float(entropy_from_lambdas(lambda1, lambda2))


def asymptotic_entropy(x_m: float, x_n: float, params: CouplingParams, theta: float) -> float:
    """
    S at Δ∞ = γ∞(x_m) + γ∞(x_n) (broken regime or exceptional point).
    """
    flow = flow_closed_form(params, [x_m, x_n])
    delta_inf = 2.0 * flow.gamma_infinity()
    return entropy_at_delta(theta, delta_inf)