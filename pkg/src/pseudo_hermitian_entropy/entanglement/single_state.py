"""
Evolution of one Bloch state cos(θ/2)|x_k⟩ + sin(θ/2)e^{iφ}|y_k⟩ under h.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..dynamics import FlowSolution
from ..errors import ModeIndexError
from ..spectral import BlochVector, ReducedOperators, pauli_triple
from .bell import BellGenerator


@dataclass(frozen=True)
class SingleStateEvolution:
    """
    Attributes:
        t: Sample times
        gamma: γ(x_k, t)
        chi: (len(t), 2) amplitudes on (|x_k⟩, |y_k⟩)
        p_x, p_y: Populations |χ_x|², |χ_y|²
    """
    t: np.ndarray
    gamma: np.ndarray
    chi: np.ndarray
    p_x: np.ndarray
    p_y: np.ndarray

    def density(self, i: int) -> np.ndarray:
        """|χ⟩⟨χ| at sample i."""
        return np.outer(self.chi[i], self.chi[i].conj())


def evolve_single_state(
        ops: ReducedOperators,
        flow: FlowSolution,
        k: int,
        bloch: BlochVector,
        t_grid: np.ndarray | float,
        generator: BellGenerator | str = BellGenerator.R
) -> SingleStateEvolution:
    """
    Applies e^{−ix_k t}·e^{−iγ g} with g the 2×2 block of g₁ (R) or g₃ (T) at mode k.
    """
    if not 1 <= k <= ops.m:
        raise ModeIndexError(f"k={k} outside 1..{ops.m}")
    generator = BellGenerator(generator)
    block = pauli_triple(ops).mode_block(generator.axis, ops.mode_indices(k))
    x_k = float(ops.x[k - 1])
    grid = np.atleast_1d(np.asarray(t_grid, dtype=float))
    gamma = np.asarray(flow.gamma(x_k, grid), dtype=float)

    chi0 = np.array([math.cos(bloch.theta / 2), math.sin(bloch.theta / 2) * np.exp(1j * bloch.phi)])
    chi = np.empty((grid.size, 2), dtype=complex)
    eye = np.eye(2)
    for i, (t, g) in enumerate(zip(grid, gamma)):
        propagator = np.exp(-1j * x_k * t) * (math.cos(g) * eye - 1j * math.sin(g) * block)
        chi[i] = propagator @ chi0
    return SingleStateEvolution(
        t=grid,
        gamma=gamma,
        chi=chi,
        p_x=np.abs(chi[:, 0]) ** 2,
        p_y=np.abs(chi[:, 1]) ** 2,
    )


def printed_rotation(theta: float, gamma: np.ndarray | float) -> tuple[np.ndarray, np.ndarray]:
    """(cos(θ/2 − γ), sin(θ/2 − γ)): the R-generator amplitudes at φ = π/2, up to phases."""
    gamma = np.asarray(gamma, dtype=float)
    return np.cos(theta / 2 - gamma), np.sin(theta / 2 - gamma)
