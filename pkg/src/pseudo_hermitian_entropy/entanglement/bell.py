"""
Bell states of generator eigenstates and their evolution under h.

Qubit q of mode k is spanned by the generator's eigenstates: |X±_k⟩ for R̂,
|Z±_k⟩ = |x_k⟩, |y_k⟩ for T̂. Two-mode states are 4-vectors in the ordered
product basis (++, +−, −+, −−), first factor mode m.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import scipy.linalg

from ..dynamics import FlowSolution
from ..errors import ModeIndexError
from ..spectral import Axis, ReducedOperators, pauli_triple

logger = logging.getLogger(__name__)

_SQRT_HALF = 1.0 / math.sqrt(2.0)


class BellGenerator(str, Enum):
    """Generator whose eigenstates form the qubits"""
    R = "R"
    T = "T"

    @property
    def axis(self) -> Axis:
        return Axis.X if self == BellGenerator.R else Axis.Z


@dataclass(frozen=True)
class BellPair:
    """
    Two modes (m, n) and the generator whose eigenstates build Φ±.

    Attributes:
        m_index, n_index: 1-based mode indices
        generator: R or T
        x_m, x_n: Eigenvalues of the two modes
    """
    m_index: int
    n_index: int
    generator: BellGenerator
    x_m: float
    x_n: float

    @property
    def phi_plus(self) -> np.ndarray:
        return np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) * _SQRT_HALF

    @property
    def phi_minus(self) -> np.ndarray:
        return np.array([1.0, 0.0, 0.0, -1.0], dtype=complex) * _SQRT_HALF

    @property
    def qubit_basis(self) -> np.ndarray:
        """Columns are the (+, −) eigenstates in (|x_k⟩, |y_k⟩) coordinates."""
        if self.generator == BellGenerator.R:
            return np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) * _SQRT_HALF
        return np.eye(2, dtype=complex)

    def embed(self, chi: np.ndarray) -> np.ndarray:
        """Qubit-basis coefficients to mode-product (x, y) coordinates."""
        basis = self.qubit_basis
        return np.kron(basis, basis) @ chi

    def extract(self, psi: np.ndarray) -> np.ndarray:
        basis = self.qubit_basis
        return np.kron(basis, basis).conj().T @ psi


def make_bell_pair(ops: ReducedOperators, m_index: int, n_index: int, generator: BellGenerator | str) -> BellPair:
    """
    Raises:
        ModeIndexError: If an index is outside 1..M or m == n
    """
    for name, index in (("m_index", m_index), ("n_index", n_index)):
        if not 1 <= index <= ops.m:
            raise ModeIndexError(f"{name}={index} outside 1..{ops.m}")
    if m_index == n_index:
        raise ModeIndexError(f"Bell pair needs two distinct modes (got {m_index} twice)")
    return BellPair(
        m_index=m_index,
        n_index=n_index,
        generator=BellGenerator(generator),
        x_m=float(ops.x[m_index - 1]),
        x_n=float(ops.x[n_index - 1]),
    )


@dataclass(frozen=True)
class EvolvedState:
    """
    Attributes:
        chi: 4-component state in the qubit product basis
        t: Time
        delta: Δ = γ_m + γ_n
        theta: Initial mixing angle between Φ⁺ and Φ⁻
        pair: Bell pair the qubits belong to
        gamma_m, gamma_n: Per-mode rotation angles
    """
    chi: np.ndarray
    t: float
    delta: float
    theta: float
    pair: BellPair
    gamma_m: float = 0.0
    gamma_n: float = 0.0

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.chi))

    @property
    def coefficients(self) -> tuple[complex, complex]:
        """(⟨Φ⁺|χ⟩, ⟨Φ⁻|χ⟩)"""
        return complex(np.vdot(self.pair.phi_plus, self.chi)), complex(np.vdot(self.pair.phi_minus, self.chi))


def initial_state(theta: float, pair: BellPair, t: float = 0.0) -> EvolvedState:
    """χ(0) = cos(θ/2)Φ⁺ + sin(θ/2)Φ⁻."""
    chi = math.cos(theta / 2) * pair.phi_plus + math.sin(theta / 2) * pair.phi_minus
    return EvolvedState(chi=chi, t=t, delta=0.0, theta=theta, pair=pair)


def _global_phase(state: EvolvedState, t: float) -> complex:
    return complex(np.exp(-1j * (state.pair.x_m + state.pair.x_n) * (t - state.t)))


def rotate(state: EvolvedState, gamma_m: float, gamma_n: float, t: float) -> EvolvedState:
    """
    Applies e^{−i(x_m+x_n)(t−t₀)}·e^{−iγ_m g}⊗e^{−iγ_n g} for rotation angles
    measured from the origin of the flow.

    R qubits use the superposition rule Φ± ↦ cosΔ·Φ± − i·sinΔ·Φ∓; T qubits
    use the tensor-product phase map diag(e^{−iγ}, e^{iγ}) on each mode.
    """
    pair = state.pair
    shift_m = gamma_m - state.gamma_m
    shift_n = gamma_n - state.gamma_n
    phase = _global_phase(state, t)

    if pair.generator == BellGenerator.R:
        shift = shift_m + shift_n
        a_plus, a_minus = state.coefficients
        rotated_plus = math.cos(shift) * a_plus - 1j * math.sin(shift) * a_minus
        rotated_minus = math.cos(shift) * a_minus - 1j * math.sin(shift) * a_plus
        chi = phase * (rotated_plus * pair.phi_plus + rotated_minus * pair.phi_minus)
    else:
        chi = phase * (tensor_phase_map(shift_m, shift_n) @ state.chi)

    return EvolvedState(
        chi=chi,
        t=t,
        delta=gamma_m + gamma_n,
        theta=state.theta,
        pair=pair,
        gamma_m=gamma_m,
        gamma_n=gamma_n,
    )


def tensor_phase_map(gamma_m: float, gamma_n: float) -> np.ndarray:
    """exp(−iγ_m σz) ⊗ exp(−iγ_n σz)"""
    left = np.diag([np.exp(-1j * gamma_m), np.exp(1j * gamma_m)])
    right = np.diag([np.exp(-1j * gamma_n), np.exp(1j * gamma_n)])
    return np.kron(left, right)


def rotate_brute_force(
        state: EvolvedState,
        ops: ReducedOperators,
        gamma_m: float,
        gamma_n: float,
        t: float
) -> EvolvedState:
    """
    Oracle for rotate: dense 4×4 exponential of
    (x_m + x_n)(t − t₀)·1 + γ_m·g⊗1 + 1⊗γ_n·g in mode coordinates, with g the
    Pauli-triple block of the pair's generator.
    """
    pair = state.pair
    triple = pauli_triple(ops)
    g_m = triple.mode_block(pair.generator.axis, ops.mode_indices(pair.m_index))
    g_n = triple.mode_block(pair.generator.axis, ops.mode_indices(pair.n_index))

    eye = np.eye(2)
    generator = (
        (pair.x_m + pair.x_n) * (t - state.t) * np.eye(4)
        + (gamma_m - state.gamma_m) * np.kron(g_m, eye)
        + (gamma_n - state.gamma_n) * np.kron(eye, g_n)
    )
    psi = scipy.linalg.expm(-1j * generator) @ pair.embed(state.chi)
    return EvolvedState(
        chi=pair.extract(psi),
        t=t,
        delta=gamma_m + gamma_n,
        theta=state.theta,
        pair=pair,
        gamma_m=gamma_m,
        gamma_n=gamma_n,
    )


def _angles(pair: BellPair, flow: FlowSolution, t: float) -> tuple[float, float]:
    return float(flow.gamma(pair.x_m, t)), float(flow.gamma(pair.x_n, t))


def evolve(state: EvolvedState, flow: FlowSolution, t: float) -> EvolvedState:
    """Evolves χ to time t with Δ = γ(x_m, t) + γ(x_n, t)."""
    return rotate(state, *_angles(state.pair, flow, t), t)


def evolve_brute_force(state: EvolvedState, ops: ReducedOperators, flow: FlowSolution, t: float) -> EvolvedState:
    return rotate_brute_force(state, ops, *_angles(state.pair, flow, t), t)
