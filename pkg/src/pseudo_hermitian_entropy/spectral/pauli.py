"""
Pauli-like triple g = (Û^{-1/2}R̂, Û^{-1/2}Ŝ, Û^{-1}T̂), its BCH conjugation
and the Bloch-sphere projector (1 + u·g)/2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Dict

import numpy as np
import scipy.linalg

from ..ensemble import OperatorQuartet, anticommutator, commutator, max_abs
from ..errors import AxisError, ConfigurationError, RankError
from .reduced import ReducedOperators, mode_diag
from .schmidt import RANK_TOLERANCE, SchmidtBasis


class Axis(IntEnum):
    """Pauli axis index (1-based, as in g_1, g_2, g_3)"""
    X = 1
    Y = 2
    Z = 3


# Levi-Civita orientation: [g_i, g_j] = 2i g_k for (i, j, k) cyclic
_CYCLIC = {(1, 2): 3, (2, 3): 1, (3, 1): 2}


def _axis(value: int | Axis) -> Axis:
    try:
        return Axis(int(value))
    except ValueError:
        raise AxisError(f"Unknown axis {value!r}; expected 1, 2 or 3") from None


@dataclass(frozen=True)
class PauliTriple:
    g1: np.ndarray
    g2: np.ndarray
    g3: np.ndarray

    def __getitem__(self, axis: int | Axis) -> np.ndarray:
        return (self.g1, self.g2, self.g3)[_axis(axis) - 1]

    @property
    def dim(self) -> int:
        return self.g1.shape[0]

    def mode_block(self, axis: int | Axis, indices: list[int]) -> np.ndarray:
        """2×2 restriction of g_axis to one mode's (|x_k⟩, |y_k⟩) pair."""
        return self[axis][np.ix_(indices, indices)]


def pauli_triple(ops: ReducedOperators) -> PauliTriple:
    """
    Polar-decomposes r̂, ŝ, t̂ with the positive Û.

    Raises:
        RankError: If some x_k ≤ tol_rank
    """
    if not ops.is_full_rank():
        raise RankError(f"Û is singular (min x_k={float(np.min(ops.x)):.3e})")
    inv_root = ops.u_power(-0.5)
    inv = ops.u_power(-1.0)
    triple = PauliTriple(g1=inv_root @ ops.r_hat, g2=inv_root @ ops.s_hat, g3=inv @ ops.t_hat)
    for array in (triple.g1, triple.g2, triple.g3):
        array.setflags(write=False)
    return triple


def projected_triple(quartet: OperatorQuartet, basis: SchmidtBasis) -> PauliTriple:
    """
    Builds U^{-1/2}R, U^{-1/2}S and U^{-1}T on the full N-dimensional space,
    then reduces them through V = [|x⟩ … |y⟩].

    U is inverted on its support only; the kernel of WW† + W†W is dropped.
    """
    values, vectors = scipy.linalg.eigh(quartet.u)
    support = values > RANK_TOLERANCE * max(1.0, float(np.max(values)))
    kept = vectors[:, support]
    inv_root = kept @ np.diag(values[support] ** -0.5) @ kept.conj().T
    inv = kept @ np.diag(1.0 / values[support]) @ kept.conj().T
    v = basis.basis_matrix
    return PauliTriple(
        g1=v.conj().T @ inv_root @ quartet.r @ v,
        g2=v.conj().T @ inv_root @ quartet.s @ v,
        g3=v.conj().T @ inv @ quartet.t @ v,
    )


def pauli_residuals(triple: PauliTriple) -> Dict[str, float]:
    """
    Residuals of {g_i, g_j} = 2δ_ij·1, [g_i, g_j] = 2iε_ijk g_k, unitarity
    and Hermiticity.
    """
    eye = np.eye(triple.dim)
    anti = 0.0
    comm = 0.0
    for i in Axis:
        for j in Axis:
            expected = 2 * eye if i == j else np.zeros_like(eye)
            anti = max(anti, max_abs(anticommutator(triple[i], triple[j]) - expected))
            if (i, j) in _CYCLIC:
                k = _CYCLIC[(i, j)]
                comm = max(comm, max_abs(commutator(triple[i], triple[j]) - 2j * triple[k]))
    return {
        "anticommutator": anti,
        "commutator": comm,
        "unitary": max(max_abs(triple[i].conj().T @ triple[i] - eye) for i in Axis),
        "hermitian": max(max_abs(triple[i] - triple[i].conj().T) for i in Axis),
    }


def mode_exp(angles: np.ndarray, g: np.ndarray) -> np.ndarray:
    """
    exp(Θ·g) for a per-mode angle vector Θ and a matrix with g² = 1.

    Θ is expanded with mode_diag, which commutes with every g_i.
    """
    return mode_diag(np.cosh(angles)) + mode_diag(np.sinh(angles)) @ g


def bch_conjugate(triple: PauliTriple, a: float, i: int | Axis, j: int | Axis) -> np.ndarray:
    """
    exp(a·g_i)·g_j·exp(−a·g_i) by dense matrix exponentials.

    Raises:
        AxisError: If i == j or an axis is unknown
    """
    i, j = _axis(i), _axis(j)
    if i == j:
        raise AxisError(f"BCH conjugation needs distinct axes (got i=j={int(i)})")
    forward = scipy.linalg.expm(a * triple[i])
    backward = scipy.linalg.expm(-a * triple[i])
    return forward @ triple[j] @ backward


def bch_expansion(triple: PauliTriple, a: float, i: int | Axis, j: int | Axis) -> np.ndarray:
    """Closed form g_j·cosh(2a) + ½[g_i, g_j]·sinh(2a)."""
    i, j = _axis(i), _axis(j)
    if i == j:
        raise AxisError(f"BCH conjugation needs distinct axes (got i=j={int(i)})")
    return triple[j] * math.cosh(2 * a) + 0.5 * commutator(triple[i], triple[j]) * math.sinh(2 * a)


@dataclass(frozen=True)
class BlochVector:
    """
    Point on the Bloch sphere, u = (sinθ cosφ, sinθ sinφ, cosθ).

    Attributes:
        theta: Polar angle in [0, π]
        phi: Azimuth in [0, 2π)
    """
    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and math.isfinite(self.phi)):
            raise ConfigurationError("Bloch angles must be finite", field="theta")
        if not 0.0 <= self.theta <= math.pi:
            raise ConfigurationError(f"theta={self.theta} outside [0, pi]", field="theta")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ConfigurationError(f"phi={self.phi} outside [0, 2pi)", field="phi")

    @property
    def u(self) -> np.ndarray:
        return np.array([
            math.sin(self.theta) * math.cos(self.phi),
            math.sin(self.theta) * math.sin(self.phi),
            math.cos(self.theta),
        ])


def bloch_projector(ops: ReducedOperators, bloch: BlochVector) -> np.ndarray:
    """(1 + u·g)/2; a rank-M projector."""
    triple = pauli_triple(ops)
    u = bloch.u
    return 0.5 * (np.eye(ops.dim) + u[0] * triple.g1 + u[1] * triple.g2 + u[2] * triple.g3)


def bloch_state(ops: ReducedOperators, k: int, bloch: BlochVector) -> np.ndarray:
    """cos(θ/2)|x_k⟩ + sin(θ/2)e^{iφ}|y_k⟩ in reduced coordinates (k 1-based)."""
    state = np.zeros(ops.dim, dtype=complex)
    ix, iy = ops.mode_indices(k)
    state[ix] = math.cos(bloch.theta / 2)
    state[iy] = math.sin(bloch.theta / 2) * np.exp(1j * bloch.phi)
    return state


def generator_eigenvectors(ops: ReducedOperators, k: int, axis: int | Axis) -> tuple[np.ndarray, np.ndarray]:
    """
    (+, −) eigenvectors of r̂ (X±), ŝ (Y±) or t̂ (Z±) for mode k.
    """
    axis = _axis(axis)
    ix, iy = ops.mode_indices(k)
    ex = np.zeros(ops.dim, dtype=complex)
    ey = np.zeros(ops.dim, dtype=complex)
    ex[ix] = 1.0
    ey[iy] = 1.0
    if axis == Axis.X:
        return (ex + ey) / math.sqrt(2), (ex - ey) / math.sqrt(2)
    if axis == Axis.Y:
        return (ex + 1j * ey) / math.sqrt(2), (ex - 1j * ey) / math.sqrt(2)
    return ex, ey
