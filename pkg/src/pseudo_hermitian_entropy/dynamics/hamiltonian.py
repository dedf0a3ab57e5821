"""
Pseudo-Hermitian generators A₁ and A₂ in the reduced basis.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..errors import RankError
from ..spectral import ReducedOperators
from .params import CouplingParams

logger = logging.getLogger(__name__)


class HamiltonianKind(str, Enum):
    """A1 = Û + bR̂ + icŜ, A2 = Û + bT̂/√Û − icŜ"""
    A1 = "A1"
    A2 = "A2"


@dataclass(frozen=True)
class PseudoHermitianPair:
    """
    A reduced generator together with what built it.

    Attributes:
        a_matrix: 2M×2M complex matrix
        kind: A1 or A2
        ops: Reduced operators it acts on
        params: Couplings used
    """
    a_matrix: np.ndarray
    kind: HamiltonianKind
    ops: ReducedOperators
    params: CouplingParams

    @property
    def spectrum(self) -> np.ndarray:
        """Closed-form eigenvalues x_k ± √(b²−c²)·√x_k (plus branch first)."""
        d = np.sqrt(complex(self.params.discriminant))
        root = np.sqrt(self.ops.x)
        return np.concatenate([self.ops.x + d * root, self.ops.x - d * root])

    def spectrum_residual(self) -> float:
        """Distance between the dense eigenvalues and the closed form under optimal matching."""
        dense = np.linalg.eigvals(self.a_matrix)
        expected = self.spectrum
        cost = np.abs(dense[:, None] - expected[None, :])
        rows, cols = linear_sum_assignment(cost)
        return float(np.max(cost[rows, cols]))


def hamiltonian(
        ops: ReducedOperators,
        params: CouplingParams,
        kind: HamiltonianKind = HamiltonianKind.A1
) -> PseudoHermitianPair:
    """
    Assembles A₁ or A₂.

    Raises:
        RankError: For A2 when Û is singular
    """
    kind = HamiltonianKind(kind)
    if kind == HamiltonianKind.A1:
        a = ops.u_hat + params.b * ops.r_hat + 1j * params.c * ops.s_hat
    else:
        if not ops.is_full_rank():
            raise RankError("A2 needs the inverse square root of a singular U")
        a = ops.u_hat + params.b * (ops.t_hat @ ops.u_power(-0.5)) - 1j * params.c * ops.s_hat
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    logger.debug(f"Built {kind.value} (M={ops.m}, regime={params.regime.value})")
    return PseudoHermitianPair(a_matrix=a, kind=kind, ops=ops, params=params)
