"""
Operator quartet R, S, T, U built from one projected block, with the
residuals of its commutator algebra and Casimir identity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

import numpy as np
import scipy.linalg

from .sampling import ProjectedBlock


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def max_abs(a: np.ndarray) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


@dataclass(frozen=True)
class OperatorQuartet:
    """
    Hermitian quartet R = W + W†, S = −i(W − W†), T = WW† − W†W, U = WW† + W†W.
    """
    r: np.ndarray
    s: np.ndarray
    t: np.ndarray
    u: np.ndarray

    @property
    def tol_alg(self) -> float:
        """Algebraic tolerance scaled by the size of U."""
        return 1e-10 * max(1.0, max_abs(self.u))


def build_quartet(block: ProjectedBlock) -> OperatorQuartet:
    w = block.w
    wd = block.w_dagger
    quartet = OperatorQuartet(
        r=w + wd,
        s=-1j * (w - wd),
        t=w @ wd - wd @ w,
        u=w @ wd + wd @ w,
    )
    for array in (quartet.r, quartet.s, quartet.t, quartet.u):
        array.setflags(write=False)
    return quartet


def algebra_residuals(q: OperatorQuartet) -> Dict[str, float]:
    """
    Max-entry residuals of the quartet identities.

    Keys: 'RS', 'ST', 'TR' for [R,S]=2iT, [S,T]=2iRU, [T,R]=2iSU;
    'UR', 'US', 'UT' for the U commutators; 'casimir' for R²+S²+T²=2U+U²;
    'hermitian' and 'traceless' for the structural invariants.
    """
    r, s, t, u = q.r, q.s, q.t, q.u
    return {
        "RS": max_abs(commutator(r, s) - 2j * t),
        "ST": max_abs(commutator(s, t) - 2j * r @ u),
        "TR": max_abs(commutator(t, r) - 2j * s @ u),
        "UR": max_abs(commutator(u, r)),
        "US": max_abs(commutator(u, s)),
        "UT": max_abs(commutator(u, t)),
        "casimir": max_abs(r @ r + s @ s + t @ t - 2 * u - u @ u),
        "hermitian": max(max_abs(a - a.conj().T) for a in (r, s, t, u)),
        "traceless": max(abs(np.trace(a)) for a in (r, s, t)),
    }


@dataclass(frozen=True)
class WishartSpectra:
    """
    Sorted (descending) spectra of WW† (M values) and W†W (N−M values).
    """
    left: np.ndarray
    right: np.ndarray

    def pairing_residual(self) -> float:
        """Mismatch between the M leading eigenvalues of both blocks."""
        m = len(self.left)
        return float(np.max(np.abs(self.left - self.right[:m])))

    def null_residual(self) -> float:
        """Largest magnitude among the N−2M trailing eigenvalues of W†W."""
        m = len(self.left)
        tail = self.right[m:]
        return float(np.max(np.abs(tail))) if tail.size else 0.0


def wishart_spectra(block: ProjectedBlock) -> WishartSpectra:
    h = block.h_block
    left = scipy.linalg.eigh(h @ h.conj().T, eigvals_only=True)[::-1]
    right = scipy.linalg.eigh(h.conj().T @ h, eigvals_only=True)[::-1]
    return WishartSpectra(left=left, right=right)
