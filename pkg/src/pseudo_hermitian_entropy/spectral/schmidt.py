"""
Schmidt-paired eigenbasis of the bipartite Wishart blocks WW† and W†W.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from ..ensemble import EnsembleConfig, ProjectedBlock, sample_block
from ..errors import DegenerateEnsembleError

logger = logging.getLogger(__name__)

TIE_TOLERANCE = 1e-12
RANK_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SchmidtBasis:
    """
    Shared eigenvalues and paired eigenvectors.

    Attributes:
        x: Shared eigenvalues x_k, strictly descending
        x_vecs: N×M array, column k is |x_k⟩ (support in the P-subspace)
        y_vecs: N×M array, column k is |y_k⟩ = W†|x_k⟩/√x_k (support in Q)
    """
    x: np.ndarray
    x_vecs: np.ndarray
    y_vecs: np.ndarray

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def basis_matrix(self) -> np.ndarray:
        """V = [|x_1⟩ … |x_M⟩ |y_1⟩ … |y_M⟩], N×2M."""
        return np.hstack([self.x_vecs, self.y_vecs])

    def gram_residual(self) -> float:
        v = self.basis_matrix
        return float(np.max(np.abs(v.conj().T @ v - np.eye(v.shape[1]))))


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    """Rotates the vector so its largest-magnitude component is real positive."""
    pivot = vector[int(np.argmax(np.abs(vector)))]
    return vector * (np.conj(pivot) / abs(pivot))


def schmidt_basis(block: ProjectedBlock) -> SchmidtBasis:
    """
    Diagonalizes WW† and pairs each |x_k⟩ with |y_k⟩ = W†|x_k⟩/√x_k.

    Raises:
        DegenerateEnsembleError: If some x_k ≤ 1e-10·x_1 or two eigenvalues
            lie within 1e-12 of each other
    """
    h = block.h_block
    m, n = block.m, block.n
    values, vectors = scipy.linalg.eigh(h @ h.conj().T)
    order = np.argsort(values)[::-1]
    values = values[order]
    vectors = vectors[:, order]

    tol_rank = RANK_TOLERANCE * values[0]
    if values[0] <= 0 or np.any(values <= tol_rank):
        raise DegenerateEnsembleError(
            f"Wishart block is rank deficient (smallest x_k={values[-1]:.3e}); resample"
        )
    if m > 1 and np.any(np.abs(np.diff(values)) < TIE_TOLERANCE):
        raise DegenerateEnsembleError("Wishart block has tied eigenvalues; resample")

    x_vecs = np.zeros((n, m), dtype=complex)
    for k in range(m):
        x_vecs[:m, k] = _fix_phase(vectors[:, k])
    y_vecs = (block.w_dagger @ x_vecs) / np.sqrt(values)

    for array in (values, x_vecs, y_vecs):
        array.setflags(write=False)
    return SchmidtBasis(x=values, x_vecs=x_vecs, y_vecs=y_vecs)


def pairing_residual(block: ProjectedBlock, basis: SchmidtBasis) -> float:
    """max_k ‖W†|x_k⟩ − √x_k|y_k⟩‖."""
    diff = block.w_dagger @ basis.x_vecs - basis.y_vecs * np.sqrt(basis.x)
    return float(np.max(np.linalg.norm(diff, axis=0)))


def eigen_residual(block: ProjectedBlock, basis: SchmidtBasis) -> float:
    """Residual of WW†|x_k⟩ = x_k|x_k⟩ and W†W|y_k⟩ = x_k|y_k⟩."""
    w, wd = block.w, block.w_dagger
    left = w @ wd @ basis.x_vecs - basis.x_vecs * basis.x
    right = wd @ w @ basis.y_vecs - basis.y_vecs * basis.x
    return float(max(np.max(np.abs(left)), np.max(np.abs(right))))


@dataclass(frozen=True)
class SchmidtSample:
    """
    A block and its Schmidt basis, with the seed that produced them.

    Attributes:
        block: Sampled projected block
        basis: Its Schmidt basis
        requested_seed: Seed asked for
        seed: Seed actually used
        resamples: Number of rejected draws before this one
    """
    block: ProjectedBlock
    basis: SchmidtBasis
    requested_seed: int
    seed: int
    resamples: int


def sample_schmidt(config: EnsembleConfig, max_attempts: int = 8) -> SchmidtSample:
    """
    Samples a block whose Schmidt basis is well defined.

    Degenerate draws (rank deficiency or ties) are rejected and the seed is
    incremented; every rejection is logged.

    Raises:
        DegenerateEnsembleError: If max_attempts draws are all degenerate
    """
    current = config
    for attempt in range(max_attempts):
        block = sample_block(current)
        try:
            basis = schmidt_basis(block)
        except DegenerateEnsembleError as e:
            logger.warning(f"Seed {current.seed} rejected: {e}")
            current = current.with_seed(current.seed + 1)
            continue
        if attempt:
            logger.info(f"Resampled {attempt} time(s): seed {config.seed} -> {current.seed}")
        return SchmidtSample(
            block=block,
            basis=basis,
            requested_seed=config.seed,
            seed=current.seed,
            resamples=attempt,
        )
    raise DegenerateEnsembleError(
        f"No non-degenerate draw in {max_attempts} attempts from seed {config.seed}"
    )
