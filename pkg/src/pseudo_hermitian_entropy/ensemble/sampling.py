"""
Seeded sampling of the Gaussian block and its projector embedding.

W = P·H·Q keeps only the M×(N−M) block of H that couples the P-subspace
(first M coordinates) to the Q-subspace, so only that block is drawn.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

SEED_MAX = 2 ** 64 - 1


class ScalarClass(str, Enum):
    """Entry type of the sampled block"""
    COMPLEX = "complex"
    REAL = "real"


VARIANCE_CONVENTION = {
    ScalarClass.COMPLEX: "Re, Im ~ N(0,1) independent (E|h|^2 = 2)",
    ScalarClass.REAL: "h ~ N(0,1) (E|h|^2 = 1)",
}


class EnsembleConfig(BaseModel):
    """Dimensions and seed of one ensemble draw.

    Attributes:
        n: Full dimension N
        m: Block dimension M (N ≥ 2M ≥ 2)
        seed: 64-bit unsigned seed; fully determines the draw
        scalar_class: Entry type of the Gaussian block
    """
    model_config = ConfigDict(frozen=True)

    n: int = 6
    m: int = 2
    seed: int = Field(default=7, ge=0, le=SEED_MAX)
    scalar_class: ScalarClass = ScalarClass.COMPLEX

    def validate_dimensions(self) -> None:
        """Raises ConfigurationError unless n ≥ 2m ≥ 2."""
        if self.m < 1:
            raise ConfigurationError(f"m must be a positive integer, got {self.m}", field="m")
        if self.n < 2 * self.m:
            raise ConfigurationError(
                f"n must satisfy n >= 2m (n={self.n}, m={self.m})", field="n"
            )

    def with_seed(self, seed: int) -> EnsembleConfig:
        return self.model_copy(update={"seed": seed % (SEED_MAX + 1)})


@dataclass(frozen=True)
class ProjectedBlock:
    """
    Sampled block H and its embedding W (W = PHQ).

    Attributes:
        w: N×N complex matrix, nonzero only in rows < M and columns ≥ M
        h_block: M×(N−M) sampled Gaussian block
    """
    w: np.ndarray
    h_block: np.ndarray

    @property
    def n(self) -> int:
        return self.w.shape[0]

    @property
    def m(self) -> int:
        return self.h_block.shape[0]

    @property
    def w_dagger(self) -> np.ndarray:
        return self.w.conj().T


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def embed_block(h_block: np.ndarray) -> ProjectedBlock:
    """Builds W from an explicit M×(N−M) block (N inferred as M + columns)."""
    h = np.array(h_block, dtype=complex, ndmin=2)
    m, cols = h.shape
    n = m + cols
    EnsembleConfig(n=n, m=m).validate_dimensions()
    w = np.zeros((n, n), dtype=complex)
    w[:m, m:] = h
    return ProjectedBlock(w=_frozen(w), h_block=_frozen(h))


def sample_block(config: EnsembleConfig) -> ProjectedBlock:
    """
    Draws the Gaussian block for one seed and embeds it as W.

    Args:
        config: Dimensions, seed and scalar class

    Returns:
        ProjectedBlock; the same seed always yields the same block

    Raises:
        ConfigurationError: If n < 2m or m < 1
    """
    config.validate_dimensions()
    rng = np.random.default_rng(config.seed)
    shape = (config.m, config.n - config.m)
    if config.scalar_class == ScalarClass.COMPLEX:
        h = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    else:
        h = rng.standard_normal(shape).astype(complex)
    logger.debug(f"Sampled {config.scalar_class.value} block {shape} (seed={config.seed})")
    return embed_block(h)
