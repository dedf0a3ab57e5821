"""
Ensemble sampling: Gaussian block, projector embedding and operator quartet.
"""
from .quartet import (
    OperatorQuartet,
    WishartSpectra,
    algebra_residuals,
    anticommutator,
    build_quartet,
    commutator,
    max_abs,
    wishart_spectra,
)
from .sampling import (
    VARIANCE_CONVENTION,
    EnsembleConfig,
    ProjectedBlock,
    ScalarClass,
    embed_block,
    sample_block,
)

__all__ = [
    "EnsembleConfig",
    "ScalarClass",
    "ProjectedBlock",
    "VARIANCE_CONVENTION",
    "embed_block",
    "sample_block",
    "OperatorQuartet",
    "WishartSpectra",
    "build_quartet",
    "algebra_residuals",
    "wishart_spectra",
    "commutator",
    "anticommutator",
    "max_abs",
]
