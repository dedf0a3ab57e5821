"""
Pseudo-Hermitian Entropy - entropie d'intrication sous hamiltoniens pseudo-hermitiens.

Cette bibliothèque fournit :
- Ensemble: tirage gaussien projeté W = PHQ et quadruplet R, S, T, U
- Spectral: base de Schmidt, générateurs réduits, triplet de Pauli
- Dynamics: hamiltoniens A1/A2, flot de la métrique de Dyson et son oracle RK4
- Entanglement: états de Bell, matrice densité réduite et entropie de von Neumann
- Verification: suite de vérification avec oracles numériques

Example (CLI):
    $ ph-entropy figure --id 2 --output ./figures

Example (API programmatique):
    from pseudo_hermitian_entropy import ExperimentConfig, ExperimentRunner

    config = ExperimentConfig.from_yaml("ph_entropy_config.yaml")
    outcome = ExperimentRunner(config).run()
"""

__version__ = "0.1.0"

from .config import BellSelection, ExperimentConfig, RunMode, TimeGrid
from .errors import (
    AxisError,
    ConditioningError,
    ConfigurationError,
    DegenerateEnsembleError,
    ModeIndexError,
    NumericalValidityError,
    OracleError,
    PseudoHermitianError,
    RankError,
    UnsupportedParameterError,
)
from .experiment import ExperimentContext, prepare
from .experiment_runner import ExperimentOutcome, ExperimentRunner
from .verification import RunReport, VerificationRunner

__all__ = [
    "ExperimentConfig",
    "TimeGrid",
    "BellSelection",
    "RunMode",
    "ExperimentContext",
    "prepare",
    "ExperimentRunner",
    "ExperimentOutcome",
    "VerificationRunner",
    "RunReport",
    "PseudoHermitianError",
    "ConfigurationError",
    "DegenerateEnsembleError",
    "RankError",
    "AxisError",
    "UnsupportedParameterError",
    "OracleError",
    "ConditioningError",
    "NumericalValidityError",
    "ModeIndexError",
]
