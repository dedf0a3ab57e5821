"""
Shared set-up of one experiment: sampled ensemble, reduced operators, flow and Bell pair.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .config import ExperimentConfig
from .dynamics import CouplingParams, FlowSolution, HamiltonianKind, PseudoHermitianPair, flow_closed_form, hamiltonian
from .ensemble import OperatorQuartet, build_quartet
from .entanglement import BellPair, make_bell_pair
from .spectral import ReducedOperators, SchmidtSample, reduced_operators, sample_schmidt

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExperimentContext:
    """
    Everything derived from one configuration before any mode runs.

    Attributes:
        config: Validated configuration
        sample: Block, Schmidt basis and the seed actually used
        quartet: Full N×N operators R, S, T, U
        ops: Reduced operators
        params: Couplings
        flow: Closed-form flow for the modes
        pair: Bell pair for the configured generator
    """
    config: ExperimentConfig
    sample: SchmidtSample
    quartet: OperatorQuartet
    ops: ReducedOperators
    params: CouplingParams
    flow: FlowSolution
    pair: BellPair

    @property
    def x(self) -> np.ndarray:
        return self.ops.x

    def generator(self, kind: HamiltonianKind | None = None) -> PseudoHermitianPair:
        return hamiltonian(self.ops, self.params, kind or self.config.hamiltonian_kind)


def prepare(config: ExperimentConfig) -> ExperimentContext:
    """
    Samples the ensemble and derives the reduced picture for config.

    Raises:
        DegenerateEnsembleError: If no usable draw is found
        UnsupportedParameterError: If the couplings have no closed-form flow
    """
    sample = sample_schmidt(config.ensemble, max_attempts=config.max_resample_attempts)
    ops = reduced_operators(sample.basis)
    params = config.coupling
    flow = flow_closed_form(params, ops.x)
    pair = make_bell_pair(ops, config.pair.m_index, config.pair.n_index, config.generator)
    logger.info(
        f"Sampled N={config.ensemble.n}, M={config.ensemble.m}, seed={sample.seed}: "
        f"x={np.array2string(ops.x, precision=6)}, regime={params.regime.value}"
    )
    return ExperimentContext(
        config=config,
        sample=sample,
        quartet=build_quartet(sample.block),
        ops=ops,
        params=params,
        flow=flow,
        pair=pair,
    )
