"""
Bell states of generator eigenstates, their evolution, reduced densities and entropy.
"""
from .bell import (
    BellGenerator,
    BellPair,
    EvolvedState,
    evolve,
    evolve_brute_force,
    initial_state,
    make_bell_pair,
    rotate,
    rotate_brute_force,
    tensor_phase_map,
)
from .density import (
    LOG_BASE,
    ReducedDensity,
    closed_form_lambdas,
    entropy_from_lambdas,
    partial_trace,
    reduced_density_by_contraction,
    von_neumann,
)
from .single_state import SingleStateEvolution, evolve_single_state, printed_rotation
from .trace import (
    TRACE_COLUMNS,
    EntropyTrace,
    asymptotic_entropy,
    delta_of_t,
    entropy_at_delta,
    entropy_trace,
    first_time_at,
)

__all__ = [
    "BellGenerator",
    "BellPair",
    "make_bell_pair",
    "EvolvedState",
    "initial_state",
    "rotate",
    "rotate_brute_force",
    "evolve",
    "evolve_brute_force",
    "tensor_phase_map",
    "ReducedDensity",
    "partial_trace",
    "reduced_density_by_contraction",
    "closed_form_lambdas",
    "entropy_from_lambdas",
    "von_neumann",
    "LOG_BASE",
    "EntropyTrace",
    "TRACE_COLUMNS",
    "entropy_trace",
    "delta_of_t",
    "first_time_at",
    "entropy_at_delta",
    "asymptotic_entropy",
    "SingleStateEvolution",
    "evolve_single_state",
    "printed_rotation",
]
