"""
Pseudo-Hermitian generators, the closed-form metric flow, its RK4 oracle and Dyson's formula.
"""
from .dyson import (
    CONDITION_LIMIT,
    ODE_TOLERANCE,
    DensityEvolutionReport,
    density_evolution_check,
    dyson_tolerance,
    dyson_transform,
    hermitian_target,
    metric,
)
from .flow import FlowSolution, a1_rhs, a2_rhs, flow_closed_form
from .hamiltonian import HamiltonianKind, PseudoHermitianPair, hamiltonian
from .oracle import (
    A2FlowFinding,
    OracleTrajectory,
    a2_flow_discrepancy,
    flow_ode_oracle,
    rk4_integrate,
    rk4_step,
)
from .params import CouplingParams, Regime

__all__ = [
    "CouplingParams",
    "Regime",
    "HamiltonianKind",
    "PseudoHermitianPair",
    "hamiltonian",
    "FlowSolution",
    "flow_closed_form",
    "a1_rhs",
    "a2_rhs",
    "rk4_step",
    "rk4_integrate",
    "OracleTrajectory",
    "flow_ode_oracle",
    "A2FlowFinding",
    "a2_flow_discrepancy",
    "metric",
    "hermitian_target",
    "dyson_transform",
    "dyson_tolerance",
    "DensityEvolutionReport",
    "density_evolution_check",
    "CONDITION_LIMIT",
    "ODE_TOLERANCE",
]
