"""
Closed-form solution of the Dyson-metric flow.

Every function of Û is evaluated mode by mode: x is the eigenvalue x_k and
all methods broadcast over numpy arrays of x and t. With τ = t + C₂,
d² = b² − c² and K = C₁² + b² − c²:

    sinh(2β√x) = C₁·sin(2√x·d·τ)/d
    exp(4αx)   = (b − c)/(b + c) · (√K + C₁cos(2√x·d·τ)) / (√K − C₁cos(2√x·d·τ))
    ν          = d²√K / (K − C₁²cos²(2√x·d·τ))
    γ          = √x·∫ν dt = ½·atan(√K·tan(2√x·d·τ)/d)   (unwrapped)

In the broken regime d is imaginary and the trigonometric functions become
hyperbolic ones; both branches are written in real arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np

from ..errors import ConfigurationError, UnsupportedParameterError
from .params import CouplingParams, Regime

ArrayLike = Union[float, np.ndarray, Sequence[float]]


@dataclass(frozen=True)
class FlowSolution:
    """
    Closed-form flow for one set of couplings.

    Attributes:
        params: Couplings and integration constants
        x: Mode eigenvalues the flow was requested for (informational)
    """
    params: CouplingParams
    x: Optional[np.ndarray] = None

    @property
    def regime(self) -> Regime:
        return self.params.regime

    @property
    def abs_d(self) -> float:
        return math.sqrt(abs(self.params.discriminant))

    @property
    def root_k(self) -> float:
        return math.sqrt(self.params.k_squared)

    def tau(self, t: ArrayLike) -> np.ndarray:
        return np.asarray(t, dtype=float) + self.params.c2

    def _phase(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """w = 2√x·|d|·τ"""
        return 2.0 * np.sqrt(np.asarray(x, dtype=float)) * self.abs_d * self.tau(t)

    def _trig(self, x: ArrayLike, t: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
        """(sin w, cos w) when unbroken, (sinh w, cosh w) when broken."""
        w = self._phase(x, t)
        if self.regime == Regime.UNBROKEN:
            return np.sin(w), np.cos(w)
        with np.errstate(over="ignore"):
            return np.sinh(w), np.cosh(w)

    # --- A₁ parameters ---

    def sigma(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """σ = sinh(2β√x), a solution of σ̈ + 4x(b²−c²)σ = 0."""
        if self.regime == Regime.EXCEPTIONAL:
            return 2.0 * self.params.c1 * np.sqrt(np.asarray(x, dtype=float)) * self.tau(t)
        sine, _ = self._trig(x, t)
        return self.params.c1 * sine / self.abs_d

    def beta(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        return np.arcsinh(self.sigma(x, t)) / (2.0 * np.sqrt(np.asarray(x, dtype=float)))

    def exp_4_alpha_x(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """
        Raises:
            UnsupportedParameterError: At the exceptional point, where α → −∞
        """
        if self.regime == Regime.EXCEPTIONAL:
            raise UnsupportedParameterError("alpha diverges at the exceptional point b = c")
        b, c, c1 = self.params.b, self.params.c, self.params.c1
        _, cosine = self._trig(x, t)
        ratio = (b - c) / (b + c)
        return ratio * (self.root_k + c1 * cosine) / (self.root_k - c1 * cosine)

    def alpha(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        return np.log(self.exp_4_alpha_x(x, t)) / (4.0 * np.asarray(x, dtype=float))

    def alpha_dot(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """Right side of the α equation evaluated on the closed forms."""
        x = np.asarray(x, dtype=float)
        two_ax = 2.0 * self.alpha(x, t) * x
        bracket = self.params.b * np.cosh(two_ax) + self.params.c * np.sinh(two_ax)
        return -np.tanh(2.0 * self.beta(x, t) * np.sqrt(x)) / np.sqrt(x) * bracket

    def beta_dot(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """Right side of the β equation evaluated on the closed forms."""
        two_ax = 2.0 * self.alpha(x, t) * np.asarray(x, dtype=float)
        return self.params.b * np.sinh(two_ax) + self.params.c * np.cosh(two_ax)

    def tanh_two_alpha_from_beta_dot(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """tanh(2αx) recovered from β̇ by inverting the β equation."""
        b, c = self.params.b, self.params.c
        beta_dot = self.beta_dot(x, t)
        return (-b * c + beta_dot * np.sqrt(b ** 2 - c ** 2 + beta_dot ** 2)) / (b ** 2 + beta_dot ** 2)

    # --- Hermitian counterpart ---

    def nu(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """Coefficient of R̂ in h = Û + ν(t)R̂."""
        if self.regime == Regime.EXCEPTIONAL:
            x = np.asarray(x, dtype=float)
            tau = self.tau(t)
            return self.root_k / (1.0 + 4.0 * x * self.params.c1 ** 2 * tau ** 2)
        _, cosine = self._trig(x, t)
        k = self.params.k_squared
        with np.errstate(over="ignore"):
            return self.params.discriminant * self.root_k / (k - self.params.c1 ** 2 * cosine ** 2)

    def nu_from_definition(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """ν = [b·cosh(2αx) + c·sinh(2αx)] / cosh(2β√x)."""
        x = np.asarray(x, dtype=float)
        two_ax = 2.0 * self.alpha(x, t) * x
        bracket = self.params.b * np.cosh(two_ax) + self.params.c * np.sinh(two_ax)
        return bracket / np.cosh(2.0 * self.beta(x, t) * np.sqrt(x))

    def gamma(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """γ = √x·ν_I, continuous in t and zero at t = −C₂."""
        x = np.asarray(x, dtype=float)
        if self.regime == Regime.EXCEPTIONAL:
            return 0.5 * np.arctan(2.0 * self.root_k * np.sqrt(x) * self.tau(t))
        ratio = self.root_k / self.abs_d
        w = self._phase(x, t)
        if self.regime == Regime.BROKEN:
            return 0.5 * np.arctan(ratio * np.tanh(w))
        return 0.5 * np.arctan(ratio * np.tan(w)) + 0.5 * np.pi * self.branch_count(x, t)

    def branch_count(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """Number of half-periods added to unwrap γ (zero outside the unbroken regime)."""
        w = self._phase(x, t)
        if self.regime != Regime.UNBROKEN:
            return np.zeros_like(w, dtype=int)
        return np.floor(w / np.pi + 0.5).astype(int)

    def nu_integral(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        """ν_I = γ/√x."""
        return self.gamma(x, t) / np.sqrt(np.asarray(x, dtype=float))

    def gamma_infinity(self) -> float:
        """
        Limit of γ as t → ∞; independent of x.

        Raises:
            UnsupportedParameterError: In the unbroken regime, where γ grows without bound
        """
        if self.regime == Regime.UNBROKEN:
            raise UnsupportedParameterError("gamma has no limit in the unbroken regime")
        if self.regime == Regime.EXCEPTIONAL:
            return math.pi / 4
        return 0.5 * math.atan(math.sqrt(self.params.k_squared / -self.params.discriminant))

    # --- A₂ parameters (δ = α√x, ζ = β, ξ = ν) ---

    def delta(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        return self.alpha(x, t) * np.sqrt(np.asarray(x, dtype=float))

    def zeta(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        return self.beta(x, t)

    def xi(self, x: ArrayLike, t: ArrayLike) -> np.ndarray:
        return self.nu(x, t)


def flow_closed_form(params: CouplingParams, x: Optional[ArrayLike] = None) -> FlowSolution:
    """
    Closed-form flow for the given couplings.

    Raises:
        UnsupportedParameterError: If b = 0 or C₁² + b² − c² ≤ 0
        ConfigurationError: If some x is not positive
    """
    params.require_closed_form()
    modes = None
    if x is not None:
        modes = np.atleast_1d(np.asarray(x, dtype=float))
        if np.any(modes <= 0.0):
            raise ConfigurationError("mode eigenvalues must be positive", field="x")
    return FlowSolution(params=params, x=modes)


RightHandSide = Callable[[float, Sequence[float]], list[float]]


def a1_rhs(params: CouplingParams, x: float) -> RightHandSide:
    """Flow equations for (α, β) at one mode."""
    b, c = params.b, params.c
    root = math.sqrt(x)

    def rhs(_t: float, y: Sequence[float]) -> list[float]:
        alpha, beta = y[0], y[1]
        two_ax = 2.0 * alpha * x
        alpha_dot = -math.tanh(2.0 * beta * root) / root * (b * math.cosh(two_ax) + c * math.sinh(two_ax))
        beta_dot = b * math.sinh(two_ax) + c * math.cosh(two_ax)
        return [alpha_dot, beta_dot]

    return rhs


def a2_rhs(params: CouplingParams, x: float) -> RightHandSide:
    """
    Flow equations for (δ, ζ) as stated for A₂, with ξ_I integrated alongside.
    """
    b, c = params.b, params.c
    root = math.sqrt(x)

    def rhs(_t: float, y: Sequence[float]) -> list[float]:
        delta, zeta = y[0], y[1]
        two_dr = 2.0 * delta * root
        bracket = b * math.cosh(two_dr) + c * math.sinh(two_dr)
        delta_dot = -math.tanh(2.0 * zeta * root) / root * bracket
        zeta_dot = b * math.sinh(two_dr) + c * math.cosh(two_dr)
        xi = bracket / math.cosh(2.0 * zeta * root)
        return [delta_dot, zeta_dot, xi]

    return rhs
