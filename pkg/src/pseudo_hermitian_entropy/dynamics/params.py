"""
Coupling parameters b, c and the integration constants C₁, C₂.
"""
from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import UnsupportedParameterError

EXCEPTIONAL_TOLERANCE = 1e-12


class Regime(str, Enum):
    """PT regime fixed by the sign of b² − c²"""
    UNBROKEN = "unbroken"
    BROKEN = "broken"
    EXCEPTIONAL = "exceptional"


class CouplingParams(BaseModel):
    """
    Couplings of A₁ = Û + bR̂ + icŜ (and A₂) with the flow constants.

    Attributes:
        b: Hermitian coupling (≥ 0)
        c: Anti-Hermitian coupling (≥ 0)
        c1: Integration constant C₁
        c2: Integration constant C₂ (time origin of the flow)
    """
    model_config = ConfigDict(frozen=True)

    b: float = Field(default=1.2, ge=0.0)
    c: float = Field(default=1.0, ge=0.0)
    c1: float = 2.0
    c2: float = 0.0

    @field_validator("b", "c", "c1", "c2")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("must be finite")
        return v

    @property
    def discriminant(self) -> float:
        """d² = b² − c²"""
        return self.b ** 2 - self.c ** 2

    @property
    def k_squared(self) -> float:
        """K = C₁² + b² − c²"""
        return self.c1 ** 2 + self.discriminant

    @property
    def regime(self) -> Regime:
        if abs(self.discriminant) <= EXCEPTIONAL_TOLERANCE * max(1.0, self.b ** 2):
            return Regime.EXCEPTIONAL
        return Regime.UNBROKEN if self.b > self.c else Regime.BROKEN

    def require_closed_form(self) -> None:
        """
        Raises:
            UnsupportedParameterError: If b = 0 or C₁² + b² − c² ≤ 0
        """
        if self.b <= 0.0:
            raise UnsupportedParameterError(
                "b = 0 leaves the alpha integration constant undefined"
            )
        if self.k_squared <= 0.0:
            raise UnsupportedParameterError(
                f"C1^2 + b^2 - c^2 = {self.k_squared:.6g} must be positive"
            )
