"""
Configuration centralisée des expériences avec support Pydantic et YAML.
"""
from __future__ import annotations

import math
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from .dynamics import CouplingParams, HamiltonianKind
from .ensemble import EnsembleConfig
from .entanglement import BellGenerator
from .errors import ConfigurationError

FIGURE_SEEDS: Tuple[int, int] = (11, 23)

# Drapeaux CLI (kebab-case converti en snake_case) -> chemin dans ExperimentConfig
FLAG_PATHS: Dict[str, Tuple[str, ...]] = {
    'n': ('ensemble', 'n'),
    'm': ('ensemble', 'm'),
    'seed': ('ensemble', 'seed'),
    'scalar_class': ('ensemble', 'scalar_class'),
    'b': ('coupling', 'b'),
    'c': ('coupling', 'c'),
    'c1': ('coupling', 'c1'),
    'c2': ('coupling', 'c2'),
    'kind': ('hamiltonian_kind',),
    'pair_m': ('pair', 'm_index'),
    'pair_n': ('pair', 'n_index'),
    'theta': ('theta',),
    'phi': ('phi',),
    't_start': ('time', 't_start'),
    't_end': ('time', 't_end'),
    't_steps': ('time', 't_steps'),
    'mode': ('mode',),
    'figure_id': ('figure_id',),
    'output': ('output_path',),
    'deterministic': ('deterministic',),
    'single_state_k': ('single_state_k',),
}


class RunMode(str, Enum):
    """Mode d'exécution d'une expérience"""
    TRACE = "trace"
    SINGLE_STATE = "single_state"
    VERIFY = "verify"
    FIGURE = "figure"


class TimeGrid(BaseModel):
    """Grille temporelle uniforme.

    Attributes:
        t_start: Premier instant
        t_end: Dernier instant (≥ t_start)
        t_steps: Nombre de points (≥ 1); un seul point donne [t_start]
    """
    t_start: float = 0.0
    t_end: float = 10.0
    t_steps: int = Field(default=2001, ge=1)

    @model_validator(mode='after')
    def check_order(self) -> TimeGrid:
        """Vérifie que t_end ≥ t_start."""
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise ConfigurationError("time bounds must be finite", field="t_start")
        if self.t_end < self.t_start:
            raise ConfigurationError(
                f"t_end ({self.t_end}) must be >= t_start ({self.t_start})", field="t_end"
            )
        return self

    def points(self) -> np.ndarray:
        if self.t_steps == 1:
            return np.array([self.t_start])
        return np.linspace(self.t_start, self.t_end, self.t_steps)


class BellSelection(BaseModel):
    """Paire de modes (m, n) utilisée pour les états de Bell.

    Attributes:
        m_index: Premier mode (1..M)
        n_index: Second mode (1..M, différent de m_index)
    """
    m_index: int = Field(default=1, ge=1)
    n_index: int = Field(default=2, ge=1)


class ExperimentConfig(BaseModel):
    """Configuration principale d'une expérience.

    Peut être chargée depuis un fichier YAML (ou un fichier texte clé=valeur) et
    surchargée par les options de la ligne de commande; les options gagnent toujours.

    Attributes:
        ensemble: Dimensions, graine et type des entrées du bloc gaussien
        coupling: Couplages b, c et constantes d'intégration C₁, C₂
        hamiltonian_kind: A1 (états de Bell de R̂) ou A2 (états de Bell de T̂)
        pair: Paire de modes des états de Bell
        theta: Angle de mélange initial entre Φ⁺ et Φ⁻
        phi: Phase azimutale (utilisée seulement en mode single_state)
        time: Grille temporelle
        mode: trace, single_state, verify ou figure
        figure_id: Figure à reproduire (1 ou 2) en mode figure
        figure_seeds: Graines des deux matrices échantillonnées en mode figure
        output_path: Fichier CSV de sortie (ou répertoire en mode figure)
        single_state_k: Mode k de l'état de Bloch en mode single_state
        checks: Vérifications à exécuter (toutes si None)
        deterministic: Supprime la ligne d'horodatage des fichiers produits
        max_resample_attempts: Tirages maximum avant abandon sur spectre dégénéré
    """
    ensemble: EnsembleConfig = Field(default_factory=EnsembleConfig)
    coupling: CouplingParams = Field(default_factory=CouplingParams)
    hamiltonian_kind: HamiltonianKind = HamiltonianKind.A1
    pair: BellSelection = Field(default_factory=BellSelection)
    theta: float = math.pi / 2
    phi: float = 0.0
    time: TimeGrid = Field(default_factory=TimeGrid)
    mode: RunMode = RunMode.TRACE
    figure_id: Optional[int] = None
    figure_seeds: Tuple[int, int] = FIGURE_SEEDS
    output_path: Optional[Path] = None
    single_state_k: int = Field(default=1, ge=1)
    checks: Optional[List[str]] = None
    deterministic: bool = False
    max_resample_attempts: int = Field(default=8, ge=1)

    @field_validator('output_path', mode='before')
    @classmethod
    def convert_to_path(cls, v: Any) -> Path | None:
        """Convertit le chemin en objet Path."""
        if v is None:
            return None
        if isinstance(v, str):
            return Path(v)
        return v

    @field_validator('theta')
    @classmethod
    def check_theta(cls, v: float) -> float:
        if not 0.0 <= v <= math.pi:
            raise ConfigurationError(f"theta={v} outside [0, pi]", field="theta")
        return v

    @field_validator('phi')
    @classmethod
    def check_phi(cls, v: float) -> float:
        if not 0.0 <= v < 2 * math.pi:
            raise ConfigurationError(f"phi={v} outside [0, 2pi)", field="phi")
        return v

    @field_validator('figure_id')
    @classmethod
    def check_figure_id(cls, v: Optional[int]) -> Optional[int]:
        if v is not None and v not in (1, 2):
            raise ConfigurationError(f"figure_id must be 1 or 2, got {v}", field="figure_id")
        return v

    @model_validator(mode='after')
    def check_consistency(self) -> ExperimentConfig:
        """Vérifie les dimensions de l'ensemble et les indices de la paire."""
        self.ensemble.validate_dimensions()
        m = self.ensemble.m
        for name, index in (('pair_m', self.pair.m_index), ('pair_n', self.pair.n_index)):
            if index > m:
                raise ConfigurationError(f"{name}={index} outside 1..{m}", field=name)
        if self.pair.m_index == self.pair.n_index:
            raise ConfigurationError("pair indices must differ", field="pair_n")
        if self.single_state_k > m:
            raise ConfigurationError(
                f"single_state_k={self.single_state_k} outside 1..{m}", field="single_state_k"
            )
        if self.mode == RunMode.FIGURE and self.figure_id is None:
            raise ConfigurationError("figure mode needs figure_id", field="figure_id")
        return self

    @property
    def generator(self) -> BellGenerator:
        """Générateur des états de Bell associé au type de hamiltonien."""
        return BellGenerator.R if self.hamiltonian_kind == HamiltonianKind.A1 else BellGenerator.T

    @classmethod
    def from_yaml(cls, filepath: str | Path) -> ExperimentConfig:
        """Charge la configuration depuis un fichier YAML.

        Le chemin de sortie relatif est résolu par rapport au répertoire
        contenant le fichier de configuration.

        Args:
            filepath: Chemin vers le fichier YAML de configuration

        Returns:
            Instance d'ExperimentConfig validée

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            yaml.YAMLError: Si le fichier YAML est mal formé
            ConfigurationError: Si la configuration est invalide
        """
        config_path = Path(filepath).resolve()

        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        with open(config_path, 'r') as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            raise ConfigurationError(f"{config_path} must contain a mapping")

        # Résoudre le chemin de sortie par rapport au fichier de config
        if isinstance(data.get('output_path'), str):
            p = Path(data['output_path'])
            if not p.is_absolute():
                data['output_path'] = str(config_path.parent / p)

        return cls.from_dict(data)

    @classmethod
    def from_text(cls, filepath: str | Path) -> ExperimentConfig:
        """Charge un fichier texte `clé=valeur` (clés identiques aux options CLI).

        Les lignes vides et celles commençant par `#` sont ignorées. Les valeurs
        sont interprétées comme des scalaires YAML.

        Raises:
            FileNotFoundError: Si le fichier n'existe pas
            ConfigurationError: Si une ligne ou une clé est invalide
        """
        config_path = Path(filepath).resolve()

        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        overrides: Dict[str, Any] = {}
        for number, line in enumerate(config_path.read_text().splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ConfigurationError(f"{config_path.name}:{number}: expected key=value")
            key, value = (part.strip() for part in line.split('=', 1))
            overrides[key.replace('-', '_')] = yaml.safe_load(value)

        output = overrides.get('output')
        if isinstance(output, str) and not Path(output).is_absolute():
            overrides['output'] = str(config_path.parent / output)

        return cls().with_overrides(**overrides)

    @classmethod
    def load(cls, filepath: str | Path) -> ExperimentConfig:
        """Choisit le format d'après l'extension (.yaml/.yml, sinon clé=valeur)."""
        if Path(filepath).suffix.lower() in ('.yaml', '.yml'):
            return cls.from_yaml(filepath)
        return cls.from_text(filepath)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> ExperimentConfig:
        """Crée une configuration depuis un dictionnaire.

        Args:
            data: Dictionnaire de configuration

        Returns:
            Instance d'ExperimentConfig validée

        Raises:
            ConfigurationError: Avec le nom du champ fautif
        """
        try:
            return cls(**data)
        except ValidationError as e:
            raise _as_configuration_error(e) from e

    def with_overrides(self, **flags: Any) -> ExperimentConfig:
        """Applique les options de la ligne de commande (les valeurs None sont ignorées).

        Raises:
            ConfigurationError: Pour une option inconnue ou une valeur invalide
        """
        data = self.model_dump(mode='python')
        for flag, value in flags.items():
            if value is None:
                continue
            path = FLAG_PATHS.get(flag)
            if path is None:
                raise ConfigurationError(f"Unknown option '{flag}'", field=flag)
            target = data
            for key in path[:-1]:
                target = target[key]
            target[path[-1]] = value
        return type(self).from_dict(data)

    @classmethod
    def figure_preset(cls, figure_id: int, seed: int = FIGURE_SEEDS[0], **overrides: Any) -> ExperimentConfig:
        """Paramètres des légendes des figures: N=6, M=2, C₁=2, θ=π/2, C₂=0, t∈[0,10].

        (b, c) = (1.2, 1.0) pour la figure 1 et (1.0, 1.2) pour la figure 2.
        """
        if figure_id not in (1, 2):
            raise ConfigurationError(f"figure_id must be 1 or 2, got {figure_id}", field="figure_id")
        b, c = (1.2, 1.0) if figure_id == 1 else (1.0, 1.2)
        preset = cls.from_dict({
            'ensemble': {'n': 6, 'm': 2, 'seed': seed},
            'coupling': {'b': b, 'c': c, 'c1': 2.0, 'c2': 0.0},
            'theta': math.pi / 2,
            'time': {'t_start': 0.0, 't_end': 10.0, 't_steps': 2001},
            'mode': RunMode.FIGURE,
            'figure_id': figure_id,
        })
        return preset.with_overrides(**overrides) if overrides else preset


def _as_configuration_error(error: ValidationError) -> ConfigurationError:
    """Convertit une ValidationError pydantic en ConfigurationError nommant le champ."""
    first = error.errors()[0]
    cause = first.get('ctx', {}).get('error')
    if isinstance(cause, ConfigurationError):
        return ConfigurationError(str(cause), field=cause.field)
    loc = first.get('loc', ())
    field = '.'.join(str(part) for part in loc) if loc else None
    return ConfigurationError(f"{field or 'config'}: {first.get('msg')}", field=field)
