"""
Écriture des fichiers CSV: lignes de métadonnées `# clé: valeur`, en-tête puis données.
"""
from __future__ import annotations

import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import numpy as np
import pandas as pd

from .ensemble import VARIANCE_CONVENTION
from .entanglement import LOG_BASE
from .experiment import ExperimentContext

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    if isinstance(value, np.ndarray):
        return ' '.join(FLOAT_FORMAT % float(v) for v in value)
    if isinstance(value, (list, tuple)):
        return ' '.join(_format_value(v) for v in value)
    return str(value)


def experiment_metadata(ctx: ExperimentContext, **extra: Any) -> Dict[str, Any]:
    """Métadonnées communes à tous les fichiers produits pour un contexte.

    Args:
        ctx: Contexte préparé de l'expérience
        **extra: Entrées supplémentaires (ajoutées à la fin, dans l'ordre)
    """
    config = ctx.config
    params = ctx.params
    metadata: Dict[str, Any] = {
        'seed': config.ensemble.seed,
        'seed_used': ctx.sample.seed,
        'resamples': ctx.sample.resamples,
        'n': config.ensemble.n,
        'm': config.ensemble.m,
        'scalar_class': config.ensemble.scalar_class.value,
        'variance_convention': VARIANCE_CONVENTION[config.ensemble.scalar_class],
        'x_k': ctx.x,
        'hamiltonian_kind': config.hamiltonian_kind.value,
        'generator': ctx.pair.generator.value,
        'pair': f"{ctx.pair.m_index},{ctx.pair.n_index}",
        'b': params.b,
        'c': params.c,
        'C1': params.c1,
        'C2': params.c2,
        'regime': params.regime.value,
        'theta': config.theta,
        'log_base': LOG_BASE,
    }
    metadata.update(extra)
    return metadata


def render_csv(frame: pd.DataFrame, metadata: Mapping[str, Any], deterministic: bool = False) -> str:
    """Produit le texte CSV complet (fins de ligne LF, flottants en %.17g)."""
    lines = [f"# {key}: {_format_value(value)}" for key, value in metadata.items() if value is not None]
    if not deterministic:
        lines.append(f"# created: {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
    header = '\n'.join(lines) + '\n' if lines else ''
    body = frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return header + body


def write_csv(
        frame: pd.DataFrame,
        metadata: Mapping[str, Any],
        path: Optional[Path],
        deterministic: bool = False
) -> str:
    """Écrit le CSV dans path (créant les répertoires parents) et retourne son texte.

    Si path vaut None rien n'est écrit; l'appelant affiche le texte.

    Raises:
        OSError: Si le fichier ne peut pas être écrit
    """
    text = render_csv(frame, metadata, deterministic=deterministic)
    if path is None:
        return text
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', newline='', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return text
