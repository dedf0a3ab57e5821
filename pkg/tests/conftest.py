"""Configuration pytest pour les tests."""
import sys
from pathlib import Path

import pytest

# Ajouter le répertoire src au path pour les imports
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

from pseudo_hermitian_entropy.config import ExperimentConfig  # noqa: E402
from pseudo_hermitian_entropy.experiment import prepare  # noqa: E402


@pytest.fixture
def default_context():
    """Contexte préparé pour la configuration par défaut (N=6, M=2, graine 7, PT non brisée)."""
    return prepare(ExperimentConfig())


@pytest.fixture
def broken_context():
    """Même tirage, couplages de la figure 2 (PT brisée)."""
    return prepare(ExperimentConfig().with_overrides(b=1.0, c=1.2))
