"""
CLI des expériences d'entropie d'intrication sous hamiltoniens pseudo-hermitiens.

Chaque commande part de la configuration par défaut (ou d'un fichier YAML /
clé=valeur) et applique les options de la ligne de commande, qui gagnent toujours.
"""
from __future__ import annotations

import functools
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import click

# Support pour exécution directe (développement)
if __name__ == '__main__' and not __package__:
    import os

    sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../..')))
    from pseudo_hermitian_entropy.config import ExperimentConfig, RunMode
    from pseudo_hermitian_entropy.errors import (
        ConfigurationError, ModeIndexError, PseudoHermitianError, UnsupportedParameterError,
    )
    from pseudo_hermitian_entropy.experiment_runner import ExperimentOutcome, ExperimentRunner
    from pseudo_hermitian_entropy.verification import CheckKind
else:
    from ..config import ExperimentConfig, RunMode
    from ..errors import ConfigurationError, ModeIndexError, PseudoHermitianError, UnsupportedParameterError
    from ..experiment_runner import ExperimentOutcome, ExperimentRunner
    from ..verification import CheckKind

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_IO = 3

CONFIG_EXAMPLE = """# Configuration des expériences pseudo-hermitiennes
# Les options de la ligne de commande surchargent toujours ces valeurs.

# === Ensemble aléatoire ===
ensemble:
  n: 6                  # dimension N (N >= 2M)
  m: 2                  # dimension M du bloc
  seed: 7               # graine (entier 64 bits non signé)
  scalar_class: complex # complex ou real

# === Couplages et constantes d'intégration ===
coupling:
  b: 1.2                # b > c: PT non brisée, b < c: PT brisée
  c: 1.0
  c1: 2.0               # C1
  c2: 0.0               # C2 (origine des temps du flot)

# === Expérience ===
hamiltonian_kind: A1    # A1 (états de Bell de R) ou A2 (états de Bell de T)
pair:
  m_index: 1
  n_index: 2
theta: 1.5707963267948966   # mélange initial cos(θ/2)Φ+ + sin(θ/2)Φ-
phi: 0.0                    # azimut (mode single_state)
single_state_k: 1

time:
  t_start: 0.0
  t_end: 10.0
  t_steps: 2001

mode: trace             # trace, single_state, verify ou figure
# figure_id: 1
# checks: [algebra, flow_oracle, entropy_oracle]

# Chemin relatif résolu par rapport à ce fichier; absent = sortie standard
output_path: "./entropy_trace.csv"
deterministic: false    # true supprime la ligne d'horodatage

# === Utilisation ===
#   ph-entropy run --config ph_entropy_config.yaml
#   ph-entropy run --config ph_entropy_config.yaml --seed 11 --b 1.0 --c 1.2
#   ph-entropy figure --id 2 --output ./figures
#   ph-entropy verify --n 6 --m 2 --seed 7
#   ph-entropy single-state --k 1 --theta 0.5 --phi 1.5707963267948966
"""


def experiment_options(func: Callable) -> Callable:
    """Options communes reflétant les champs d'ExperimentConfig."""
    options = [
        click.option('--n', type=int, help='Dimension N'),
        click.option('--m', type=int, help='Dimension M du bloc'),
        click.option('--seed', type=click.IntRange(min=0), help='Graine du tirage'),
        click.option('--scalar-class', type=click.Choice(['complex', 'real']), help='Type des entrées'),
        click.option('--b', type=float, help='Couplage b'),
        click.option('--c', type=float, help='Couplage c'),
        click.option('--c1', type=float, help="Constante d'intégration C1"),
        click.option('--c2', type=float, help="Constante d'intégration C2"),
        click.option('--kind', type=click.Choice(['A1', 'A2']), help='Type de hamiltonien'),
        click.option('--pair-m', type=int, help='Premier mode de la paire de Bell'),
        click.option('--pair-n', type=int, help='Second mode de la paire de Bell'),
        click.option('--theta', type=float, help='Angle de mélange initial'),
        click.option('--t-start', type=float, help='Premier instant'),
        click.option('--t-end', type=float, help='Dernier instant'),
        click.option('--t-steps', type=int, help='Nombre de points'),
        click.option('--output', '-o', type=click.Path(path_type=Path), help='Fichier (ou répertoire) de sortie'),
        click.option('--deterministic', is_flag=True, help="Supprime la ligne d'horodatage"),
        click.option('--verbose', '-v', is_flag=True, help='Journalisation détaillée'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def config_option(func: Callable) -> Callable:
    return click.option(
        '--config',
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        help='Fichier de configuration YAML ou clé=valeur (optionnel)'
    )(func)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )


def _overrides(flags: Dict[str, Any]) -> Dict[str, Any]:
    """Options non fournies (None) ignorées; --deterministic n'est transmis que s'il est présent."""
    flags = dict(flags)
    flags.pop('verbose', None)
    if not flags.get('deterministic'):
        flags['deterministic'] = None
    return flags


def _load_config(config: Optional[Path], flags: Dict[str, Any]) -> ExperimentConfig:
    try:
        base = ExperimentConfig.load(config) if config else ExperimentConfig()
    except FileNotFoundError as e:
        raise ConfigurationError(str(e), field="config") from e
    return base.with_overrides(**_overrides(flags))


def _fail(message: str, code: int, hint: Optional[str] = None) -> None:
    click.echo(f"❌ Erreur: {message}", err=True)
    if hint:
        click.echo(f"\n💡 {hint}", err=True)
    sys.exit(code)


def handle_errors(func: Callable) -> Callable:
    """Traduit les exceptions en messages et codes de sortie (2 usage, 3 E/S, 1 sinon)."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ConfigurationError as e:
            field = f" [{e.field}]" if e.field else ""
            _fail(f"configuration invalide{field}: {e}", EXIT_USAGE,
                  "Créez un fichier de configuration avec: ph-entropy config-example")
        except (UnsupportedParameterError, ModeIndexError) as e:
            _fail(str(e), EXIT_USAGE)
        except OSError as e:
            _fail(f"écriture impossible: {e}", EXIT_IO)
        except PseudoHermitianError as e:
            _fail(f"{type(e).__name__}: {e}", EXIT_CHECK_FAILURE)

    return wrapper


def _report(outcome: ExperimentOutcome) -> None:
    """Affiche les fichiers produits, les critères et le rapport de vérification."""
    for path, text in outcome.outputs.items():
        if path == '-':
            click.echo(text, nl=False)
        else:
            click.echo(f"✅ CSV écrit: {path}", err=True)

    for trace in outcome.traces:
        gap = trace.model_gap
        if gap is not None and gap > 1e-10:
            click.echo(
                f"ℹ️  Écart entre l'entropie du modèle et celle de l'état évolué: {gap:.3e}", err=True
            )

    for diagnostic in outcome.diagnostics:
        icon = "✅" if diagnostic.passed else "❌"
        click.echo(f"{icon} {diagnostic.name}: {diagnostic.residual:.3e} (seuil {diagnostic.tolerance:.1e}) "
                   f"{diagnostic.message}", err=True)

    report = outcome.report
    if report is not None:
        checked = [r for r in report.results if not r.informational]
        click.echo(f"🔬 Tirage: graine {report.seed_used} ({report.resamples} rééchantillonnage(s)), "
                   f"régime {report.config.coupling.regime.value}")
        click.echo(f"   Vérifications: {sum(r.passed for r in checked)}/{len(checked)} réussies "
                   f"en {report.duration_ms:.0f}ms")
        for result in report.failures:
            click.echo(f"❌ {result.kind.value}/{result.name}: {result.residual:.3e} "
                       f"(seuil {result.tolerance:.1e}) {result.message}")
        for result in report.findings:
            click.echo(f"ℹ️  {result.kind.value}/{result.name}: {result.residual:.3e} {result.message}")

    if not outcome.passed:
        sys.exit(EXIT_CHECK_FAILURE)


@click.group()
@click.version_option()
def cli():
    """
    Pseudo-Hermitian Entropy - entropie d'intrication sous hamiltoniens pseudo-hermitiens.

    Échantillonne un ensemble aléatoire projeté, construit les générateurs
    réduits et le flot de la métrique de Dyson, puis calcule l'entropie de
    paires de Bell. Les sorties sont des CSV avec métadonnées en commentaires.

    Codes de sortie:

        \b
        0  succès
        1  échec d'une vérification
        2  configuration ou usage invalide
        3  erreur d'écriture
    """
    pass


@cli.command()
@config_option
@experiment_options
@click.option('--mode', type=click.Choice([m.value for m in RunMode]), help="Mode d'exécution")
@click.option('--figure-id', type=click.IntRange(1, 2), help='Figure (mode figure)')
@click.option('--phi', type=float, help='Azimut (mode single_state)')
@handle_errors
def run(config: Optional[Path], verbose: bool, **flags: Any):
    """
    Exécute le mode configuré (trace par défaut).

    En mode trace, écrit t,delta,lambda1,lambda2,entropy.
    """
    _configure_logging(verbose)
    cfg = _load_config(config, flags)
    _report(ExperimentRunner(cfg).run())


@cli.command()
@click.option('--id', 'figure_id', type=click.IntRange(1, 2), required=True, help='Figure à reproduire')
@click.option('--seeds', type=int, nargs=2, help='Graines des deux matrices (défaut: 11 23)')
@experiment_options
@handle_errors
def figure(figure_id: int, seeds: Optional[Tuple[int, int]], verbose: bool, **flags: Any):
    """
    Reproduit les données d'une figure (un CSV par matrice échantillonnée).

    Figure 1: b=1.2, c=1.0 (oscillations). Figure 2: b=1.0, c=1.2 (plateau).
    --seed S équivaut à --seeds S S+1.
    """
    _configure_logging(verbose)
    seed = flags.pop('seed', None)
    if seed is not None and not seeds:
        seeds = (seed, seed + 1)
    cfg = ExperimentConfig.figure_preset(figure_id, **_overrides(flags))
    if seeds:
        cfg = cfg.model_copy(update={'figure_seeds': tuple(seeds)})
    _report(ExperimentRunner(cfg).run())


@cli.command()
@config_option
@experiment_options
@click.option(
    '--check',
    'checks',
    multiple=True,
    type=click.Choice([k.value for k in CheckKind]),
    help='Famille de vérifications (répétable; toutes par défaut)'
)
@handle_errors
def verify(config: Optional[Path], checks: Tuple[str, ...], verbose: bool, **flags: Any):
    """
    Lance la suite de vérification et sort avec le code 1 en cas d'échec.
    """
    _configure_logging(verbose)
    cfg = _load_config(config, {**flags, 'mode': RunMode.VERIFY.value})
    if checks:
        cfg = cfg.model_copy(update={'checks': list(checks)})
    _report(ExperimentRunner(cfg).run())


@cli.command('single-state')
@config_option
@experiment_options
@click.option('--k', 'single_state_k', type=int, help='Mode k de l\'état de Bloch')
@click.option('--phi', type=float, help='Azimut φ')
@handle_errors
def single_state(config: Optional[Path], verbose: bool, **flags: Any):
    """
    Fait évoluer un état de Bloch d'un mode; écrit t,gamma,p_x,p_y.
    """
    _configure_logging(verbose)
    cfg = _load_config(config, {**flags, 'mode': RunMode.SINGLE_STATE.value})
    _report(ExperimentRunner(cfg).run())


@cli.command()
@click.option(
    '--output',
    '-o',
    type=click.Path(dir_okay=False, path_type=Path),
    help='Chemin pour sauvegarder la configuration (optionnel)'
)
def config_example(output: Path | None):
    """
    Affiche un exemple de fichier de configuration YAML.
    """
    if output:
        try:
            output.write_text(CONFIG_EXAMPLE)
            click.echo(f"✅ Configuration sauvegardée dans: {output}")
        except OSError as e:
            click.echo(f"❌ Erreur lors de la sauvegarde: {e}", err=True)
            sys.exit(EXIT_IO)
    else:
        click.echo(CONFIG_EXAMPLE)


if __name__ == '__main__':
    cli()
