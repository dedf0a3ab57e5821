"""Tests pour la formule de Dyson et la cohérence de l'évolution des matrices densité."""
import numpy as np
import pytest

from pseudo_hermitian_entropy.dynamics import (
    CouplingParams,
    HamiltonianKind,
    density_evolution_check,
    dyson_tolerance,
    dyson_transform,
    flow_closed_form,
    hamiltonian,
    hermitian_target,
    metric,
)
from pseudo_hermitian_entropy.errors import ConditioningError
from pseudo_hermitian_entropy.spectral import reduced_from_eigenvalues

UNBROKEN = CouplingParams(b=1.2, c=1.0, c1=2.0)
BROKEN = CouplingParams(b=1.0, c=1.2, c1=2.0)


@pytest.fixture
def ops():
    return reduced_from_eigenvalues(np.array([4.1, 1.3]))


class TestDysonFormula:
    """Tests pour h = μAμ⁻¹ + iμ̇μ⁻¹."""

    @pytest.mark.parametrize("kind", [HamiltonianKind.A1, HamiltonianKind.A2])
    @pytest.mark.parametrize("params,span", [(UNBROKEN, 10.0), (BROKEN, 1.0)])
    def test_identity(self, ops, kind, params, span):
        """Le transformé de Dyson est hermitien et égal à Û + ν·(R̂ ou T̂/√Û)."""
        flow = flow_closed_form(params, ops.x)
        a = hamiltonian(ops, params, kind)
        tol = dyson_tolerance(ops)
        for t in np.linspace(0.0, span, 25):
            mu, mu_dot = metric(kind, ops, flow, float(t))
            h = dyson_transform(a, mu, mu_dot)
            assert np.max(np.abs(h - hermitian_target(kind, ops, flow, float(t)))) < tol
            assert np.max(np.abs(h - h.conj().T)) < tol

    @pytest.mark.parametrize("kind", [HamiltonianKind.A1, HamiltonianKind.A2])
    def test_zero_mu_dot_breaks_identity(self, ops, kind):
        flow = flow_closed_form(UNBROKEN, ops.x)
        a = hamiltonian(ops, UNBROKEN, kind)
        mu, mu_dot = metric(kind, ops, flow, 0.8)
        wrong = dyson_transform(a, mu, np.zeros_like(mu_dot))
        assert np.max(np.abs(wrong - hermitian_target(kind, ops, flow, 0.8))) > dyson_tolerance(ops)

    def test_metric_at_origin_is_diagonal(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        mu, _ = metric(HamiltonianKind.A1, ops, flow, 0.0)
        # β(0) = 0, so only exp(αT̂) remains
        alpha = flow.alpha(ops.x, 0.0)
        expected = np.diag(np.exp(np.concatenate([alpha * ops.x, -alpha * ops.x])))
        np.testing.assert_allclose(mu, expected, atol=1e-12)

    def test_ill_conditioned_metric_rejected(self, ops):
        a = hamiltonian(ops, UNBROKEN)
        mu = np.diag([1.0, 1e-14, 1.0, 1.0]).astype(complex)
        with pytest.raises(ConditioningError):
            dyson_transform(a, mu, np.zeros_like(mu))


class TestDensityEvolution:
    """Tests pour la comparaison μρ_Aμ⁻¹ contre ρ_h."""

    @pytest.mark.parametrize("kind", [HamiltonianKind.A1, HamiltonianKind.A2])
    def test_evolutions_agree(self, ops, kind):
        flow = flow_closed_form(UNBROKEN, ops.x)
        report = density_evolution_check(hamiltonian(ops, UNBROKEN, kind), flow, np.linspace(0.0, 3.0, 16))
        assert report.passed, report.max_entry_residual
        assert report.entry_residual.shape == (16,)

    def test_zero_mu_dot_is_detected(self, ops):
        """Le flot est isospectral: seule la comparaison terme à terme détecte μ̇ = 0."""
        flow = flow_closed_form(UNBROKEN, ops.x)
        report = density_evolution_check(
            hamiltonian(ops, UNBROKEN), flow, np.linspace(0.0, 3.0, 16), zero_mu_dot=True
        )
        assert not report.passed
        assert report.max_entry_residual > report.tolerance

    def test_integrator_stages_skip_fixed_work(self, ops, monkeypatch):
        """Le triplet est construit une fois; cond(μ) n'est évalué qu'aux échantillons."""
        from pseudo_hermitian_entropy.dynamics import dyson as dyson_module

        calls = {"triple": 0, "cond": 0}
        original_triple = dyson_module.pauli_triple
        original_cond = np.linalg.cond

        def counting_triple(*args, **kwargs):
            calls["triple"] += 1
            return original_triple(*args, **kwargs)

        def counting_cond(*args, **kwargs):
            calls["cond"] += 1
            return original_cond(*args, **kwargs)

        monkeypatch.setattr(dyson_module, "pauli_triple", counting_triple)
        monkeypatch.setattr(np.linalg, "cond", counting_cond)
        flow = flow_closed_form(UNBROKEN, ops.x)
        report = density_evolution_check(hamiltonian(ops, UNBROKEN), flow, np.linspace(0.0, 3.0, 16))
        assert report.passed
        assert calls["triple"] == 1
        assert calls["cond"] == 16 + 1
