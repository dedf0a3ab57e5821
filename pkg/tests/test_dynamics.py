"""Tests pour les hamiltoniens pseudo-hermitiens, le flot de la métrique et l'oracle RK4."""
import math

import numpy as np
import pytest
from pydantic import ValidationError

from pseudo_hermitian_entropy.dynamics import (
    CouplingParams,
    HamiltonianKind,
    Regime,
    a2_flow_discrepancy,
    flow_closed_form,
    flow_ode_oracle,
    hamiltonian,
    rk4_integrate,
    rk4_step,
)
from pseudo_hermitian_entropy.errors import (
    ConfigurationError,
    OracleError,
    RankError,
    UnsupportedParameterError,
)
from pseudo_hermitian_entropy.spectral import reduced_from_eigenvalues

UNBROKEN = CouplingParams(b=1.2, c=1.0, c1=2.0)
BROKEN = CouplingParams(b=1.0, c=1.2, c1=2.0)


class TestCouplingParams:
    """Tests pour les couplages et la classification du régime."""

    def test_regimes(self):
        assert UNBROKEN.regime == Regime.UNBROKEN
        assert BROKEN.regime == Regime.BROKEN
        assert CouplingParams(b=1.0, c=1.0).regime == Regime.EXCEPTIONAL

    def test_k_squared(self):
        assert UNBROKEN.k_squared == pytest.approx(4.0 + 1.44 - 1.0)

    def test_negative_coupling_rejected(self):
        with pytest.raises(ValidationError):
            CouplingParams(b=-1.0)

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            CouplingParams(c1=float("nan"))

    def test_closed_form_domain(self):
        with pytest.raises(UnsupportedParameterError):
            flow_closed_form(CouplingParams(b=0.0, c=0.5))
        with pytest.raises(UnsupportedParameterError):
            flow_closed_form(CouplingParams(b=0.5, c=2.0, c1=1.0))

    def test_non_positive_mode_rejected(self):
        with pytest.raises(ConfigurationError):
            flow_closed_form(UNBROKEN, [1.0, 0.0])


class TestHamiltonian:
    """Tests pour A₁, A₂ et leur spectre x_k ± √(b²−c²)√x_k."""

    @pytest.fixture
    def ops(self):
        return reduced_from_eigenvalues(np.array([6.5, 2.25, 0.8]))

    @pytest.mark.parametrize("params", [UNBROKEN, BROKEN])
    @pytest.mark.parametrize("kind", [HamiltonianKind.A1, HamiltonianKind.A2])
    def test_spectrum_closed_form(self, ops, params, kind):
        assert hamiltonian(ops, params, kind).spectrum_residual() < 1e-9

    def test_unbroken_spectrum_is_real(self, ops):
        assert np.all(np.abs(hamiltonian(ops, UNBROKEN).spectrum.imag) == 0)

    def test_broken_spectrum_has_conjugate_pairs(self, ops):
        spectrum = hamiltonian(ops, BROKEN).spectrum
        assert np.all(np.abs(spectrum.imag) > 0)
        np.testing.assert_allclose(np.sort(spectrum.imag), np.sort(-spectrum.imag))

    def test_a1_is_not_hermitian(self, ops):
        a = hamiltonian(ops, UNBROKEN).a_matrix
        assert np.max(np.abs(a - a.conj().T)) > 0.1

    def test_a1_eigenvalues_at_x_four(self):
        """x = 4, b = 1.2, c = 1: 4 ± 2√0.44."""
        a = hamiltonian(reduced_from_eigenvalues(np.array([4.0])), UNBROKEN).a_matrix
        eigenvalues = np.linalg.eigvals(a)
        assert np.max(np.abs(eigenvalues.imag)) < 1e-10
        np.testing.assert_allclose(np.sort(eigenvalues.real), [2.67335008, 5.32664992], atol=1e-8)

    def test_a2_needs_full_rank(self):
        with pytest.raises(RankError):
            hamiltonian(reduced_from_eigenvalues(np.array([1.0, 0.0])), UNBROKEN, HamiltonianKind.A2)


class TestFlowClosedForm:
    """Tests pour les formes closes α, β, ν, γ."""

    @pytest.mark.parametrize("params", [UNBROKEN, BROKEN])
    def test_origin(self, params):
        """β et γ s'annulent en t = −C₂."""
        flow = flow_closed_form(params.model_copy(update={"c2": 0.7}))
        x = np.array([0.5, 3.0, 9.0])
        assert np.max(np.abs(flow.beta(x, -0.7))) == 0
        assert np.max(np.abs(flow.gamma(x, -0.7))) == 0

    def test_values_at_origin_for_x_four(self):
        """En t = −C₂: ν = √(C₁² + b² − c²) et exp(4αx) = (b−c)/(b+c)·(√k + C₁)/(√k − C₁)."""
        flow = flow_closed_form(UNBROKEN)
        assert float(flow.nu(4.0, 0.0)) == pytest.approx(math.sqrt(4.44), abs=1e-12)
        assert float(flow.nu(4.0, 0.0)) == pytest.approx(2.10713075, abs=1e-8)
        assert float(flow.exp_4_alpha_x(4.0, 0.0)) == pytest.approx(3.485232, abs=1e-6)

    def test_gamma_infinity_value(self):
        assert flow_closed_form(BROKEN).gamma_infinity() == pytest.approx(0.61636554, abs=1e-8)

    @pytest.mark.parametrize("params", [UNBROKEN, BROKEN])
    def test_derivatives_match_flow_equations(self, params):
        flow = flow_closed_form(params)
        h = 1e-5
        for x in (0.6, 2.0, 7.5):
            for t in (0.3, 1.7, 4.2):
                beta_num = (flow.beta(x, t + h) - flow.beta(x, t - h)) / (2 * h)
                alpha_num = (flow.alpha(x, t + h) - flow.alpha(x, t - h)) / (2 * h)
                assert abs(beta_num - flow.beta_dot(x, t)) < 1e-6
                assert abs(alpha_num - flow.alpha_dot(x, t)) < 1e-6

    @pytest.mark.parametrize("params", [UNBROKEN, BROKEN])
    def test_nu_matches_definition(self, params):
        flow = flow_closed_form(params)
        x = np.array([0.7, 3.3])
        t = np.linspace(0.0, 5.0, 41)[:, None]
        nu = flow.nu(x, t)
        assert np.max(np.abs(nu - flow.nu_from_definition(x, t)) / (1 + np.abs(nu))) < 1e-8

    def test_tanh_inversion_unbroken(self):
        flow = flow_closed_form(UNBROKEN)
        t = np.linspace(0.0, 10.0, 201)
        for x in (0.5, 4.0):
            expected = np.tanh(2 * flow.alpha(x, t) * x)
            assert np.max(np.abs(expected - flow.tanh_two_alpha_from_beta_dot(x, t))) < 1e-8

    def test_sigma_is_harmonic(self):
        """σ̈ + 4x(b²−c²)σ = 0."""
        flow = flow_closed_form(UNBROKEN)
        x, t, h = 2.0, 1.3, 1e-4
        second = (flow.sigma(x, t + h) - 2 * flow.sigma(x, t) + flow.sigma(x, t - h)) / h ** 2
        assert abs(second + 4 * x * UNBROKEN.discriminant * flow.sigma(x, t)) < 1e-5

    def test_gamma_unwrapped_and_increasing(self):
        flow = flow_closed_form(UNBROKEN)
        t = np.linspace(0.0, 10.0, 10001)
        gamma = flow.gamma(5.0, t)
        steps = np.diff(gamma)
        assert np.all(steps > 0)
        assert np.max(steps) < 0.05
        assert gamma[-1] > math.pi

    def test_gamma_rate_is_root_x_nu(self):
        flow = flow_closed_form(UNBROKEN)
        x, t, h = 3.0, 2.2, 1e-6
        rate = (flow.gamma(x, t + h) - flow.gamma(x, t - h)) / (2 * h)
        assert rate == pytest.approx(math.sqrt(x) * flow.nu(x, t), rel=1e-6)

    def test_broken_gamma_saturates(self):
        flow = flow_closed_form(BROKEN)
        limit = flow.gamma_infinity()
        assert limit == pytest.approx(0.5 * math.atan(math.sqrt(3.56 / 0.44)))
        assert flow.gamma(4.0, 30.0) == pytest.approx(limit, abs=1e-12)

    def test_unbroken_has_no_gamma_limit(self):
        with pytest.raises(UnsupportedParameterError):
            flow_closed_form(UNBROKEN).gamma_infinity()

    def test_exceptional_point(self):
        flow = flow_closed_form(CouplingParams(b=1.0, c=1.0, c1=2.0))
        assert flow.gamma_infinity() == pytest.approx(math.pi / 4)
        assert flow.nu(2.0, 0.0) == pytest.approx(2.0)
        with pytest.raises(UnsupportedParameterError):
            flow.alpha(2.0, 1.0)

    def test_a2_parameters_map_from_a1(self):
        flow = flow_closed_form(UNBROKEN)
        x, t = 2.5, 0.9
        assert flow.delta(x, t) == pytest.approx(flow.alpha(x, t) * math.sqrt(x))
        assert flow.zeta(x, t) == flow.beta(x, t)
        assert flow.xi(x, t) == flow.nu(x, t)


class TestOracle:
    """Tests pour l'intégrateur RK4 à raffinement."""

    def test_rk4_step_exponential(self):
        y = rk4_step(lambda t, y: -y, 0.0, np.array([1.0]), 0.01)
        assert y[0] == pytest.approx(math.exp(-0.01), abs=1e-12)

    def test_integrate_decay(self):
        grid = np.linspace(0.0, 2.0, 11)
        samples = rk4_integrate(lambda t, y: -y, grid, [1.0])
        np.testing.assert_allclose(samples[:, 0], np.exp(-grid), atol=1e-9)

    def test_single_point_grid(self):
        samples = rk4_integrate(lambda t, y: -y, [0.5], [2.0])
        assert samples.shape == (1, 1)
        assert samples[0, 0] == 2.0

    def test_invalid_grid(self):
        with pytest.raises(ConfigurationError):
            rk4_integrate(lambda t, y: -y, [0.0, 0.0, 1.0], [1.0])
        with pytest.raises(ConfigurationError):
            rk4_integrate(lambda t, y: -y, [], [1.0])

    def test_no_refinement_budget(self):
        with pytest.raises(OracleError):
            rk4_integrate(lambda t, y: -y, [0.0, 1.0], [1.0], max_doublings=0)

    @pytest.mark.parametrize("params", [UNBROKEN, BROKEN])
    def test_closed_form_matches_oracle(self, params):
        flow = flow_closed_form(params)
        grid = np.linspace(0.0, 10.0, 101)
        for x in (0.5, 3.7):
            oracle = flow_ode_oracle(params, x, grid)
            assert np.max(np.abs(oracle.alpha - flow.alpha(x, grid))) < 1e-6
            assert np.max(np.abs(oracle.beta - flow.beta(x, grid))) < 1e-6

    def test_a2_flow_agrees_at_unit_mode(self):
        finding = a2_flow_discrepancy(UNBROKEN, 1.0, np.linspace(0.0, 10.0, 101))
        assert finding.discrepancy < 1e-6

    def test_a2_flow_deviates_away_from_unit_mode(self):
        finding = a2_flow_discrepancy(UNBROKEN, 4.0, np.linspace(0.0, 0.5, 11))
        assert finding.discrepancy > 1e-6
