"""Tests pour les états de Bell, leur évolution, la densité réduite et l'entropie."""
import math

import numpy as np
import pytest

from pseudo_hermitian_entropy.dynamics import CouplingParams, flow_closed_form
from pseudo_hermitian_entropy.entanglement import (
    TRACE_COLUMNS,
    BellGenerator,
    ReducedDensity,
    asymptotic_entropy,
    closed_form_lambdas,
    delta_of_t,
    entropy_at_delta,
    entropy_from_lambdas,
    entropy_trace,
    evolve,
    evolve_brute_force,
    evolve_single_state,
    first_time_at,
    initial_state,
    make_bell_pair,
    partial_trace,
    printed_rotation,
    reduced_density_by_contraction,
    rotate,
    rotate_brute_force,
    von_neumann,
)
from pseudo_hermitian_entropy.errors import ModeIndexError, NumericalValidityError
from pseudo_hermitian_entropy.spectral import BlochVector, reduced_from_eigenvalues

UNBROKEN = CouplingParams(b=1.2, c=1.0, c1=2.0)
BROKEN = CouplingParams(b=1.0, c=1.2, c1=2.0)
LN2 = math.log(2.0)


@pytest.fixture
def ops():
    return reduced_from_eigenvalues(np.array([5.2, 2.4, 0.9]))


class TestBellPair:
    """Tests pour la construction des paires de Bell."""

    def test_pair_records_mode_eigenvalues(self, ops):
        pair = make_bell_pair(ops, 1, 3, BellGenerator.R)
        assert pair.x_m == 5.2
        assert pair.x_n == 0.9
        assert pair.generator.axis == 1

    @pytest.mark.parametrize("m_index,n_index", [(0, 1), (1, 4), (2, 2)])
    def test_invalid_indices(self, ops, m_index, n_index):
        with pytest.raises(ModeIndexError):
            make_bell_pair(ops, m_index, n_index, "T")

    @pytest.mark.parametrize("generator", list(BellGenerator))
    def test_embed_extract_inverse(self, ops, generator):
        pair = make_bell_pair(ops, 1, 2, generator)
        chi = np.array([0.1, 0.2j, -0.3, 0.4])
        np.testing.assert_allclose(pair.extract(pair.embed(chi)), chi, atol=1e-15)

    def test_bell_states_orthonormal(self, ops):
        pair = make_bell_pair(ops, 1, 2, BellGenerator.R)
        assert abs(np.vdot(pair.phi_plus, pair.phi_plus) - 1) < 1e-15
        assert abs(np.vdot(pair.phi_plus, pair.phi_minus)) < 1e-15


class TestEvolution:
    """Tests pour l'évolution fermée contre l'oracle exponentiel dense."""

    @pytest.mark.parametrize("generator", list(BellGenerator))
    def test_rotation_matches_dense_exponential(self, ops, generator):
        pair = make_bell_pair(ops, 2, 3, generator)
        rng = np.random.default_rng(0)
        for _ in range(50):
            theta = float(rng.uniform(0, math.pi))
            gamma_m, gamma_n = rng.uniform(-math.pi, math.pi, 2)
            t = float(rng.uniform(0, 10))
            start = initial_state(theta, pair)
            closed = rotate(start, gamma_m, gamma_n, t)
            dense = rotate_brute_force(start, ops, gamma_m, gamma_n, t)
            assert np.max(np.abs(closed.chi - dense.chi)) < 1e-10
            assert abs(closed.norm - 1.0) < 1e-12
            assert closed.delta == pytest.approx(gamma_m + gamma_n)

    def test_superposition_rule(self, ops):
        """Φ⁺ évolue en cosΔ·Φ⁺ − i·sinΔ·Φ⁻ (à la phase globale près)."""
        pair = make_bell_pair(ops, 1, 2, BellGenerator.R)
        state = rotate(initial_state(0.0, pair), 0.3, 0.2, 0.0)
        plus, minus = state.coefficients
        assert plus == pytest.approx(math.cos(0.5))
        assert minus == pytest.approx(-1j * math.sin(0.5))

    @pytest.mark.parametrize("generator", list(BellGenerator))
    def test_flow_driven_evolution(self, ops, generator):
        flow = flow_closed_form(UNBROKEN, ops.x)
        pair = make_bell_pair(ops, 1, 2, generator)
        start = initial_state(1.0, pair)
        for t in (0.0, 0.7, 3.1):
            closed = evolve(start, flow, t)
            dense = evolve_brute_force(start, ops, flow, t)
            assert np.max(np.abs(closed.chi - dense.chi)) < 1e-10
            assert closed.delta == pytest.approx(float(delta_of_t(flow, pair, t)))


class TestReducedDensity:
    """Tests pour la trace partielle et l'entropie de von Neumann."""

    def test_two_partial_traces_agree(self, ops):
        pair = make_bell_pair(ops, 1, 2, BellGenerator.T)
        state = rotate(initial_state(0.9, pair), 0.4, -1.1, 2.0)
        a = partial_trace(state)
        b = reduced_density_by_contraction(state.chi)
        np.testing.assert_allclose(a.rho, b.rho, atol=1e-14)
        assert a.lambda1 + a.lambda2 == pytest.approx(1.0)

    @pytest.mark.parametrize("generator", list(BellGenerator))
    def test_local_evolution_keeps_schmidt_weights(self, ops, generator):
        """L'évolution est un produit local: les poids de χ(t) restent ½(1 ± sinθ)."""
        pair = make_bell_pair(ops, 1, 3, generator)
        theta = 0.7
        for gamma_m, gamma_n in ((0.0, 0.0), (0.3, 0.5), (1.2, -0.4)):
            reduced = partial_trace(rotate(initial_state(theta, pair), gamma_m, gamma_n, 1.0))
            weights = sorted((reduced.lambda1, reduced.lambda2))
            assert weights[1] == pytest.approx(0.5 * (1 + math.sin(theta)), abs=1e-12)

    def test_closed_form_lambdas(self):
        lambda1, lambda2 = closed_form_lambdas(math.pi / 2, 0.0)
        assert (lambda1, lambda2) == pytest.approx((1.0, 0.0))
        lambda1, lambda2 = closed_form_lambdas(math.pi / 2, math.pi / 4)
        assert (lambda1, lambda2) == pytest.approx((0.5, 0.5))

    def test_entropy_values(self):
        assert float(entropy_from_lambdas(0.5, 0.5)) == pytest.approx(LN2)
        assert float(entropy_from_lambdas(1.0, 0.0)) == 0.0
        assert entropy_at_delta(math.pi / 2, math.pi / 4) == pytest.approx(LN2)

    def test_entropy_symmetries(self):
        for theta, delta in ((0.4, 0.3), (1.9, -2.2)):
            s = entropy_at_delta(theta, delta)
            assert entropy_at_delta(math.pi - theta, delta) == pytest.approx(s, abs=1e-14)
            assert entropy_at_delta(theta, -delta) == pytest.approx(s, abs=1e-14)
            assert entropy_at_delta(theta, delta + math.pi / 2) == pytest.approx(s, abs=1e-14)
            assert s <= LN2 + 1e-12

    def test_invalid_eigenvalue_rejected(self):
        rho = ReducedDensity(rho=np.diag([1.5, -0.5]).astype(complex), lambda1=1.5, lambda2=-0.5)
        with pytest.raises(NumericalValidityError):
            von_neumann(rho)

    def test_von_neumann_three_quarters(self):
        rho = ReducedDensity(rho=np.diag([0.75, 0.25]).astype(complex), lambda1=0.75, lambda2=0.25)
        assert von_neumann(rho) == pytest.approx(0.56233514, abs=1e-8)


class TestEntropyTrace:
    """Tests pour les traces S(t)."""

    @pytest.fixture
    def grid(self):
        return np.linspace(0.0, 10.0, 201)

    def test_generators_give_identical_traces(self, ops, grid):
        traces = [
            entropy_trace(ops, UNBROKEN, make_bell_pair(ops, 1, 2, generator), math.pi / 2, grid)
            for generator in BellGenerator
        ]
        assert np.max(np.abs(traces[0].entropy - traces[1].entropy)) < 1e-10
        assert np.max(np.abs(traces[0].state_entropy - traces[1].state_entropy)) < 1e-10

    def test_trace_frame(self, ops, grid):
        trace = entropy_trace(ops, UNBROKEN, make_bell_pair(ops, 1, 2, "R"), math.pi / 2, grid)
        frame = trace.to_frame()
        assert list(frame.columns) == TRACE_COLUMNS
        assert len(frame) == 201
        assert trace.entropy[0] < 1e-9
        assert np.max(trace.entropy) <= LN2 + 1e-12
        assert trace.evolve_residual < 1e-10
        assert trace.contraction_residual < 1e-10

    def test_model_gap_reported(self, ops, grid):
        """À θ = π/2 l'état initial est produit: l'entropie de l'état reste nulle."""
        trace = entropy_trace(ops, UNBROKEN, make_bell_pair(ops, 1, 2, "R"), math.pi / 2, grid)
        assert np.max(np.abs(trace.state_entropy)) < 1e-10
        assert trace.model_gap == pytest.approx(float(np.max(trace.entropy)))

    def test_unmixed_bell_state_stays_maximal(self, ops, grid):
        """À θ = 0 le contraste s'annule: S(t) = ln 2 à tout instant."""
        trace = entropy_trace(ops, UNBROKEN, make_bell_pair(ops, 1, 2, "R"), 0.0, grid)
        np.testing.assert_allclose(trace.entropy, LN2, atol=1e-12)
        np.testing.assert_allclose(trace.state_entropy, LN2, atol=1e-10)

    def test_single_sample_and_no_cross_check(self, ops):
        trace = entropy_trace(ops, UNBROKEN, make_bell_pair(ops, 1, 2, "T"), 1.0, [0.0], cross_check=False)
        (record,) = trace.records()
        t, delta, lambda1, lambda2, _ = record
        assert (t, delta) == (0.0, 0.0)
        assert lambda1 == pytest.approx(0.5 * (1 + math.sin(1.0)))
        assert lambda2 == pytest.approx(0.5 * (1 - math.sin(1.0)))
        assert trace.state_entropy is None
        assert trace.model_gap is None

    def test_first_time_at(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        pair = make_bell_pair(ops, 1, 2, "R")
        t_star = first_time_at(flow, pair, math.pi / 4, 0.0, 10.0)
        assert t_star is not None
        assert float(delta_of_t(flow, pair, t_star)) == pytest.approx(math.pi / 4, abs=1e-10)

    def test_broken_regime_never_returns(self, ops):
        flow = flow_closed_form(BROKEN, ops.x)
        pair = make_bell_pair(ops, 1, 2, "R")
        assert first_time_at(flow, pair, math.pi / 2, 0.0, 10.0) is None

    def test_asymptotic_entropy(self, ops):
        flow = flow_closed_form(BROKEN, ops.x)
        pair = make_bell_pair(ops, 1, 2, "R")
        s_inf = asymptotic_entropy(pair.x_m, pair.x_n, BROKEN, math.pi / 2)
        assert s_inf == pytest.approx(entropy_at_delta(math.pi / 2, 2 * flow.gamma_infinity()))
        late = entropy_at_delta(math.pi / 2, float(delta_of_t(flow, pair, 40.0)))
        assert late == pytest.approx(s_inf, abs=1e-9)


class TestSingleState:
    """Tests pour l'évolution d'un état de Bloch."""

    def test_r_generator_reproduces_rotation_at_quarter_azimuth(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        theta = 0.8
        evolution = evolve_single_state(ops, flow, 2, BlochVector(theta=theta, phi=math.pi / 2),
                                        np.linspace(0.0, 5.0, 51), generator="R")
        cos_part, sin_part = printed_rotation(theta, evolution.gamma)
        np.testing.assert_allclose(evolution.p_x, cos_part ** 2, atol=1e-12)
        np.testing.assert_allclose(evolution.p_y, sin_part ** 2, atol=1e-12)

    def test_t_generator_keeps_populations(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        evolution = evolve_single_state(ops, flow, 1, BlochVector(theta=1.3, phi=0.4),
                                        np.linspace(0.0, 5.0, 11), generator="T")
        np.testing.assert_allclose(evolution.p_x, math.cos(0.65) ** 2, atol=1e-12)
        np.testing.assert_allclose(evolution.p_x + evolution.p_y, 1.0, atol=1e-12)

    def test_density_is_pure(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        evolution = evolve_single_state(ops, flow, 1, BlochVector(theta=2.0), [1.5])
        rho = evolution.density(0)
        np.testing.assert_allclose(rho @ rho, rho, atol=1e-12)

    def test_mode_out_of_range(self, ops):
        flow = flow_closed_form(UNBROKEN, ops.x)
        with pytest.raises(ModeIndexError):
            evolve_single_state(ops, flow, 4, BlochVector(theta=1.0), [0.0])
