"""Tests pour la base de Schmidt, les opérateurs réduits et le triplet de Pauli."""
import dataclasses
import math

import numpy as np
import pytest

from pseudo_hermitian_entropy.ensemble import EnsembleConfig, build_quartet, embed_block, sample_block
from pseudo_hermitian_entropy.errors import AxisError, ConfigurationError, DegenerateEnsembleError, RankError
from pseudo_hermitian_entropy.spectral import (
    Axis,
    BlochVector,
    bch_conjugate,
    bch_expansion,
    bloch_projector,
    bloch_state,
    eigen_residual,
    generator_eigenvectors,
    generator_spectrum_residual,
    mode_exp,
    pairing_residual,
    pauli_residuals,
    pauli_triple,
    projected_triple,
    projection_residuals,
    reduced_from_eigenvalues,
    reduced_operators,
    sample_schmidt,
    schmidt_basis,
)
from pseudo_hermitian_entropy.spectral import schmidt as schmidt_module

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]])
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class TestSchmidtBasis:
    """Tests pour schmidt_basis et sample_schmidt."""

    @pytest.fixture
    def block(self):
        return sample_block(EnsembleConfig(n=8, m=3, seed=4))

    def test_eigenvalues_strictly_descending(self, block):
        basis = schmidt_basis(block)
        assert basis.m == 3
        assert np.all(np.diff(basis.x) < 0)
        assert np.all(basis.x > 0)

    def test_basis_is_orthonormal_and_paired(self, block):
        basis = schmidt_basis(block)
        tol = 1e-10 * max(1.0, basis.x[0])
        assert basis.gram_residual() < tol
        assert pairing_residual(block, basis) < tol
        assert eigen_residual(block, basis) < tol

    def test_single_entry_block(self):
        """h = 2: x = [4], |x₁⟩ = e₁, |y₁⟩ = e₂."""
        basis = schmidt_basis(embed_block(np.array([[2.0]])))
        np.testing.assert_allclose(basis.x, [4.0], atol=1e-14)
        np.testing.assert_allclose(basis.x_vecs[:, 0], [1.0, 0.0], atol=1e-14)
        np.testing.assert_allclose(basis.y_vecs[:, 0], [0.0, 1.0], atol=1e-14)

    def test_supports(self, block):
        """|x_k⟩ vit dans le sous-espace P, |y_k⟩ dans Q."""
        basis = schmidt_basis(block)
        assert np.all(basis.x_vecs[3:] == 0)
        assert np.max(np.abs(basis.y_vecs[:3])) == 0

    def test_rank_deficient_block_rejected(self):
        with pytest.raises(DegenerateEnsembleError):
            schmidt_basis(embed_block(np.array([[1.0, 0.0], [0.0, 0.0]])))

    def test_tied_eigenvalues_rejected(self):
        with pytest.raises(DegenerateEnsembleError):
            schmidt_basis(embed_block(np.eye(2)))

    def test_resampling_increments_seed(self, monkeypatch):
        """Un tirage dégénéré est rejeté et la graine suivante est utilisée."""
        calls = []

        def fake_sample(config):
            calls.append(config.seed)
            if len(calls) == 1:
                return embed_block(np.eye(2))
            return sample_block(config)

        monkeypatch.setattr(schmidt_module, "sample_block", fake_sample)
        sample = sample_schmidt(EnsembleConfig(n=4, m=2, seed=10))
        assert calls == [10, 11]
        assert sample.requested_seed == 10
        assert sample.seed == 11
        assert sample.resamples == 1

    def test_resampling_gives_up(self, monkeypatch):
        monkeypatch.setattr(schmidt_module, "sample_block", lambda config: embed_block(np.eye(2)))
        with pytest.raises(DegenerateEnsembleError):
            sample_schmidt(EnsembleConfig(n=4, m=2), max_attempts=3)


class TestReducedOperators:
    """Tests pour les opérateurs réduits Û, R̂, Ŝ, T̂."""

    def test_projection_matches_analytic_form(self):
        block = sample_block(EnsembleConfig(n=8, m=3, seed=2))
        basis = schmidt_basis(block)
        quartet = build_quartet(block)
        residuals = projection_residuals(quartet, basis, reduced_operators(basis))
        assert set(residuals) == {"R", "S", "T", "U"}
        assert max(residuals.values()) < quartet.tol_alg

    def test_generator_spectra(self):
        ops = reduced_from_eigenvalues(np.array([5.0, 2.0, 0.5]))
        assert generator_spectrum_residual(ops) < 1e-12

    def test_mode_indices(self):
        ops = reduced_from_eigenvalues(np.array([3.0, 1.0]))
        assert ops.mode_indices(1) == [0, 2]
        assert ops.mode_indices(2) == [1, 3]
        assert ops.dim == 4

    def test_u_power(self):
        ops = reduced_from_eigenvalues(np.array([4.0, 1.0]))
        np.testing.assert_allclose(np.diag(ops.u_power(-0.5)).real, [0.5, 1.0, 0.5, 1.0])


class TestPauliTriple:
    """Tests pour g = (Û^{-1/2}R̂, Û^{-1/2}Ŝ, Û^{-1}T̂)."""

    @pytest.fixture
    def ops(self):
        return reduced_operators(schmidt_basis(sample_block(EnsembleConfig(n=6, m=2, seed=7))))

    def test_su2_relations(self, ops):
        residuals = pauli_residuals(pauli_triple(ops))
        assert set(residuals) == {"anticommutator", "commutator", "unitary", "hermitian"}
        assert max(residuals.values()) < ops.tol_alg

    def test_single_mode_gives_pauli_matrices(self):
        """Pour M=1, N=2, les g_i projetés depuis W sont les matrices de Pauli."""
        block = sample_block(EnsembleConfig(n=2, m=1, seed=3))
        triple = projected_triple(build_quartet(block), schmidt_basis(block))
        for g, sigma in zip((triple.g1, triple.g2, triple.g3), (SIGMA_X, SIGMA_Y, SIGMA_Z)):
            assert np.max(np.abs(g - sigma)) < 1e-12

    def test_projection_matches_reduced_triple(self, ops):
        block = sample_block(EnsembleConfig(n=6, m=2, seed=7))
        projected = projected_triple(build_quartet(block), schmidt_basis(block))
        reduced = pauli_triple(ops)
        for axis in Axis:
            assert np.max(np.abs(projected[axis] - reduced[axis])) < ops.tol_alg

    def test_projection_detects_phase_convention(self):
        """Un |y⟩ déphasé de i ne redonne plus σ_x."""
        block = sample_block(EnsembleConfig(n=2, m=1, seed=3))
        basis = schmidt_basis(block)
        rotated = dataclasses.replace(basis, y_vecs=1j * basis.y_vecs)
        triple = projected_triple(build_quartet(block), rotated)
        assert np.max(np.abs(triple.g1 - SIGMA_X)) > 0.5

    def test_singular_u_rejected(self):
        with pytest.raises(RankError):
            pauli_triple(reduced_from_eigenvalues(np.array([1.0, 0.0])))

    def test_indexing_by_axis(self, ops):
        triple = pauli_triple(ops)
        assert triple[Axis.Z] is triple.g3
        assert triple[1] is triple.g1
        with pytest.raises(AxisError):
            triple[4]

    @pytest.mark.parametrize("i,j", [(1, 2), (2, 3), (3, 1), (2, 1), (3, 2), (1, 3)])
    def test_bch_closed_form(self, ops, i, j):
        triple = pauli_triple(ops)
        for a in (-0.8, 0.25, 1.3):
            diff = bch_conjugate(triple, a, i, j) - bch_expansion(triple, a, i, j)
            assert np.max(np.abs(diff)) < 1e-9

    def test_bch_same_axis_rejected(self, ops):
        triple = pauli_triple(ops)
        with pytest.raises(AxisError):
            bch_conjugate(triple, 0.5, 2, 2)
        with pytest.raises(AxisError):
            bch_expansion(triple, 0.5, 3, 3)

    def test_mode_exp_matches_expm(self, ops):
        import scipy.linalg

        triple = pauli_triple(ops)
        angles = np.array([0.3, -0.7])
        theta = np.diag(np.concatenate([angles, angles]))
        expected = scipy.linalg.expm(theta @ triple.g2)
        assert np.max(np.abs(mode_exp(angles, triple.g2) - expected)) < 1e-12

    def test_generator_eigenvectors(self, ops):
        for axis, op in ((Axis.X, ops.r_hat), (Axis.Y, ops.s_hat)):
            plus, minus = generator_eigenvectors(ops, 2, axis)
            root = math.sqrt(ops.x[1])
            np.testing.assert_allclose(op @ plus, root * plus, atol=1e-12)
            np.testing.assert_allclose(op @ minus, -root * minus, atol=1e-12)
        plus, minus = generator_eigenvectors(ops, 1, Axis.Z)
        np.testing.assert_allclose(ops.t_hat @ plus, ops.x[0] * plus, atol=1e-12)


class TestBlochProjector:
    """Tests pour le projecteur (1 + u·g)/2."""

    @pytest.fixture
    def ops(self):
        return reduced_operators(schmidt_basis(sample_block(EnsembleConfig(n=8, m=3, seed=9))))

    def test_projector_properties(self, ops):
        bloch = BlochVector(theta=1.1, phi=4.0)
        p = bloch_projector(ops, bloch)
        assert np.max(np.abs(p @ p - p)) < 1e-10
        assert abs(np.trace(p) - ops.m) < 1e-10
        for k in range(1, ops.m + 1):
            state = bloch_state(ops, k, bloch)
            assert abs(np.linalg.norm(state) - 1.0) < 1e-12
            assert np.max(np.abs(p @ state - state)) < 1e-10

    def test_north_pole_is_x_state(self, ops):
        state = bloch_state(ops, 1, BlochVector(theta=0.0))
        assert state[0] == 1.0
        assert np.count_nonzero(state) == 1

    @pytest.mark.parametrize("theta,phi,field", [
        (-0.1, 0.0, "theta"),
        (3.5, 0.0, "theta"),
        (1.0, 2 * math.pi, "phi"),
        (1.0, -1.0, "phi"),
    ])
    def test_invalid_angles(self, theta, phi, field):
        with pytest.raises(ConfigurationError) as exc_info:
            BlochVector(theta=theta, phi=phi)
        assert exc_info.value.field == field
