import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebras import spectral_decompose
from curvature import CurvatureOracle
from geodesics import adapted_basis
from geodesics import denominator
from geodesics import geodesic_samples
from geodesics import geodesic_state
from geodesics import restricted_jacobi
from geodesics import restricted_jacobi_matrix

angles = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
times = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False)
lambdas = st.floats(min_value=0.1, max_value=1.5)


@given(lam=lambdas, phi=angles, t=times)
def test_unit_speed(lam, phi, t):
    state = geodesic_state(lam, phi, t)
    assert state.q ** 2 + state.Phi ** 2 == pytest.approx(1.0, rel=1e-9)


@given(lam=lambdas, phi=angles, t=times)
def test_denominator_positive(lam, phi, t):
    assert denominator(lam, phi, t) > 0


def test_along_a():
    forward = geodesic_state(1.0, 0.0, 2.5)
    backward = geodesic_state(1.0, np.pi, 2.5)
    assert (forward.q, forward.Phi) == pytest.approx((1.0, 0.0))
    assert (backward.q, backward.Phi) == pytest.approx((-1.0, 0.0), abs=1e-12)


def test_initial_velocity():
    state = geodesic_state(2.0, 0.7, 0.0)
    assert (state.q, state.Phi) == pytest.approx((np.cos(0.7), np.sin(0.7)))


def test_phi_drifts_to_minus_a():
    state = geodesic_state(1.0, 1.2, 30.0)
    assert state.q == pytest.approx(-1.0)
    assert abs(state.Phi) < 1e-10


def test_rejects_nonpositive_lambda():
    with pytest.raises(ValueError):
        geodesic_state(0.0, 0.3, 1.0)


def test_samples():
    t, q, Phi = geodesic_samples(1.0, 0.4, 2.0, 11)
    assert t.shape == q.shape == Phi.shape == (11,)
    assert t[-1] == pytest.approx(2.0)
    assert np.allclose(q ** 2 + Phi ** 2, 1.0)
    with pytest.raises(ValueError):
        geodesic_samples(1.0, 0.4, 2.0, 1)


def test_state_json():
    assert set(geodesic_state(1.0, 0.5, 1.0).to_json()) == {"t", "phi", "q", "Phi"}


def test_adapted_basis_dimension(thirds, dr_1_2, hyperbolic_plane):
    for alg in (thirds, dr_1_2, hyperbolic_plane):
        basis = adapted_basis(alg)
        assert basis.size == alg.dim - 2


def test_adapted_basis_rejects_bad_z(dr_1_2):
    with pytest.raises(ValueError):
        adapted_basis(dr_1_2, Z=np.array([0.0, 1.0, 0.0, 0.0]))
    with pytest.raises(ValueError):
        adapted_basis(dr_1_2, Z=np.array([0.0, 0.0, 0.0, 2.0]))


def test_restricted_jacobi_along_a(thirds):
    basis = adapted_basis(thirds)
    state = geodesic_state(1.0, 0.0, 0.8)
    M = restricted_jacobi_matrix(basis, state)
    D = basis.D_tilde
    assert np.allclose(M, -D @ D)


def test_restricted_jacobi_is_block_diagonal(thirds):
    basis = adapted_basis(thirds)
    state = geodesic_state(1.0, 0.9, 0.5)
    M = restricted_jacobi_matrix(basis, state)
    blocks = restricted_jacobi(basis, state)
    assert [b.shape for b in blocks] == [(1, 1), (2, 2)]
    assert np.allclose(M[0, 1:], 0.0)
    assert np.allclose(M[1:, 0], 0.0)
    assert np.allclose(blocks[1], M[1:, 1:])


def test_restricted_jacobi_is_curvature(thirds):
    """R(., gamma')gamma' from the oracle agrees on n ∩ Z^⊥"""
    spectral = spectral_decompose(thirds)
    basis = adapted_basis(thirds, spectral=spectral)
    state = geodesic_state(spectral.lam, 0.6, 0.4)
    velocity = np.zeros(thirds.dim)
    velocity[0] = state.q
    velocity += state.Phi * basis.Z
    RX = CurvatureOracle(thirds).jacobi_operator(velocity)
    frame = np.vstack([np.zeros((1, basis.size)), basis.frame])
    assert np.allclose(frame.T @ RX @ frame, restricted_jacobi_matrix(basis, state), atol=1e-10)
