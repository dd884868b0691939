import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from algebras import build_damek_ricci
from algebras import build_from_spec
from algebras import spectral_decompose
from core import StepCountTooSmall
from density import block_odes
from density import closed_form_x
from density import convergence_order
from density import density_profile
from density import integrate_block
from density import make_block
from density import phi_independence_scan
from density import scan_grid
from density import small_t_slope
from density import volume_at_zero
from density import volume_density
from geodesics import adapted_basis
from tests.conftest import VIOLATORS


def test_block_registry():
    block = make_block("scalar_x", lam=1.0, lam_j=0.5)
    assert block.kind == "scalar_x"
    assert block.parameters == (1.0, 0.5)
    with pytest.raises(ValueError, match="not found"):
        make_block("scalar_z", lam=1.0)


def test_block_odes_merge_equal_blocks(dr_1_2, thirds):
    assert [(block.kind, count) for block, count in block_odes(adapted_basis(dr_1_2))] == [("scalar_y", 1)]
    kinds = [block.kind for block, _ in block_odes(adapted_basis(thirds))]
    assert kinds == ["scalar_x", "matrix_v"]


def test_block_odes_merge_counts():
    alg = build_from_spec(VIOLATORS["heber"])
    counts = {block.kind: count for block, count in block_odes(adapted_basis(alg))}
    assert counts == {"scalar_x": 2, "matrix_v": 9}


@pytest.mark.parametrize("phi", [0.0, 0.7, 2.4])
def test_x_block_against_quadrature(phi):
    block = make_block("scalar_x", lam=1.0, lam_j=1.0 / 3.0)
    solution = integrate_block(block, phi, 1.5, steps=512)
    assert solution.final[0, 0, 0] == pytest.approx(closed_form_x(1.0 / 3.0, 1.0, phi, 1.5), rel=1e-9)


@pytest.mark.parametrize("kind", ["scalar_x", "scalar_y", "matrix_v", "raw_y"])
def test_blocks_at_phi_zero(kind):
    params = {"scalar_x": {"lam_j": 0.4}, "scalar_y": {"a": 0.8}, "raw_y": {"a": 0.8}, "matrix_v": {"lam_l": 0.4, "b": 0.9}}
    block = make_block(kind, lam=1.0, **params[kind])
    solution = integrate_block(block, 0.0, 1.2, steps=256)
    assert block.contribution(solution.final)[0] == pytest.approx(block.at_zero(1.2), rel=1e-8)


def test_raw_y_determinant_is_y_squared():
    y = make_block("scalar_y", lam=1.0, a=0.6)
    w = make_block("raw_y", lam=1.0, a=0.6)
    phi = np.array([0.3, 1.1, 2.9])
    from_y = y.contribution(integrate_block(y, phi, 1.4, steps=512).final)
    from_w = w.contribution(integrate_block(w, phi, 1.4, steps=512).final)
    assert np.allclose(from_y, from_w, rtol=1e-9)


def test_fourth_order_convergence():
    block = make_block("matrix_v", lam=1.0, lam_l=1.0 / 3.0, b=2.0 / np.sqrt(3.0))
    assert convergence_order(block, 0.9, t_max=2.0) == pytest.approx(4.0, abs=0.3)


def test_step_floor():
    block = make_block("scalar_x", lam=1.0, lam_j=0.5)
    with pytest.raises(StepCountTooSmall):
        integrate_block(block, 0.3, 1.0, steps=16)
    with pytest.raises(ValueError):
        integrate_block(block, 0.3, 0.0, steps=128)


def test_volume_at_phi_zero(thirds):
    spectral = spectral_decompose(thirds)
    for t in (0.3, 1.0, 2.2):
        V = volume_density(thirds, 0.0, t, steps=512)
        assert V == pytest.approx(float(volume_at_zero(spectral, t)), rel=1e-8)


def test_hyperbolic_plane_density(hyperbolic_plane):
    assert volume_density(hyperbolic_plane, 1.3, 2.0) == pytest.approx(np.sinh(2.0))


def test_radial_density_on_symmetric_space(dr_1_2):
    report = phi_independence_scan(dr_1_2)
    assert report.max_rel_dev < 1e-7


def test_thirds_density_depends_on_phi(thirds):
    report = phi_independence_scan(thirds)
    assert report.max_rel_dev > 1e-4
    assert report.argmax[0] > 0


def test_scan_grid_scales_with_lambda():
    t, phi = scan_grid(lam=2.0)
    assert t[-1] == pytest.approx(1.0)
    assert phi[0] == 0.0
    assert phi[-1] < np.pi


def test_density_profile_rows(dr_1_2):
    profile = density_profile(dr_1_2, [0.5, 1.0], [0.0, 1.0, 2.0], steps=128)
    rows = list(profile.rows())
    assert len(rows) == 6
    assert rows[0][:2] == (0.5, 0.0)
    assert rows[0][3] == pytest.approx(1.0)
    assert profile.V.shape == (2, 3)


def test_density_profile_rejects_small_t(dr_1_2):
    with pytest.raises(ValueError):
        density_profile(dr_1_2, [0.01, 1.0], [0.0])
    with pytest.raises(ValueError):
        density_profile(dr_1_2, [], [0.0])


def test_density_profile_in_parallel(dr_1_2):
    sequential = density_profile(dr_1_2, [0.5, 1.0, 1.5], [0.2, 1.7], steps=128)
    parallel = density_profile(dr_1_2, [0.5, 1.0, 1.5], [0.2, 1.7], steps=128, processes=2)
    assert np.array_equal(sequential.V, parallel.V)


def test_small_t_slope(dr_1_2, thirds):
    assert small_t_slope(dr_1_2) == pytest.approx(3.0, abs=0.05)
    assert small_t_slope(thirds) == pytest.approx(4.0, abs=0.05)


@hsettings(deadline=None, max_examples=10)
@given(phi=st.floats(min_value=0.0, max_value=3.0), t=st.floats(min_value=0.2, max_value=2.0))
def test_density_is_even_in_phi(thirds, phi, t):
    assert volume_density(thirds, -phi, t, steps=256) == pytest.approx(volume_density(thirds, phi, t, steps=256), rel=1e-9)


def test_scaling_law(dr_1_2):
    doubled = dr_1_2.scaled(2.0)
    for t, phi in ((0.4, 0.3), (0.9, 2.0)):
        expected = volume_density(dr_1_2, phi, 2.0 * t, steps=512) / 2.0 ** 3
        assert volume_density(doubled, phi, t, steps=512) == pytest.approx(expected, rel=1e-8)


@pytest.mark.parametrize("dim_z, dim_u", [(1, 4), (2, 4), (3, 4), (1, 8)])
def test_damek_ricci_densities_are_radial(dim_z, dim_u):
    report = phi_independence_scan(build_damek_ricci(dim_z, dim_u))
    assert report.max_rel_dev < 1e-7
