import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from algebras import build_from_spec
from curvature import CurvatureOracle
from curvature import connection
from curvature import ledger_check
from curvature import ledger_sample
from curvature import nonpositivity_scan
from tests.conftest import paired_spec

vectors = arrays(np.float64, 4, elements=st.floats(min_value=-2.0, max_value=2.0, allow_nan=False))


def test_hyperbolic_plane_constants(hyperbolic_plane):
    oracle = CurvatureOracle(hyperbolic_plane)
    assert oracle.sectional_numerator([1.0, 0.0], [0.0, 1.0]) == pytest.approx(-1.0)
    assert oracle.einstein_constant == pytest.approx(-1.0)
    assert oracle.ledger_constant == pytest.approx(1.0)
    assert not oracle.is_flat()


def test_flat_model(abelian):
    oracle = CurvatureOracle(abelian)
    assert oracle.is_flat()
    assert oracle.einstein_constant == 0.0


def test_complex_hyperbolic_plane(dr_1_2):
    oracle = CurvatureOracle(dr_1_2)
    assert oracle.einstein_constant == pytest.approx(-1.5)
    assert oracle.ledger_constant == pytest.approx(9.0 / 8.0)
    A, U, _, Z = np.eye(4)
    assert oracle.sectional_numerator(A, Z) == pytest.approx(-1.0)
    assert oracle.sectional_numerator(A, U) == pytest.approx(-0.25)


def test_connection_is_levi_civita(dr_1_2, thirds):
    for alg in (dr_1_2, thirds):
        table = connection(alg)
        assert table.compatibility_defect() < 1e-14
        assert table.torsion_defect() < 1e-14


def test_connection_on_hyperbolic_plane(hyperbolic_plane):
    # [A, X] = X: ∇_X X = A, ∇_X A = -X, ∇_A = 0
    table = connection(hyperbolic_plane)
    A, X = np.eye(2)
    np.testing.assert_allclose(table.covariant(X, X), A)
    np.testing.assert_allclose(table.covariant(X, A), -X)
    np.testing.assert_allclose(table.covariant(A, X), 0.0)
    np.testing.assert_allclose(table.covariant(A, A), 0.0)


@hsettings(deadline=None, max_examples=40)
@given(X=vectors, Y=vectors)
def test_numerator_matches_tensor(dr_1_2, X, Y):
    oracle = CurvatureOracle(dr_1_2)
    from_tensor = np.einsum("ijkl,i,j,k,l->", oracle.tensor, X, Y, Y, X)
    assert oracle.sectional_numerator(X, Y) == pytest.approx(from_tensor, abs=1e-9)


def test_tensor_symmetries(thirds):
    Rt = CurvatureOracle(thirds).tensor
    assert np.allclose(Rt, -Rt.transpose(1, 0, 2, 3))
    assert np.allclose(Rt, -Rt.transpose(0, 1, 3, 2))
    assert np.allclose(Rt, Rt.transpose(2, 3, 0, 1))
    bianchi = Rt + Rt.transpose(1, 2, 0, 3) + Rt.transpose(2, 0, 1, 3)
    assert np.max(np.abs(bianchi)) < 1e-12


def test_jacobi_operator(thirds):
    oracle = CurvatureOracle(thirds)
    X = np.array([0.6, 0.0, 0.0, 0.8, 0.0])
    RX = oracle.jacobi_operator(X)
    assert np.allclose(RX, RX.T)
    assert np.allclose(RX @ X, 0.0)
    assert np.trace(RX) == pytest.approx(oracle.trace_jacobi(X))
    with pytest.raises(ValueError):
        oracle.jacobi_operator(2 * X)


def test_scaling_by_factor(dr_1_2):
    doubled = CurvatureOracle(dr_1_2.scaled(2.0))
    assert doubled.einstein_constant == pytest.approx(4 * -1.5)
    assert doubled.ledger_constant == pytest.approx(16 * 9.0 / 8.0)


def test_ledger_on_symmetric_space(dr_1_2):
    report = ledger_check(dr_1_2)
    assert report.C == pytest.approx(-1.5)
    assert report.H == pytest.approx(9.0 / 8.0)
    assert max(report.einstein_residual, report.ledger2_residual) < 1e-12
    assert max(report.einstein_tensor_residual, report.ledger2_tensor_residual) < 1e-12


def test_ledger_fails_off_einstein(thirds):
    report = ledger_check(thirds)
    assert report.einstein_tensor_residual > 1e-3


def test_ledger_sample():
    sample = ledger_sample(3)
    assert sample.shape == (7, 3)
    assert np.allclose(np.linalg.norm(sample, axis=1), 1.0)


def test_nonpositivity_of_complex_hyperbolic_plane(dr_1_2, settings):
    report = nonpositivity_scan(dr_1_2, settings=settings)
    assert report.nonpositive
    assert report.planes == 6 + settings.random_planes
    assert report.max_curvature <= -0.25 + 1e-9
    assert report.min_curvature >= -1.0 - 1e-9


def test_nonpositivity_scan_is_seeded(dr_1_2, settings):
    first = nonpositivity_scan(dr_1_2, settings=settings)
    again = nonpositivity_scan(dr_1_2, settings=settings)
    assert first.max_curvature == again.max_curvature
    assert np.array_equal(first.witness[0], again.witness[0])


def test_positive_curvature_found():
    # J_Z Y = 2 Y' on n_{1/2}: the plane (Y, Z) has curvature 1 - 1/2
    alg = build_from_spec(paired_spec([("1/2", 2), (1, 1)], [(0, 1, 2)]))
    report = nonpositivity_scan(alg)
    assert not report.nonpositive
    assert report.max_curvature >= 0.5 - 1e-9
