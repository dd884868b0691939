from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import settings as hsettings
from hypothesis import strategies as st

from algebras import DamekRicciSpec
from algebras import MetricSolvableAlgebra
from algebras import anticommutation_defect
from algebras import build_damek_ricci
from algebras import build_from_spec
from algebras import clifford_generate
from algebras import j_family
from algebras import make_spec
from algebras import minimal_dimension
from algebras import spectral_decompose
from core import AlgebraSpecError
from core import AntisymmetryViolation
from core import DNotSymmetricPositive
from core import EigenvalueSeparationError
from core import GradingViolation
from core import JacobiViolation
from core import NoCliffordModule
from core import NotNilpotentIdeal
from tests.conftest import load_spec


def test_specs_build(dr_1_2, hyperbolic_plane, abelian, thirds):
    assert (dr_1_2.dim, hyperbolic_plane.dim, abelian.dim, thirds.dim) == (4, 2, 3, 5)
    assert abelian.is_flat_model
    assert not dr_1_2.is_flat_model
    assert dr_1_2.nilpotency_step == 2
    assert hyperbolic_plane.nilpotency_step == 1


def test_exact_constants_kept(dr_1_2, hyperbolic_plane):
    assert dr_1_2.rational_constants is not None
    assert dr_1_2.rational_constants[0, 1, 1] == Fraction(1, 2)
    assert hyperbolic_plane.rational_constants[1, 0, 1] == -1


def test_algebra_is_immutable(dr_1_2):
    with pytest.raises(AttributeError):
        dr_1_2.dim = 7
    with pytest.raises(ValueError):
        dr_1_2.c[0, 0, 0] = 1.0


def test_raw_spec_moves_a_to_front():
    alg = build_from_spec({"kind": "raw", "dim": 2, "a_index": 1, "brackets": [[1, 0, 0, 1]]})
    assert alg.c[0, 1, 1] == 1.0
    assert alg.c[1, 0, 1] == -1.0


@pytest.mark.parametrize(
    "doc",
    [
        {"dim": 2},
        {"kind": "octonionic", "dim": 2},
        {"kind": "raw", "dim": 2, "brackets": [[0, 1, 1, "one"]]},
        {"kind": "raw", "dim": 2, "unknown": 1},
        {"kind": "damek_ricci", "dim_z": 0, "dim_u": 2},
        {"kind": "spectral", "entries": []},
    ],
)
def test_schema_rejections(doc):
    with pytest.raises(AlgebraSpecError):
        build_from_spec(doc)


def test_not_a_document():
    with pytest.raises(AlgebraSpecError):
        build_from_spec([1, 2, 3])


def test_make_spec_unknown_kind():
    with pytest.raises(ValueError, match="not found"):
        make_spec("octonionic")


def test_conflicting_antisymmetric_entries():
    doc = {"kind": "raw", "dim": 2, "brackets": [[0, 1, 1, 1], [1, 0, 1, 1]]}
    with pytest.raises(AntisymmetryViolation):
        build_from_spec(doc)


def test_jacobi_violation():
    # [A, X] = X, [A, Y] = Y but [X, Y] = Z with [A, Z] = Z breaks Jacobi on (A, X, Y)
    doc = {"kind": "raw", "dim": 4, "brackets": [[0, 1, 1, 1], [0, 2, 2, 1], [0, 3, 3, 1], [1, 2, 3, 1]]}
    with pytest.raises(JacobiViolation):
        build_from_spec(doc)


def test_bracket_along_a_rejected():
    doc = {"kind": "raw", "dim": 3, "brackets": [[0, 1, 1, 1], [0, 2, 2, 1], [1, 2, 0, 1]]}
    with pytest.raises(NotNilpotentIdeal):
        build_from_spec(doc)


def test_nonpositive_derivation_rejected():
    doc = {"kind": "raw", "dim": 3, "brackets": [[0, 1, 1, 1], [0, 2, 2, -1]]}
    with pytest.raises(DNotSymmetricPositive, match="e_2"):
        build_from_spec(doc)


def test_spectral_of_damek_ricci(dr_1_2):
    spectral = spectral_decompose(dr_1_2)
    assert spectral.alphas == pytest.approx((0.5, 1.0))
    assert spectral.multiplicities == (2, 1)
    assert spectral.exact_ratios == (Fraction(1, 2), Fraction(1))
    assert spectral.lam == pytest.approx(1.0)


def test_spectral_of_flat_model(abelian):
    with pytest.raises(DNotSymmetricPositive):
        spectral_decompose(abelian)


def test_eigenvalues_neither_equal_nor_separated():
    doc = {"kind": "raw", "dim": 3, "brackets": [[0, 1, 1, 1], [0, 2, 2, 1 + 1e-8]]}
    with pytest.raises(EigenvalueSeparationError):
        spectral_decompose(build_from_spec(doc))


def test_grading_violation_on_unvalidated_algebra():
    c = np.zeros((4, 4, 4))
    for i, alpha in ((1, 0.5), (2, 0.5), (3, 1.0)):
        c[0, i, i], c[i, 0, i] = alpha, -alpha
    # [e1, e2] = e1 stays in n_{1/2} instead of reaching n_1
    c[1, 2, 1], c[2, 1, 1] = 1.0, -1.0
    alg = MetricSolvableAlgebra(c, validate=False)
    with pytest.raises(GradingViolation):
        spectral_decompose(alg)


def test_minimal_dimensions():
    assert [minimal_dimension(r) for r in range(1, 10)] == [2, 4, 4, 8, 8, 8, 8, 16, 32]


@hsettings(deadline=None, max_examples=25)
@given(dim_z=st.integers(min_value=1, max_value=9), copies=st.integers(min_value=1, max_value=2))
def test_clifford_relations(dim_z, copies):
    dim_u = copies * minimal_dimension(dim_z)
    gens = clifford_generate(dim_z, dim_u, 1.5)
    assert len(gens) == dim_z
    assert anticommutation_defect(gens, 1.5) < 1e-12
    for J in gens:
        assert np.allclose(J, -J.T)


@pytest.mark.parametrize("dim_z, dim_u", [(1, 3), (3, 2), (4, 12)])
def test_no_clifford_module(dim_z, dim_u):
    with pytest.raises(NoCliffordModule):
        clifford_generate(dim_z, dim_u)


def test_damek_ricci_spec_round_trip():
    spec = DamekRicciSpec(dim_z=3, dim_u=4, lam="2")
    assert spec.to_json() == {"kind": "damek_ricci", "dim_z": 3, "dim_u": 4, "lambda": "2", "clifford_seed": None, "label": ""}
    alg = spec.build()
    assert spectral_decompose(alg).lam == pytest.approx(2.0)


@pytest.mark.parametrize("seed", [None, 7])
def test_damek_ricci_j_squares(seed):
    alg = build_damek_ricci(2, 4, lam=1, clifford_seed=seed)
    family = j_family(alg)
    assert len(family) == 2
    assert family.skew_defect() < 1e-12
    assert family.a_values == pytest.approx((1.0, 1.0))
    for J in family.operators:
        u = spectral_decompose(alg).basis(0.5)
        assert np.allclose(u.T @ J @ J @ u, -np.eye(4))


def test_damek_ricci_without_u_is_hyperbolic():
    alg = build_damek_ricci(3, 0)
    spectral = spectral_decompose(alg)
    assert spectral.alphas == pytest.approx((1.0,))
    assert spectral.multiplicities == (3,)


def test_thirds_adapted_blocks(thirds):
    family = j_family(thirds)
    basis = family.bases[0]
    assert (basis.k, basis.p, basis.m) == (1, 0, 1)
    assert basis.orthonormality_defect() < 1e-12
    assert basis.block_relation_defect() < 1e-12
    assert basis.exact_data() == {"x": [Fraction(1, 3)], "y": [], "v": [(Fraction(1, 3), Fraction(4, 3))]}


def test_adapted_basis_of_damek_ricci(dr_1_2):
    basis = j_family(dr_1_2).bases[0]
    assert (basis.k, basis.p, basis.m) == (0, 1, 0)
    assert basis.y_blocks[0].a == pytest.approx(1.0)
    assert basis.J_tilde @ basis.J_tilde == pytest.approx(-np.eye(2))


def test_violator_spectra(violator):
    label, alg = violator
    ratios = spectral_decompose(alg).exact_ratios
    expected = {
        "band": (Fraction(1, 4), Fraction(3, 4), Fraction(1)),
        "pairing": (Fraction(2, 5), Fraction(3, 5), Fraction(1)),
        "heber": (Fraction(9, 20), Fraction(11, 20), Fraction(1)),
        "half_band": (Fraction(1, 2), Fraction(1)),
    }
    assert ratios == expected[label]


def test_scaled_algebra(dr_1_2):
    doubled = dr_1_2.scaled(2.0)
    assert spectral_decompose(doubled).lam == pytest.approx(2.0)


def test_load_spec_matches_file():
    assert load_spec("thirds")["kind"] == "spectral"
