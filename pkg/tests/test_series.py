import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebras import build_from_spec
from core import OrderTooLarge
from geodesics import adapted_basis
from geodesics import geodesic_state
from series import BiSeries
from series import CothCombo
from series import PolyC
from series import TrigPoly
from series import coth_decompose
from series import geodesic_series
from series import phi2_hat
from series import series_for
from series import sum0_constraints
from series import thirds_expansion
from series import volume_taylor
from series.biseries import cosh_series
from series.biseries import from_rationals
from series.biseries import sinh_series
from tests.conftest import VIOLATORS

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)
polys = st.lists(rationals, max_size=5).map(PolyC)


@given(p=polys, q=polys, r=polys)
def test_polyc_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == PolyC()


@given(p=polys, c=rationals)
def test_polyc_evaluation(p, c):
    assert (p * p)(c) == p(c) ** 2
    assert p.derivative().degree <= max(p.degree - 1, -1)


def test_pythagoras():
    s, c = TrigPoly.sin(), TrigPoly.cos()
    assert s * s + c * c == 1
    assert (s * c)(0.7) == pytest.approx(math.sin(0.7) * math.cos(0.7))


def test_reciprocal():
    den = cosh_series(1, 10) - sinh_series(1, 10) * TrigPoly.cos()
    assert den * den.reciprocal() == BiSeries.constant(1, 10)
    with pytest.raises(ZeroDivisionError):
        sinh_series(1, 10).reciprocal()


def test_divide_by_t():
    s = sinh_series(2, 7).divide_by_t()
    assert s.order == 6
    assert s[0] == 2
    with pytest.raises(ZeroDivisionError):
        cosh_series(1, 7).divide_by_t()


@pytest.mark.parametrize("phi", [0.4, 1.3, 2.8])
def test_geodesic_series_matches_closed_form(phi):
    Phi, q = geodesic_series(14)
    state = geodesic_state(1.0, phi, 0.2)
    assert Phi.evaluate(0.2, phi) == pytest.approx(state.Phi, abs=1e-12)
    assert q.evaluate(0.2, phi) == pytest.approx(state.q, abs=1e-12)


def test_phi_zero_part_is_sinh():
    x = series_for("scalar_x", 9, lam_j=Fraction(1, 3))
    l = Fraction(1, 3)
    assert x.phi0 == [l ** (k - 1) / math.factorial(k) if k % 2 else 0 for k in range(10)]


@pytest.mark.parametrize(
    "kind, params",
    [
        ("scalar_x", {"lam_j": Fraction(1, 3)}),
        ("scalar_y", {"a2": Fraction(1, 2)}),
        ("matrix_v", {"lam_l": Fraction(1, 3), "b2": Fraction(4, 3)}),
        ("matrix_v", {"lam_l": Fraction(2, 5), "b2": Fraction(1, 4)}),
        ("raw_y", {"a2": Fraction(1, 2)}),
    ],
)
def test_phi2_from_hats(kind, params):
    solved = series_for(kind, 10, **params)
    assert all(c == 0 for c in solved.phi1)
    predicted = from_rationals(solved.phi0, 10) * phi2_hat(kind, **params).to_series(10)
    assert predicted == from_rationals(solved.phi2, 10)


def test_thirds_hats_cancel():
    v = phi2_hat("matrix_v", lam_l="1/3", b2="4/3")
    x = phi2_hat("scalar_x", lam_j="1/3")
    assert v[1] == Fraction(-1, 4)
    assert v["1/3"] == Fraction(1, 12)
    assert v["2/3"] == 0
    assert (x[1], x["1/3"]) == (Fraction(1, 4), Fraction(-1, 12))
    assert (x + v).is_zero()


@pytest.mark.parametrize("l", [Fraction(1, 4), Fraction(2, 5), Fraction(3, 4)])
def test_x_hat_coefficient(l):
    assert phi2_hat("scalar_x", lam_j=l)[l] == -l * l / (1 + l)


def test_sum0_on_symmetric_space(dr_1_2):
    report = sum0_constraints(adapted_basis(dr_1_2))
    assert report.vanishes
    assert report.identities == ((Fraction(1, 2), Fraction(2), Fraction(2)),)


def test_sum0_on_thirds(thirds):
    report = sum0_constraints(adapted_basis(thirds))
    assert report.vanishes
    assert report.violated() == []
    assert all(lhs == rhs for _, lhs, rhs in report.identities)


def test_sum0_detects_unpaired_multiplicities():
    report = sum0_constraints(adapted_basis(build_from_spec(VIOLATORS["pairing"])))
    assert not report.vanishes
    assert Fraction(2, 5) in [mu for mu, _ in report.violated()]
    assert report.to_json()["vanishes"] is False


def test_volume_taylor_on_symmetric_space(dr_1_2):
    report = volume_taylor(adapted_basis(dr_1_2), order=10)
    assert report.agrees()
    assert report.is_zero()


def test_volume_taylor_agrees_off_harmonic():
    report = volume_taylor(adapted_basis(build_from_spec(VIOLATORS["pairing"])), order=10)
    assert report.agrees()
    assert not report.is_zero()


def test_thirds_expansion():
    report = thirds_expansion(order=10)
    assert [report[k] for k in (3, 5, 7)] == [PolyC.constant(1), PolyC.constant(Fraction(1, 9)), PolyC.constant(Fraction(2, 405))]
    assert report.t9 == PolyC(["1/6804", 0, "-1/20412", 0, "5/183708", 0, "-1/551124"])
    assert report.t9(1) == Fraction(17, 7 * 3 ** 9)
    assert report.depends_on_phi()
    assert report.matches_reference()


def test_thirds_expansion_order_bounds():
    with pytest.raises(ValueError):
        thirds_expansion(order=8)
    with pytest.raises(OrderTooLarge):
        thirds_expansion(order=17)
    with pytest.raises(ValueError):
        thirds_expansion(order=9, n_23=0)


def test_coth_combo():
    with pytest.raises(ValueError):
        CothCombo.single(0)
    assert CothCombo([(1, 1), (1, -1)]).is_zero()
    assert CothCombo([(1, 2), ("1/2", 1), (1, 1)]) == CothCombo({1: 3, Fraction(1, 2): 1})
    assert list(CothCombo({"1/3": 1, 1: 2})) == [(Fraction(1), Fraction(2)), (Fraction(1, 3), Fraction(1))]


def test_coth_series():
    # (1/2) e^t sinh t coth t = (e^{2t} + 1) / 4
    series = CothCombo.single(1).to_series(4)
    assert [series[k] for k in range(5)] == [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]


def test_coth_decompose():
    combo, zero = coth_decompose([(1, 2), ("1/2", 0)])
    assert combo == CothCombo.single(1, 2)
    assert not zero
    assert coth_decompose([("1/3", 1), ("1/3", -1)])[1]
