"""Exact phi^2 analysis of the volume density, and the thirds configuration.

With lambda = 1 the density expands as

    V(t, phi) = V(t, 0) (1 + phi^2 / 2 * e^t sinh t * (sum x-hat + 2 sum y-hat + sum v-hat) + o(phi^2))

so harmonicity forces the coth combination in parentheses to vanish.
"""
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict
from typing import List
from typing import Tuple

from algebras.jfamily import AdaptedBasis
from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject
from series.biseries import BiSeries
from series.biseries import check_order
from series.biseries import from_rationals
from series.biseries import sinh_series
from series.coth import CothCombo
from series.coth import contribution_hat
from series.ode import series_for
from series.polyc import PolyC

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


def block_data(basis: AdaptedBasis, settings: Settings = DEFAULT_SETTINGS) -> Counter:
    """(kind, parameter items) -> count, from the exact block data of the frame"""
    data = basis.exact_data(settings)
    blocks = Counter()
    for lam_j in data["x"]:
        blocks[("scalar_x", (("lam_j", lam_j),))] += 1
    for a2 in data["y"]:
        blocks[("scalar_y", (("a2", a2),))] += 1
    for lam_l, b2 in data["v"]:
        blocks[("matrix_v", (("lam_l", lam_l), ("b2", b2)))] += 1
    return blocks


def multiplicities(basis: AdaptedBasis, settings: Settings = DEFAULT_SETTINGS) -> Dict[Fraction, int]:
    """n_alpha over the normalized spectrum, Z included in n_1"""
    data = basis.exact_data(settings)
    n = Counter({Fraction(1): 1})
    for lam_j in data["x"]:
        n[lam_j] += 1
    n[HALF] += 2 * len(data["y"])
    for lam_l, _ in data["v"]:
        n[lam_l] += 1
        n[1 - lam_l] += 1
    return {alpha: n[alpha] for alpha in sorted(n) if n[alpha]}


class Sum0Report(GeometryObject):
    def __init__(
        self,
        combo: CothCombo,
        constraints: Tuple[Tuple[Fraction, Fraction], ...],
        identities: Tuple[Tuple[Fraction, Fraction, Fraction], ...],
    ) -> None:
        """
        Args:
            combo (CothCombo): sum x-hat + 2 sum y-hat + sum v-hat
            constraints: (mu, coefficient of coth(mu t)) for every frequency of the frame
            identities: (alpha, lhs, rhs) with 2 alpha n_alpha = sum b^2 for alpha != 1/2, 1
                and n_{1/2} = 2 sum a^2 for alpha = 1/2
        """
        pass

    @property
    def vanishes(self) -> bool:
        return self.combo.is_zero()

    @property
    def top_coefficient(self) -> Fraction:
        """coefficient of coth t, which carries no extra information on harmonic data"""
        return self.combo[1]

    def violated(self) -> List[Tuple[Fraction, Fraction]]:
        return [(mu, coef) for mu, coef in self.constraints if coef != 0]

    def to_json(self):
        return {
            "combo": self.combo,
            "constraints": [{"alpha": mu, "coefficient": coef} for mu, coef in self.constraints],
            "identities": [{"alpha": a, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs} for a, lhs, rhs in self.identities],
            "vanishes": self.vanishes,
        }


def sum0_constraints(basis: AdaptedBasis, settings: Settings = DEFAULT_SETTINGS) -> Sum0Report:
    """
    Description: the coth coefficients of the phi^2 term of V / V(t, 0), one per frequency,
    together with the multiplicity identities they are equivalent to

    Args:
        basis (AdaptedBasis): frame with rational block data
        settings (Settings): rational recognition

    Returns:
        Sum0Report

    Raises:
        InexactBlockData
    """
    blocks = block_data(basis, settings)
    combo = CothCombo()
    frequencies = {Fraction(1)}
    for (kind, params), count in blocks.items():
        hat = contribution_hat(kind, **dict(params))
        combo = combo + hat * count
        params = dict(params)
        if kind == "scalar_x":
            frequencies.add(params["lam_j"])
        elif kind == "scalar_y":
            frequencies.add(HALF)
        else:
            frequencies.update((params["lam_l"], 1 - params["lam_l"]))
    constraints = tuple((mu, combo[mu]) for mu in sorted(frequencies, reverse=True))

    n = multiplicities(basis, settings)
    data = basis.exact_data(settings)
    identities = []
    for alpha in sorted(n):
        if alpha == 1:
            continue
        if alpha == HALF:
            identities.append((alpha, Fraction(n[alpha]), 2 * sum(data["y"], Fraction(0))))
        else:
            touching = sum((b2 for lam_l, b2 in data["v"] if alpha in (lam_l, 1 - lam_l)), Fraction(0))
            identities.append((alpha, 2 * alpha * n[alpha], touching))

    report = Sum0Report(combo, constraints, tuple(identities))
    logger.info("phi^2 coth battery: %d frequencies, vanishes=%s", len(constraints), report.vanishes)
    return report


def _block_series(kind: str, params: Tuple, order: int, settings: Settings):
    return series_for(kind, order, settings, **dict(params))


def volume_series(basis: AdaptedBasis, order: int = DEFAULT_SETTINGS.series_order, settings: Settings = DEFAULT_SETTINGS) -> BiSeries:
    """V(t, phi) = sinh t * prod of block factors, as an exact series (lambda = 1)"""
    check_order(order, settings.max_series_order)
    V = sinh_series(1, order)
    for (kind, params), count in block_data(basis, settings).items():
        V = V * _block_series(kind, params, order, settings).contribution ** count
    return V


class VolumeTaylor(GeometryObject):
    def __init__(self, from_hats: BiSeries, from_product: BiSeries, combo: CothCombo) -> None:
        """
        Args:
            from_hats (BiSeries): (1/2) e^t sinh t * combo, rational in t
            from_product (BiSeries): phi^2 part of V / V(t, 0) from the block series
            combo (CothCombo): the assembled hat combination
        """
        pass

    @property
    def order(self) -> int:
        return min(self.from_hats.order, self.from_product.order)

    def agrees(self) -> bool:
        return all(self.from_hats[k] == self.from_product[k] for k in range(self.order + 1))

    def is_zero(self) -> bool:
        return self.combo.is_zero() and self.from_product.is_zero()

    def to_json(self):
        return {
            "order": self.order,
            "combo": self.combo,
            "phi2": [self.from_hats[k].even[0] for k in range(self.order + 1)],
            "agrees": self.agrees(),
        }


def volume_taylor(basis: AdaptedBasis, order: int = DEFAULT_SETTINGS.series_order, settings: Settings = DEFAULT_SETTINGS) -> VolumeTaylor:
    """
    Description: the phi^2 coefficient of V(t, phi) / V(t, 0) two ways, from the hats and
    from the product of the block series

    Args:
        basis (AdaptedBasis): frame with rational block data
        order (int): truncation order of the block series

    Returns:
        VolumeTaylor; the product side loses the leading power of V(t, 0) in order

    Raises:
        OrderTooLarge
        InexactBlockData
    """
    V = volume_series(basis, order, settings)
    V0, _, V2 = V.phi_parts()
    lead = next((k for k, x in enumerate(V0) if x != 0), None)
    if lead is None:
        raise ValueError(f"volume series vanishes through order {order}")
    # V0 and V2 both start at t^lead
    ratio = from_rationals(V2, order).divide_by_t(lead) * from_rationals(V0, order).divide_by_t(lead).reciprocal()

    combo = CothCombo()
    for (kind, params), count in block_data(basis, settings).items():
        combo = combo + contribution_hat(kind, **dict(params)) * count
    report = VolumeTaylor(combo.to_series(ratio.order), ratio, combo)
    if not report.agrees():
        logger.warning("phi^2 volume series from hats and from block products disagree")
    return report


class ThirdsExpansion(GeometryObject):
    def __init__(self, coefficients: Tuple[PolyC, ...], reference: Tuple[Fraction, ...], volume: BiSeries) -> None:
        """
        Args:
            coefficients: t^k coefficients of x det v as polynomials in cos(phi), k = 0..order
            reference: t-coefficients of (27/2) sinh^2(t/3) sinh(2t/3), the phi = 0 product
            volume (BiSeries): sinh(t)^{n_lambda} (x det v)^{n_23}
        """
        pass

    def __getitem__(self, k: int) -> PolyC:
        return self.coefficients[k]

    @property
    def t9(self) -> PolyC:
        return self.coefficients[9]

    def depends_on_phi(self) -> bool:
        return any(not x.is_constant() for x in self.coefficients)

    def matches_reference(self) -> bool:
        return all(x(1) == r for x, r in zip(self.coefficients, self.reference))

    def to_json(self):
        return {
            "coefficients": {str(k): x for k, x in enumerate(self.coefficients) if not x.is_zero()},
            "t9": self.t9,
            "matches_phi0_reference": self.matches_reference(),
            "depends_on_phi": self.depends_on_phi(),
        }


THIRD = Fraction(1, 3)
THIRDS_B2 = Fraction(4, 3)


def thirds_expansion(
    order: int = DEFAULT_SETTINGS.series_order,
    n_lambda: int = 1,
    n_23: int = 1,
    settings: Settings = DEFAULT_SETTINGS,
) -> ThirdsExpansion:
    """
    Description: exact t-expansion of x det v for Delta = {1/3, 2/3, 1} with b^2 = 4/3, where
    x solves x'' = (1 + 2 Phi^2) x / 9 and v is the coupled block of frequencies (1/3, 2/3)

    Args:
        order (int): at least 9
        n_lambda (int): multiplicity of the top eigenvalue
        n_23 (int): multiplicity of 2/3; n_{1/3} = 2 n_23

    Returns:
        ThirdsExpansion
    """
    if order < 9:
        raise ValueError(f"the thirds expansion needs order >= 9, got {order}")
    if n_lambda < 1 or n_23 < 1:
        raise ValueError("multiplicities must be positive")
    check_order(order, settings.max_series_order)

    x = series_for("scalar_x", order, settings, lam_j=THIRD)
    v = series_for("matrix_v", order, settings, lam_l=THIRD, b2=THIRDS_B2)
    product = x.scalar * v.scalar
    if any(not c.odd.is_zero() for c in product.coeffs):
        raise ArithmeticError("odd powers of sin(phi) survived in x det v")

    reference = sinh_series(THIRD, order) ** 2 * sinh_series(2 * THIRD, order) * Fraction(27, 2)
    volume = sinh_series(1, order) ** n_lambda * product ** n_23
    report = ThirdsExpansion(
        tuple(c.even for c in product.coeffs),
        tuple(c.even[0] for c in reference.coeffs),
        volume,
    )
    logger.info("thirds expansion: t^9 coefficient %r", report.t9)
    return report
