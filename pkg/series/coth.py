"""Finite combinations sum_mu c_mu coth(mu t) and the phi^2 hats of the blocks (lambda = 1).

The phi^2 coefficient of a block scalar f (x, y, det v) is

    f_0(t) * (1/2) e^t sinh t * hat(t)

where hat is a combination of coth at the block frequencies. The functions coth(mu t)
for distinct mu > 0 are linearly independent, so a combination vanishes iff every
coefficient does.
"""
from fractions import Fraction
from typing import Dict
from typing import Iterable
from typing import Mapping
from typing import Tuple
from typing import Union

from series.biseries import BiSeries
from series.biseries import cosh_series
from series.biseries import exp_series
from series.biseries import sinhc_series

Scalar = Union[int, Fraction]


class CothCombo:
    """Exact map mu -> coefficient; zero coefficients are dropped"""

    __slots__ = ("terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Scalar, Scalar]]] = ()) -> None:
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        merged: Dict[Fraction, Fraction] = {}
        for mu, coef in pairs:
            mu = Fraction(mu)
            if mu <= 0:
                raise ValueError(f"coth frequencies must be positive, got {mu}")
            merged[mu] = merged.get(mu, Fraction(0)) + Fraction(coef)
        self.terms = {mu: merged[mu] for mu in sorted(merged, reverse=True) if merged[mu] != 0}

    @classmethod
    def single(cls, mu: Scalar, coef: Scalar = 1) -> "CothCombo":
        return cls(((mu, coef),))

    def is_zero(self) -> bool:
        return not self.terms

    def __getitem__(self, mu: Scalar) -> Fraction:
        return self.terms.get(Fraction(mu), Fraction(0))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "CothCombo") -> "CothCombo":
        return CothCombo(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "CothCombo":
        return self.scale(-1)

    def __sub__(self, other: "CothCombo") -> "CothCombo":
        return self + (-other)

    def scale(self, factor: Scalar) -> "CothCombo":
        return CothCombo((mu, coef * factor) for mu, coef in self.terms.items())

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, CothCombo) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def to_series(self, order: int) -> BiSeries:
        """t-expansion of (1/2) e^t sinh t * sum_mu c_mu coth(mu t)"""
        total = BiSeries.zero(order)
        if self.is_zero():
            return total
        # sinh t coth(mu t) = (sinh t / t) cosh(mu t) / (mu * sinh(mu t) / (mu t))
        head = sinhc_series(1, order)
        for mu, coef in self.terms.items():
            total = total + cosh_series(mu, order) * sinhc_series(mu, order).reciprocal() * (coef / mu)
        return exp_series(1, order) * head * total * Fraction(1, 2)

    def __repr__(self) -> str:
        inner = ", ".join(f"{mu}: {coef}" for mu, coef in self.terms.items())
        return f"CothCombo({{{inner}}})"

    def to_json(self):
        return [{"mu": mu, "coefficient": coef} for mu, coef in self.terms.items()]


def coth_decompose(combo: Union[CothCombo, Mapping, Iterable[Tuple[Scalar, Scalar]]]) -> Tuple[CothCombo, bool]:
    """Canonical form of a coth combination and whether it is identically zero"""
    if isinstance(combo, CothCombo):
        combo = combo.terms.items()
    canonical = CothCombo(combo)
    return canonical, canonical.is_zero()


def x_hat(lam_j: Scalar) -> CothCombo:
    l = Fraction(lam_j)
    return CothCombo(((1, l / (1 + l)), (l, -l * l / (1 + l))))


def y_hat(a2: Scalar) -> CothCombo:
    w = (1 - Fraction(a2)) / 6
    return CothCombo(((1, 2 * w), (Fraction(1, 2), -w)))


def v_hat(lam_l: Scalar, b2: Scalar) -> CothCombo:
    l, b2 = Fraction(lam_l), Fraction(b2)
    lp = 1 - l
    top = (2 * (1 + 2 * l * lp) - 3 * b2) / (2 * (1 + l) * (1 + lp))
    return CothCombo(
        (
            (1, top),
            (l, l * (b2 - 2 * l) / (2 * (1 + l))),
            (lp, lp * (b2 - 2 * lp) / (2 * (1 + lp))),
        )
    )


def phi2_hat(kind: str, **params) -> CothCombo:
    """
    Description: hat of the block scalar; x-hat, y-hat or v-hat, and twice y-hat for
    the raw Y-system whose determinant is y^2

    Args:
        kind (str): scalar_x (lam_j), scalar_y (a2), matrix_v (lam_l, b2) or raw_y (a2)
        params: rationals, lambda = 1

    Returns:
        CothCombo
    """
    if kind == "scalar_x":
        return x_hat(params["lam_j"])
    if kind == "scalar_y":
        return y_hat(params["a2"])
    if kind == "raw_y":
        return y_hat(params["a2"]) * 2
    if kind == "matrix_v":
        return v_hat(params["lam_l"], params["b2"])
    raise ValueError(f"Block `{kind}` not found.")


def contribution_hat(kind: str, **params) -> CothCombo:
    """Hat of the block's volume factor: y enters the density squared"""
    hat = phi2_hat(kind, **params)
    return hat * 2 if kind == "scalar_y" else hat
