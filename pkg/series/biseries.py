"""Truncated power series in t whose coefficients are TrigPoly in phi.

Everything here is normalized to lambda = 1 and exact.
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import List
from typing import Sequence
from typing import Tuple

from core import OrderTooLarge
from series.polyc import PolyC
from series.polyc import TrigPoly
from series.polyc import as_trig


class BiSeries:
    """sum_{k <= order} coeffs[k] t^k"""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence, order: int) -> None:
        coeffs = [as_trig(x) for x in list(coeffs)[: order + 1]]
        coeffs += [TrigPoly() for _ in range(order + 1 - len(coeffs))]
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "BiSeries":
        return cls((), order)

    @classmethod
    def constant(cls, value, order: int) -> "BiSeries":
        return cls((value,), order)

    @classmethod
    def variable(cls, order: int) -> "BiSeries":
        return cls((0, 1), order)

    def __getitem__(self, k: int) -> TrigPoly:
        return self.coeffs[k]

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coeffs)

    def __add__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            other = BiSeries.constant(other, self.order)
        order = min(self.order, other.order)
        return BiSeries((self[k] + other[k] for k in range(order + 1)), order)

    __radd__ = __add__

    def __neg__(self) -> "BiSeries":
        return BiSeries((-x for x in self.coeffs), self.order)

    def __sub__(self, other) -> "BiSeries":
        return self + (-other)

    def __rsub__(self, other) -> "BiSeries":
        return (-self) + other

    def __mul__(self, other) -> "BiSeries":
        if not isinstance(other, BiSeries):
            factor = as_trig(other)
            return BiSeries((x * factor for x in self.coeffs), self.order)
        order = min(self.order, other.order)
        out = [TrigPoly() for _ in range(order + 1)]
        for i in range(order + 1):
            if self[i].is_zero():
                continue
            for j in range(order + 1 - i):
                if not other[j].is_zero():
                    out[i + j] = out[i + j] + self[i] * other[j]
        return BiSeries(out, order)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, BiSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def __pow__(self, n: int) -> "BiSeries":
        result = BiSeries.constant(1, self.order)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self) -> "BiSeries":
        """1 / self; the t^0 coefficient must be a nonzero rational constant"""
        head = self[0]
        if not head.is_constant() or head.is_zero():
            raise ZeroDivisionError("series reciprocal needs a nonzero constant leading term")
        inv = 1 / head.even[0]
        out = [TrigPoly.constant(inv)]
        for k in range(1, self.order + 1):
            acc = TrigPoly()
            for i in range(1, k + 1):
                acc = acc + self[i] * out[k - i]
            out.append(acc * (-inv))
        return BiSeries(out, self.order)

    def divide_by_t(self, power: int = 1) -> "BiSeries":
        """self / t^power; the first `power` coefficients must vanish"""
        if any(not self[k].is_zero() for k in range(power)):
            raise ZeroDivisionError(f"series is not divisible by t^{power}")
        return BiSeries(self.coeffs[power:], self.order - power)

    def times_t(self, power: int = 1) -> "BiSeries":
        return BiSeries([TrigPoly()] * power + list(self.coeffs), self.order)

    def phi_parts(self) -> Tuple[List[Fraction], List[Fraction], List[Fraction]]:
        """t-coefficients of the phi^0, phi^1 and phi^2 terms of the expansion at phi = 0"""
        parts = [x.phi_coefficients() for x in self.coeffs]
        return tuple([part[n] for part in parts] for n in range(3))

    def evaluate(self, t: float, phi: float) -> float:
        value = 0.0
        for x in reversed(self.coeffs):
            value = value * t + x(phi)
        return value

    def to_json(self):
        return {"order": self.order, "coefficients": list(self.coeffs)}

    def __repr__(self) -> str:
        return f"BiSeries(order={self.order}, {list(self.coeffs)!r})"


def check_order(order: int, max_order: int) -> None:
    if order > max_order:
        raise OrderTooLarge(f"series order {order} exceeds the maximum {max_order}")
    if order < 1:
        raise ValueError(f"series order must be positive, got {order}")


def exp_series(mu, order: int) -> BiSeries:
    mu = Fraction(mu)
    return BiSeries((mu ** k / math.factorial(k) for k in range(order + 1)), order)


def cosh_series(mu, order: int) -> BiSeries:
    mu = Fraction(mu)
    return BiSeries((mu ** k / math.factorial(k) if k % 2 == 0 else 0 for k in range(order + 1)), order)


def sinh_series(mu, order: int) -> BiSeries:
    mu = Fraction(mu)
    return BiSeries((mu ** k / math.factorial(k) if k % 2 else 0 for k in range(order + 1)), order)


def sinhc_series(mu, order: int) -> BiSeries:
    """sinh(mu t) / (mu t)"""
    mu = Fraction(mu)
    return BiSeries((mu ** k / math.factorial(k + 1) if k % 2 == 0 else 0 for k in range(order + 1)), order)


@lru_cache(maxsize=None)
def geodesic_series(order: int) -> Tuple[BiSeries, BiSeries]:
    """
    Description: (Phi, q) along the geodesic of angle phi, lambda = 1, as exact series

    Returns:
        Phi = sin(phi) / den and q = (c cosh t - sinh t) / den with den = cosh t - c sinh t
    """
    c = TrigPoly.cos()
    den = cosh_series(1, order) - sinh_series(1, order) * c
    inv = den.reciprocal()
    Phi = inv * TrigPoly.sin()
    q = (cosh_series(1, order) * c - sinh_series(1, order)) * inv
    return Phi, q


def from_rationals(values: Sequence, order: int) -> BiSeries:
    return BiSeries((PolyC.constant(Fraction(v)) for v in values), order)
