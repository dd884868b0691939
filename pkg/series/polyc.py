"""Exact polynomials in c = cos(phi), and trigonometric polynomials e(c) + sin(phi) o(c)."""
import math
from fractions import Fraction
from typing import Iterable
from typing import List
from typing import Tuple
from typing import Union

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    out = [Fraction(x) for x in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class PolyC:
    """Polynomial sum_k coeffs[k] c^k with rational coefficients, trailing zeros stripped"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        self.coeffs = _strip(coeffs)

    @classmethod
    def constant(cls, value: Scalar) -> "PolyC":
        return cls((value,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "PolyC") -> "PolyC":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyC(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "PolyC":
        return PolyC(-x for x in self.coeffs)

    def __sub__(self, other: "PolyC") -> "PolyC":
        return self + (-_lift(other))

    def __rsub__(self, other) -> "PolyC":
        return _lift(other) - self

    def __mul__(self, other) -> "PolyC":
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return PolyC()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PolyC(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyC.constant(other)
        return isinstance(other, PolyC) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, c) -> Union[Fraction, float]:
        value = 0
        for a in reversed(self.coeffs):
            value = value * c + a
        return value

    def derivative(self) -> "PolyC":
        return PolyC(k * a for k, a in enumerate(self.coeffs) if k > 0)

    def scale(self, factor: Scalar) -> "PolyC":
        return PolyC(a * factor for a in self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "PolyC(0)"
        terms = [f"{a}*c^{k}" if k else f"{a}" for k, a in enumerate(self.coeffs) if a]
        return "PolyC(" + " + ".join(terms) + ")"

    def to_json(self) -> List[Fraction]:
        return list(self.coeffs)


def _lift(value) -> PolyC:
    if isinstance(value, PolyC):
        return value
    if isinstance(value, (int, Fraction)):
        return PolyC.constant(value)
    raise TypeError(f"cannot combine PolyC with {type(value).__name__}")


ONE_MINUS_C2 = PolyC((1, 0, -1))


class TrigPoly:
    """even(c) + sin(phi) * odd(c); products use sin^2 = 1 - c^2"""

    __slots__ = ("even", "odd")

    def __init__(self, even: PolyC = PolyC(), odd: PolyC = PolyC()) -> None:
        self.even = _lift(even)
        self.odd = _lift(odd)

    @classmethod
    def constant(cls, value: Scalar) -> "TrigPoly":
        return cls(PolyC.constant(value))

    @classmethod
    def sin(cls) -> "TrigPoly":
        return cls(PolyC(), PolyC.constant(1))

    @classmethod
    def cos(cls) -> "TrigPoly":
        return cls(PolyC((0, 1)))

    def is_zero(self) -> bool:
        return self.even.is_zero() and self.odd.is_zero()

    def is_constant(self) -> bool:
        return self.even.is_constant() and self.odd.is_zero()

    def __add__(self, other) -> "TrigPoly":
        other = as_trig(other)
        return TrigPoly(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return TrigPoly(-self.even, -self.odd)

    def __sub__(self, other) -> "TrigPoly":
        return self + (-as_trig(other))

    def __rsub__(self, other) -> "TrigPoly":
        return as_trig(other) - self

    def __mul__(self, other) -> "TrigPoly":
        other = as_trig(other)
        even = self.even * other.even
        if not (self.odd.is_zero() or other.odd.is_zero()):
            even = even + ONE_MINUS_C2 * self.odd * other.odd
        odd = self.even * other.odd + self.odd * other.even
        return TrigPoly(even, odd)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, PolyC)):
            other = as_trig(other)
        return isinstance(other, TrigPoly) and self.even == other.even and self.odd == other.odd

    def __hash__(self) -> int:
        return hash((self.even, self.odd))

    def __call__(self, phi: float) -> float:
        c = math.cos(phi)
        return float(self.even(c)) + math.sin(phi) * float(self.odd(c))

    def phi_coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        """Taylor coefficients of phi^0, phi^1, phi^2 at phi = 0"""
        return self.even(1), self.odd(1), -self.even.derivative()(1) / 2

    def __repr__(self) -> str:
        return f"TrigPoly({self.even!r} + sin*{self.odd!r})"

    def to_json(self):
        return {"even": self.even, "odd": self.odd}


def as_trig(value) -> TrigPoly:
    if isinstance(value, TrigPoly):
        return value
    return TrigPoly(_lift(value))
