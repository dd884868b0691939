"""Exact Taylor solutions of the block Jacobi systems (lambda = 1).

A block Y'' = K Y + G Y' with Y(0) = 0, Y'(0) = id is solved coefficientwise:

    (k + 2)(k + 1) Y_{k+2} = sum_i K_i Y_{k-i} + sum_i G_i (k - i + 1) Y_{k-i+1}

The 2x2 systems are conjugated by diag(1, b) (resp. diag(1, a)) so that only b^2
(resp. a^2) enters; determinants are unchanged.
"""
import logging
from fractions import Fraction
from typing import Dict
from typing import List
from typing import Optional

from config import DEFAULT_SETTINGS
from config import Settings
from density.core import BlockODE
from series.biseries import BiSeries
from series.biseries import check_order
from series.biseries import geodesic_series
from series.polyc import TrigPoly
from utils.numbers import recognize_rational

logger = logging.getLogger(__name__)

Matrix = List[List[BiSeries]]


def _matmul(A, B):
    n = len(A)
    return [[sum((A[i][m] * B[m][j] for m in range(n)), TrigPoly()) for j in range(n)] for i in range(n)]


def solve_linear(K: Matrix, G: Optional[Matrix], order: int) -> Matrix:
    """Coefficient recurrence for Y'' = K Y + G Y', Y(0) = 0, Y'(0) = id"""
    n = len(K)
    zero = [[TrigPoly() for _ in range(n)] for _ in range(n)]
    ident = [[TrigPoly.constant(1 if i == j else 0) for j in range(n)] for i in range(n)]
    Ks = [[[K[i][j][k] for j in range(n)] for i in range(n)] for k in range(order + 1)]
    Gs = None if G is None else [[[G[i][j][k] for j in range(n)] for i in range(n)] for k in range(order + 1)]

    Y = [zero, ident]
    for k in range(order - 1):
        acc = zero
        for i in range(k + 1):
            term = _matmul(Ks[i], Y[k - i])
            acc = [[acc[r][s] + term[r][s] for s in range(n)] for r in range(n)]
            if Gs is not None:
                factor = k - i + 1
                term = _matmul(Gs[i], Y[k - i + 1])
                acc = [[acc[r][s] + term[r][s] * factor for s in range(n)] for r in range(n)]
        divisor = Fraction(1, (k + 2) * (k + 1))
        Y.append([[acc[r][s] * divisor for s in range(n)] for r in range(n)])

    return [[BiSeries((Y[k][i][j] for k in range(order + 1)), order) for j in range(n)] for i in range(n)]


def _system(kind: str, params: Dict[str, Fraction], order: int):
    Phi, q = geodesic_series(order)
    Phi2 = Phi * Phi
    if kind == "scalar_x":
        l = params["lam_j"]
        return [[Phi2 * ((1 - l) * l) + l * l]], None
    if kind == "scalar_y":
        a2 = params["a2"]
        return [[Phi2 * ((1 - a2) / 4) + Fraction(1, 4)]], None
    if kind == "matrix_v":
        l, b2 = params["lam_l"], params["b2"]
        lp = 1 - l
        q2, qPhi = q * q, q * Phi
        K = [
            [q2 * (l * l) + Phi2 * l, qPhi * (-lp)],
            [qPhi * (b2 * l), q2 * (lp * lp) + Phi2 * lp],
        ]
        G = [[BiSeries.zero(order), -Phi], [Phi * b2, BiSeries.zero(order)]]
        return K, G
    if kind == "raw_y":
        a2 = params["a2"]
        diag = (Phi2 + 1) * Fraction(1, 4)
        half = q * Phi * Fraction(1, 2)
        K = [[diag, -half], [half * a2, diag]]
        G = [[BiSeries.zero(order), -Phi], [Phi * a2, BiSeries.zero(order)]]
        return K, G
    raise ValueError(f"Block `{kind}` not found.")


class OdeSeries:
    """Series solution of one block, with its scalar (x, y, det v, det w) and volume factor"""

    def __init__(self, kind: str, params: Dict[str, Fraction], order: int, solution: Matrix) -> None:
        self.kind = kind
        self.params = params
        self.order = order
        self.solution = solution
        if len(solution) == 1:
            self.scalar = solution[0][0]
        else:
            self.scalar = solution[0][0] * solution[1][1] - solution[0][1] * solution[1][0]
        self.contribution = self.scalar * self.scalar if kind == "scalar_y" else self.scalar

    @property
    def phi0(self) -> List[Fraction]:
        return self.scalar.phi_parts()[0]

    @property
    def phi1(self) -> List[Fraction]:
        return self.scalar.phi_parts()[1]

    @property
    def phi2(self) -> List[Fraction]:
        """t-coefficients of the phi^2 term of the scalar"""
        return self.scalar.phi_parts()[2]

    def entry_parts(self, i: int, j: int):
        """phi^0, phi^1, phi^2 parts of one (conjugated) solution entry"""
        return self.solution[i][j].phi_parts()

    def to_json(self):
        phi0, phi1, phi2 = self.scalar.phi_parts()
        return {
            "kind": self.kind,
            "parameters": self.params,
            "order": self.order,
            "scalar": self.scalar,
            "phi0": phi0,
            "phi1": phi1,
            "phi2": phi2,
        }


def exact_parameters(block: BlockODE, settings: Settings = DEFAULT_SETTINGS) -> Dict[str, Fraction]:
    """Block parameters normalized to lambda = 1 as rationals (squares for a and b)"""

    def exact(value) -> Fraction:
        return recognize_rational(value, settings.max_denominator, settings.grading_tol)

    lam = block.lam
    if block.kind == "scalar_x":
        return {"lam_j": exact(_ratio(block.lam_j, lam))}
    if block.kind in ("scalar_y", "raw_y"):
        return {"a2": exact(_ratio(block.a, lam, 2))}
    if block.kind == "matrix_v":
        return {"lam_l": exact(_ratio(block.lam_l, lam)), "b2": exact(_ratio(block.b, lam, 2))}
    raise ValueError(f"Block `{block.kind}` not found.")


def _ratio(value, lam, power: int = 1):
    if isinstance(value, (int, Fraction)) and isinstance(lam, (int, Fraction)):
        return (Fraction(value) / Fraction(lam)) ** power
    return (float(value) / float(lam)) ** power


def series_for(kind: str, order: int = DEFAULT_SETTINGS.series_order, settings: Settings = DEFAULT_SETTINGS, **params) -> OdeSeries:
    """
    Description: series solution from exact parameters

    Args:
        kind (str): scalar_x (lam_j), scalar_y (a2), matrix_v (lam_l, b2) or raw_y (a2)
        order (int): truncation order in t
        params: rationals, lambda = 1

    Returns:
        OdeSeries

    Raises:
        OrderTooLarge
    """
    check_order(order, settings.max_series_order)
    params = {key: Fraction(val) for key, val in params.items()}
    K, G = _system(kind, params, order)
    logger.debug("series for %s %s to order %d", kind, params, order)
    return OdeSeries(kind, params, order, solve_linear(K, G, order))


def ode_series(block: BlockODE, order: int = DEFAULT_SETTINGS.series_order, settings: Settings = DEFAULT_SETTINGS) -> OdeSeries:
    """
    Description: exact Taylor solution of a block system in (t, phi), lambda normalized to 1

    Args:
        block (BlockODE): block with rational (or recognizably rational) data
        order (int): truncation order in t, at most settings.max_series_order
        settings (Settings): order bound and rational recognition

    Returns:
        OdeSeries; its phi1 part vanishes for every block

    Raises:
        OrderTooLarge
        InexactBlockData
    """
    check_order(order, settings.max_series_order)
    return series_for(block.kind, order, settings, **exact_parameters(block, settings))
