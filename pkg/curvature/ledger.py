"""First two Ledger conditions and the nonpositivity scan."""
import itertools
import logging
from typing import Optional

import numpy as np

from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject
from curvature.core import CurvatureOracle
from utils.random import Random

logger = logging.getLogger(__name__)


class LedgerReport(GeometryObject):
    def __init__(
        self,
        C: float,
        H: float,
        einstein_residual: float,
        ledger2_residual: float,
        einstein_tensor_residual: float,
        ledger2_tensor_residual: float,
    ) -> None:
        pass

    def to_json(self):
        return dict(self.attrs)


class NonpositivityReport(GeometryObject):
    def __init__(
        self,
        max_curvature: float,
        min_curvature: float,
        witness: tuple,
        planes: int,
        settings: Settings = DEFAULT_SETTINGS,
    ) -> None:
        pass

    @property
    def nonpositive(self) -> bool:
        return self.max_curvature <= self.settings.curvature_tol

    def to_json(self):
        return {
            "max_curvature": self.max_curvature,
            "min_curvature": self.min_curvature,
            "witness": [list(v) for v in self.witness],
            "planes": self.planes,
            "nonpositive": self.nonpositive,
        }


def ledger_sample(dim: int) -> np.ndarray:
    """Unit vectors: the basis, then (e_0 + e_i)/sqrt 2 and (e_0 - e_i)/sqrt 2 for i >= 1"""
    eye = np.eye(dim)
    rows = [eye]
    if dim > 1:
        rows.append((eye[0] + eye[1:]) / np.sqrt(2.0))
        rows.append((eye[0] - eye[1:]) / np.sqrt(2.0))
    return np.vstack(rows)


def _symmetrize(T: np.ndarray) -> np.ndarray:
    perms = list(itertools.permutations(range(4)))
    return sum(T.transpose(p) for p in perms) / len(perms)


def quartic_residual(oracle: CurvatureOracle, H: float) -> float:
    """
    Description: max coefficient of the degree-4 form Tr R_X^2 - H |X|^4 as a symmetric tensor

    Notes:
        * exact for all X, unlike the sampled residual
    """
    Rt = oracle.tensor
    n = oracle.dim
    quartic = _symmetrize(np.einsum("ijkl,lmpi->jkmp", Rt, Rt))
    eye = np.eye(n)
    norm4 = (
        np.einsum("jk,mp->jkmp", eye, eye) + np.einsum("jm,kp->jkmp", eye, eye) + np.einsum("jp,km->jkmp", eye, eye)
    ) / 3.0
    return float(np.max(np.abs(quartic - H * norm4)))


def ledger_check(
    alg: MetricSolvableAlgebra,
    oracle: Optional[CurvatureOracle] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> LedgerReport:
    """
    Description: Ric = C g and Tr R_X^2 = H |X|^4, sampled and as exact tensor identities

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        oracle (CurvatureOracle): reused when given
        settings (Settings): tolerances

    Returns:
        LedgerReport with C = Tr R_A, H = Tr R_A^2 and the four residuals
    """
    oracle = oracle or CurvatureOracle(alg, settings)
    C = oracle.einstein_constant
    H = oracle.ledger_constant
    sample = ledger_sample(alg.dim)
    traces = np.array([oracle.trace_jacobi(X) for X in sample])
    squares = np.array([oracle.trace_jacobi_square(X) for X in sample])

    report = LedgerReport(
        C=C,
        H=H,
        einstein_residual=float(np.max(np.abs(traces - C))),
        ledger2_residual=float(np.max(np.abs(squares - H))),
        einstein_tensor_residual=float(np.max(np.abs(oracle.ricci - C * np.eye(alg.dim)))),
        ledger2_tensor_residual=quartic_residual(oracle, H),
    )
    logger.info(
        "ledger: C=%.12g H=%.12g residuals %.3e / %.3e",
        C,
        H,
        report.einstein_residual,
        report.ledger2_residual,
    )
    return report


def nonpositivity_scan(
    alg: MetricSolvableAlgebra,
    oracle: Optional[CurvatureOracle] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> NonpositivityReport:
    """
    Description: largest sectional curvature over the coordinate 2-planes plus
    `settings.random_planes` seeded random planes

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        oracle (CurvatureOracle): reused when given
        settings (Settings): seed, plane count, tolerance

    Returns:
        NonpositivityReport; nonpositive iff max_curvature <= curvature_tol
    """
    oracle = oracle or CurvatureOracle(alg, settings)
    X, Y = oracle.basis_planes()
    if alg.dim > 1 and settings.random_planes > 0:
        rng = Random(settings.seed)
        X = np.vstack([X, rng.normal((settings.random_planes, alg.dim))])
        Y = np.vstack([Y, rng.normal((settings.random_planes, alg.dim))])
    if len(X) == 0:
        return NonpositivityReport(0.0, 0.0, (np.zeros(alg.dim), np.zeros(alg.dim)), 0, settings)

    K = oracle.sectional_curvatures(X, Y)
    worst = int(np.argmax(K))
    report = NonpositivityReport(
        max_curvature=float(K[worst]),
        min_curvature=float(np.min(K)),
        witness=(X[worst], Y[worst]),
        planes=len(K),
        settings=settings,
    )
    if not report.nonpositive:
        logger.warning("positive sectional curvature %.6g found", report.max_curvature)
    logger.info("nonpositivity scan over %d planes: max %.6g, min %.6g", len(K), report.max_curvature, report.min_curvature)
    return report
