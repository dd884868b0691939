"""Eigenspace decomposition n = sum of n_alpha for D = ad_A restricted to n."""
import logging
from fractions import Fraction
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np
import scipy.linalg

from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import DNotSymmetricPositive
from core import EigenvalueSeparationError
from core import GeometryObject
from core import GradingViolation
from core import InexactBlockData
from utils.numbers import recognize_rational

logger = logging.getLogger(__name__)


class SpectralData(GeometryObject):
    def __init__(
        self,
        entries: Tuple[Tuple[float, int], ...],
        bases: Tuple[np.ndarray, ...],
        settings: Settings = DEFAULT_SETTINGS,
    ) -> None:
        """
        Args:
            entries: (alpha, n_alpha) in increasing alpha
            bases: orthonormal basis of each n_alpha as columns, in n coordinates
            settings (Settings): tolerances
        """
        self.lam = max(alpha for alpha, _ in entries)
        self.alphas = tuple(alpha for alpha, _ in entries)
        self.multiplicities = tuple(mult for _, mult in entries)
        self.dim = sum(self.multiplicities)

    def index(self, alpha: float) -> Optional[int]:
        """Position of the eigenvalue within relative tolerance, or None"""
        for i, a in enumerate(self.alphas):
            if abs(a - alpha) <= self.settings.cluster_rtol * self.lam * 10:
                return i
        return None

    def contains(self, alpha: float) -> bool:
        return self.index(alpha) is not None

    def multiplicity(self, alpha: float) -> int:
        i = self.index(alpha)
        return 0 if i is None else self.multiplicities[i]

    def basis(self, alpha: float) -> np.ndarray:
        i = self.index(alpha)
        return np.zeros((self.dim, 0)) if i is None else self.bases[i]

    def projector(self, alpha: float) -> np.ndarray:
        B = self.basis(alpha)
        return B @ B.T

    @property
    def ratios(self) -> Tuple[float, ...]:
        return tuple(alpha / self.lam for alpha in self.alphas)

    @property
    def exact_ratios(self) -> Optional[Tuple[Fraction, ...]]:
        """alpha / lambda as rationals, or None when any ratio is not recognizably rational"""
        try:
            return tuple(
                recognize_rational(r, self.settings.max_denominator, self.settings.cluster_rtol) for r in self.ratios
            )
        except InexactBlockData:
            return None

    def to_json(self):
        return {
            "lambda": self.lam,
            "entries": [{"alpha": a, "multiplicity": m} for a, m in self.entries],
        }


def _canonical_basis(B: np.ndarray) -> np.ndarray:
    """Basis of span(B) preferring coordinate axes, ordered by original index, signs fixed"""
    P = B @ B.T
    _, _, piv = scipy.linalg.qr(P, pivoting=True)
    cols = np.sort(piv[: B.shape[1]])
    Q, R = np.linalg.qr(P[:, cols])
    signs = np.sign(np.diag(R))
    signs[signs == 0] = 1.0
    return Q * signs


def _cluster(eigvals: np.ndarray, lam: float, settings: Settings) -> List[List[int]]:
    clusters = [[0]]
    for i in range(1, len(eigvals)):
        gap = eigvals[i] - eigvals[clusters[-1][-1]]
        if gap <= settings.cluster_rtol * lam:
            clusters[-1].append(i)
        elif gap < settings.cluster_separation * lam:
            raise EigenvalueSeparationError(
                f"eigenvalues {eigvals[i - 1]:.12g} and {eigvals[i]:.12g} of D are neither equal nor separated"
            )
        else:
            clusters.append([i])
    return clusters


def check_grading(alg: MetricSolvableAlgebra, spectral: SpectralData, settings: Settings = DEFAULT_SETTINGS) -> float:
    """
    Description: verifies [n_alpha, n_beta] lies in n_{alpha + beta} (zero when alpha + beta is not an eigenvalue)

    Returns:
        float: largest stray component found

    Raises:
        GradingViolation
    """
    inner = alg.c[1:, 1:, 1:]
    worst = 0.0
    for i, alpha in enumerate(spectral.alphas):
        for j in range(i, len(spectral.alphas)):
            beta = spectral.alphas[j]
            Bi, Bj = spectral.bases[i], spectral.bases[j]
            images = np.einsum("ijk,ia,jb->kab", inner, Bi, Bj).reshape(spectral.dim, -1)
            stray = images - spectral.projector(alpha + beta) @ images
            defect = float(np.max(np.abs(stray))) if stray.size else 0.0
            worst = max(worst, defect)
            if defect > settings.grading_tol * alg.scale:
                raise GradingViolation(
                    f"[n_{alpha:.6g}, n_{beta:.6g}] leaves n_{alpha + beta:.6g} by {defect:.3e}"
                )
    return worst


def spectral_decompose(alg: MetricSolvableAlgebra, settings: Settings = DEFAULT_SETTINGS) -> SpectralData:
    """
    Description: eigenvalues of D with multiplicities, eigenspace bases, and the
    grading check [n_alpha, n_beta] in n_{alpha + beta}

    Args:
        alg (MetricSolvableAlgebra): valid algebra, not the flat model
        settings (Settings): clustering and grading tolerances

    Returns:
        SpectralData

    Raises:
        DNotSymmetricPositive: for the flat model or an algebra without a nilradical
        EigenvalueSeparationError: eigenvalues closer than the separation threshold
        GradingViolation
    """
    if alg.dim < 2 or not np.any(alg.D):
        raise DNotSymmetricPositive("D vanishes; the flat model has no eigenvalue decomposition")
    D = alg.D
    eigvals, eigvecs = scipy.linalg.eigh(0.5 * (D + D.T))
    lam = float(eigvals[-1])

    entries, bases = [], []
    for cluster in _cluster(eigvals, lam, settings):
        alpha = float(np.mean(eigvals[cluster]))
        entries.append((alpha, len(cluster)))
        bases.append(_canonical_basis(eigvecs[:, cluster]))
    spectral = SpectralData(tuple(entries), tuple(bases), settings)

    check_grading(alg, spectral, settings)
    logger.info(
        "spectrum of D: %s",
        ", ".join(f"{alpha:.6g} (x{mult})" for alpha, mult in entries),
    )
    return spectral
