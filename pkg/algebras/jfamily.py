"""J-operators of n_lambda and the block decomposition of n ∩ Z^⊥ they induce.

For a unit Z in n_lambda the space ñ = n ∩ Z^⊥ is invariant under D and J_Z, and
D commutes with J_Z^2 there. Simultaneous diagonalization splits ñ into

    X-blocks  J_Z X = 0, D X = lambda_j X
    Y-blocks  J_Z Y1 = a Y2, J_Z Y2 = -a Y1, both in n_{lambda/2}
    V-blocks  J_Z V1 = b V2, J_Z V2 = -b V1, V1 in n_{lambda_l}, V2 in n_{lambda - lambda_l},
              lambda_l < lambda / 2

with a, b > 0.
"""
import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np
import scipy.linalg

from algebras.core import MetricSolvableAlgebra
from algebras.spectral import SpectralData
from algebras.spectral import spectral_decompose
from config import DEFAULT_SETTINGS
from config import Settings
from core import BlockSeparationFailure
from core import GeometryObject
from utils.numbers import recognize_rational

logger = logging.getLogger(__name__)


class XBlock(GeometryObject):
    def __init__(self, vector: np.ndarray, lam_j: float) -> None:
        pass


class YBlock(GeometryObject):
    def __init__(self, first: np.ndarray, second: np.ndarray, a: float) -> None:
        pass


class VBlock(GeometryObject):
    def __init__(self, first: np.ndarray, second: np.ndarray, lam_l: float, lam_l_prime: float, b: float) -> None:
        pass


class AdaptedBasis(GeometryObject):
    def __init__(
        self,
        lam: float,
        Z: np.ndarray,
        x_blocks: Tuple[XBlock, ...],
        y_blocks: Tuple[YBlock, ...],
        v_blocks: Tuple[VBlock, ...],
        D: np.ndarray,
        J: np.ndarray,
    ) -> None:
        """
        Args:
            lam (float): top eigenvalue of D
            Z (np.ndarray): unit vector of n_lambda in g coordinates
            x_blocks, y_blocks, v_blocks: the blocks, vectors in n coordinates
            D (np.ndarray): D on n
            J (np.ndarray): J_Z on n
        """
        columns = [blk.vector for blk in x_blocks]
        for blk in tuple(y_blocks) + tuple(v_blocks):
            columns += [blk.first, blk.second]
        dim_n = D.shape[0]
        self.frame = np.column_stack(columns) if columns else np.zeros((dim_n, 0))

    @property
    def k(self) -> int:
        return len(self.x_blocks)

    @property
    def p(self) -> int:
        return len(self.y_blocks)

    @property
    def m(self) -> int:
        return len(self.v_blocks)

    @property
    def size(self) -> int:
        return self.frame.shape[1]

    @property
    def D_tilde(self) -> np.ndarray:
        return self.frame.T @ self.D @ self.frame

    @property
    def J_tilde(self) -> np.ndarray:
        return self.frame.T @ self.J @ self.frame

    def orthonormality_defect(self) -> float:
        if self.size == 0:
            return 0.0
        return float(np.max(np.abs(self.frame.T @ self.frame - np.eye(self.size))))

    def block_relation_defect(self) -> float:
        """Largest deviation from the defining relations of every block"""
        D, J = self.D, self.J
        worst = 0.0
        for blk in self.x_blocks:
            worst = max(worst, np.max(np.abs(J @ blk.vector)), np.max(np.abs(D @ blk.vector - blk.lam_j * blk.vector)))
        for blk in self.y_blocks:
            half = 0.5 * self.lam
            worst = max(
                worst,
                np.max(np.abs(J @ blk.first - blk.a * blk.second)),
                np.max(np.abs(J @ blk.second + blk.a * blk.first)),
                np.max(np.abs(D @ blk.first - half * blk.first)),
                np.max(np.abs(D @ blk.second - half * blk.second)),
            )
        for blk in self.v_blocks:
            worst = max(
                worst,
                np.max(np.abs(J @ blk.first - blk.b * blk.second)),
                np.max(np.abs(J @ blk.second + blk.b * blk.first)),
                np.max(np.abs(D @ blk.first - blk.lam_l * blk.first)),
                np.max(np.abs(D @ blk.second - blk.lam_l_prime * blk.second)),
            )
        return float(worst)

    def exact_data(self, settings: Settings = DEFAULT_SETTINGS) -> Dict[str, List]:
        """
        Description: block parameters normalized to lambda = 1 as rationals

        Returns:
            dict with "x": [lambda_j], "y": [a^2], "v": [(lambda_l, b^2)]

        Raises:
            InexactBlockData: when a parameter is not a rational of bounded denominator
        """

        def exact(value: float) -> Fraction:
            return recognize_rational(value, settings.max_denominator, settings.grading_tol)

        lam = self.lam
        return {
            "x": [exact(blk.lam_j / lam) for blk in self.x_blocks],
            "y": [exact((blk.a / lam) ** 2) for blk in self.y_blocks],
            "v": [(exact(blk.lam_l / lam), exact((blk.b / lam) ** 2)) for blk in self.v_blocks],
        }

    def to_json(self):
        return {
            "lambda": self.lam,
            "k": self.k,
            "p": self.p,
            "m": self.m,
            "x": [blk.lam_j for blk in self.x_blocks],
            "y": [blk.a for blk in self.y_blocks],
            "v": [{"lambda_l": blk.lam_l, "lambda_l_prime": blk.lam_l_prime, "b": blk.b} for blk in self.v_blocks],
        }


def _jsq_clusters(mu: np.ndarray, scale: float, settings: Settings) -> List[List[int]]:
    """Group eigenvalues of J^2 (ascending); reject gaps between merge and separation thresholds"""
    if len(mu) == 0:
        return []
    clusters = [[0]]
    for i in range(1, len(mu)):
        gap = mu[i] - mu[clusters[-1][-1]]
        if gap <= settings.jsq_merge_rtol * scale:
            clusters[-1].append(i)
        elif gap <= settings.jsq_separation * scale:
            raise BlockSeparationFailure(
                f"J_Z^2 eigenvalues {mu[i - 1]:.12g} and {mu[i]:.12g} are too close to separate"
            )
        else:
            clusters.append([i])
    return clusters


def _pairs(span: np.ndarray, J: np.ndarray, coefficient: float) -> List[Tuple[np.ndarray, np.ndarray]]:
    """Split span(span) into (W1, J W1 / coefficient) pairs; W1 taken in basis order"""
    pairs = []
    remaining = span
    while remaining.shape[1] > 0:
        first = remaining[:, 0]
        second = J @ first / coefficient
        second = second / np.linalg.norm(second)
        pairs.append((first, second))
        remaining = remaining - np.outer(first, first @ remaining) - np.outer(second, second @ remaining)
        remaining = scipy.linalg.orth(remaining, rcond=1e-8) if np.any(np.abs(remaining) > 1e-8) else remaining[:, :0]
    return pairs


def decompose(
    alg: MetricSolvableAlgebra,
    Z: np.ndarray,
    spectral: Optional[SpectralData] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> AdaptedBasis:
    """
    Description: simultaneous block diagonalization of D and J_Z^2 on n ∩ Z^⊥

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        Z (np.ndarray): unit vector of n_lambda, in g coordinates
        spectral (SpectralData): decomposition of D, computed when omitted
        settings (Settings): tolerances

    Returns:
        AdaptedBasis

    Raises:
        ValueError: Z is not a unit vector of n_lambda
        BlockSeparationFailure: ill-separated J_Z^2 eigenvalues
    """
    spectral = spectral or spectral_decompose(alg, settings)
    lam = spectral.lam
    Z = np.asarray(Z, dtype=np.float64)
    z = Z[1:]
    if abs(Z[0]) > settings.cluster_rtol or abs(np.linalg.norm(z) - 1.0) > 1e-9:
        raise ValueError("Z must be a unit vector of the nilradical")
    if np.linalg.norm(alg.D @ z - lam * z) > 1e-9 * lam:
        raise ValueError("Z must lie in the top eigenspace n_lambda")

    D = alg.D
    J = alg.j_operator(Z)[1:, 1:]
    Jsq = J @ J
    scale = lam ** 2

    x_blocks, y_blocks, v_blocks = [], [], []
    for alpha, B in zip(spectral.alphas, spectral.bases):
        if abs(alpha - lam) <= settings.cluster_rtol * lam * 10:
            B = B - np.outer(z, z @ B)
            B = scipy.linalg.orth(B, rcond=1e-8) if B.size else B
        if B.shape[1] == 0:
            continue
        S = B.T @ Jsq @ B
        mu, W = scipy.linalg.eigh(0.5 * (S + S.T))
        for cluster in _jsq_clusters(mu, scale, settings):
            mean = float(np.mean(mu[cluster]))
            span = B @ W[:, cluster]
            if -mean <= settings.jsq_separation * scale:
                x_blocks.extend(XBlock(v, alpha) for v in span.T)
            elif abs(alpha - 0.5 * lam) <= settings.cluster_separation * lam:
                a = float(np.sqrt(-mean))
                y_blocks.extend(YBlock(first, second, a) for first, second in _pairs(span, J, a))
            elif alpha < 0.5 * lam:
                b = float(np.sqrt(-mean))
                v_blocks.extend(VBlock(first, second, alpha, lam - alpha, b) for first, second in _pairs(span, J, b))
            # alpha > lambda/2 with J^2 != 0: images of lower V-halves, already collected

    basis = AdaptedBasis(lam, Z, tuple(x_blocks), tuple(y_blocks), tuple(v_blocks), D, J)
    if basis.size != alg.dim - 2:
        raise BlockSeparationFailure(f"adapted basis spans {basis.size} dimensions, expected {alg.dim - 2}")
    defect = basis.block_relation_defect()
    if defect > settings.block_relation_tol * max(1.0, lam) * 100:
        logger.warning("block relations hold only to %.3e", defect)
    logger.debug("adapted basis: k=%d p=%d m=%d", basis.k, basis.p, basis.m)
    return basis


class JOperatorFamily(GeometryObject):
    def __init__(
        self,
        alg: MetricSolvableAlgebra,
        spectral: SpectralData,
        z_basis: np.ndarray,
        settings: Settings = DEFAULT_SETTINGS,
    ) -> None:
        """
        Args:
            alg (MetricSolvableAlgebra): the algebra
            spectral (SpectralData): its decomposition
            z_basis (np.ndarray): orthonormal basis of n_lambda as columns, in g coordinates
            settings (Settings): tolerances
        """
        self.lam = spectral.lam
        self.operators = tuple(alg.j_operator(Zr)[1:, 1:] for Zr in z_basis.T)

    def __len__(self) -> int:
        return self.z_basis.shape[1]

    def z(self, r: int) -> np.ndarray:
        return self.z_basis[:, r]

    def operator(self, Z: np.ndarray) -> np.ndarray:
        """J_Z on n for an arbitrary Z of n_lambda (g coordinates)"""
        return self.alg.j_operator(Z)[1:, 1:]

    @cached_property
    def bases(self) -> Tuple[AdaptedBasis, ...]:
        return tuple(decompose(self.alg, Zr, self.spectral, self.settings) for Zr in self.z_basis.T)

    @property
    def a_values(self) -> Tuple[float, ...]:
        return tuple(blk.a for blk in self.bases[0].y_blocks) if self.bases else ()

    @property
    def mixed_blocks(self) -> Tuple[Tuple[float, float, float], ...]:
        if not self.bases:
            return ()
        return tuple((blk.lam_l, blk.lam_l_prime, blk.b) for blk in self.bases[0].v_blocks)

    def skew_defect(self) -> float:
        return max((float(np.max(np.abs(J + J.T))) for J in self.operators if J.size), default=0.0)

    def grading_defect(self) -> float:
        """Largest component of J_Z n_alpha outside n_{lambda - alpha}"""
        worst = 0.0
        for J in self.operators:
            for alpha, B in zip(self.spectral.alphas, self.spectral.bases):
                image = J @ B
                stray = image - self.spectral.projector(self.lam - alpha) @ image
                if stray.size:
                    worst = max(worst, float(np.max(np.abs(stray))))
        return worst

    def commutator_defect(self) -> float:
        """max |[J_Z^2, D]| on n ∩ Z^⊥ over the basis Z"""
        D = self.alg.D
        worst = 0.0
        for Zr, J in zip(self.z_basis.T, self.operators):
            z = Zr[1:]
            P = np.eye(len(z)) - np.outer(z, z)
            Jsq = P @ J @ J @ P
            if Jsq.size:
                worst = max(worst, float(np.max(np.abs(Jsq @ D - D @ Jsq))))
        return worst


def j_family(
    alg: MetricSolvableAlgebra,
    spectral: Optional[SpectralData] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> JOperatorFamily:
    """
    Description: J_Z on n for an orthonormal basis Z_1..Z_r of n_lambda, with their block data

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        spectral (SpectralData): decomposition of D, computed when omitted
        settings (Settings): tolerances

    Returns:
        JOperatorFamily
    """
    spectral = spectral or spectral_decompose(alg, settings)
    top = spectral.basis(spectral.lam)
    z_basis = np.vstack([np.zeros((1, top.shape[1])), top])
    family = JOperatorFamily(alg, spectral, z_basis, settings)

    for name, defect, tol in (
        ("skew-symmetry", family.skew_defect(), settings.algebra_tol),
        ("J n_alpha in n_(lambda - alpha)", family.grading_defect(), settings.grading_tol),
        ("[J^2, D] = 0", family.commutator_defect(), settings.grading_tol),
    ):
        if defect > tol * alg.scale ** 2:
            logger.warning("J-operator %s holds only to %.3e", name, defect)
    logger.debug("J-operator family: %d operators on n of dimension %d", len(family), spectral.dim)
    return family
