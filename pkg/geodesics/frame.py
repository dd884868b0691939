import logging
from typing import List
from typing import Optional

import numpy as np

from algebras.core import MetricSolvableAlgebra
from algebras.jfamily import AdaptedBasis
from algebras.jfamily import decompose
from algebras.spectral import SpectralData
from algebras.spectral import spectral_decompose
from config import DEFAULT_SETTINGS
from config import Settings
from geodesics.core import GeodesicState

logger = logging.getLogger(__name__)


def default_z(alg: MetricSolvableAlgebra, spectral: SpectralData) -> np.ndarray:
    """First canonical basis vector of n_lambda, in g coordinates"""
    Z = np.zeros(alg.dim)
    Z[1:] = spectral.basis(spectral.lam)[:, 0]
    return Z


def adapted_basis(
    alg: MetricSolvableAlgebra,
    Z: Optional[np.ndarray] = None,
    spectral: Optional[SpectralData] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> AdaptedBasis:
    """
    Description: orthonormal frame of n ∩ Z^⊥ split into X-, Y- and V-blocks

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        Z (np.ndarray): unit vector of n_lambda; the first basis vector of n_lambda when omitted
        spectral (SpectralData): reused when given
        settings (Settings): tolerances

    Returns:
        AdaptedBasis with k + 2p + 2m = dim g - 2
    """
    spectral = spectral or spectral_decompose(alg, settings)
    if Z is None:
        Z = default_z(alg, spectral)
    return decompose(alg, Z, spectral, settings)


def restricted_jacobi_matrix(basis: AdaptedBasis, state: GeodesicState) -> np.ndarray:
    """R along the geodesic restricted to n ∩ Z^⊥, in the adapted frame:
    -q^2 D^2 - 1/4 Phi^2 J^2 - lam Phi^2 D + 1/2 q Phi [D, J]
    """
    D, J = basis.D_tilde, basis.J_tilde
    q, Phi, lam = state.q, state.Phi, basis.lam
    return -(q ** 2) * D @ D - 0.25 * Phi ** 2 * J @ J - lam * Phi ** 2 * D + 0.5 * q * Phi * (D @ J - J @ D)


def restricted_jacobi(basis: AdaptedBasis, state: GeodesicState) -> List[np.ndarray]:
    """Diagonal blocks of restricted_jacobi_matrix: 1x1 per X-block, 2x2 per Y- and V-block, in frame order"""
    M = restricted_jacobi_matrix(basis, state)
    sizes = [1] * basis.k + [2] * (basis.p + basis.m)
    blocks, start = [], 0
    for size in sizes:
        blocks.append(M[start : start + size, start : start + size].copy())
        start += size
    return blocks
