"""Volume density V(t, phi) of geodesic spheres along the geodesics of Span(A, Z).

    V(t, phi) = sinh(lam t) / lam * prod x_j * prod y_i^2 * prod det v_l

Blocks with equal parameters are integrated once and raised to their count.
"""
import logging
from collections import OrderedDict
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import numpy as np
import scipy.integrate

from algebras.core import MetricSolvableAlgebra
from algebras.jfamily import AdaptedBasis
from algebras.spectral import SpectralData
from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject
from density.core import BlockODE
from density.core import make_block
from density.integrator import integrate_block
from geodesics.core import denominator
from geodesics.frame import adapted_basis
from utils.experiment import experiment

logger = logging.getLogger(__name__)


def block_odes(basis: AdaptedBasis, raw: bool = False) -> List[Tuple[BlockODE, int]]:
    """
    Description: one BlockODE per distinct block of the adapted basis, with its count

    Args:
        basis (AdaptedBasis): the frame
        raw (bool): use the undecoupled raw_y system for Y-blocks

    Returns:
        list of (block, count) in frame order of first appearance
    """
    lam = basis.lam
    blocks = [make_block("scalar_x", lam=lam, lam_j=blk.lam_j) for blk in basis.x_blocks]
    blocks += [make_block("raw_y" if raw else "scalar_y", lam=lam, a=blk.a) for blk in basis.y_blocks]
    blocks += [make_block("matrix_v", lam=lam, lam_l=blk.lam_l, b=blk.b) for blk in basis.v_blocks]

    unique = OrderedDict()
    for block in blocks:
        key = block.key()
        if key in unique:
            unique[key][1] += 1
        else:
            unique[key] = [block, 1]
    return [(block, count) for block, count in unique.values()]


def volume_from_blocks(
    blocks: Sequence[Tuple[BlockODE, int]],
    lam: float,
    phi: np.ndarray,
    t: float,
    steps: int,
    settings: Settings = DEFAULT_SETTINGS,
) -> np.ndarray:
    """V(t, phi) for a batch of angles (P,)"""
    phi = np.atleast_1d(np.asarray(phi, dtype=np.float64))
    V = np.full(len(phi), np.sinh(lam * t) / lam)
    for block, count in blocks:
        solution = integrate_block(block, phi, t, steps, settings)
        V = V * block.contribution(solution.final) ** count
    return V


def volume_density(
    alg: MetricSolvableAlgebra,
    phi: float,
    t: float,
    Z: Optional[np.ndarray] = None,
    steps: int = DEFAULT_SETTINGS.rk_steps,
    basis: Optional[AdaptedBasis] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> float:
    """
    Description: volume density at arclength t on the geodesic of angle phi

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        phi (float): initial angle from A
        t (float): arclength, positive
        Z (np.ndarray): unit vector of n_lambda; the first basis vector when omitted
        steps (int): Runge-Kutta steps on [0, t]
        basis (AdaptedBasis): reused when given

    Returns:
        float
    """
    basis = basis or adapted_basis(alg, Z, settings=settings)
    return float(volume_from_blocks(block_odes(basis), basis.lam, phi, t, steps, settings)[0])


def volume_at_zero(spectral: SpectralData, t) -> np.ndarray:
    """prod over eigenvalues of (sinh(alpha t) / alpha)^{n_alpha}"""
    t = np.asarray(t, dtype=np.float64)
    V = np.ones_like(t)
    for alpha, mult in zip(spectral.alphas, spectral.multiplicities):
        V = V * (np.sinh(alpha * t) / alpha) ** mult
    return V


def closed_form_x(lam_j: float, lam: float, phi: float, t: float) -> float:
    """
    Description: X-block solution by reduction of order,
        den(t)^{lam_j / lam} * int_0^t den(u)^{-2 lam_j / lam} du,  den = cosh lam t - cos phi sinh lam t

    Args:
        lam_j (float): block eigenvalue in (0, lam]
        lam (float): top eigenvalue
        phi (float): angle
        t (float): arclength

    Returns:
        float
    """
    if not 0 < lam_j <= lam:
        raise ValueError(f"lam_j must lie in (0, lam], got {lam_j}")
    ratio = lam_j / lam
    integral, _ = scipy.integrate.quad(
        lambda u: denominator(lam, phi, u) ** (-2.0 * ratio), 0.0, t, epsabs=1e-12, epsrel=1e-12, limit=200
    )
    return float(denominator(lam, phi, t) ** ratio * integral)


class DensityProfile(GeometryObject):
    def __init__(
        self,
        t: np.ndarray,
        phi: np.ndarray,
        V: np.ndarray,
        V0: np.ndarray,
        lam: float,
        blocks: Tuple,
    ) -> None:
        """
        Args:
            t (np.ndarray): (T,) arclengths
            phi (np.ndarray): (P,) angles
            V (np.ndarray): (T, P) volume density
            V0 (np.ndarray): (T,) integrated volume density at phi = 0
            lam (float): top eigenvalue
            blocks (tuple): (block, count) pairs the profile was assembled from
        """
        pass

    @property
    def ratio(self) -> np.ndarray:
        return self.V / self.V0[:, None]

    @property
    def deviation(self) -> np.ndarray:
        return np.abs(self.ratio - 1.0)

    def rows(self):
        """(t, phi, V, V / V(t, 0)) in grid order, t slowest"""
        ratio = self.ratio
        for i, t in enumerate(self.t):
            for j, phi in enumerate(self.phi):
                yield float(t), float(phi), float(self.V[i, j]), float(ratio[i, j])

    def to_json(self):
        return {
            "lambda": self.lam,
            "t": self.t,
            "phi": self.phi,
            "V": self.V,
            "Vratio": self.ratio,
            "blocks": [{"block": block, "count": count} for block, count in self.blocks],
        }


class ScanReport(GeometryObject):
    def __init__(self, max_rel_dev: float, argmax: Tuple[float, float], profile: DensityProfile) -> None:
        pass

    def to_json(self):
        return {"max_rel_dev": self.max_rel_dev, "argmax": list(self.argmax)}


def _profile_row(blocks, lam, phi, t, steps, settings):
    # phi = 0 rides along as the last column and becomes the reference
    batch = np.append(phi, 0.0)
    V = volume_from_blocks(blocks, lam, batch, t, steps, settings)
    return V[:-1], V[-1]


def density_profile(
    alg: MetricSolvableAlgebra,
    t: Sequence[float],
    phi: Sequence[float],
    Z: Optional[np.ndarray] = None,
    steps: int = DEFAULT_SETTINGS.rk_steps,
    processes: int = 1,
    basis: Optional[AdaptedBasis] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> DensityProfile:
    """
    Description: V on the grid t x phi; each t is one task of the grid runner

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        t, phi: grid axes; every t must be at least 0.05 / lambda
        Z (np.ndarray): unit vector of n_lambda
        steps (int): Runge-Kutta steps per integration
        processes (int): worker processes, 1 runs in this process

    Returns:
        DensityProfile
    """
    basis = basis or adapted_basis(alg, Z, settings=settings)
    lam = basis.lam
    t = np.asarray(t, dtype=np.float64)
    phi = np.asarray(phi, dtype=np.float64)
    if t.size == 0 or phi.size == 0:
        raise ValueError("density grid must be nonempty")
    if np.min(t) < 0.05 / lam:
        raise ValueError(f"grid t values must be at least {0.05 / lam:.6g}")

    blocks = block_odes(basis)
    runs = experiment("t", [list(t)])(_profile_row).bind(
        blocks=blocks, lam=lam, phi=phi, steps=steps, settings=settings
    )
    results = runs.run(processes=processes)
    V = np.stack([row for row, _ in results])
    V0 = np.array([ref for _, ref in results])
    return DensityProfile(t, phi, V, V0, lam, tuple(blocks))


def scan_grid(settings: Settings = DEFAULT_SETTINGS, lam: float = 1.0) -> Tuple[np.ndarray, np.ndarray]:
    """Default grid: t evenly in (t0, t1] scaled by 1 / lambda, phi evenly in [phi0, phi1)"""
    t0, t1, nt = settings.scan_t
    p0, p1, nphi = settings.scan_phi
    t = np.linspace(t0, t1, int(nt)) / lam
    phi = np.linspace(p0, p1, int(nphi), endpoint=False)
    return t, phi


def phi_independence_scan(
    alg: MetricSolvableAlgebra,
    Z: Optional[np.ndarray] = None,
    grid: Optional[Tuple[Sequence[float], Sequence[float]]] = None,
    steps: int = DEFAULT_SETTINGS.scan_steps,
    processes: int = 1,
    basis: Optional[AdaptedBasis] = None,
    settings: Settings = DEFAULT_SETTINGS,
) -> ScanReport:
    """
    Description: max over the grid of |V(t, phi) / V(t, 0) - 1|

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        Z (np.ndarray): unit vector of n_lambda
        grid: (t values, phi values); settings.scan_t x settings.scan_phi when omitted
        steps (int): Runge-Kutta steps per integration
        processes (int): worker processes

    Returns:
        ScanReport with the deviation and its (t, phi)
    """
    basis = basis or adapted_basis(alg, Z, settings=settings)
    t, phi = grid if grid is not None else scan_grid(settings, basis.lam)
    profile = density_profile(alg, t, phi, steps=steps, processes=processes, basis=basis, settings=settings)
    deviation = profile.deviation
    i, j = np.unravel_index(np.argmax(deviation), deviation.shape)
    report = ScanReport(float(deviation[i, j]), (float(profile.t[i]), float(profile.phi[j])), profile)
    logger.info("phi-independence: max deviation %.3e at t=%.6g phi=%.6g", report.max_rel_dev, *report.argmax)
    return report


def small_t_slope(alg: MetricSolvableAlgebra, phi: float = 0.4, steps: int = 256, settings: Settings = DEFAULT_SETTINGS) -> float:
    """Least-squares slope of log V against log t on [1e-3, 1e-2]; close to dim g - 1"""
    basis = adapted_basis(alg, settings=settings)
    blocks = block_odes(basis)
    t = np.geomspace(1e-3, 1e-2, 6)
    logV = [np.log(volume_from_blocks(blocks, basis.lam, phi, s, steps, settings)[0]) for s in t]
    slope, _ = np.polyfit(np.log(t), logV, 1)
    return float(slope)

