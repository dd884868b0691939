"""Numerical tolerances and defaults shared by every package."""
from dataclasses import dataclass
from dataclasses import replace
from typing import Tuple

SCAN_SEED = 0x5EED


@dataclass(frozen=True)
class Settings:
    # algebra identities (antisymmetry, Jacobi, J skew-symmetry)
    algebra_tol: float = 1e-12
    # curvature identities, flat detection, nonpositivity
    curvature_tol: float = 1e-10
    # eigenvalues of D are clustered with this relative tolerance ...
    cluster_rtol: float = 1e-9
    # ... and distinct clusters must be at least this far apart, relative to lambda
    cluster_separation: float = 1e-6
    # J_Z^2 clusters: merged below merge_rtol, rejected between merge_rtol and this
    jsq_separation: float = 1e-8
    jsq_merge_rtol: float = 1e-10
    grading_tol: float = 1e-9
    block_relation_tol: float = 1e-10
    pairing_tol: float = 1e-9
    heber_residual: float = 1e-9
    phi_scan_tol: float = 1e-7
    ledger_tol: float = 1e-9
    # exact block data recovered from floats with this denominator bound
    max_denominator: int = 10 ** 6
    seed: int = SCAN_SEED
    random_planes: int = 10 ** 4
    rk_steps: int = 1024
    min_rk_steps: int = 64
    series_order: int = 12
    max_series_order: int = 16
    # classifier phi-independence grid: t in (t0, t1], phi in [phi0, phi1)
    scan_t: Tuple[float, float, int] = (0.1, 2.0, 8)
    scan_phi: Tuple[float, float, int] = (0.0, 3.141592653589793, 8)
    scan_steps: int = 512

    def with_seed(self, seed):
        return replace(self, seed=int(seed))


DEFAULT_SETTINGS = Settings()
