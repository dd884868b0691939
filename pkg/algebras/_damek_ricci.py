import logging
from fractions import Fraction
from typing import Optional

import numpy as np

from algebras.clifford import clifford_generate
from algebras.core import AlgebraSpec
from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import NoCliffordModule
from utils.numbers import is_exact
from utils.numbers import parse_number
from utils.random import Random

logger = logging.getLogger(__name__)


def build_damek_ricci(
    dim_z: int,
    dim_u: int,
    lam=1,
    clifford_seed: Optional[int] = None,
    settings: Settings = DEFAULT_SETTINGS,
    label: str = "",
) -> MetricSolvableAlgebra:
    """
    Description: g = RA + u + z with [A, U] = lam/2 U, [A, Z] = lam Z and
    <[U, V], Z> = <J_Z U, V>, where J_1..J_{dim_z} form a Clifford module on u
    with J_i J_j + J_j J_i = -2 delta_ij lam^2 id

    Args:
        dim_z (int): dimension of the center z, at least 1
        dim_u (int): dimension of u; 0 gives real hyperbolic space
        lam: top eigenvalue of ad_A; number or "p/q"
        clifford_seed (int): when given, the module is rotated by a seeded orthogonal map of u
        settings (Settings): tolerances

    Returns:
        MetricSolvableAlgebra with basis ordered A, u, z

    Raises:
        NoCliffordModule
    """
    lam = parse_number(lam)
    dim_z, dim_u = int(dim_z), int(dim_u)
    if dim_z < 1:
        raise NoCliffordModule(dim_z, dim_u, "the center must be at least one dimensional")
    if float(lam) <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")

    if dim_u == 0:
        gens = [np.zeros((0, 0)) for _ in range(dim_z)]
    else:
        gens = clifford_generate(dim_z, dim_u, float(lam))
    if clifford_seed is not None and dim_u > 0:
        rotation = Random(clifford_seed).orthogonal(dim_u)
        gens = [rotation @ J @ rotation.T for J in gens]

    n = 1 + dim_u + dim_z
    u = range(1, 1 + dim_u)
    z = range(1 + dim_u, n)
    c = np.zeros((n, n, n))
    for i in u:
        c[0, i, i] = float(lam) / 2
        c[i, 0, i] = -float(lam) / 2
    for r in z:
        c[0, r, r] = float(lam)
        c[r, 0, r] = -float(lam)
    for r, J in zip(z, gens):
        # c[u_a][u_b][z_r] = <J_r u_a, u_b>
        c[1 : 1 + dim_u, 1 : 1 + dim_u, r] = J.T

    rational = None
    if is_exact(lam) and clifford_seed is None:
        rational = np.empty(c.shape, dtype=object)
        rational[...] = Fraction(0)
        # generator entries are 0 or +-lam, every other constant is lam or lam/2
        for index in zip(*np.nonzero(c)):
            rational[index] = Fraction(lam) * Fraction(round(2 * c[index] / float(lam)), 2)

    logger.info("Damek-Ricci algebra: dim_z=%d dim_u=%d lambda=%s", dim_z, dim_u, lam)
    return MetricSolvableAlgebra(c, rational, label=label or f"damek_ricci({dim_z},{dim_u})", settings=settings)


class DamekRicciSpec(AlgebraSpec):
    kind = "damek_ricci"

    def __init__(self, dim_z: int, dim_u: int, lam=1, clifford_seed: Optional[int] = None, label: str = "") -> None:
        pass

    def build(self, settings: Settings = DEFAULT_SETTINGS) -> MetricSolvableAlgebra:
        return build_damek_ricci(self.dim_z, self.dim_u, self.lam, self.clifford_seed, settings, self.label)
