"""Real Clifford modules: anticommuting skew operators J_1..J_r on R^d.

The generators satisfy J_i J_j + J_j J_i = -2 delta_ij lambda^2 id. They are
built from Kronecker products of the real 2x2 matrices

    eps = [[0, -1], [1, 0]]   (skew, squares to -1)
    sx  = [[0, 1], [1, 0]]    (symmetric, squares to +1)
    sz  = [[1, 0], [0, -1]]   (symmetric, squares to +1)

which pairwise anticommute. A Kronecker product of such factors is skew when it
has an odd number of `eps` factors, and two products anticommute when the number
of slots holding distinct non-identity factors is odd.
"""
import logging
from functools import reduce
from typing import List

import numpy as np

from core import NoCliffordModule

logger = logging.getLogger(__name__)

I2 = np.eye(2)
EPS = np.array([[0.0, -1.0], [1.0, 0.0]])
SX = np.array([[0.0, 1.0], [1.0, 0.0]])
SZ = np.array([[1.0, 0.0], [0.0, -1.0]])

# minimal real module dimension for r = 0..8 generators; m(r + 8) = 16 m(r)
MINIMAL_DIMENSION = (1, 2, 4, 4, 8, 8, 8, 8, 16)


def kron(*factors: np.ndarray) -> np.ndarray:
    return reduce(np.kron, factors)


def minimal_dimension(dim_z: int) -> int:
    periods, rest = divmod(int(dim_z), 8)
    return MINIMAL_DIMENSION[rest] * 16 ** periods


def _quaternion_units():
    """Left and right multiplication by i, j, k on R^4; lefts commute with rights"""
    left = [kron(EPS, I2), kron(SX, EPS), kron(SZ, EPS)]
    right = [kron(I2, EPS), kron(EPS, SX), kron(EPS, SZ)]
    return left, right


def _seven_on_eight() -> List[np.ndarray]:
    left, right = _quaternion_units()
    return [kron(SZ, L) for L in left] + [kron(SX, R) for R in right] + [kron(EPS, np.eye(4))]


def _extend_by_one(gens: List[np.ndarray]) -> List[np.ndarray]:
    """r generators on R^m -> r + 1 generators on R^2m"""
    m = gens[0].shape[0]
    return [kron(SZ, J) for J in gens] + [kron(EPS, np.eye(m))]


def _minimal_generators(dim_z: int) -> List[np.ndarray]:
    """Unit-normalized generators on the minimal module"""
    if dim_z == 0:
        return []
    if dim_z == 1:
        return [EPS.copy()]
    if dim_z <= 3:
        return _quaternion_units()[0][:dim_z]
    if dim_z <= 7:
        return _seven_on_eight()[:dim_z]
    if dim_z == 8:
        return _extend_by_one(_seven_on_eight())

    # periodicity: Cl(r + 8) from Cl(r) and Cl(8) through the volume element of Cl(8)
    eight = _extend_by_one(_seven_on_eight())
    volume = reduce(np.matmul, eight)
    inner = _minimal_generators(dim_z - 8)
    m = minimal_dimension(dim_z - 8)
    if not inner:
        return [kron(G, np.eye(m)) for G in eight]
    return [kron(volume, J) for J in inner] + [kron(G, np.eye(m)) for G in eight]


def clifford_generate(dim_z: int, dim_u: int, lam: float = 1.0) -> List[np.ndarray]:
    """
    Description: skew operators J_1..J_{dim_z} on R^{dim_u} with
        J_i J_j + J_j J_i = -2 delta_ij lam^2 id

    Args:
        dim_z (int): number of generators
        dim_u (int): module dimension
        lam (float): scale; each J_i squares to -lam^2

    Returns:
        list of (dim_u, dim_u) arrays

    Raises:
        NoCliffordModule: when dim_u is not a positive multiple of the minimal
            module dimension for dim_z generators
    """
    dim_z, dim_u = int(dim_z), int(dim_u)
    if dim_z < 0 or dim_u < 0:
        raise NoCliffordModule(dim_z, dim_u, "dimensions must be nonnegative")
    if dim_z == 0:
        return []
    m = minimal_dimension(dim_z)
    if dim_u == 0 or dim_u % m:
        raise NoCliffordModule(dim_z, dim_u, f"module dimension must be a multiple of {m}")

    copies = dim_u // m
    gens = [float(lam) * kron(np.eye(copies), J) for J in _minimal_generators(dim_z)]
    logger.debug("Clifford module: %d generators on R^%d (%d copies of R^%d)", dim_z, dim_u, copies, m)
    return gens


def anticommutation_defect(gens: List[np.ndarray], lam: float = 1.0) -> float:
    """max over i <= j of |J_i J_j + J_j J_i + 2 delta_ij lam^2 id|"""
    if not gens:
        return 0.0
    d = gens[0].shape[0]
    worst = 0.0
    for i, Ji in enumerate(gens):
        for j in range(i, len(gens)):
            Jj = gens[j]
            target = -2.0 * lam ** 2 * np.eye(d) if i == j else 0.0
            worst = max(worst, float(np.max(np.abs(Ji @ Jj + Jj @ Ji - target))))
    return worst
