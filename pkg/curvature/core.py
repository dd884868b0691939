"""Levi-Civita connection and curvature of a left-invariant metric.

Sign convention: R(X, Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_[X,Y] Z, so the sectional
numerator R(X, Y, Y, X) = <R(X, Y)Y, X> is negative on hyperbolic planes.
"""
import logging
from functools import cached_property
from typing import Tuple

import numpy as np

from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject

logger = logging.getLogger(__name__)


class ConnectionTable(GeometryObject):
    def __init__(self, gamma: np.ndarray, structure_constants: np.ndarray) -> None:
        """
        Args:
            gamma (np.ndarray): gamma[i, j, k] = <∇_{e_i} e_j, e_k>
            structure_constants (np.ndarray): c[i, j, k] of the algebra
        """
        pass

    def covariant(self, V: np.ndarray, W: np.ndarray) -> np.ndarray:
        """∇_V W for left-invariant V, W"""
        return np.einsum("i,j,ijk->k", V, W, self.gamma)

    def compatibility_defect(self) -> float:
        return float(np.max(np.abs(self.gamma + self.gamma.transpose(0, 2, 1))))

    def torsion_defect(self) -> float:
        torsion = self.gamma - self.gamma.transpose(1, 0, 2) - self.structure_constants
        return float(np.max(np.abs(torsion)))


def connection(alg: MetricSolvableAlgebra) -> ConnectionTable:
    """
    Description: Koszul formula for an orthonormal left-invariant frame,
        <∇_i e_j, e_k> = 1/2 (c[i, j, k] - c[j, k, i] + c[k, i, j])

    Args:
        alg (MetricSolvableAlgebra): the algebra

    Returns:
        ConnectionTable
    """
    c = alg.c
    gamma = 0.5 * (c - c.transpose(2, 0, 1) + c.transpose(1, 2, 0))
    return ConnectionTable(gamma, c)


class CurvatureOracle(GeometryObject):
    def __init__(self, alg: MetricSolvableAlgebra, settings: Settings = DEFAULT_SETTINGS) -> None:
        self.dim = alg.dim

    @cached_property
    def table(self) -> ConnectionTable:
        return connection(self.alg)

    @cached_property
    def tensor(self) -> np.ndarray:
        """Rt[i, j, k, l] = <R(e_i, e_j) e_k, e_l>"""
        G = self.table.gamma
        c = self.alg.c
        Rt = (
            np.einsum("jkm,iml->ijkl", G, G)
            - np.einsum("ikm,jml->ijkl", G, G)
            - np.einsum("ijm,mkl->ijkl", c, G)
        )
        Rt.flags.writeable = False
        return Rt

    def _u(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        # U(X, Y)_k = 1/2 (<X, [e_k, Y]> + <Y, [e_k, X]>), batched over the leading axis
        c = self.alg.c
        return 0.5 * (np.einsum("kjm,...j,...m->...k", c, Y, X) + np.einsum("kjm,...j,...m->...k", c, X, Y))

    def _bracket(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return np.einsum("...i,...j,ijk->...k", X, Y, self.alg.c)

    def sectional_numerators(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """R(X, Y, Y, X) for batches of vectors (..., n)"""
        XY = self._bracket(X, Y)
        U = self._u(X, Y)
        value = (
            np.sum(U * U, axis=-1)
            - np.sum(self._u(X, X) * self._u(Y, Y), axis=-1)
            - 0.75 * np.sum(XY * XY, axis=-1)
            - 0.5 * np.sum(self._bracket(X, XY) * Y, axis=-1)
            - 0.5 * np.sum(self._bracket(Y, -XY) * X, axis=-1)
        )
        return value

    def sectional_numerator(self, X: np.ndarray, Y: np.ndarray) -> float:
        return float(self.sectional_numerators(np.asarray(X, dtype=np.float64), np.asarray(Y, dtype=np.float64)))

    def sectional_curvatures(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        gram = np.sum(X * X, axis=-1) * np.sum(Y * Y, axis=-1) - np.sum(X * Y, axis=-1) ** 2
        return self.sectional_numerators(X, Y) / gram

    def jacobi_operator(self, X: np.ndarray) -> np.ndarray:
        """
        Description: matrix of R_X = R(., X)X

        Args:
            X (np.ndarray): unit vector

        Returns:
            np.ndarray: symmetric (n, n) matrix with R_X X = 0
        """
        X = np.asarray(X, dtype=np.float64)
        if abs(np.linalg.norm(X) - 1.0) > 1e-9:
            self.throw(ValueError, f"jacobi_operator expects a unit vector, got norm {np.linalg.norm(X):.6g}")
        RX = np.einsum("ijkl,j,k->li", self.tensor, X, X)
        return 0.5 * (RX + RX.T)

    def trace_jacobi(self, X: np.ndarray) -> float:
        return float(np.einsum("ijki,j,k->", self.tensor, X, X))

    def trace_jacobi_square(self, X: np.ndarray) -> float:
        RX = np.einsum("ijkl,j,k->li", self.tensor, X, X)
        return float(np.sum(RX * RX.T))

    @cached_property
    def ricci(self) -> np.ndarray:
        Ric = np.einsum("ajka->jk", self.tensor)
        Ric.flags.writeable = False
        return Ric

    @property
    def einstein_constant(self) -> float:
        """C = Tr R_A"""
        return float(self.ricci[0, 0])

    @property
    def ledger_constant(self) -> float:
        """H = Tr R_A^2"""
        return self.trace_jacobi_square(self.alg.basis_vector(0))

    def is_flat(self) -> bool:
        return bool(np.max(np.abs(self.tensor), initial=0.0) <= self.settings.curvature_tol)

    def basis_planes(self) -> Tuple[np.ndarray, np.ndarray]:
        i, j = np.triu_indices(self.dim, k=1)
        eye = np.eye(self.dim)
        return eye[i], eye[j]
