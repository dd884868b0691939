import logging
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import List
from typing import Sequence

import numpy as np

from algebras.core import AlgebraSpec
from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import AlgebraSpecError
from utils.numbers import is_exact
from utils.numbers import parse_number

logger = logging.getLogger(__name__)


class SpectralSpec(AlgebraSpec):
    """Two-step algebra given by the eigenvalues of D and the J-operators of n_lambda.

    The nilradical basis lists every eigenvalue with its multiplicity, in document
    order. `j_operators[r]` is the matrix of J_{Z_r} on n for the r-th basis vector
    Z_r of n_lambda, so that [U, V] = sum_r <J_{Z_r} U, V> Z_r.
    """

    kind = "spectral"

    def __init__(
        self,
        entries: Sequence[Dict[str, Any]],
        j_operators: Sequence[Sequence[Sequence[Any]]] = (),
        label: str = "",
    ) -> None:
        pass

    def _alphas(self) -> List:
        alphas = []
        for entry in self.entries:
            alpha = parse_number(entry["alpha"])
            if float(alpha) <= 0:
                self.throw(AlgebraSpecError, f"eigenvalue {alpha} is not positive")
            alphas.extend([alpha] * int(entry["multiplicity"]))
        return alphas

    def build(self, settings: Settings = DEFAULT_SETTINGS) -> MetricSolvableAlgebra:
        alphas = self._alphas()
        m = len(alphas)
        lam = max(alphas, key=float)
        top = [i for i, alpha in enumerate(alphas) if abs(float(alpha) - float(lam)) <= settings.cluster_rtol * float(lam)]
        if len(self.j_operators) != len(top):
            self.throw(
                AlgebraSpecError,
                f"expected {len(top)} j_operators (one per basis vector of n_lambda), got {len(self.j_operators)}",
            )

        n = m + 1
        c = np.zeros((n, n, n))
        exact = all(is_exact(alpha) for alpha in alphas)
        entries = {}
        for i, alpha in enumerate(alphas, start=1):
            entries[(0, i, i)] = alpha
            entries[(i, 0, i)] = -alpha

        for r, matrix in zip(top, self.j_operators):
            if len(matrix) != m or any(len(row) != m for row in matrix):
                self.throw(AlgebraSpecError, f"j_operators entry for Z_{r + 1} must be {m}x{m}")
            J = [[parse_number(x) for x in row] for row in matrix]
            for v in range(m):
                for u in range(m):
                    if float(J[v][u]) != 0.0:
                        # c[u][v][z_r] = <J_r u, v>
                        entries[(u + 1, v + 1, r + 1)] = J[v][u]
                        exact = exact and is_exact(J[v][u])

        rational = None
        if exact:
            rational = np.empty(c.shape, dtype=object)
            rational[...] = Fraction(0)
        for key, val in entries.items():
            c[key] = float(val)
            if rational is not None:
                rational[key] = Fraction(val)

        logger.debug("spectral spec: %d eigenvalues, lambda=%s, %d J-operators", m, lam, len(top))
        return MetricSolvableAlgebra(c, rational, label=self.label or "spectral", settings=settings)
