import logging
from fractions import Fraction
from typing import List
from typing import Optional
from typing import Sequence

import numpy as np

from algebras.core import AlgebraSpec
from algebras.core import MetricSolvableAlgebra
from config import DEFAULT_SETTINGS
from config import Settings
from core import AntisymmetryViolation
from utils.numbers import is_exact
from utils.numbers import parse_number

logger = logging.getLogger(__name__)


class RawSpec(AlgebraSpec):
    """Structure constants listed entry by entry; the antisymmetric partner is filled in"""

    kind = "raw"

    def __init__(
        self,
        dim: int,
        brackets: Sequence[Sequence] = (),
        a_index: int = 0,
        label: str = "",
    ) -> None:
        """
        Args:
            dim (int): dimension of g
            brackets: rows [i, j, k, value] meaning c[i][j][k] = value
            a_index (int): basis index of A; moved to position 0
            label (str): carried into reports
        """
        if not 0 <= a_index < dim:
            self.throw(ValueError, f"a_index {a_index} outside 0..{dim - 1}")

    def _order(self) -> List[int]:
        # position p of the built algebra holds input index order[p]
        rest = [i for i in range(self.dim) if i != self.a_index]
        return [self.a_index] + rest

    def build(self, settings: Settings = DEFAULT_SETTINGS) -> MetricSolvableAlgebra:
        order = self._order()
        position = {index: p for p, index in enumerate(order)}
        values = {}
        exact = True

        for row in self.brackets:
            i, j, k = (int(x) for x in row[:3])
            if not all(0 <= x < self.dim for x in (i, j, k)):
                self.throw(ValueError, f"bracket index out of range in {list(row)}")
            value = parse_number(row[3])
            exact = exact and is_exact(value)
            if i == j and value != 0:
                self.throw(AntisymmetryViolation, f"[e_{i}, e_{i}] has nonzero component {value} on e_{k}")
            for key, val in (((i, j, k), value), ((j, i, k), -value)):
                previous: Optional[object] = values.get(key)
                if previous is not None and abs(float(previous) - float(val)) > settings.algebra_tol:
                    self.throw(AntisymmetryViolation, f"c[{key[0]}][{key[1]}][{key[2]}] given as both {previous} and {val}")
                values[key] = val

        c = np.zeros((self.dim,) * 3)
        rational = np.empty((self.dim,) * 3, dtype=object) if exact else None
        if rational is not None:
            rational[...] = Fraction(0)
        for (i, j, k), val in values.items():
            key = (position[i], position[j], position[k])
            c[key] = float(val)
            if rational is not None:
                rational[key] = Fraction(val)

        logger.debug("raw spec: %d nonzero constants, A at input index %d", len(values), self.a_index)
        return MetricSolvableAlgebra(c, rational, label=self.label or "raw", settings=settings)
