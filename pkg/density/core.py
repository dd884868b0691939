"""Block Jacobi systems along the geodesics of Span(A, Z).

Every block solves pos'' = accel(q, Phi, pos, pos') with pos(0) = 0 and
pos'(0) = identity, as a d x d matrix system (d = 1 or 2). States carry a leading
batch axis over phi so one integration serves a whole row of a grid.
"""
import inspect
import logging
from typing import Tuple

import numpy as np

from core import GeometryObject

BlockRegistry = {}

logger = logging.getLogger(__name__)


def make_block(kind, *args, **kwargs):
    if kind not in BlockRegistry:
        raise ValueError(f"Block `{kind}` not found.")
    return BlockRegistry[kind](*args, **kwargs)


class BlockODE(GeometryObject):
    kind = None
    size = 1

    @classmethod
    def __init_subclass__(cls, *args, **kwargs):
        super().__init_subclass__(*args, **kwargs)
        if cls.kind is not None and cls.kind not in BlockRegistry and not inspect.isabstract(cls):
            BlockRegistry[cls.kind] = cls

    def accel(self, q: np.ndarray, Phi: np.ndarray, pos: np.ndarray, vel: np.ndarray) -> np.ndarray:
        """
        Args:
            q, Phi (np.ndarray): (P, 1, 1) velocity components
            pos, vel (np.ndarray): (P, d, d)

        Returns:
            np.ndarray: (P, d, d) second derivative
        """
        self.throw(NotImplementedError, "accel not implemented")

    def contribution(self, pos: np.ndarray) -> np.ndarray:
        """Factor of the volume density from the block solution (P, d, d) -> (P,)"""
        self.throw(NotImplementedError, "contribution not implemented")

    def at_zero(self, t) -> np.ndarray:
        """Closed-form contribution along the abelian geodesic phi = 0"""
        self.throw(NotImplementedError, "at_zero not implemented")

    @property
    def parameters(self) -> Tuple[float, ...]:
        return tuple(float(val) for val in list(self.arguments_.arguments.values())[1:])

    def key(self) -> Tuple:
        """Hashable identity; blocks with equal keys integrate to the same solution"""
        return (self.kind,) + tuple(round(p, 12) for p in self.parameters)

    def to_json(self):
        doc = {"kind": self.kind}
        for key, val in list(self.arguments_.arguments.items())[1:]:
            doc[key] = val
        return doc
