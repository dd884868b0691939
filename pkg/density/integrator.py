"""Fixed-step classical Runge-Kutta for the block systems."""
import logging
from typing import Union

import numpy as np

from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject
from core import StepCountTooSmall
from density.core import BlockODE
from geodesics.core import velocity

logger = logging.getLogger(__name__)


class BlockSolution(GeometryObject):
    def __init__(self, block: BlockODE, phi: np.ndarray, t: np.ndarray, pos: np.ndarray, vel: np.ndarray) -> None:
        """
        Args:
            block (BlockODE): the integrated system
            phi (np.ndarray): (P,) angles
            t (np.ndarray): (steps + 1,) time grid
            pos, vel (np.ndarray): (steps + 1, P, d, d) solution and derivative
        """
        pass

    @property
    def final(self) -> np.ndarray:
        return self.pos[-1]

    def contribution(self) -> np.ndarray:
        """(steps + 1, P) volume factor along the grid"""
        return np.stack([self.block.contribution(p) for p in self.pos])


def integrate_block(
    block: BlockODE,
    phi: Union[float, np.ndarray],
    t_max: float,
    steps: int = DEFAULT_SETTINGS.rk_steps,
    settings: Settings = DEFAULT_SETTINGS,
) -> BlockSolution:
    """
    Description: classical fourth-order Runge-Kutta on [0, t_max] for pos(0) = 0, pos'(0) = id,
    with q and Phi evaluated in closed form at every stage

    Args:
        block (BlockODE): the system
        phi (float | np.ndarray): one angle or a batch of angles
        t_max (float): end of the interval, positive
        steps (int): number of steps, at least settings.min_rk_steps

    Returns:
        BlockSolution

    Raises:
        StepCountTooSmall
    """
    if steps < settings.min_rk_steps:
        raise StepCountTooSmall(f"{steps} steps requested, at least {settings.min_rk_steps} needed")
    if t_max <= 0:
        raise ValueError(f"t_max must be positive, got {t_max}")

    phi = np.atleast_1d(np.asarray(phi, dtype=np.float64))
    d = block.size
    lam = block.lam
    h = t_max / steps
    t = np.linspace(0.0, t_max, steps + 1)
    phis = phi[:, None, None]

    def f(s, pos, vel):
        q, Phi = velocity(lam, phis, s)
        return vel, block.accel(q, Phi, pos, vel)

    pos = np.zeros((len(phi), d, d))
    vel = np.broadcast_to(np.eye(d), (len(phi), d, d)).copy()
    positions = np.empty((steps + 1, len(phi), d, d))
    velocities = np.empty_like(positions)
    positions[0], velocities[0] = pos, vel

    for i in range(steps):
        s = t[i]
        k1p, k1v = f(s, pos, vel)
        k2p, k2v = f(s + 0.5 * h, pos + 0.5 * h * k1p, vel + 0.5 * h * k1v)
        k3p, k3v = f(s + 0.5 * h, pos + 0.5 * h * k2p, vel + 0.5 * h * k2v)
        k4p, k4v = f(s + h, pos + h * k3p, vel + h * k3v)
        pos = pos + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        vel = vel + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
        positions[i + 1], velocities[i + 1] = pos, vel

    logger.debug("integrated %s over [0, %.6g] in %d steps for %d angles", block.kind, t_max, steps, len(phi))
    return BlockSolution(block, phi, t, positions, velocities)


def convergence_order(block: BlockODE, phi: float, t_max: float = 1.0, steps: int = 64, settings: Settings = DEFAULT_SETTINGS) -> float:
    """Observed order from three step-halving runs: log2 |y_h - y_{h/2}| / |y_{h/2} - y_{h/4}|"""
    finals = [integrate_block(block, phi, t_max, steps * 2 ** i, settings).final[0] for i in range(3)]
    coarse = np.max(np.abs(finals[0] - finals[1]))
    fine = np.max(np.abs(finals[1] - finals[2]))
    return float(np.log2(coarse / fine))
