"""Geodesics through the identity in the plane Span(A, Z).

The unit geodesic leaving at angle phi from A has velocity q A + Phi Z with

    q   = (-sinh lam t + cos phi cosh lam t) / (cosh lam t - cos phi sinh lam t)
    Phi = sin phi / (cosh lam t - cos phi sinh lam t)

The denominator is positive for every real t and phi.
"""
import logging
from typing import Tuple

import numpy as np

from core import GeometryObject

logger = logging.getLogger(__name__)


class GeodesicState(GeometryObject):
    def __init__(self, lam: float, phi: float, t: float, q: float, Phi: float) -> None:
        pass

    def to_json(self):
        return {"t": self.t, "phi": self.phi, "q": self.q, "Phi": self.Phi}


def denominator(lam, phi, t):
    return np.cosh(lam * t) - np.cos(phi) * np.sinh(lam * t)


def velocity(lam, phi, t) -> Tuple[np.ndarray, np.ndarray]:
    """(q, Phi) broadcast over phi and t"""
    den = denominator(lam, phi, t)
    q = (-np.sinh(lam * t) + np.cos(phi) * np.cosh(lam * t)) / den
    Phi = np.sin(phi) / den
    return q, Phi


def geodesic_state(lam: float, phi: float, t: float) -> GeodesicState:
    """
    Description: closed-form (q, Phi) at arclength t on the geodesic of angle phi

    Args:
        lam (float): top eigenvalue, positive
        phi (float): initial angle from A, any real value
        t (float): arclength

    Returns:
        GeodesicState
    """
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    q, Phi = velocity(lam, phi, t)
    return GeodesicState(float(lam), float(phi), float(t), float(q), float(Phi))


def geodesic_samples(lam: float, phi: float, t_max: float, samples: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """t, q, Phi on an even grid of `samples` points in [0, t_max]"""
    if samples < 2:
        raise ValueError("need at least two samples")
    t = np.linspace(0.0, t_max, samples)
    q, Phi = velocity(lam, phi, t)
    logger.debug("sampled geodesic phi=%.6g on [0, %.6g] at %d points", phi, t_max, samples)
    return t, q, Phi
