from geodesics.core import GeodesicState
from geodesics.core import denominator
from geodesics.core import geodesic_samples
from geodesics.core import geodesic_state
from geodesics.core import velocity
from geodesics.frame import adapted_basis
from geodesics.frame import default_z
from geodesics.frame import restricted_jacobi
from geodesics.frame import restricted_jacobi_matrix

__all__ = [
    "GeodesicState",
    "adapted_basis",
    "default_z",
    "denominator",
    "geodesic_samples",
    "geodesic_state",
    "restricted_jacobi",
    "restricted_jacobi_matrix",
    "velocity",
]
