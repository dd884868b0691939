from series.biseries import BiSeries
from series.biseries import geodesic_series
from series.coth import CothCombo
from series.coth import coth_decompose
from series.coth import phi2_hat
from series.ode import OdeSeries
from series.ode import ode_series
from series.ode import series_for
from series.polyc import PolyC
from series.polyc import TrigPoly
from series.volume import Sum0Report
from series.volume import ThirdsExpansion
from series.volume import VolumeTaylor
from series.volume import sum0_constraints
from series.volume import thirds_expansion
from series.volume import volume_series
from series.volume import volume_taylor

__all__ = [
    "BiSeries",
    "CothCombo",
    "OdeSeries",
    "PolyC",
    "Sum0Report",
    "ThirdsExpansion",
    "TrigPoly",
    "VolumeTaylor",
    "coth_decompose",
    "geodesic_series",
    "ode_series",
    "phi2_hat",
    "series_for",
    "sum0_constraints",
    "thirds_expansion",
    "volume_series",
    "volume_taylor",
]
