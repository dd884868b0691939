from curvature.core import ConnectionTable
from curvature.core import CurvatureOracle
from curvature.core import connection
from curvature.ledger import LedgerReport
from curvature.ledger import NonpositivityReport
from curvature.ledger import ledger_check
from curvature.ledger import ledger_sample
from curvature.ledger import nonpositivity_scan
from curvature.ledger import quartic_residual

__all__ = [
    "ConnectionTable",
    "CurvatureOracle",
    "LedgerReport",
    "NonpositivityReport",
    "connection",
    "ledger_check",
    "ledger_sample",
    "nonpositivity_scan",
    "quartic_residual",
]
