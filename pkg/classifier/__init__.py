from classifier.battery import classify
from classifier.battery import run_check
from classifier.checks import BATTERY
from classifier.checks import check_band
from classifier.checks import check_eigenvalue_pairing
from classifier.checks import check_half_band_clifford
from classifier.checks import check_heber_span
from classifier.checks import check_ledger
from classifier.checks import check_nonpositivity
from classifier.checks import check_phi_independence
from classifier.checks import check_thirds_exclusion
from classifier.core import CheckResult
from classifier.core import ConstraintReport
from classifier.core import Evidence

__all__ = [
    "BATTERY",
    "CheckResult",
    "ConstraintReport",
    "Evidence",
    "check_band",
    "check_eigenvalue_pairing",
    "check_half_band_clifford",
    "check_heber_span",
    "check_ledger",
    "check_nonpositivity",
    "check_phi_independence",
    "check_thirds_exclusion",
    "classify",
    "run_check",
]
