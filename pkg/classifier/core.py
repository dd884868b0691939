"""Check records, the verdict report and the lazily computed evidence they share."""
import logging
from fractions import Fraction
from functools import cached_property
from typing import Dict
from typing import Optional
from typing import Tuple

from algebras.core import MetricSolvableAlgebra
from algebras.jfamily import AdaptedBasis
from algebras.jfamily import JOperatorFamily
from algebras.jfamily import j_family
from algebras.spectral import SpectralData
from algebras.spectral import spectral_decompose
from config import DEFAULT_SETTINGS
from config import Settings
from core import GeometryObject
from core import InexactBlockData
from curvature.core import CurvatureOracle
from curvature.ledger import NonpositivityReport
from curvature.ledger import nonpositivity_scan

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"

FLAT = "Flat"
REAL_HYPERBOLIC = "RealHyperbolic"
DAMEK_RICCI = "DamekRicci"
NOT_HARMONIC = "NotHarmonic"
INCONCLUSIVE = "Inconclusive"

GATE = "nonpositivity"

EXIT_CODES = {FLAT: 0, REAL_HYPERBOLIC: 0, DAMEK_RICCI: 0, NOT_HARMONIC: 2, INCONCLUSIVE: 3}


class CheckResult(GeometryObject):
    def __init__(self, check: str, status: str, witness: Optional[Dict] = None, note: str = "") -> None:
        """
        Args:
            check (str): check name
            status (str): pass, fail or inapplicable
            witness (dict): the quantities the status was decided on
            note (str): one line for humans
        """
        if status not in (PASS, FAIL, INAPPLICABLE):
            self.throw(ValueError, f"unknown status `{status}`")

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self):
        out = {"name": self.check, "status": self.status, "witness": self.witness or {}}
        if self.note:
            out["note"] = self.note
        return out


class ConstraintReport(GeometryObject):
    def __init__(self, verdict: str, checks: Tuple[CheckResult, ...], note: str = "") -> None:
        pass

    @property
    def first_failure(self) -> Optional[CheckResult]:
        """First failing check of the battery; the curvature gate is reported but never the witness"""
        return next((check for check in self.checks if check.failed and check.check != GATE), None)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    def status(self, name: str) -> Optional[str]:
        return next((check.status for check in self.checks if check.check == name), None)

    def check(self, name: str) -> Optional[CheckResult]:
        return next((check for check in self.checks if check.check == name), None)

    def to_json(self):
        first = self.first_failure
        out = {
            "verdict": self.verdict,
            "first_failure": first.check if first is not None else None,
            "checks": list(self.checks),
        }
        if self.note:
            out["note"] = self.note
        return out


class Evidence(GeometryObject):
    """Curvature, spectral and block data of one algebra, computed on first use"""

    def __init__(self, alg: MetricSolvableAlgebra, settings: Settings = DEFAULT_SETTINGS) -> None:
        pass

    @cached_property
    def oracle(self) -> CurvatureOracle:
        return CurvatureOracle(self.alg, self.settings)

    @cached_property
    def nonpositivity(self) -> NonpositivityReport:
        return nonpositivity_scan(self.alg, self.oracle, self.settings)

    @cached_property
    def spectral(self) -> SpectralData:
        return spectral_decompose(self.alg, self.settings)

    @cached_property
    def family(self) -> JOperatorFamily:
        return j_family(self.alg, self.spectral, self.settings)

    @cached_property
    def basis(self) -> AdaptedBasis:
        return self.family.bases[0]

    @cached_property
    def ratios(self) -> Tuple:
        """alpha / lambda, exact when every ratio is recognizably rational"""
        exact = self.spectral.exact_ratios
        return exact if exact is not None else self.spectral.ratios

    @property
    def exact(self) -> bool:
        return self.spectral.exact_ratios is not None and self.block_data[1]

    @cached_property
    def block_data(self):
        """(normalized block data, exact flag); squares for a and b"""
        try:
            return self.basis.exact_data(self.settings), True
        except InexactBlockData:
            lam = self.basis.lam
            data = {
                "x": [blk.lam_j / lam for blk in self.basis.x_blocks],
                "y": [(blk.a / lam) ** 2 for blk in self.basis.y_blocks],
                "v": [(blk.lam_l / lam, (blk.b / lam) ** 2) for blk in self.basis.v_blocks],
            }
            return data, False

    def multiplicity(self, ratio) -> int:
        for r, mult in zip(self.ratios, self.spectral.multiplicities):
            if self.same(r, ratio):
                return mult
        return 0

    def contains(self, ratio) -> bool:
        return self.multiplicity(ratio) > 0

    def same(self, x, y) -> bool:
        if isinstance(x, Fraction) and isinstance(y, (int, Fraction)):
            return x == y
        return abs(float(x) - float(y)) <= self.settings.pairing_tol * 10
