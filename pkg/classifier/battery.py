"""Decision tree over the constraint battery."""
import logging
from functools import partial
from typing import List

import numpy as np

from algebras.core import MetricSolvableAlgebra
from classifier.checks import BATTERY
from classifier.checks import HALF
from classifier.checks import check_nonpositivity
from classifier.checks import check_phi_independence
from classifier.core import DAMEK_RICCI
from classifier.core import FLAT
from classifier.core import INCONCLUSIVE
from classifier.core import NOT_HARMONIC
from classifier.core import PASS
from classifier.core import REAL_HYPERBOLIC
from classifier.core import CheckResult
from classifier.core import ConstraintReport
from classifier.core import Evidence
from config import DEFAULT_SETTINGS
from config import Settings
from core import SolvHarmError
from utils.experiment import experiment

logger = logging.getLogger(__name__)


def _battery(processes: int):
    return [
        (name, partial(check_phi_independence, processes=processes) if name == "phi_independence" else check)
        for name, check in BATTERY
    ]


def run_check(name: str, alg: MetricSolvableAlgebra, settings: Settings = DEFAULT_SETTINGS) -> CheckResult:
    """One check on fresh evidence; the unit of work of the parallel mode"""
    check = dict(BATTERY)[name]
    return check(Evidence(alg, settings))


def _verdict(evidence: Evidence, checks: List[CheckResult]) -> str:
    if any(check.failed for check in checks):
        return NOT_HARMONIC
    ratios = evidence.ratios
    if all(evidence.same(r, 1) for r in ratios):
        report = evidence.nonpositivity
        if report.max_curvature - report.min_curvature <= evidence.settings.curvature_tol * 10 * evidence.spectral.lam ** 2:
            return REAL_HYPERBOLIC
        return INCONCLUSIVE
    if all(evidence.same(r, 1) or evidence.same(r, HALF) for r in ratios):
        clifford = next(check for check in checks if check.check == "half_band_clifford")
        if clifford.status == PASS:
            return DAMEK_RICCI
    return INCONCLUSIVE


def classify(
    alg: MetricSolvableAlgebra,
    settings: Settings = DEFAULT_SETTINGS,
    processes: int = 1,
    parallel: bool = False,
) -> ConstraintReport:
    """
    Description: run the battery in order and decide Flat, RealHyperbolic, DamekRicci,
    NotHarmonic (with the first failing check) or Inconclusive

    Args:
        alg (MetricSolvableAlgebra): valid algebra
        settings (Settings): tolerances, scan seed and grid
        processes (int): worker processes for the phi-scan, or for the checks in parallel mode
        parallel (bool): evaluate the checks as independent tasks; statuses are identical

    Returns:
        ConstraintReport; always produced
    """
    evidence = Evidence(alg, settings)
    if alg.is_flat_model or evidence.oracle.is_flat():
        report = ConstraintReport(FLAT, (CheckResult("flat", PASS, {"max_curvature": float(np.max(np.abs(evidence.oracle.tensor), initial=0.0))}),))
        logger.info("verdict for %s: %s", alg.label or "algebra", report.verdict)
        return report

    gate = check_nonpositivity(evidence)
    if gate.failed:
        logger.warning("positive sectional curvature on %s; battery not run", alg.label or "algebra")
        return ConstraintReport(
            INCONCLUSIVE,
            (gate,),
            note=f"NonpositivityFail: sectional curvature {evidence.nonpositivity.max_curvature:.6g} > 0",
        )

    try:
        if parallel and processes > 1:
            names = [name for name, _ in BATTERY]
            runs = experiment("name", [names])(run_check).bind(alg=alg, settings=settings)
            checks = runs.run(processes=processes)
        else:
            checks = [check(evidence) for _, check in _battery(processes)]
    except SolvHarmError as err:
        logger.warning("battery aborted: %s", err)
        return ConstraintReport(INCONCLUSIVE, (gate,), note=f"{type(err).__name__}: {err}")

    for check in checks:
        logger.debug("check %s: %s", check.check, check.status)
    report = ConstraintReport(_verdict(evidence, checks), (gate, *checks))
    first = report.first_failure
    logger.info(
        "verdict for %s: %s%s", alg.label or "algebra", report.verdict, f" ({first.check})" if first is not None else ""
    )
    return report
