"""The constraint battery, one function per check, each returning a CheckResult.

All checks work with eigenvalue ratios alpha / lambda. When the ratios and the block
data are recognizably rational the comparisons are exact, otherwise they use the
tolerances of Settings.
"""
import logging
from collections import Counter
from fractions import Fraction
from typing import List
from typing import Tuple

import numpy as np
import scipy.linalg
from sympy import Matrix
from sympy import Rational

from classifier.core import FAIL
from classifier.core import INAPPLICABLE
from classifier.core import PASS
from classifier.core import CheckResult
from classifier.core import Evidence
from core import InexactBlockData
from curvature.ledger import ledger_check
from density.volume import phi_independence_scan
from series.volume import THIRD
from series.volume import THIRDS_B2
from series.volume import thirds_expansion
from series.volume import volume_series

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)


def _exact(*values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def _equal(x, y, tol: float) -> bool:
    if _exact(x, y):
        return x == y
    return abs(float(x) - float(y)) <= tol * max(1.0, abs(float(x)), abs(float(y)))


def check_nonpositivity(evidence: Evidence) -> CheckResult:
    """Gate: the battery presumes nonpositive sectional curvature"""
    report = evidence.nonpositivity
    status = PASS if report.nonpositive else FAIL
    return CheckResult("nonpositivity", status, report.to_json())


def check_band(evidence: Evidence) -> CheckResult:
    """
    Description: every eigenvalue ratio lies in [1/3, 2/3] or equals 1

    Returns:
        CheckResult; the witness is the first ratio outside the band
    """
    tol = evidence.settings.pairing_tol
    for ratio in evidence.ratios:
        if _equal(ratio, 1, tol):
            continue
        if _exact(ratio):
            inside = THIRD <= ratio <= TWO_THIRDS
        else:
            inside = float(THIRD) - tol <= ratio <= float(TWO_THIRDS) + tol
        if not inside:
            return CheckResult("band", FAIL, {"alpha": ratio, "ratios": list(evidence.ratios)})
    return CheckResult("band", PASS, {"ratios": list(evidence.ratios)})


def check_eigenvalue_pairing(evidence: Evidence) -> CheckResult:
    """
    Description: alpha n_alpha = (1 - alpha) n_{1 - alpha} = (1/2) sum b^2 over the mixed blocks
    touching alpha, for alpha != 1/2, 1; and n_{1/2} = 2 sum a^2 (ratios to lambda)

    Returns:
        CheckResult; inapplicable when the spectrum is {lambda}
    """
    ratios = [r for r in evidence.ratios if not evidence.same(r, 1)]
    if not ratios:
        return CheckResult("eigenvalue_pairing", INAPPLICABLE, {"ratios": list(evidence.ratios)})
    data, _ = evidence.block_data
    tol = evidence.settings.pairing_tol
    rows = []
    for alpha in ratios:
        if evidence.same(alpha, HALF):
            lhs = Fraction(evidence.multiplicity(alpha))
            rhs = 2 * sum(data["y"], Fraction(0))
            ok = _equal(lhs, rhs, tol)
            rows.append({"alpha": alpha, "n_alpha": lhs, "two_sum_a2": rhs, "holds": ok})
        else:
            mine = alpha * evidence.multiplicity(alpha)
            partner = (1 - alpha) * evidence.multiplicity(1 - alpha)
            half_b2 = sum((b2 for lam_l, b2 in data["v"] if evidence.same(lam_l, alpha) or evidence.same(1 - lam_l, alpha)), Fraction(0)) / 2
            ok = _equal(mine, partner, tol) and _equal(mine, half_b2, tol)
            rows.append({"alpha": alpha, "alpha_n": mine, "partner": partner, "half_sum_b2": half_b2, "holds": ok})
        if not ok:
            return CheckResult("eigenvalue_pairing", FAIL, {"alpha": alpha, "rows": rows})
    return CheckResult("eigenvalue_pairing", PASS, {"rows": rows})


def _relations(ratios: List, same) -> List[Tuple[int, int, int]]:
    out = []
    for i in range(len(ratios)):
        for j in range(i, len(ratios)):
            for k in range(len(ratios)):
                if same(ratios[i] + ratios[j], ratios[k]):
                    out.append((i, j, k))
    return out


def check_heber_span(evidence: Evidence) -> CheckResult:
    """
    Description: with c = Tr D^2 / Tr D, the vector (n_i (c - alpha_i))_i lies in the span of
    e_i + e_j - e_k over the relations alpha_i + alpha_j = alpha_k; consequently no ratio
    lies in (1/3, 1/2)

    Returns:
        CheckResult with the span residual (0 in exact mode) and any ratio in (1/3, 1/2)
    """
    ratios = list(evidence.ratios)
    mults = list(evidence.spectral.multiplicities)
    N = len(ratios)
    relations = _relations(ratios, evidence.same)
    exact = _exact(*ratios)

    trace = sum((n * a for n, a in zip(mults, ratios)), Fraction(0) if exact else 0.0)
    trace2 = sum((n * a * a for n, a in zip(mults, ratios)), Fraction(0) if exact else 0.0)
    c = trace2 / trace
    target = [n * (c - a) for n, a in zip(mults, ratios)]

    F = []
    for i, j, k in relations:
        row = [0] * N
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        F.append(row)

    if exact:
        target_col = Matrix([[Rational(x.numerator, x.denominator)] for x in target])
        if F:
            span = Matrix(F).T
            member = span.rank() == span.row_join(target_col).rank()
        else:
            member = all(x == 0 for x in target)
        if member:
            residual = 0.0
        else:
            residual = _lstsq_residual(F, target) if F else float(np.linalg.norm([float(x) for x in target]))
    else:
        residual = _lstsq_residual(F, target) if F else float(np.linalg.norm(target))
        member = residual <= evidence.settings.heber_residual

    forbidden = [a for a in ratios if float(THIRD) < float(a) < float(HALF) and not evidence.same(a, THIRD) and not evidence.same(a, HALF)]
    witness = {
        "c": c,
        "vector": target,
        "relations": [list(r) for r in relations],
        "residual": residual,
        "in_span": member,
        "between_third_and_half": forbidden,
    }
    status = PASS if member and not forbidden else FAIL
    return CheckResult("heber_span", status, witness)


def _lstsq_residual(F, target) -> float:
    A = np.array(F, dtype=np.float64).T
    b = np.array([float(x) for x in target])
    coef, *_ = scipy.linalg.lstsq(A, b)
    return float(np.linalg.norm(A @ coef - b))


def check_half_band_clifford(evidence: Evidence) -> CheckResult:
    """
    Description: (a) Tr R_Z^2 = Tr R_A^2 for the basis of n_lambda; and when lambda/2 is an
    eigenvalue: (b) J_Z J_Z^t = lambda^2 on n_{lambda/2}, (c) lambda/3 and 2 lambda/3 are absent,
    (d) Tr R_X^2 = Tr R_A^2 for the basis of n_{lambda/2}

    Returns:
        CheckResult whose witness holds every sub-check and names the first failing one
    """
    settings = evidence.settings
    oracle = evidence.oracle
    spectral = evidence.spectral
    lam = spectral.lam
    H = oracle.ledger_constant
    tol = settings.ledger_tol * max(1.0, H)
    sub = {}

    family = evidence.family
    traces = [oracle.trace_jacobi_square(family.z(r)) for r in range(len(family))]
    dev = max(abs(x - H) for x in traces)
    sub["z_trace"] = {"status": PASS if dev <= tol else FAIL, "H": H, "traces": traces, "deviation": dev}

    if evidence.contains(HALF):
        B = spectral.basis(0.5 * lam)
        eigs = []
        for J in family.operators:
            M = B.T @ J @ J.T @ B
            eigs.extend(scipy.linalg.eigvalsh(0.5 * (M + M.T)))
        dev = max(abs(e - lam ** 2) for e in eigs)
        sub["jjt"] = {
            "status": PASS if dev <= settings.grading_tol * lam ** 2 * 10 else FAIL,
            "eigenvalues": eigs,
            "lambda2": lam ** 2,
        }
        clash = [r for r in (THIRD, TWO_THIRDS) if evidence.contains(r)]
        sub["exclusion"] = {"status": FAIL if clash else PASS, "also_present": clash}
        X = np.vstack([np.zeros((1, B.shape[1])), B])
        traces = [oracle.trace_jacobi_square(x) for x in X.T]
        dev = max(abs(x - H) for x in traces)
        sub["x_trace"] = {"status": PASS if dev <= tol else FAIL, "H": H, "traces": traces, "deviation": dev}
    else:
        for key in ("jjt", "exclusion", "x_trace"):
            sub[key] = {"status": INAPPLICABLE}

    first = next((key for key, val in sub.items() if val["status"] == FAIL), None)
    return CheckResult("half_band_clifford", PASS if first is None else FAIL, {"first": first, **sub})


def _is_thirds_data(evidence: Evidence) -> bool:
    data, exact = evidence.block_data
    if not exact or data["y"]:
        return False
    n23 = evidence.multiplicity(TWO_THIRDS)
    n1 = evidence.multiplicity(1)
    expected = Counter({THIRD: n23, Fraction(1): n1 - 1})
    return Counter(data["x"]) == +expected and data["v"] == [(THIRD, THIRDS_B2)] * n23


def check_thirds_exclusion(evidence: Evidence) -> CheckResult:
    """
    Description: the spectrum {lambda/3, 2 lambda/3, lambda} is impossible; the witness is the
    phi-dependent t^9 coefficient of x det v

    Returns:
        CheckResult; inapplicable for any other spectrum
    """
    ratios = evidence.ratios
    if not (_exact(*ratios) and set(ratios) == {THIRD, TWO_THIRDS, Fraction(1)}):
        return CheckResult("thirds_exclusion", INAPPLICABLE, {"ratios": list(ratios)})
    settings = evidence.settings
    order = max(9, settings.series_order)
    if _is_thirds_data(evidence):
        expansion = thirds_expansion(order, evidence.multiplicity(1), evidence.multiplicity(TWO_THIRDS), settings)
        status = FAIL if expansion.depends_on_phi() else PASS
        return CheckResult("thirds_exclusion", status, {"t9": expansion.t9, "matches_phi0_reference": expansion.matches_reference()})

    try:
        V = volume_series(evidence.basis, order, settings)
    except InexactBlockData:
        return CheckResult("thirds_exclusion", INAPPLICABLE, note="block data are not rational")
    k = next((k for k, x in enumerate(V.coeffs) if not x.is_constant()), None)
    if k is None:
        return CheckResult("thirds_exclusion", PASS, {"order": order})
    return CheckResult("thirds_exclusion", FAIL, {"power": k, "coefficient": V[k]}, note="volume series depends on phi")


def check_phi_independence(evidence: Evidence, processes: int = 1) -> CheckResult:
    """V(t, phi) / V(t, 0) = 1 on the settings grid"""
    settings = evidence.settings
    report = phi_independence_scan(
        evidence.alg, steps=settings.scan_steps, processes=processes, basis=evidence.basis, settings=settings
    )
    status = PASS if report.max_rel_dev <= settings.phi_scan_tol else FAIL
    return CheckResult("phi_independence", status, report.to_json())


def check_ledger(evidence: Evidence) -> CheckResult:
    """Ric = C g and Tr R_X^2 = H |X|^4, sampled and as tensors"""
    report = ledger_check(evidence.alg, evidence.oracle, evidence.settings)
    scale = max(1.0, abs(report.H))
    worst = max(
        report.einstein_residual,
        report.ledger2_residual,
        report.einstein_tensor_residual,
        report.ledger2_tensor_residual,
    )
    status = PASS if worst <= evidence.settings.ledger_tol * scale else FAIL
    return CheckResult("ledger", status, report.to_json())


# proof order; classify runs the nonpositivity gate first and reports it separately
BATTERY = (
    ("band", check_band),
    ("eigenvalue_pairing", check_eigenvalue_pairing),
    ("heber_span", check_heber_span),
    ("half_band_clifford", check_half_band_clifford),
    ("thirds_exclusion", check_thirds_exclusion),
    ("phi_independence", check_phi_independence),
    ("ledger", check_ledger),
)
