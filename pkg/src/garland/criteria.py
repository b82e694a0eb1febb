"""Decision procedures: the vanishing criterion, gap propagation, and the property (T) certificate."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .complex import Simplex
from .errors import DegenerateDenominator, InvalidInput
from .spectral import ZERO_TOL, lambda_gap
from .weights import WeightFunction, as_fraction
from .xprime import XPrimeReport, build_xprime, verify_xprime

STRICT_MARGIN = 1e-9
CONSISTENCY_TOL = 1e-8
TIE_TOL = 1e-12

PASS, FAIL, BOUNDARY = "PASS", "FAIL", "BOUNDARY"

ASSUMPTIONS = [
    "X is the quotient-level data of a contractible complex on which the group acts "
    "properly and cocompactly; the group-theoretic conclusions hold only under that action",
    "the reduction of property (T) to a uniform spectral bound for 1-cocycles on X' is "
    "taken as given; it is cited, not re-proved",
    "all cochains are real-valued (trivial representation); twisted coefficients are "
    "covered by the same link spectra but are not computed",
]

CITATIONS = [
    "Garland-type vanishing criterion: if every (k-1)-link gap is >= lam > C_k k/(k+1) then "
    "||delta phi||^2 >= eps ||phi||^2 on k-cocycles with eps = C_{k-1}(k+1)/lam (lam - C_k k/(k+1))",
    "gap propagation: lam(X_tau) >= C_j(-(k-j) C_k + (k-j+1) mu) / (-(k-j-1) C_k + (k-j) mu) "
    "for tau of dimension j-1 when all (k-1)-links containing tau have gap >= mu "
    "(one-step case uses C_j, C_{j+1}; the C_{j+1}, C_{j+2} indexing is not used)",
    "property (T) via the auxiliary 2-complex X': vertex links satisfy A_{X'_sigma} = A_{X_sigma} ⊕ B "
    "with C'_1 = C_k + lam (k-1)/k, so lam(X'_sigma) >= lam > C'_1/2",
]


def classify(diff: float, strict_margin: float = STRICT_MARGIN) -> str:
    if diff > strict_margin:
        return PASS
    if abs(diff) <= strict_margin:
        return BOUNDARY
    return FAIL


def combine(verdicts: Sequence[str]) -> str:
    if verdicts and all(v == PASS for v in verdicts):
        return PASS
    if FAIL in verdicts or not verdicts:
        return FAIL
    return BOUNDARY


@dataclass
class CriterionReport:
    k: int
    threshold: Fraction
    min_gap: float
    argmin_tau: Simplex
    epsilon: float | None
    verdict: str
    gaps: dict[Simplex, float] = field(default_factory=dict, repr=False)
    propagated_bound: float | None = None
    consistent: bool | None = None

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "threshold": str(self.threshold),
            "min_gap": self.min_gap,
            "argmin": list(self.argmin_tau),
            "epsilon": self.epsilon,
            "verdict": self.verdict,
        }
        if self.propagated_bound is not None:
            out["propagated_bound"] = self.propagated_bound
            out["consistent"] = self.consistent
        return out


def vanishing_threshold(C: Sequence[Fraction], k: int) -> Fraction:
    return C[k] * Fraction(k, k + 1)


def epsilon(C: Sequence[Fraction], k: int, lam: float) -> float:
    """Spectral constant eps = C_{k-1}(k+1)/lam * (lam - C_k k/(k+1))."""
    return float(C[k - 1]) * (k + 1) / lam * (lam - float(vanishing_threshold(C, k)))


def check_vanishing(
    W: WeightFunction,
    k: int,
    strict_margin: float = STRICT_MARGIN,
    zero_tol: float = ZERO_TOL,
) -> CriterionReport:
    X = W.complex
    if not 1 <= k <= X.n - 1:
        raise InvalidInput(f"k={k} must lie in 1..{X.n - 1}")
    gaps = {tau: lambda_gap(W, tau, zero_tol) for tau in X.simplices(k - 1)}
    lam = min(gaps.values())
    # ties (up to solver noise) go to the lexicographically first simplex
    argmin = min(t for t, g in gaps.items() if g <= lam + TIE_TOL * (1 + abs(lam)))
    threshold = vanishing_threshold(W.balance_constants, k)
    verdict = classify(lam - float(threshold), strict_margin)
    eps = epsilon(W.balance_constants, k, lam) if verdict == PASS else None
    return CriterionReport(k, threshold, lam, argmin, eps, verdict, gaps)


def one_step_bound(C_j, C_j1, mu):
    """Lower bound C_j(2 mu - C_{j+1})/mu on a link gap from gaps >= mu one level up."""
    if mu <= 0:
        raise DegenerateDenominator("mu must be positive")
    return C_j * (-C_j1 + 2 * mu) / mu


def propagated_bound(C: Sequence, j: int, k: int, mu):
    """Gap bound for (j-1)-simplices from a uniform bound mu on (k-1)-link gaps, j < k."""
    if not 0 <= j < k < len(C):
        raise InvalidInput(f"need 0 <= j < k < {len(C)}")
    l = k - j - 1
    denominator = -l * C[k] + (l + 1) * mu
    if denominator <= 0:
        raise DegenerateDenominator(f"mu={mu} must exceed {l}/{l + 1} * C_k")
    return C[j] * (-(k - j) * C[k] + (k - j + 1) * mu) / denominator


def check_range_vanishing(
    W: WeightFunction,
    k: int,
    strict_margin: float = STRICT_MARGIN,
    zero_tol: float = ZERO_TOL,
) -> list[CriterionReport]:
    """Degree-k report, then for each lower j a direct report carrying the propagated bound."""
    top = check_vanishing(W, k, strict_margin, zero_tol)
    reports = [top]
    if top.verdict != PASS:
        return reports
    C = [float(c) for c in W.balance_constants]
    for j in range(k - 1, 0, -1):
        direct = check_vanishing(W, j, strict_margin, zero_tol)
        bound = propagated_bound(C, j, k, top.min_gap)
        direct.propagated_bound = bound
        direct.consistent = direct.min_gap >= bound - CONSISTENCY_TOL
        bound_verdict = classify(bound - float(direct.threshold), strict_margin)
        direct.verdict = combine([direct.verdict, bound_verdict] + ([] if direct.consistent else [FAIL]))
        if direct.verdict != PASS:
            direct.epsilon = None
        reports.append(direct)
    return reports


def rational_lower(x: float, max_denominator: int = 10**6, slack: float = 1e-12) -> Fraction:
    """A rational p/q (q <= max_denominator) at most ``slack`` above x, else floored."""
    cand = Fraction(x).limit_denominator(max_denominator)
    if cand <= x + slack:
        return cand
    return Fraction(math.floor(x * max_denominator), max_denominator)


def input_digest(W: WeightFunction) -> str:
    payload = {
        "facets": [list(f) for f in W.complex.facets],
        "weights": {",".join(map(str, s)): str(m) for s, m in sorted(W.values.items())},
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


@dataclass
class Certificate:
    input_hash: str
    k: int
    C: tuple[Fraction, ...]
    reports: list[CriterionReport]
    xprime: XPrimeReport | None
    verdict: str
    lambda_used: Fraction | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    assumptions: list[str] = field(default_factory=lambda: list(ASSUMPTIONS))
    citations: list[str] = field(default_factory=lambda: list(CITATIONS))

    @property
    def main(self) -> CriterionReport:
        return self.reports[0]

    def to_dict(self) -> dict:
        main = self.main
        return {
            "input_sha256": self.input_hash,
            "k": self.k,
            "C": [str(c) for c in self.C],
            "threshold": str(main.threshold),
            "min_gap": main.min_gap,
            "argmin": list(main.argmin_tau),
            "epsilon": main.epsilon,
            "lambda_used": None if self.lambda_used is None else str(self.lambda_used),
            "reports": [r.to_dict() for r in self.reports],
            "xprime": None if self.xprime is None else self.xprime.to_dict(),
            "checks": dict(self.checks),
            "verdict": self.verdict,
            "assumptions": list(self.assumptions),
            "citations": list(self.citations),
        }


def certify_property_T(
    W: WeightFunction,
    k: int,
    strict_margin: float = STRICT_MARGIN,
    zero_tol: float = ZERO_TOL,
    input_hash: str | None = None,
) -> Certificate:
    reports = check_range_vanishing(W, k, strict_margin, zero_tol)
    main = reports[0]
    cert = Certificate(
        input_hash or input_digest(W), k, W.balance_constants, reports, None, main.verdict
    )
    if main.verdict != PASS:
        return cert

    lam = rational_lower(main.min_gap)
    cert.lambda_used = lam
    XP = build_xprime(W, k, lam)
    xr = verify_xprime(XP, zero_tol)
    cert.xprime = xr
    gaps = [d.gap for d in xr.links]
    cert.checks = {
        "C1_prime_exact": xr.C1_ok,
        "decomposition": xr.decomposition_ok,
        "xprime_hypotheses": xr.hypotheses_ok,
        "xprime_gaps_at_least_lambda": all(
            g is not None and g >= float(lam) - CONSISTENCY_TOL for g in gaps
        ),
        "lambda_above_half_C1_prime": float(lam) - float(xr.threshold) > strict_margin,
    }
    verdicts = [r.verdict for r in reports] + [PASS if all(cert.checks.values()) else FAIL]
    cert.verdict = combine(verdicts)
    return cert
