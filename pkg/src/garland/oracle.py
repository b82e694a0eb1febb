"""Independent checks: exact cochain identities and rational cohomology.

Nothing here touches floating point except ``gap_bound_probe``, which
compares measured spectra against the propagated bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cochain import (
    Cochain,
    constant_part,
    d,
    delta,
    inner,
    laplacian_plus_closed,
    localize,
    norm_sq,
    random_cochain,
    restrict,
)
from .complex import SimplicialComplex, faces, link
from .criteria import CONSISTENCY_TOL, propagated_bound
from .errors import DegenerateDenominator, InvalidInput
from .spectral import ZERO_TOL, lambda_gap
from .weights import WeightFunction, link_weight


def integer_rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on an integer matrix."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    n_rows, n_cols = len(A), len(A[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if A[r][col] != 0), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for r in range(rank + 1, n_rows):
            a = A[r][col]
            row_r, row_p = A[r], A[rank]
            for c in range(col, n_cols):
                row_r[c] = (p * row_r[c] - a * row_p[c]) // prev
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def coboundary_matrix(X: SimplicialComplex, k: int) -> list[list[int]]:
    """Integer matrix of d: C^k -> C^{k+1}; rows indexed by (k+1)-simplices."""
    cols = {s: i for i, s in enumerate(X.simplices(k))}
    rows = []
    for s in X.simplices(k + 1):
        row = [0] * len(cols)
        for i, f in enumerate(faces(s)):
            row[cols[f]] += -1 if i % 2 else 1
        rows.append(row)
    return rows


def cohomology_dim(X: SimplicialComplex, k: int) -> int:
    """dim H^k(X; R) = dim ker d_k - rank d_{k-1}; independent of any weight."""
    if not 0 <= k <= X.n:
        raise InvalidInput(f"degree {k} outside 0..{X.n}")
    rank_out = integer_rank(coboundary_matrix(X, k)) if k < X.n else 0
    rank_in = integer_rank(coboundary_matrix(X, k - 1)) if k > 0 else 0
    return len(X.simplices(k)) - rank_out - rank_in


def betti_numbers(X: SimplicialComplex) -> tuple[int, ...]:
    return tuple(cohomology_dim(X, k) for k in range(X.n + 1))


@dataclass
class IdentityEntry:
    name: str
    mode: str
    max_deviation: Fraction | float = 0
    checks: int = 0

    @property
    def passed(self) -> bool:
        if self.mode == "exact":
            return self.max_deviation == 0
        return self.max_deviation <= 1e-9

    def record(self, deviation) -> None:
        self.checks += 1
        if abs(deviation) > self.max_deviation:
            self.max_deviation = abs(deviation)

    def to_dict(self) -> dict:
        dev = self.max_deviation
        return {
            "name": self.name,
            "mode": self.mode,
            "max_deviation": str(dev) if isinstance(dev, Fraction) else float(dev),
            "checks": self.checks,
            "pass": self.passed,
        }


@dataclass
class IdentityReport:
    entries: dict[str, IdentityEntry] = field(default_factory=dict)

    def entry(self, name: str, mode: str) -> IdentityEntry:
        if name not in self.entries:
            self.entries[name] = IdentityEntry(name, mode, Fraction(0) if mode == "exact" else 0.0)
        return self.entries[name]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries.values())

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "identities": [e.to_dict() for e in self.entries.values()],
        }


IDENTITIES = (
    "adjointness",
    "d_squared_zero",
    "laplacian_closed_form",
    "coboundary_bound",
    "link_constants",
    "localization_norm",
    "constant_part_norm",
    "restriction_norm",
    "restricted_coboundary",
    "key_identity",
)


def _link_norm_terms(phi: Cochain, k: int) -> tuple:
    """Sums over (k-1)-simplices tau of |phi_tau|^2, |phi_tau^0|^2, |d_tau phi_tau|^2."""
    loc = const = dloc = 0
    for tau in phi.complex.simplices(k - 1):
        phi_tau = localize(phi, tau)
        loc += norm_sq(phi_tau)
        const += norm_sq(constant_part(phi_tau))
        if phi_tau.complex.n >= 1:
            dloc += norm_sq(d(phi_tau))
    return loc, const, dloc


def check_link_constants(W: WeightFunction, report: IdentityReport, mode: str = "exact") -> None:
    X = W.complex
    C = W.balance_constants
    entry = report.entry("link_constants", mode)
    for j in range(-1, X.n - 1):
        for tau in X.simplices(j) if j >= 0 else [()]:
            C_tau = link_weight(W, tau).balance_constants
            for k in range(0, X.n - j - 1):
                entry.record(C_tau[k] - C[j + k + 1])


def identity_suite(
    W: WeightFunction,
    trials: int = 10,
    seed: int = 0,
    exact: bool = True,
    codifferential: Callable[[Cochain], Cochain] = delta,
    report: IdentityReport | None = None,
) -> IdentityReport:
    """Run every cochain identity on ``trials`` random cochains per admissible degree."""
    if trials < 1:
        raise InvalidInput("trials must be >= 1")
    X = W.complex
    C = W.balance_constants
    n = X.n
    rng = random.Random(seed)
    mode = "exact" if exact else "float"
    report = report if report is not None else IdentityReport()
    for name in IDENTITIES:
        report.entry(name, mode)
    check_link_constants(W, report, mode)

    def rand(k):
        return random_cochain(W, k, rng, exact=exact)

    for _ in range(trials):
        for k in range(0, n):
            phi, psi = rand(k), rand(k + 1)
            dphi = d(phi)
            report.entry("adjointness", mode).record(inner(dphi, psi) - inner(phi, codifferential(psi)))
            if k + 1 < n:
                report.entry("d_squared_zero", mode).record(d(dphi).max_abs())
            diff = codifferential(dphi) - laplacian_plus_closed(phi)
            report.entry("laplacian_closed_form", mode).record(diff.max_abs())
            slack = norm_sq(dphi) - (k + 2) * C[k] * norm_sq(phi)
            report.entry("coboundary_bound", mode).record(max(slack, 0))
            restricted = sum((norm_sq(restrict(phi, (u,))) for u in X.vertices), 0)
            report.entry("restriction_norm", mode).record(C[k] * norm_sq(phi) - restricted)
            if k == 0 and n >= 2:
                total = sum((norm_sq(d(restrict(phi, (u,)))) for u in X.vertices), 0)
                report.entry("restricted_coboundary", mode).record(C[1] * norm_sq(dphi) - total)

        for k in range(1, n + 1):
            phi = rand(k)
            loc, const, dloc = _link_norm_terms(phi, k)
            report.entry("localization_norm", mode).record(loc - (k + 1) * norm_sq(phi))
            report.entry("constant_part_norm", mode).record(
                const - norm_sq(codifferential(phi)) / C[k - 1]
            )
            if k <= n - 1:
                key = dloc - C[k] * Fraction(k, k + 1) * loc
                report.entry("key_identity", mode).record(norm_sq(d(phi)) - key)
    return report


@dataclass
class ProbeEntry:
    tau: tuple[int, ...]
    mu: float
    bound: float | None
    measured: float
    ok: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "tau": list(self.tau),
            "mu": self.mu,
            "bound": self.bound,
            "measured": self.measured,
            "ok": self.ok,
            "note": self.note,
        }


def gap_bound_probe(
    W: WeightFunction,
    j: int,
    l: int,
    samples: int | None = None,
    seed: int = 0,
    zero_tol: float = ZERO_TOL,
) -> list[ProbeEntry]:
    """Measured lambda(X_tau) against the propagated bound, tau of dimension j-1.

    mu is the minimum gap over the links of tau ∪ eta, eta an l-simplex of the
    link of tau. Inapplicable (j, l) give an empty list.
    """
    X = W.complex
    k = j + l + 1
    if j < 1 or l < 0 or k > X.n - 1:
        return []
    taus = list(X.simplices(j - 1))
    if samples is not None and samples < len(taus):
        taus = sorted(random.Random(seed).sample(taus, samples))
    C = [float(c) for c in W.balance_constants]
    out = []
    for tau in taus:
        L = link(X, tau).link_complex
        mu = min(lambda_gap(W, tuple(sorted(tau + eta)), zero_tol) for eta in L.simplices(l))
        measured = lambda_gap(W, tau, zero_tol)
        try:
            bound = propagated_bound(C, j, k, mu)
        except DegenerateDenominator as exc:
            out.append(ProbeEntry(tau, mu, None, measured, True, f"skipped: {exc}"))
            continue
        out.append(ProbeEntry(tau, mu, bound, measured, measured >= bound - CONSISTENCY_TOL))
    return out
