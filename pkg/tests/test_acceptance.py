"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` (lines are printed even
without ``-s``) or ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from garland.criteria import (
    BOUNDARY,
    PASS,
    certify_property_T,
    check_range_vanishing,
    check_vanishing,
    propagated_bound,
)
from garland.generators import (
    corpus,
    cross_polytope_boundary,
    csaszar_torus,
    random_pure_complex,
    random_weight,
    simplex_skeleton,
)
from garland.io import dumps
from garland.oracle import cohomology_dim, identity_suite
from garland.spectral import lambda_gap
from garland.weights import bs_weight
from garland.xprime import build_xprime, verify_xprime

GAP_TOL = 1e-9
PROPAGATION_TOL = 1e-8
SPECTRUM_TOL = 1e-8


@pytest.fixture
def verdict(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail}", flush=True)
        assert ok, f"{label}: {detail}"
    return emit


def test_ac1_spectral_baselines(verdict):
    worst_err, worst_time = 0.0, 0.0
    for m in range(3, 11):
        t0 = time.perf_counter()
        gap = lambda_gap(bs_weight(simplex_skeleton(m + 1, 2)), (0,))
        worst_time = max(worst_time, time.perf_counter() - t0)
        worst_err = max(worst_err, abs(gap - m / (m - 1)))
    t0 = time.perf_counter()
    c4 = lambda_gap(bs_weight(cross_polytope_boundary(3)), (0,))
    t_c4 = time.perf_counter() - t0
    t0 = time.perf_counter()
    c6 = lambda_gap(bs_weight(csaszar_torus()), (0,))
    t_c6 = time.perf_counter() - t0
    worst_err = max(worst_err, abs(c4 - 1), abs(c6 - 0.5))
    worst_time = max(worst_time, t_c4, t_c6)
    ok = worst_err <= GAP_TOL and worst_time < 0.1
    verdict("AC1 spectral baselines", ok, f"max |err| {worst_err:.2e}, max time {worst_time * 1e3:.1f} ms")


def test_ac2_octahedron(verdict):
    t0 = time.perf_counter()
    W = bs_weight(cross_polytope_boundary(3))
    cert = certify_property_T(W, 1)
    elapsed = time.perf_counter() - t0
    r = cert.main
    ok = (
        abs(r.min_gap - 1.0) <= GAP_TOL
        and r.threshold == Fraction(1, 2)
        and r.verdict == PASS
        and cert.verdict == PASS
        and abs(r.epsilon - 2.0) <= GAP_TOL
        and elapsed < 1.0
    )
    verdict("AC2 octahedron k=1", ok,
            f"gap {r.min_gap:.12f}, threshold {r.threshold}, eps {r.epsilon:.12f}, {elapsed:.3f} s")


def test_ac3_torus_boundary(verdict):
    X = csaszar_torus()
    r = check_vanishing(bs_weight(X), 1)
    h1 = cohomology_dim(X, 1)
    diff = r.min_gap - float(r.threshold)
    ok = r.verdict == BOUNDARY and abs(diff) <= 1e-9 and h1 == 2
    verdict("AC3 torus boundary", ok, f"verdict {r.verdict}, gap - threshold {diff:.2e}, dim H^1 = {h1}")


def test_ac4_16cell_propagation(verdict):
    W = bs_weight(cross_polytope_boundary(4))
    top, low = check_range_vanishing(W, 2)
    ok = (
        top.verdict == PASS
        and abs(top.min_gap - 1) <= GAP_TOL
        and top.threshold == Fraction(2, 3)
        and abs(low.propagated_bound - 2) <= PROPAGATION_TOL
        and abs(low.min_gap - 2) <= PROPAGATION_TOL
        and abs(low.min_gap - low.propagated_bound) <= PROPAGATION_TOL
        and low.threshold == 1
        and low.verdict == PASS
    )
    verdict("AC4 16-cell propagation", ok,
            f"gap {top.min_gap:.12f} > 2/3; j=1 bound {low.propagated_bound:.12f}, measured {low.min_gap:.12f}")


def test_ac5_xprime_16cell(verdict):
    t0 = time.perf_counter()
    XP = build_xprime(bs_weight(cross_polytope_boundary(4)), 2, 1)
    report = verify_xprime(XP)
    elapsed = time.perf_counter() - t0
    want = [0, 1, 1, 1, 2, 2, 2, 3]
    spectra_ok = all(
        len(l.eigenvalues) == 8 and np.max(np.abs(np.array(l.eigenvalues) - want)) <= SPECTRUM_TOL
        for l in report.links
    )
    gaps_ok = all(abs(l.gap - 1) <= SPECTRUM_TOL and l.gap > 0.75 for l in report.links)
    ok = (
        XP.C1_prime == Fraction(3, 2)
        and len(report.links) == 24
        and all(l.exact_match for l in report.links)
        and report.decomposition_ok
        and spectra_ok
        and gaps_ok
        and report.threshold == Fraction(3, 4)
        and elapsed < 5.0
    )
    verdict("AC5 X' on 16-cell", ok,
            f"C'_1 = {XP.C1_prime}, {len(report.links)} links exact, spectra ok {spectra_ok}, {elapsed:.2f} s")


def test_ac6_identity_suite(verdict):
    rng = random.Random(2024)
    kinds = ("bs", "normalized", "explicit")
    runs, failures, max_vertices = 0, [], 0
    for i in range(54):
        n = (1, 2, 3)[i % 3]
        X = random_pure_complex(n, rng.randint(n + 1, 9), seed=rng.randrange(10**6), max_vertices=12)
        W = random_weight(X, kinds[(i // 3) % 3], rng)
        max_vertices = max(max_vertices, X.vertex_count)
        report = identity_suite(W, trials=10, seed=i, exact=True)
        runs += 1
        bad = [e.name for e in report.entries.values() if e.max_deviation != 0]
        if bad:
            failures.append((i, bad))
    ok = runs >= 50 and not failures and max_vertices <= 12
    verdict("AC6 exact identity suite", ok,
            f"{runs} complexes x 10 cochains, nonzero deviations: {failures or 'none'}")


def test_ac7_fixed_point(verdict):
    rng = random.Random(7)
    checked, bad = 0, 0
    for _ in range(100):
        C = [Fraction(rng.randint(1, 50), rng.randint(1, 17)) for _ in range(7)]
        for k in range(2, 7):
            for j in range(1, k):
                checked += 1
                if propagated_bound(C, j, k, C[k] * Fraction(k, k + 1)) != C[j] * Fraction(j, j + 1):
                    bad += 1
    verdict("AC7 fixed-point identity", bad == 0, f"{checked} exact checks, {bad} mismatches")


def test_ac8_soundness(verdict):
    rng = random.Random(8)
    passes, checks, counterexamples = 0, 0, []
    for name, X in corpus(seed=0, random_count=40):
        H = {k: cohomology_dim(X, k) for k in range(1, X.n)}
        for kind in ("bs", "normalized", "explicit"):
            W = random_weight(X, kind, rng)
            for k in range(1, X.n):
                checks += 1
                if check_vanishing(W, k).verdict == PASS:
                    passes += 1
                    if H[k] != 0:
                        counterexamples.append((name, kind, k, H[k]))
    ok = not counterexamples and passes > 0
    verdict("AC8 soundness sweep", ok,
            f"{checks} verdicts, {passes} PASS, counterexamples: {counterexamples or 'none'}")


def _strip_hash(cert) -> str:
    d = cert.to_dict()
    d.pop("input_sha256")
    return dumps(d)


def test_ac9_scale_invariance(verdict):
    factor = Fraction(7, 3)
    rng = random.Random(9)
    targets = [
        (bs_weight(cross_polytope_boundary(3)), 1),
        (bs_weight(cross_polytope_boundary(4)), 2),
        (bs_weight(cross_polytope_boundary(4)), 1),
        (bs_weight(csaszar_torus()), 1),
    ]
    for name, X in corpus(seed=5, random_count=10):
        W = random_weight(X, rng.choice(("normalized", "explicit")), rng)
        targets.extend((W, k) for k in range(1, X.n))
    mismatches = 0
    for W, k in targets:
        a = certify_property_T(W, k)
        b = certify_property_T(W.scaled(factor), k)
        if _strip_hash(a) != _strip_hash(b):
            mismatches += 1
    verdict("AC9 scale invariance x7/3", mismatches == 0,
            f"{len(targets)} certificates compared byte for byte, {mismatches} differ")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
