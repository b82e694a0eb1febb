import random
from fractions import Fraction

import pytest

from garland.criteria import (
    BOUNDARY,
    FAIL,
    PASS,
    certify_property_T,
    check_range_vanishing,
    check_vanishing,
    classify,
    combine,
    epsilon,
    one_step_bound,
    propagated_bound,
    rational_lower,
    vanishing_threshold,
)
from garland.errors import DegenerateDenominator, InvalidInput


def test_octahedron_k1(W_oct):
    r = check_vanishing(W_oct, 1)
    assert abs(r.min_gap - 1) <= 1e-9
    assert r.threshold == Fraction(1, 2)
    assert r.verdict == PASS
    assert abs(r.epsilon - 2.0) <= 1e-9
    assert r.argmin_tau == (0,)


def test_torus_boundary(W_torus):
    r = check_vanishing(W_torus, 1)
    assert r.verdict == BOUNDARY
    assert abs(r.min_gap - 0.5) <= 1e-9
    assert r.epsilon is None
    assert len(check_range_vanishing(W_torus, 1)) == 1


def test_16cell_k2(W_16):
    r = check_vanishing(W_16, 2)
    assert r.verdict == PASS and r.threshold == Fraction(2, 3)
    assert abs(r.min_gap - 1) <= 1e-9


def test_k_out_of_range(W_oct):
    with pytest.raises(InvalidInput):
        check_vanishing(W_oct, 2)
    with pytest.raises(InvalidInput):
        check_vanishing(W_oct, 0)


def test_classify_and_combine():
    assert classify(1e-3) == PASS
    assert classify(5e-10) == BOUNDARY
    assert classify(-1e-3) == FAIL
    assert combine([PASS, PASS]) == PASS
    assert combine([PASS, BOUNDARY]) == BOUNDARY
    assert combine([BOUNDARY, FAIL]) == FAIL
    assert combine([]) == FAIL


def test_epsilon_formula():
    C = (Fraction(2), Fraction(1))
    assert epsilon(C, 1, 1.0) == 2.0
    assert vanishing_threshold((3, 2, 1), 2) == Fraction(2, 3)


def test_one_step_examples():
    assert one_step_bound(2, 1, 1) == 2
    assert one_step_bound(Fraction(5), Fraction(3), Fraction(3)) == 5
    assert one_step_bound(Fraction(5), Fraction(3), Fraction(3, 2)) == 0
    with pytest.raises(DegenerateDenominator):
        one_step_bound(1, 1, 0)


def test_propagated_examples():
    assert propagated_bound([3, 2, 1], 1, 2, 1) == 2
    assert propagated_bound([Fraction(5), Fraction(4), Fraction(3)], 1, 2, Fraction(4, 3)) == -1
    with pytest.raises(InvalidInput):
        propagated_bound([3, 2, 1], 2, 2, 1)
    with pytest.raises(DegenerateDenominator):
        propagated_bound([3, 2, 1], 0, 2, Fraction(1, 2))


def _rand_constants(rng, size):
    return [Fraction(rng.randint(1, 20), rng.randint(1, 9)) for _ in range(size)]


def test_propagated_matches_iterated_one_step():
    # iterating the one-step bound down from level k reproduces the closed form
    rng = random.Random(11)
    for _ in range(60):
        C = _rand_constants(rng, 7)
        k = rng.randint(2, 6)
        j = rng.randint(0, k - 1)
        mu = C[k] * Fraction(k, k + 1) + Fraction(rng.randint(1, 30), rng.randint(1, 7))
        bound = mu
        for i in range(k - 1, j - 1, -1):
            bound = one_step_bound(C[i], C[i + 1], bound)
        assert bound == propagated_bound(C, j, k, mu)


def test_fixed_point_exact():
    rng = random.Random(12)
    for _ in range(20):
        C = _rand_constants(rng, 7)
        for k in range(2, 7):
            for j in range(1, k):
                mu = C[k] * Fraction(k, k + 1)
                assert propagated_bound(C, j, k, mu) == C[j] * Fraction(j, j + 1)


def test_propagated_monotone_in_mu():
    rng = random.Random(13)
    for _ in range(40):
        C = _rand_constants(rng, 5)
        k, j = 4, rng.randint(0, 3)
        lo = C[k] * Fraction(k - j - 1, k - j) + Fraction(1, 100)
        mus = sorted(lo + Fraction(rng.randint(0, 500), 37) for _ in range(6))
        vals = [propagated_bound(C, j, k, mu) for mu in mus]
        assert vals == sorted(vals)


def test_range_16cell(W_16):
    reports = check_range_vanishing(W_16, 2)
    assert [r.k for r in reports] == [2, 1]
    top, low = reports
    assert top.verdict == PASS
    assert low.verdict == PASS
    assert abs(low.propagated_bound - 2) <= 1e-8
    assert abs(low.min_gap - 2) <= 1e-8
    assert low.consistent and low.threshold == 1


def test_range_octahedron(W_oct):
    reports = check_range_vanishing(W_oct, 1)
    assert len(reports) == 1 and reports[0].verdict == PASS


def test_rational_lower():
    assert rational_lower(0.99999999999999922) == 1
    assert rational_lower(0.5) == Fraction(1, 2)
    x = 0.1234567891234
    q = rational_lower(x)
    assert q <= x + 1e-12 and q.denominator <= 10**6


def test_certify_octahedron(W_oct):
    cert = certify_property_T(W_oct, 1)
    assert cert.verdict == PASS
    assert cert.lambda_used == 1
    assert all(cert.checks.values())
    xr = cert.xprime
    assert xr.C1_prime == 1
    for link in xr.links:
        assert link.exact_match


def test_certify_16cell(W_16):
    cert = certify_property_T(W_16, 2)
    assert cert.verdict == PASS
    assert cert.xprime.threshold == Fraction(3, 4)
    assert all(abs(l.gap - 1) <= 1e-8 for l in cert.xprime.links)
    d = cert.to_dict()
    assert d["verdict"] == PASS and d["C"] == ["3", "2", "1"]
    assert d["assumptions"] and d["citations"]


def test_certify_torus_stops_early(W_torus):
    cert = certify_property_T(W_torus, 1)
    assert cert.verdict == BOUNDARY
    assert cert.xprime is None and cert.lambda_used is None
