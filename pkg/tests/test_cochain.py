import random
from fractions import Fraction

import pytest

from garland.cochain import (
    cochain,
    constant_part,
    d,
    delta,
    indicator,
    inner,
    laplacian_minus,
    laplacian_plus,
    laplacian_plus_closed,
    localize,
    norm_sq,
    permutation_sign,
    random_cochain,
    restrict,
)
from garland.errors import DegreeMismatch, TopDegree, UnknownSimplex


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((2, 0, 1)) == 1


def test_norms_octahedron(W_oct):
    assert norm_sq(indicator(W_oct, (0,))) == 4
    assert norm_sq(cochain(W_oct, 1)) == 0
    ones = cochain(W_oct, 1, {e: 1 for e in W_oct.complex.simplices(1)})
    assert norm_sq(ones) == 24


def test_alternating_values(W_oct):
    phi = cochain(W_oct, 1, {(2, 0): Fraction(3)})
    assert phi[(0, 2)] == -3
    assert phi.at((2, 0)) == 3


def test_inner_degree_mismatch(W_oct):
    with pytest.raises(DegreeMismatch):
        inner(cochain(W_oct, 0), cochain(W_oct, 1))


def test_d_of_constant_is_zero(W_oct):
    one = cochain(W_oct, 0, {v: 1 for v in W_oct.complex.simplices(0)})
    assert d(one).is_zero()


def test_d_of_vertex_indicator(W_oct):
    dphi = d(indicator(W_oct, (0,)))
    for e, val in dphi.values.items():
        assert val == (-1 if e[0] == 0 else 0)


def test_d_top_degree(W_oct):
    with pytest.raises(TopDegree):
        d(cochain(W_oct, 2))


def test_d_squared_zero(W_16):
    rng = random.Random(3)
    for k in range(2):
        assert d(d(random_cochain(W_16, k, rng))).is_zero()


def test_delta_examples(W_oct):
    assert delta(cochain(W_oct, 1)).is_zero()
    phi = d(indicator(W_oct, (0,)))
    assert delta(phi)[(0,)] == 2


def test_adjointness_float(W_oct):
    rng = random.Random(0)
    phi = random_cochain(W_oct, 0, rng, exact=False)
    psi = random_cochain(W_oct, 1, rng, exact=False)
    assert abs(inner(d(phi), psi) - inner(phi, delta(psi))) < 1e-12


def test_laplacians(W_oct):
    one = cochain(W_oct, 0, {v: 1 for v in W_oct.complex.simplices(0)})
    assert laplacian_plus(one).is_zero()
    e0 = indicator(W_oct, (0,))
    lap = laplacian_plus_closed(e0)
    assert lap[(0,)] == 2
    assert lap[(2,)] == Fraction(-1, 2)
    assert lap[(1,)] == 0
    assert (laplacian_plus(e0) - lap).is_zero()
    assert laplacian_minus(e0).is_zero()


def test_laplacian_closed_form_degree1(W_16):
    rng = random.Random(5)
    for k in range(3):
        phi = random_cochain(W_16, k, rng)
        assert (laplacian_plus(phi) - laplacian_plus_closed(phi)).is_zero()


def test_localize_examples(W_oct):
    rng = random.Random(1)
    phi = random_cochain(W_oct, 1, rng)
    loc = localize(phi, (0,))
    assert loc.complex.vertices == (2, 3, 4, 5)
    for w in (2, 3, 4, 5):
        assert loc[(w,)] == phi[(0, w)]
    dphi = d(indicator(W_oct, (0,)))
    loc = localize(dphi, (0,))
    assert set(loc.values.values()) == {-1}
    assert set(constant_part(loc).values.values()) == {-1}


def test_localize_sign_convention(W_16):
    # v is appended after tau, so phi_tau(v) = phi.at(tau + (v,))
    rng = random.Random(2)
    phi = random_cochain(W_16, 2, rng)
    tau = (2, 4)
    loc = localize(phi, tau)
    for (v,) in loc.complex.simplices(0):
        assert loc[(v,)] == phi.at(tau + (v,))


def test_localize_unknown(W_oct):
    with pytest.raises(UnknownSimplex):
        localize(cochain(W_oct, 1), (9,))


def test_constant_part_of_constant(W_oct):
    loc = localize(cochain(W_oct, 1, {e: 5 for e in W_oct.complex.simplices(1)}), (1,))
    assert constant_part(loc).values == loc.values


def test_constant_part_orthogonality(W_16):
    rng = random.Random(4)
    phi = random_cochain(W_16, 1, rng)
    loc = localize(phi, (3,))
    rest = loc - constant_part(loc)
    Wl = loc.weight
    assert sum(Wl[s] * v for s, v in rest.values.items()) == 0


def test_aggregate_norm_identities(W_16):
    rng = random.Random(6)
    C = W_16.C
    for k in (1, 2):
        phi = random_cochain(W_16, k, rng)
        taus = W_16.complex.simplices(k - 1)
        locs = [localize(phi, t) for t in taus]
        assert sum(norm_sq(l) for l in locs) == (k + 1) * norm_sq(phi)
        assert sum(norm_sq(constant_part(l)) for l in locs) == norm_sq(delta(phi)) / C[k - 1]


def test_restriction_identities(W_oct):
    rng = random.Random(7)
    X = W_oct.complex
    phi = random_cochain(W_oct, 1, rng)
    assert W_oct.C[1] * norm_sq(phi) == sum(norm_sq(restrict(phi, (u,))) for u in X.vertices)
    f = random_cochain(W_oct, 0, rng)
    total = sum(norm_sq(d(restrict(f, (u,)))) for u in X.vertices)
    assert W_oct.C[1] * norm_sq(d(f)) == total
    assert restrict(cochain(W_oct, 1), (0,)).is_zero()


def test_linear_ops(W_oct):
    rng = random.Random(8)
    a, b = random_cochain(W_oct, 1, rng), random_cochain(W_oct, 1, rng)
    assert d(a + 2 * b).values == (d(a) + d(b) * 2).values
    assert (a - a).is_zero()
