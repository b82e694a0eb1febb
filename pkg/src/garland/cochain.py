"""Real alternating cochains with the weighted inner product.

A k-cochain stores one value per canonical (ascending) k-simplex; its value
on any other ordering of the same vertices is the canonical value times the
sign of the sorting permutation. Values may be ``Fraction`` (exact mode) or
``float``; every operation preserves whichever the caller supplies.

Unordered forms used throughout (trivial group, so stabilizers are 1):

* inner product: sum over k-simplices of m(s) * phi(s) * psi(s)
* codifferential: (delta phi)(t) = sum_v m(vt)/m(t) * phi(vt), v prepended
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .complex import Simplex, canonical
from .errors import DegreeMismatch, InvalidInput, TopDegree, UnknownSimplex
from .weights import WeightFunction, link_weight


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct entries)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class Cochain:
    weight: WeightFunction
    degree: int
    values: Mapping[Simplex, object]

    @property
    def complex(self):
        return self.weight.complex

    def __getitem__(self, simplex: Simplex):
        return self.values[simplex]

    def at(self, ordered) -> object:
        """Value on an ordered tuple of vertices (alternating)."""
        ordered = tuple(ordered)
        return permutation_sign(ordered) * self.values[canonical(ordered)]

    def __add__(self, other: "Cochain") -> "Cochain":
        _check_same(self, other)
        return Cochain(self.weight, self.degree, {s: v + other.values[s] for s, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        _check_same(self, other)
        return Cochain(self.weight, self.degree, {s: v - other.values[s] for s, v in self.values.items()})

    def __mul__(self, scalar) -> "Cochain":
        return Cochain(self.weight, self.degree, {s: scalar * v for s, v in self.values.items()})

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def max_abs(self):
        return max((abs(v) for v in self.values.values()), default=0)


def _check_same(phi: Cochain, psi: Cochain) -> None:
    if phi.degree != psi.degree:
        raise DegreeMismatch(f"degrees {phi.degree} and {psi.degree} differ")
    if phi.weight is not psi.weight and phi.complex != psi.complex:
        raise DegreeMismatch("cochains live on different complexes")


def cochain(W: WeightFunction, k: int, values: Mapping | None = None, zero=Fraction(0)) -> Cochain:
    """Build a k-cochain; simplices absent from ``values`` get ``zero``."""
    X = W.complex
    if not 0 <= k <= X.n:
        raise InvalidInput(f"degree {k} outside 0..{X.n}")
    table = {s: zero for s in X.simplices(k)}
    for key, val in (values or {}).items():
        s = canonical(key)
        if s not in table:
            raise UnknownSimplex(f"{s} is not a {k}-simplex")
        table[s] = permutation_sign(tuple(key)) * val
    return Cochain(W, k, table)


def indicator(W: WeightFunction, simplex, value=Fraction(1)) -> Cochain:
    simplex = tuple(simplex)
    return cochain(W, len(simplex) - 1, {simplex: value})


def random_cochain(
    W: WeightFunction,
    k: int,
    rng: random.Random,
    exact: bool = True,
    max_num: int = 9,
    max_den: int = 7,
) -> Cochain:
    """Random cochain; exact entries are p/q with |p| <= max_num, 1 <= q <= max_den."""
    if exact:
        vals = {
            s: Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
            for s in W.complex.simplices(k)
        }
    else:
        vals = {s: rng.uniform(-1.0, 1.0) for s in W.complex.simplices(k)}
    return Cochain(W, k, vals)


def inner(phi: Cochain, psi: Cochain):
    _check_same(phi, psi)
    m = phi.weight.values
    return sum((m[s] * v * psi.values[s] for s, v in phi.values.items()), Fraction(0))


def norm_sq(phi: Cochain):
    return inner(phi, phi)


def d(phi: Cochain) -> Cochain:
    """Coboundary: (d phi)(s) = sum_i (-1)^i phi(s minus its i-th vertex)."""
    X = phi.complex
    k = phi.degree
    if k >= X.n:
        raise TopDegree(f"no coboundary out of degree {k} on a {X.n}-complex")
    out = {}
    vals = phi.values
    for s in X.simplices(k + 1):
        total = 0
        for i in range(k + 2):
            face = s[:i] + s[i + 1 :]
            total = total + vals[face] if i % 2 == 0 else total - vals[face]
        out[s] = total
    return Cochain(phi.weight, k + 1, out)


def delta(phi: Cochain) -> Cochain:
    """Adjoint of d: (delta phi)(t) = sum_v m(vt)/m(t) phi((v, t_0, ..., t_k))."""
    X = phi.complex
    k = phi.degree - 1
    if k < 0:
        raise InvalidInput("codifferential needs degree >= 1")
    m = phi.weight.values
    out = {}
    for tau in X.simplices(k):
        total = 0
        for v in X.cofacet_vertices(tau):
            sigma = canonical(tau + (v,))
            # (v, tau) sorts with sign (-1)^(position of v in sigma)
            term = (m[sigma] / m[tau]) * phi.values[sigma]
            total = total + term if sigma.index(v) % 2 == 0 else total - term
        out[tau] = total
    return Cochain(phi.weight, k, out)


def laplacian_plus(phi: Cochain, codifferential: Callable = delta) -> Cochain:
    return codifferential(d(phi))


def laplacian_plus_closed(phi: Cochain) -> Cochain:
    """Closed form C_k phi(s) - sum_v sum_i (-1)^i m(vs)/m(s) phi((v, s_i))."""
    X = phi.complex
    k = phi.degree
    if k >= X.n:
        raise TopDegree(f"no upper Laplacian in top degree {k}")
    C_k = phi.weight.balance_constants[k]
    m = phi.weight.values
    out = {}
    for s in X.simplices(k):
        total = C_k * phi.values[s]
        for v in X.cofacet_vertices(s):
            ratio = m[canonical(s + (v,))] / m[s]
            for i in range(k + 1):
                ordered = (v,) + s[:i] + s[i + 1 :]
                term = ratio * phi.at(ordered)
                total = total - term if i % 2 == 0 else total + term
        out[s] = total
    return Cochain(phi.weight, k, out)


def laplacian_minus(phi: Cochain) -> Cochain:
    """d delta; the zero cochain in degree 0."""
    if phi.degree == 0:
        return phi * 0
    return d(delta(phi))


def localize(phi: Cochain, tau) -> Cochain:
    """phi_tau(sigma) = phi(tau sigma): tau in canonical order, sigma appended.

    Lands in degree k - |tau| on the link of tau with the link weights.
    """
    tau = canonical(tau)
    k = phi.degree
    if not 1 <= len(tau) <= k:
        raise InvalidInput(f"cannot localize a {k}-cochain at a {len(tau) - 1}-simplex")
    if tau not in phi.complex:
        raise UnknownSimplex(f"{tau} is not a simplex")
    W_tau = link_weight(phi.weight, tau)
    out = {}
    for sigma in W_tau.complex.simplices(k - len(tau)):
        out[sigma] = phi.at(tau + sigma)
    return Cochain(W_tau, k - len(tau), out)


def constant_part(phi_tau: Cochain) -> Cochain:
    """Orthogonal projection of a 0-cochain onto the constants (weighted mean)."""
    if phi_tau.degree != 0:
        raise DegreeMismatch("constant part is defined on 0-cochains")
    m = phi_tau.weight.values
    if not phi_tau.values:
        raise InvalidInput("empty link")
    total_m = sum(m[s] for s in phi_tau.values)
    mean = sum((m[s] * v for s, v in phi_tau.values.items()), Fraction(0)) / total_m
    return Cochain(phi_tau.weight, 0, {s: mean for s in phi_tau.values})


def restrict(phi: Cochain, tau) -> Cochain:
    """The same-degree cochain phi^tau(sigma) = phi(sigma) on the link of tau."""
    tau = canonical(tau)
    k = phi.degree
    if tau not in phi.complex:
        raise UnknownSimplex(f"{tau} is not a simplex")
    if k + len(tau) > phi.complex.n:
        raise InvalidInput(f"degree {k} too large to restrict to the link of {tau}")
    W_tau = link_weight(phi.weight, tau)
    return Cochain(W_tau, k, {s: phi.values[s] for s in W_tau.complex.simplices(k)})
