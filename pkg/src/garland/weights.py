"""Weight functions on simplices and their balance constants.

All arithmetic here is exact (``fractions.Fraction``). The balance law is
checked in unordered form::

    sum over cofacets sigma of tau of m(sigma) == C_k * m(tau)

which is the ordered law with the (k+2)! multiplicity divided out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .complex import Simplex, SimplicialComplex, canonical, link
from .errors import BalanceViolation, InvalidInput, NonPositiveWeight, UnknownSimplex

CONVENTIONS = ("bs", "explicit", "normalized-top")


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class WeightFunction:
    complex: SimplicialComplex
    values: Mapping[Simplex, Fraction]
    balance_constants: tuple[Fraction, ...]
    _links: dict = field(default_factory=dict, repr=False)

    def __getitem__(self, simplex: Simplex) -> Fraction:
        return self.values[simplex]

    @property
    def C(self) -> tuple[Fraction, ...]:
        return self.balance_constants

    def scaled(self, factor) -> "WeightFunction":
        factor = as_fraction(factor)
        return validate_weight(self.complex, {s: factor * m for s, m in self.values.items()})


def validate_weight(X: SimplicialComplex, table: Mapping) -> WeightFunction:
    """Check positivity and the balance law exactly; return the weight with its constants."""
    values: dict[Simplex, Fraction] = {}
    for key, raw in table.items():
        s = canonical(key)
        if s not in X:
            raise UnknownSimplex(f"weight given for {s}, which is not in the complex")
        values[s] = as_fraction(raw)
    missing = [s for s in X if s not in values]
    if missing:
        raise InvalidInput(f"weight table misses {len(missing)} simplices, e.g. {missing[0]}")
    for s, m in values.items():
        if m <= 0:
            raise NonPositiveWeight(f"m{s} = {m} is not positive")

    constants = []
    for k in range(X.n):
        expected = None
        for tau in X.simplices(k):
            total = sum(
                (values[canonical(tau + (v,))] for v in X.cofacet_vertices(tau)), Fraction(0)
            )
            ratio = total / values[tau]
            if expected is None:
                expected = ratio
            elif ratio != expected:
                raise BalanceViolation(tau, expected, ratio)
        constants.append(expected)
    return WeightFunction(X, values, tuple(constants))


def bs_weight(X: SimplicialComplex) -> WeightFunction:
    """m(tau) = number of top simplices containing tau; gives C_k = n - k."""
    return validate_weight(X, {s: Fraction(len(X.facets_containing(s))) for s in X})


def weight_from_top(
    X: SimplicialComplex,
    top: Mapping,
    constants: Sequence | None = None,
) -> WeightFunction:
    """Extend top-dimensional weights downward so that C_k = constants[k].

    With ``constants=None`` every C_k is 1 (the normalized convention).
    """
    if constants is None:
        constants = [1] * X.n
    constants = [as_fraction(c) for c in constants]
    if len(constants) != X.n:
        raise InvalidInput(f"need {X.n} balance constants, got {len(constants)}")
    values: dict[Simplex, Fraction] = {}
    for key, raw in top.items():
        s = canonical(key)
        if len(s) != X.n + 1 or s not in X:
            raise InvalidInput(f"{s} is not a top simplex")
        values[s] = as_fraction(raw)
    if len(values) != len(X.facets):
        raise InvalidInput("top weights must cover every top simplex")
    for k in range(X.n - 1, -1, -1):
        for tau in X.simplices(k):
            total = sum(
                (values[canonical(tau + (v,))] for v in X.cofacet_vertices(tau)), Fraction(0)
            )
            values[tau] = total / constants[k]
    return validate_weight(X, values)


def normalized_top_weight(X: SimplicialComplex, top: Mapping) -> WeightFunction:
    return weight_from_top(X, top)


def link_weight(W: WeightFunction, tau) -> WeightFunction:
    """Weights m_tau(sigma) = m(tau ∪ sigma) on the link of tau, with recomputed constants."""
    tau = canonical(tau)
    cached = W._links.get(tau)
    if cached is not None:
        return cached
    view = link(W.complex, tau)
    L = view.link_complex
    if L.n < 0:
        result = WeightFunction(L, {}, ())
    else:
        result = validate_weight(L, {s: W.values[view.lift(s)] for s in L})
    W._links[tau] = result
    return result
