"""Deterministic families of test complexes and random weights."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

import networkx as nx

from .complex import SimplicialComplex, build_complex, connected_components, link, validate_hypotheses
from .errors import BudgetExhausted, InvalidInput
from .weights import WeightFunction, bs_weight, weight_from_top


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[tuple[str, int], ...] = ()

    def build(self) -> SimplicialComplex:
        return generate(self.family, **dict(self.params))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope; antipodal pairs {2i, 2i+1}."""
    if d < 2:
        raise InvalidInput("cross-polytope needs d >= 2")
    return build_complex(product(*[(2 * i, 2 * i + 1) for i in range(d)]))


def simplex_skeleton(m: int, n: int) -> SimplicialComplex:
    """All (n+1)-subsets of m vertices."""
    if not 0 <= n <= m - 1:
        raise InvalidInput(f"need 0 <= n <= m-1, got m={m}, n={n}")
    return build_complex(combinations(range(m), n + 1))


def flag_complex(edges: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Clique complex of a graph; raises NotPure when maximal cliques differ in size."""
    G = nx.Graph()
    G.add_edges_from(tuple(e) for e in edges)
    return build_complex(nx.find_cliques(G))


def csaszar_torus() -> SimplicialComplex:
    """Seven-vertex torus: facets {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    facets = [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    facets += [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    X = build_complex(facets)
    assert X.f_vector == (7, 21, 14), X.f_vector
    for v in range(7):
        L = link(X, (v,)).link_complex
        assert L.f_vector == (6, 6) and connected_components(L) == 1
        assert all(len(L.cofacet_vertices((u,))) == 2 for u in L.vertices)
    return X


def random_pure_complex(
    n: int,
    facet_count: int,
    seed: int = 0,
    max_vertices: int = 12,
    reuse: float = 0.5,
    budget: int = 200,
) -> SimplicialComplex:
    """Grow a pure n-complex by gluing facets along ridges; resample until hypotheses hold.

    Each new facet replaces one vertex of an existing facet, by an existing
    vertex with probability ``reuse`` (closing cycles) or a fresh one.
    """
    if n < 1 or facet_count < 1:
        raise InvalidInput("need n >= 1 and facet_count >= 1")
    if max_vertices < n + 1:
        raise InvalidInput("max_vertices too small")
    rng = random.Random(seed)
    for _ in range(budget):
        facets = {tuple(range(n + 1))}
        next_vertex = n + 1
        stalls = 0
        while len(facets) < facet_count and stalls < 50 * facet_count:
            F = rng.choice(sorted(facets))
            a = rng.choice(F)
            ridge = tuple(v for v in F if v != a)
            fresh_ok = next_vertex < max_vertices
            if not fresh_ok or rng.random() < reuse:
                pool = [v for v in range(next_vertex) if v not in F]
                if not pool:
                    stalls += 1
                    continue
                x = rng.choice(pool)
            else:
                x = next_vertex
            new = tuple(sorted(ridge + (x,)))
            if new in facets:
                stalls += 1
                continue
            facets.add(new)
            if x == next_vertex:
                next_vertex += 1
        if len(facets) < facet_count:
            continue
        X = build_complex(facets)
        if validate_hypotheses(X).ok:
            return X
    raise BudgetExhausted(f"no valid complex after {budget} attempts")


def random_weight(X: SimplicialComplex, kind: str, rng: random.Random) -> WeightFunction:
    """'bs', 'normalized' (C_k = 1) or 'explicit' (random C_k) weights with small rationals."""
    if kind == "bs":
        return bs_weight(X)
    top = {f: Fraction(rng.randint(1, 9), rng.randint(1, 5)) for f in X.facets}
    if kind == "normalized":
        return weight_from_top(X, top)
    if kind == "explicit":
        constants = [Fraction(rng.randint(1, 7), rng.randint(1, 4)) for _ in range(X.n)]
        return weight_from_top(X, top, constants)
    raise InvalidInput(f"unknown weight kind {kind!r}")


FAMILIES = {
    "cross-polytope": lambda d: cross_polytope_boundary(d),
    "skeleton": lambda m, n: simplex_skeleton(m, n),
    "torus7": lambda: csaszar_torus(),
    "random": lambda n, facets, seed=0, max_vertices=12: random_pure_complex(
        n, facets, seed, max_vertices
    ),
}


def generate(family: str, *args: int, **kwargs: int) -> SimplicialComplex:
    if family not in FAMILIES:
        raise InvalidInput(f"unknown family {family!r}; known: {sorted(FAMILIES)}")
    return FAMILIES[family](*args, **kwargs)


def corpus(seed: int = 0, random_count: int = 20) -> list[tuple[str, SimplicialComplex]]:
    """The fixed test corpus: symmetric examples plus seeded random complexes."""
    items = [
        ("cross-polytope-2", cross_polytope_boundary(2)),
        ("octahedron", cross_polytope_boundary(3)),
        ("16-cell", cross_polytope_boundary(4)),
        ("cross-polytope-5", cross_polytope_boundary(5)),
        ("torus7", csaszar_torus()),
        ("skeleton-5-2", simplex_skeleton(5, 2)),
        ("skeleton-6-3", simplex_skeleton(6, 3)),
        ("simplex-4", simplex_skeleton(5, 4)),
        ("flag-K4", flag_complex(combinations(range(4), 2))),
    ]
    rng = random.Random(seed)
    for i in range(random_count):
        n = rng.choice((2, 2, 3))
        facets = rng.randint(n + 2, 14 if n == 2 else 10)
        s = rng.randrange(10**6)
        items.append((f"random-n{n}-f{facets}-s{s}", random_pure_complex(n, facets, s)))
    return items
