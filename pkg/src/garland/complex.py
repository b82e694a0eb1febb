"""Finite abstract simplicial complexes, links, and the standing hypotheses.

Simplices are stored unordered, in canonical form: the ascending tuple of
vertex ids. Sums over ordered simplices elsewhere in the package are written
in unordered form with the factorial multiplicities worked out by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EmptyComplex, NotPure, UnknownSimplex

Simplex = tuple[int, ...]


def canonical(vertices: Iterable[int]) -> Simplex:
    """Sorted tuple form of a vertex set; rejects repeated vertices."""
    simplex = tuple(sorted(int(v) for v in vertices))
    if len(set(simplex)) != len(simplex):
        raise ValueError(f"repeated vertex in simplex {simplex}")
    return simplex


def faces(simplex: Simplex) -> list[Simplex]:
    """Codimension-one faces; face i omits the i-th vertex."""
    return [simplex[:i] + simplex[i + 1 :] for i in range(len(simplex))]


class SimplicialComplex:
    """Immutable, downward-closed, pure simplicial complex.

    ``simplices_by_dim[k]`` is the sorted tuple of canonical k-simplices.
    A complex with no simplices has dimension -1 (the link of a top simplex).
    """

    def __init__(self, simplices_by_dim: Sequence[Iterable[Simplex]]):
        self.simplices_by_dim: tuple[tuple[Simplex, ...], ...] = tuple(
            tuple(sorted(canonical(s) for s in layer)) for layer in simplices_by_dim
        )
        while self.simplices_by_dim and not self.simplices_by_dim[-1]:
            self.simplices_by_dim = self.simplices_by_dim[:-1]
        self.n = len(self.simplices_by_dim) - 1
        self._members = {s for layer in self.simplices_by_dim for s in layer}
        self._index = [
            {s: i for i, s in enumerate(layer)} for layer in self.simplices_by_dim
        ]
        cofacets: dict[Simplex, list[int]] = {s: [] for s in self._members}
        for layer in self.simplices_by_dim[1:]:
            for s in layer:
                for i, f in enumerate(faces(s)):
                    if f not in self._members:
                        raise ValueError(f"face {f} of {s} missing: not downward closed")
                    cofacets[f].append(s[i])
        self._cofacet_vertices = {s: tuple(sorted(vs)) for s, vs in cofacets.items()}
        self._facets_at_vertex: dict[int, set[Simplex]] = {}
        for top in self.facets:
            for v in top:
                self._facets_at_vertex.setdefault(v, set()).add(top)
        self._links: dict[Simplex, LinkView] = {}

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices(0))

    @property
    def vertex_count(self) -> int:
        return len(self.simplices(0))

    @property
    def facets(self) -> tuple[Simplex, ...]:
        return self.simplices_by_dim[-1] if self.simplices_by_dim else ()

    @property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.simplices_by_dim)

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.f_vector))

    def simplices(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k <= self.n:
            return self.simplices_by_dim[k]
        return ()

    def __iter__(self) -> Iterator[Simplex]:
        for layer in self.simplices_by_dim:
            yield from layer

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._members

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.simplices_by_dim == other.simplices_by_dim

    def __hash__(self) -> int:
        return hash(self.simplices_by_dim)

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, f_vector={self.f_vector})"

    def index(self, simplex: Simplex) -> int:
        """Position of a simplex within its dimension layer."""
        return self._index[len(simplex) - 1][simplex]

    def cofacet_vertices(self, simplex: Simplex) -> tuple[int, ...]:
        """Vertices v (ascending) with simplex ∪ {v} in the complex."""
        if simplex == ():
            return self.vertices
        return self._cofacet_vertices[simplex]

    def facets_containing(self, simplex: Simplex) -> list[Simplex]:
        if not simplex:
            return list(self.facets)
        found = set(self._facets_at_vertex.get(simplex[0], ()))
        for v in simplex[1:]:
            found &= self._facets_at_vertex.get(v, set())
        return sorted(found)

    def link(self, tau: Iterable[int]) -> "LinkView":
        return link(self, tau)


def _closure(facets: Iterable[Simplex]) -> list[set[Simplex]]:
    facets = list(facets)
    if not facets:
        return []
    n = max(len(f) for f in facets) - 1
    layers: list[set[Simplex]] = [set() for _ in range(n + 1)]
    for f in facets:
        for k in range(len(f)):
            layers[k].update(combinations(f, k + 1))
    return layers


def build_complex(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of a pure list of facets.

    >>> build_complex([[0, 1, 2]]).f_vector
    (3, 3, 1)
    """
    facet_list = [canonical(f) for f in facets]
    if not facet_list or all(len(f) == 0 for f in facet_list):
        raise EmptyComplex("no facets given")
    sizes = {len(f) for f in facet_list}
    if len(sizes) != 1:
        raise NotPure(f"facets of mixed cardinalities {sorted(sizes)}")
    if any(v < 0 for f in facet_list for v in f):
        raise ValueError("vertex ids must be non-negative")
    return SimplicialComplex(_closure(set(facet_list)))


@dataclass(frozen=True)
class LinkView:
    """The link of ``base`` in ``parent``.

    Link vertices keep their parent ids, so ``vertex_map`` is the identity on
    the link's vertex set; it is kept so callers can compose maps explicitly.
    """

    parent: SimplicialComplex
    base: Simplex
    link_complex: SimplicialComplex
    vertex_map: Mapping[int, int] = field(repr=False)

    def lift(self, sigma: Simplex) -> Simplex:
        """The parent simplex base ∪ sigma."""
        return canonical(self.base + tuple(self.vertex_map[v] for v in sigma))


def link(X: SimplicialComplex, tau: Iterable[int]) -> LinkView:
    tau = canonical(tau)
    cached = X._links.get(tau)
    if cached is not None:
        return cached
    if tau and tau not in X:
        raise UnknownSimplex(f"{tau} is not a simplex of the complex")
    if not tau:
        sub = X
    else:
        base = set(tau)
        tops = [tuple(v for v in f if v not in base) for f in X.facets_containing(tau)]
        tops = [t for t in tops if t]
        sub = SimplicialComplex(_closure(tops))
    view = LinkView(X, tau, sub, {v: v for v in sub.vertices})
    X._links[tau] = view
    return view


def connected_components(X: SimplicialComplex) -> int:
    """Number of connected components of the 1-skeleton."""
    parent = {v: v for v in X.vertices}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in X.simplices(1):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in parent})


@dataclass
class ValidationReport:
    pure: bool
    connected: bool
    components: int
    disconnected_links: list[Simplex]
    r: int = 0

    @property
    def ok(self) -> bool:
        return self.pure and self.connected and not self.disconnected_links

    def to_dict(self) -> dict:
        return {
            "pure": self.pure,
            "connected": self.connected,
            "components": self.components,
            "disconnected_links": [list(t) for t in self.disconnected_links],
            "r": self.r,
            "ok": self.ok,
        }


def validate_hypotheses(X: SimplicialComplex) -> ValidationReport:
    """Check purity, connectivity, and connectivity of every link of dimension >= 1."""
    pure = all(X.facets_containing(s) for s in X)
    components = connected_components(X) if X.n >= 0 else 0
    bad = []
    for j in range(0, X.n - 1):
        for tau in X.simplices(j):
            if connected_components(link(X, tau).link_complex) != 1:
                bad.append(tau)
    return ValidationReport(pure, components == 1, components, bad)
