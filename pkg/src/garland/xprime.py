"""The auxiliary weighted 2-complex X' built on the (k-1)-simplices of X.

Vertices of X' are the (k-1)-simplices of X. Two of them span an edge when
their union is a k-simplex S (weight m(S)). Triangles come in two families:

* type 1: {U+v, U+w, U+x} with |U| = k-1 and U+v+w+x a (k+1)-simplex T,
  weight m(T);
* type 2: three facets of one k-simplex S, weight lam * m(S) / k.

With these weights the degree-1 balance constant is C_k + lam (k-1)/k and
every vertex-link matrix of X' is the Kronecker sum of the corresponding
link matrix of X with B = (lam/k)(k I - J).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .complex import Simplex, SimplicialComplex, build_complex, canonical, validate_hypotheses
from .errors import IndexingFailure, InvalidInput
from .spectral import (
    ZERO_TOL,
    eigenvalues,
    graph_matrix,
    kron_sum,
    link_matrix,
    matrix_B,
    matrix_B_exact,
    summarize,
)
from .weights import WeightFunction, as_fraction, link_weight, validate_weight


@dataclass(eq=False)
class XPrimeComplex:
    base: WeightFunction
    k: int
    lam: Fraction
    complex: SimplicialComplex
    weight: WeightFunction
    vertex_of: dict[Simplex, int]
    simplex_of: dict[int, Simplex]
    type1: frozenset[Simplex]
    type2: frozenset[Simplex]
    # 3-cliques of the 1-skeleton that are not 2-simplices (hollow type-1 triples)
    unfilled_triples: int = 0

    @property
    def C1_prime(self) -> Fraction:
        return self.weight.balance_constants[1]

    @property
    def C1_expected(self) -> Fraction:
        return self.base.balance_constants[self.k] + self.lam * (self.k - 1) / self.k

    def to_dict(self) -> dict:
        """Complex-file form of X' with explicit weights and the vertex dictionary."""
        return {
            "name": f"xprime-k{self.k}",
            "facets": [list(t) for t in self.complex.facets],
            "weights": {
                "convention": "explicit",
                "table": {
                    ",".join(map(str, s)): str(m) for s, m in sorted(self.weight.values.items())
                },
            },
            "vertex_dictionary": {str(i): list(s) for i, s in sorted(self.simplex_of.items())},
            "type1_triangles": len(self.type1),
            "type2_triangles": len(self.type2),
            "unfilled_triples": self.unfilled_triples,
        }


def build_xprime(W: WeightFunction, k: int, lam) -> XPrimeComplex:
    X = W.complex
    lam = as_fraction(lam)
    if not 1 <= k <= X.n - 1:
        raise InvalidInput(f"k={k} must lie in 1..{X.n - 1}")
    if lam <= 0:
        raise InvalidInput("lambda must be positive")
    m = W.values
    simplex_of = dict(enumerate(X.simplices(k - 1)))
    vertex_of = {s: i for i, s in simplex_of.items()}

    edges: dict[Simplex, Fraction] = {}
    for S in X.simplices(k):
        for a, b in combinations(S, 2):
            e = canonical((vertex_of[_drop(S, a)], vertex_of[_drop(S, b)]))
            edges[e] = m[S]

    weights: dict[Simplex, Fraction] = {}
    type1 = set()
    for T in X.simplices(k + 1):
        for U in combinations(T, k - 1):
            rest = [v for v in T if v not in U]
            tri = canonical(vertex_of[canonical(U + (v,))] for v in rest)
            type1.add(tri)
            weights[tri] = m[T]
    type2 = set()
    if k >= 2:
        for S in X.simplices(k):
            for a, b, c in combinations(S, 3):
                tri = canonical(vertex_of[_drop(S, x)] for x in (a, b, c))
                type2.add(tri)
                weights[tri] = lam * m[S] / k
    if type1 & type2:
        raise IndexingFailure("a triangle falls in both families")

    per_edge = {e: 0 for e in edges}
    for tri in type2:
        for e in combinations(tri, 2):
            per_edge[e] += 1
    if any(c != k - 1 for c in per_edge.values()):
        raise IndexingFailure("some edge of X' does not lie in exactly k-1 type-2 triangles")

    unfilled = _classify_cliques(X, k, simplex_of, edges, type1 | type2)

    complex_ = build_complex(sorted(type1 | type2))
    if set(complex_.simplices(1)) != set(edges) or complex_.vertex_count != len(simplex_of):
        raise IndexingFailure("X' skeleton disagrees with the enumerated edges")
    for e, w in edges.items():
        weights[e] = w
    for i, s in simplex_of.items():
        weights[(i,)] = m[s]
    weight = validate_weight(complex_, weights)
    return XPrimeComplex(
        W, k, lam, complex_, weight, vertex_of, simplex_of,
        frozenset(type1), frozenset(type2), unfilled,
    )


def _drop(S: Simplex, v: int) -> Simplex:
    return tuple(x for x in S if x != v)


def _classify_cliques(X, k, simplex_of, edges, triangles) -> int:
    """Count hollow 3-cliques; raise on any clique that fits neither family."""
    nbrs: dict[int, set[int]] = {}
    for a, b in edges:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    hollow = 0
    for a, b in edges:
        for c in nbrs[a] & nbrs[b]:
            if c <= b:
                continue
            tri = (a, b, c)
            if tri in triangles:
                continue
            sets = [set(simplex_of[i]) for i in tri]
            common = sets[0] & sets[1] & sets[2]
            union = canonical(sets[0] | sets[1] | sets[2])
            if len(common) == k - 1 and len(union) == k + 2 and union not in X:
                hollow += 1
            else:
                raise IndexingFailure(f"3-clique {[simplex_of[i] for i in tri]} fits neither family")
    return hollow


@dataclass
class LinkDecomposition:
    sigma: Simplex
    vertex: int
    index: list[tuple[int, int]]  # (removed slot i, added link vertex w), blockwise
    exact_match: bool
    max_entry_deviation: float
    spectral_deviation: float
    eigenvalues: tuple[float, ...]
    gap: float | None
    zero_multiplicity: int

    def to_dict(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "vertex": self.vertex,
            "size": len(self.index),
            "exact_match": self.exact_match,
            "max_entry_deviation": self.max_entry_deviation,
            "spectral_deviation": self.spectral_deviation,
            "eigenvalues": list(self.eigenvalues),
            "gap": self.gap,
        }


def xprime_link_decomposition(XP: XPrimeComplex, sigma_vertex: int, zero_tol: float = ZERO_TOL) -> LinkDecomposition:
    """Compare the link matrix of X' at a vertex with A_{X_sigma} ⊕ B, exactly and spectrally."""
    k, lam = XP.k, XP.lam
    sigma = XP.simplex_of[sigma_vertex]
    A = link_matrix(XP.base, sigma)
    w_list = A.vertices
    index = [(i, w) for i in range(k) for w in w_list]
    order = []
    for i, w in index:
        tau = canonical(sigma[:i] + sigma[i + 1 :] + (w,))
        if tau not in XP.vertex_of:
            raise IndexingFailure(f"{tau} is not a vertex of X'")
        order.append(XP.vertex_of[tau])

    W_sigma = link_weight(XP.weight, (sigma_vertex,))
    direct = graph_matrix(W_sigma)
    if sorted(order) != list(direct.vertices):
        raise IndexingFailure(f"link of {sigma} in X' is not indexed by (slot, link vertex) pairs")
    pos = {v: p for p, v in enumerate(direct.vertices)}
    perm = [pos[v] for v in order]
    D = direct.entries[np.ix_(perm, perm)]

    B_exact = matrix_B_exact(k, lam)
    size_w = len(w_list)
    exact = direct.C0 == A.C0 + B_exact[0][0]
    for p in range(len(index)):
        for q in range(len(index)):
            if p == q:
                continue
            (i, a), (j, b) = index[p], index[q]
            if i == j:
                want = A.signed_squares.get((p % size_w, q % size_w), Fraction(0))
            elif a == b:
                want = -(B_exact[i][j] ** 2)
            else:
                want = Fraction(0)
            got = direct.signed_squares.get((perm[p], perm[q]), Fraction(0))
            if got != want:
                exact = False

    K = kron_sum(A.entries, matrix_B(k, lam))
    entry_dev = float(np.max(np.abs(D - K))) if D.size else 0.0
    eig_direct = eigenvalues(D)
    eig_sum = sorted(a + b for a in eigenvalues(A.entries) for b in eigenvalues(matrix_B(k, lam)))
    spec_dev = max((abs(x - y) for x, y in zip(eig_direct, eig_sum)), default=0.0)
    summary = summarize(eig_direct, zero_tol, direct.components)
    return LinkDecomposition(
        sigma, sigma_vertex, index, exact, entry_dev, spec_dev,
        summary.eigenvalues, summary.lambda_gap, summary.zero_multiplicity,
    )


@dataclass
class XPrimeReport:
    k: int
    lam: Fraction
    C1_prime: Fraction
    C1_expected: Fraction
    threshold: Fraction  # half of C'_1
    links: list[LinkDecomposition] = field(default_factory=list)
    hypotheses_ok: bool = True
    unfilled_triples: int = 0
    spectral_tol: float = 1e-8
    entry_tol: float = 1e-10

    @property
    def C1_ok(self) -> bool:
        return self.C1_prime == self.C1_expected

    @property
    def min_gap(self) -> float | None:
        gaps = [d.gap for d in self.links if d.gap is not None]
        return min(gaps) if gaps else None

    @property
    def decomposition_ok(self) -> bool:
        return all(
            d.exact_match and d.max_entry_deviation <= self.entry_tol
            and d.spectral_deviation <= self.spectral_tol
            for d in self.links
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "lambda": str(self.lam),
            "C1_prime": str(self.C1_prime),
            "C1_expected": str(self.C1_expected),
            "C1_ok": self.C1_ok,
            "threshold": str(self.threshold),
            "min_gap": self.min_gap,
            "decomposition_ok": self.decomposition_ok,
            "hypotheses_ok": self.hypotheses_ok,
            "unfilled_triples": self.unfilled_triples,
            "links": [d.to_dict() for d in self.links],
        }


def verify_xprime(XP: XPrimeComplex, zero_tol: float = ZERO_TOL) -> XPrimeReport:
    report = XPrimeReport(
        XP.k, XP.lam, XP.C1_prime, XP.C1_expected, XP.C1_prime / 2,
        hypotheses_ok=validate_hypotheses(XP.complex).ok,
        unfilled_triples=XP.unfilled_triples,
    )
    for v in sorted(XP.simplex_of):
        report.links.append(xprime_link_decomposition(XP, v, zero_tol))
    return report
