"""Normalized link matrices, their spectra, and Kronecker utilities.

For a connected weighted graph Z with degree-0 balance constant C0 the
matrix

    A_Z(u, u) = C0,   A_Z(u, v) = -m(uv) / sqrt(m(u) m(v))   for edges uv

is similar to the upper Laplacian on 0-cochains, so its smallest positive
eigenvalue is the spectral gap lambda(Z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .complex import Simplex, canonical, connected_components
from .errors import DisconnectedLink, EmptyLink, InvalidInput, NotSymmetric, SpectralMismatch
from .weights import WeightFunction, as_fraction, link_weight

ZERO_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class LinkMatrix:
    vertices: tuple[int, ...]
    entries: np.ndarray
    C0: Fraction
    # exact data: off-diagonal entries as signed squares, sign(a) * a**2
    signed_squares: dict[tuple[int, int], Fraction]
    components: int

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class SpectralSummary:
    eigenvalues: tuple[float, ...]
    zero_multiplicity: int
    lambda_gap: float | None
    components: int | None = None


def graph_matrix(W: WeightFunction) -> LinkMatrix:
    """A_Z for the 1-skeleton of a weighted complex of dimension >= 1."""
    Z = W.complex
    if Z.vertex_count == 0:
        raise EmptyLink("graph has no vertices")
    if Z.n < 1:
        raise InvalidInput("a link of dimension 0 has no balance constant C0")
    C0 = W.balance_constants[0]
    verts = Z.vertices
    pos = {v: i for i, v in enumerate(verts)}
    m = W.values
    A = np.zeros((len(verts), len(verts)))
    np.fill_diagonal(A, float(C0))
    squares: dict[tuple[int, int], Fraction] = {}
    for u, v in Z.simplices(1):
        sq = m[(u, v)] ** 2 / (m[(u,)] * m[(v,)])
        i, j = pos[u], pos[v]
        squares[(i, j)] = squares[(j, i)] = -sq
        A[i, j] = A[j, i] = -math.sqrt(float(sq))
    return LinkMatrix(verts, A, C0, squares, connected_components(Z))


def link_matrix(W: WeightFunction, tau: Sequence[int] = ()) -> LinkMatrix:
    """A_Z for Z the link of tau (tau = () gives the whole complex)."""
    return graph_matrix(link_weight(W, canonical(tau)))


def eigenvalues(M) -> list[float]:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise NotSymmetric(f"matrix of shape {M.shape} is not square")
    if M.size == 0:
        return []
    scale = max(1.0, float(np.max(np.abs(M))))
    if np.max(np.abs(M - M.T)) > 1e-12 * scale:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    return sorted(float(x) for x in np.linalg.eigvalsh(M))


def summarize(eigs: Sequence[float], zero_tol: float = ZERO_TOL, components: int | None = None) -> SpectralSummary:
    eigs = tuple(sorted(eigs))
    zeros = sum(1 for x in eigs if abs(x) <= zero_tol)
    positive = [x for x in eigs if x > zero_tol]
    if components is not None and zeros != components:
        raise SpectralMismatch(
            f"{zeros} numerically zero eigenvalues but {components} connected components"
        )
    return SpectralSummary(eigs, zeros, positive[0] if positive else None, components)


def spectrum(A: LinkMatrix, zero_tol: float = ZERO_TOL) -> SpectralSummary:
    return summarize(eigenvalues(A.entries), zero_tol, A.components)


def link_spectrum(W: WeightFunction, tau: Sequence[int] = (), zero_tol: float = ZERO_TOL):
    A = link_matrix(W, tau)
    return A, spectrum(A, zero_tol)


def lambda_gap(W: WeightFunction, tau: Sequence[int] = (), zero_tol: float = ZERO_TOL) -> float:
    """Smallest positive eigenvalue of the link matrix of tau; the link must be connected."""
    tau = canonical(tau)
    A = link_matrix(W, tau)
    if A.components != 1:
        raise DisconnectedLink(tau, A.components)
    summary = spectrum(A, zero_tol)
    if summary.lambda_gap is None:
        raise EmptyLink(f"link of {tau} has no positive eigenvalue")
    return summary.lambda_gap


def kron_product(M, Q) -> np.ndarray:
    return np.kron(np.asarray(M, dtype=float), np.asarray(Q, dtype=float))


def kron_sum(M, Q) -> np.ndarray:
    """M ⊕ Q = I_q ⊗ M + Q ⊗ I_m; eigenvalues are all pairwise sums."""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    return np.kron(np.eye(Q.shape[0]), M) + np.kron(Q, np.eye(M.shape[0]))


def matrix_B_exact(k: int, lam) -> list[list[Fraction]]:
    """(lam/k)(k I - J): diagonal lam(k-1)/k, off-diagonal -lam/k."""
    if k < 1:
        raise InvalidInput("k must be >= 1")
    lam = as_fraction(lam)
    if lam <= 0:
        raise InvalidInput("lambda must be positive")
    return [
        [lam * (k - 1) / k if i == j else -lam / k for j in range(k)] for i in range(k)
    ]


def matrix_B(k: int, lam) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in matrix_B_exact(k, lam)])
