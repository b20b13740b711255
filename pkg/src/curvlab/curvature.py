"""Exact Bakry-Emery curvature via quadratic forms on the 2-ball.

The iterated gradient at a fixed vertex x is a quadratic form in the
function values on sphere 1 and sphere 2 once f(x) = 0 is imposed (a free
gauge choice, since all operators are translation invariant).  Eliminating
the sphere-2 block by a Schur complement realizes the infimum over those
values, and the curvature is twice the minimal eigenvalue of the reduced
form because Gamma(f)(x) = ||f restricted to sphere 1||^2 / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable

import numpy as np

from .graph import Graph, GraphError, NeighborOracle, ball
from .local_ops import ph_sides

DEFAULT_EIG_TOL = 1e-10


class FormError(GraphError):
    """Signals a malformed or inconsistent curvature form."""


@dataclass(frozen=True)
class QuadraticForm:
    """Dense symmetric form over an ordered vertex basis.

    The basis lists sphere-1 vertices first, then sphere-2 vertices; the
    center is excluded (its value is gauged to zero).  `n1` is the length
    of the sphere-1 prefix.
    """

    basis: tuple
    n1: int
    matrix: np.ndarray

    def __post_init__(self):
        m = self.matrix
        if m.shape != (len(self.basis), len(self.basis)):
            raise FormError("matrix dimension does not match basis")
        if m.size and float(np.max(np.abs(m - m.T))) > 1e-12:
            raise FormError("matrix is not symmetric within 1e-12")

    def evaluate(self, f) -> float:
        """f^T Q f for a dict (or vector) of values over the basis."""
        vec = np.array([f[v] for v in self.basis]) if isinstance(f, dict) else np.asarray(f)
        return float(vec @ self.matrix @ vec)


@dataclass(frozen=True)
class CurvatureReport:
    vertex: Hashable
    K: float
    dimension: float
    witness: dict | None
    eigen_tolerance: float


def curvature_form(o: NeighborOracle, x: Hashable) -> QuadraticForm:
    """Quadratic form Q with f^T Q f = Gamma_2(f)(x) for all f with f(x) = 0.

    The entries satisfy the polarization identity
    Q[i][j] = (Gamma_2(e_i + e_j)(x) - Gamma_2(e_i)(x) - Gamma_2(e_j)(x)) / 2
    for indicators e_i of the basis vertices; the assembly composes the
    operator definitions in matrix form over the ball (a Gram matrix per
    gradient evaluation, a row vector per Laplacian evaluation) and then
    drops the center row and column, which is exact under the f(x) = 0
    gauge.
    """
    _, bmap = ball(o, x, 2)
    verts = bmap.vertices
    if len(verts) == 1:
        raise FormError(f"vertex {x!r} is isolated; no curvature form exists")
    n1 = len(bmap.sphere_vertices(1))
    idx = bmap.index
    dim = len(verts)

    def gram(y) -> np.ndarray:
        # Gamma(f, g)(y) = (1/2) sum over w ~ y of (f(w)-f(y))(g(w)-g(y))
        m = np.zeros((dim, dim))
        iy = idx[y]
        for w in o.neighbors(y):
            iw = idx[w]
            m[iw, iw] += 1.0
            m[iy, iy] += 1.0
            m[iw, iy] -= 1.0
            m[iy, iw] -= 1.0
        return m / 2.0

    def lap_row(y) -> np.ndarray:
        # Delta f(y) = sum over w ~ y of (f(w) - f(y))
        row = np.zeros(dim)
        for w in o.neighbors(y):
            row[idx[w]] += 1.0
            row[idx[y]] -= 1.0
        return row

    gram_x = gram(x)
    lap_x = lap_row(x)
    delta_gamma = np.zeros((dim, dim))
    cross = np.zeros((dim, dim))
    for y in o.neighbors(x):
        delta_gamma += gram(y) - gram_x
        e_diff = np.zeros(dim)
        e_diff[idx[y]] = 1.0
        e_diff[idx[x]] -= 1.0
        cross += np.outer(e_diff, lap_row(y) - lap_x)
    # Gamma_2(f)(x) = (1/2) Delta Gamma(f)(x) - Gamma(f, Delta f)(x)
    q_full = 0.5 * delta_gamma - 0.25 * (cross + cross.T)
    q = q_full[1:, 1:]
    return QuadraticForm(verts[1:], n1, (q + q.T) / 2.0)


def schur_reduce(q: QuadraticForm) -> QuadraticForm:
    """Eliminate the sphere-2 block: Q_eff = Q11 - Q12 Q22^{-1} Q21.

    For every sphere-1 vector f1, f1^T Q_eff f1 equals the minimum of
    (f1,f2)^T Q (f1,f2) over sphere-2 vectors f2; the minimum exists
    because the sphere-2 block is positive definite (diagonal with entries
    one quarter of each sphere-2 vertex's sphere-1 degree).
    """
    k = q.n1
    if len(q.basis) == k:
        return q
    q11 = q.matrix[:k, :k]
    q12 = q.matrix[:k, k:]
    q22 = q.matrix[k:, k:]
    try:
        np.linalg.cholesky(q22)
    except np.linalg.LinAlgError as exc:
        raise FormError("sphere-2 block is not positive definite") from exc
    reduced = q11 - q12 @ np.linalg.solve(q22, q12.T)
    reduced = (reduced + reduced.T) / 2.0
    return QuadraticForm(q.basis[:k], k, reduced)


def min_eigenpair(m: np.ndarray, tol: float = DEFAULT_EIG_TOL) -> tuple[float, np.ndarray]:
    """Smallest eigenvalue and a unit eigenvector of a symmetric matrix."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise FormError(f"expected a square matrix, got shape {m.shape}")
    scale = float(np.max(np.abs(m))) if m.size else 0.0
    if float(np.max(np.abs(m - m.T))) > tol * (1.0 + scale):
        raise FormError("matrix is not symmetric within tolerance")
    vals, vecs = np.linalg.eigh((m + m.T) / 2.0)
    return float(vals[0]), vecs[:, 0]


def _reduced_form(o: NeighborOracle, x: Hashable, N: float):
    """Curvature form, dimension correction, and its Schur reduction."""
    q = curvature_form(o, x)
    if N != math.inf:
        if not (N > 0):
            raise FormError(f"dimension parameter must be positive, got {N}")
        mat = q.matrix.copy()
        ones = np.zeros(len(q.basis))
        ones[: q.n1] = 1.0
        mat -= np.outer(ones, ones) / N
        q = QuadraticForm(q.basis, q.n1, (mat + mat.T) / 2.0)
    return q, schur_reduce(q)


def bakry_emery_curvature(
    o: NeighborOracle,
    x: Hashable,
    N: float = math.inf,
    eig_tol: float = DEFAULT_EIG_TOL,
) -> CurvatureReport:
    """Largest K with Gamma_2(f)(x) >= (1/N)(Delta f)^2(x) + K Gamma(f)(x) for all f.

    With f(x) = 0 the constraint becomes positive semidefiniteness of the
    reduced form minus (K/2) I, so K is twice the minimal eigenvalue.  The
    witness extends the minimal eigenvector to sphere 2 by the Schur
    back-substitution f2 = -Q22^{-1} Q21 f1 and attains near-equality.
    Isolated vertices return +inf (supremum over an empty constraint set).
    """
    if not o.neighbors(x):
        return CurvatureReport(x, math.inf, N, None, eig_tol)
    q, reduced = _reduced_form(o, x, N)
    lam, vec = min_eigenpair(reduced.matrix, eig_tol)
    witness = {x: 0.0}
    witness.update(zip(reduced.basis, (float(t) for t in vec)))
    k = q.n1
    if len(q.basis) > k:
        q22 = q.matrix[k:, k:]
        q21 = q.matrix[k:, :k]
        f2 = -np.linalg.solve(q22, q21 @ vec)
        witness.update(zip(q.basis[k:], (float(t) for t in f2)))
    return CurvatureReport(x, 2.0 * lam, N, witness, eig_tol)


def _is_psd(m: np.ndarray, shift: float = 1e-12) -> bool:
    """Positive semidefiniteness via Cholesky of m + shift*I (no eigensolver)."""
    dim = m.shape[0]
    try:
        np.linalg.cholesky(m + shift * np.eye(dim))
        return True
    except np.linalg.LinAlgError:
        return False


def bakry_emery_curvature_bisect(
    o: NeighborOracle,
    x: Hashable,
    N: float = math.inf,
    tol: float = 1e-9,
) -> float:
    """Curvature by bisection on K with a Cholesky positive-semidefiniteness
    test of Q_eff - (K/2) I; independent of the eigensolver path."""
    if not o.neighbors(x):
        return math.inf
    _, reduced = _reduced_form(o, x, N)
    m = reduced.matrix
    dim = m.shape[0]
    # Gershgorin bounds on the spectrum of the reduced form
    radii = np.sum(np.abs(m), axis=1) - np.abs(np.diag(m))
    lo = float(np.min(np.diag(m) - radii)) - 1.0
    hi = float(np.max(np.diag(m) + radii)) + 1.0
    while hi - lo > tol / 2.0:
        mid = (lo + hi) / 2.0
        if _is_psd(m - mid * np.eye(dim)):
            lo = mid
        else:
            hi = mid
    return 2.0 * lo


def check_cd(
    o: NeighborOracle,
    x: Hashable,
    N: float,
    K: float,
    tol: float = 1e-9,
    mode: str = "eigen",
) -> tuple[bool, dict | None]:
    """Decide CD(N, K) at x; on failure also return a violating function.

    `mode="eigen"` compares K against the computed curvature; the witness
    of the curvature report then violates the pointwise inequality at any
    larger K.  `mode="bisection"` tests positive semidefiniteness of
    Q_eff - (K/2) I directly by Cholesky, avoiding the eigensolver.
    """
    if mode not in ("eigen", "bisection"):
        raise ValueError(f"unknown check_cd mode {mode!r}")
    if not o.neighbors(x):
        return True, None
    if mode == "bisection":
        _, reduced = _reduced_form(o, x, N)
        dim = reduced.matrix.shape[0]
        holds = _is_psd(reduced.matrix - (K / 2.0 - tol / 2.0) * np.eye(dim))
    else:
        holds = K <= bakry_emery_curvature(o, x, N).K + tol
    if holds:
        return True, None
    # the curvature witness violates the inequality at this K
    report = bakry_emery_curvature(o, x, N)
    return False, report.witness


def violates_ph(o: NeighborOracle, f: dict, x: Hashable, K: float) -> bool:
    """True when f strictly violates the pointwise CD(inf, K) inequality at x."""
    lhs, rhs = ph_sides(o, f, x, K)
    return lhs < rhs


def graph_curvature(
    g: Graph, N: float = math.inf, eig_tol: float = DEFAULT_EIG_TOL
) -> tuple[float, dict[int, CurvatureReport]]:
    """Infimum of the vertex curvatures of a finite graph, plus per-vertex reports."""
    if g.n == 0:
        raise GraphError("curvature of the empty graph is undefined")
    o = g.as_oracle()
    reports = {v: bakry_emery_curvature(o, v, N, eig_tol) for v in range(g.n)}
    return min(r.K for r in reports.values()), reports
