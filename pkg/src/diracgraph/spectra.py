"""Spectral invariants: pseudo-determinants, zeta functions, tree counts.

The Dirac spectrum is symmetric about zero, so powers of negative
eigenvalues need a branch choice.  We take lambda^(-s) = e^(-i pi s)
|lambda|^(-s) for lambda < 0, which pairs each negative eigenvalue with
its positive partner into the factor (1 + e^(-i pi s)) and makes
zeta(-n) = tr(D^n) hold for every positive integer n: odd traces vanish,
even ones are real.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, exp, fsum, log

import numpy as np

from .complexes import CliqueComplex, SimpleGraph, build_complex, simplex_graph
from .errors import CapacityError, ComputationError, GraphMismatchError
from .hodge import KERNEL_TOL, kernel_cut
from .operators import Operators, build_operators

MINOR_ENUMERATION_CAP = 1_000_000


def charpoly_int(m) -> list[int]:
    """Exact characteristic polynomial det(xI - M) of an integer matrix.

    Faddeev-LeVerrier over Python integers; every interior division is
    exact.  Coefficients are returned in descending powers, leading 1.
    """
    a = [[int(x) for x in row] for row in np.asarray(m)]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    mk = [[int(i == j) for j in range(n)] for i in range(n)]
    coeffs = [1]
    for k in range(1, n + 1):
        am = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(am[i][i] for i in range(n))
        if trace % k:
            raise ArithmeticError("Faddeev-LeVerrier trace not divisible (non-integer input?)")
        c = -(trace // k)
        coeffs.append(c)
        for i in range(n):
            am[i][i] += c
        mk = am
    return coeffs


def pseudo_det(m: np.ndarray, tol: float = KERNEL_TOL) -> float:
    """Product of the nonzero eigenvalues of a symmetric matrix (empty = 1)."""
    m = np.asarray(m, dtype=float)
    if m.size == 0:
        return 1.0
    if not np.allclose(m, m.T):
        raise ValueError("pseudo_det expects a symmetric matrix")
    eigs = np.linalg.eigvalsh(m)
    cut = kernel_cut(eigs, tol)
    nonzero = eigs[np.abs(eigs) > cut]
    return float(np.prod(nonzero)) if nonzero.size else 1.0


def kirchhoff_trees(g: SimpleGraph) -> int:
    """Spanning trees of a connected graph via the scalar Laplacian."""
    if g.n == 0:
        raise ComputationError("spanning trees of the empty graph are undefined")
    if not g.is_connected():
        raise ComputationError(
            "graph is disconnected: it has no spanning tree and the "
            "pseudo-determinant formula does not apply"
        )
    if g.n == 1:
        return 1
    pos = g.position
    l0 = np.zeros((g.n, g.n))
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        l0[i, j] -= 1
        l0[j, i] -= 1
        l0[i, i] += 1
        l0[j, j] += 1
    return round(pseudo_det(l0) / g.n)


def simplex_graph_trees(c: CliqueComplex) -> int:
    """Spanning trees of the simplex graph, via Det(B - |D|)/v."""
    sg = simplex_graph(c)
    if not sg.is_connected():
        raise ComputationError("simplex graph is disconnected")
    ops = build_operators(c)
    adj = np.abs(ops.dirac).astype(float)
    lap = np.diag(adj.sum(axis=1)) - adj
    return round(pseudo_det(lap) / c.v)


def _det_int(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian (Bareiss) determinant of an integer matrix."""
    a = [row[:] for row in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def cauchy_binet_coeffs(f, g, k: int):
    """Sum of det(F_P) det(G_P) over all k x k row/column selections.

    For n x m matrices F, G this equals the k-th elementary symmetric
    function of the eigenvalues of F^T G, i.e. (-1)^(m-k) times the
    x^(m-k) coefficient of det(F^T G - x I).  Integer inputs are summed
    exactly.
    """
    fa = np.asarray(f)
    ga = np.asarray(g)
    if fa.shape != ga.shape:
        raise ValueError(f"shape mismatch: {fa.shape} vs {ga.shape}")
    n, m = fa.shape
    if not 0 <= k <= min(n, m):
        raise ValueError(f"minor size {k} out of range for shape {fa.shape}")
    if comb(n, k) * comb(m, k) > MINOR_ENUMERATION_CAP:
        raise CapacityError("too many minors to enumerate")
    exact = np.issubdtype(fa.dtype, np.integer) and np.issubdtype(ga.dtype, np.integer)
    total = 0 if exact else 0.0
    for rows in combinations(range(n), k):
        for cols in combinations(range(m), k):
            if exact:
                fp = [[int(fa[i, j]) for j in cols] for i in rows]
                gp = [[int(ga[i, j]) for j in cols] for i in rows]
                total += _det_int(fp) * _det_int(gp)
            else:
                sub_f = fa[np.ix_(rows, cols)].astype(float)
                sub_g = ga[np.ix_(rows, cols)].astype(float)
                total += float(np.linalg.det(sub_f) * np.linalg.det(sub_g))
    return total


def invariant_report(name: str, lhs: float, rhs: float, tolerance: float) -> dict:
    """One spectral identity as a JSON-ready pass/fail record."""
    scale = max(abs(rhs), 1.0)
    return {
        "name": name,
        "lhs": lhs,
        "rhs": rhs,
        "tolerance": tolerance,
        "pass": bool(abs(lhs - rhs) <= tolerance * scale),
    }


@dataclass(frozen=True)
class ZetaEvaluation:
    s: complex
    value: complex
    branch: str = "negative-axis phase e^(-i pi s)"


def _dirac_eigs(source) -> np.ndarray:
    if isinstance(source, Operators):
        return source.dirac_eigensystem[0]
    m = np.asarray(source, dtype=float)
    return np.linalg.eigvalsh(m)


def dirac_zeta(source, s: complex, tol: float = KERNEL_TOL) -> ZetaEvaluation:
    """Dirac zeta function: sum over nonzero eigenvalues of lambda^(-s)."""
    eigs = _dirac_eigs(source)
    s = complex(s)
    cut = kernel_cut(eigs, tol) if eigs.size else 0.0
    pos = eigs[eigs > cut]
    neg = -eigs[eigs < -cut]
    value = complex(np.sum(pos ** (-s))) if pos.size else 0j
    if neg.size:
        value += np.exp(-1j * np.pi * s) * complex(np.sum(neg ** (-s)))
    return ZetaEvaluation(s=s, value=value)


def zeta_derivative_at_zero(source, h: float = 1e-5, tol: float = KERNEL_TOL) -> complex:
    """Central finite difference of the Dirac zeta function at s = 0."""
    plus = dirac_zeta(source, h, tol).value
    minus = dirac_zeta(source, -h, tol).value
    return (plus - minus) / (2 * h)


def zeta_psd(eigs: np.ndarray, s: complex, tol: float = KERNEL_TOL) -> complex:
    """Zeta function of a positive semidefinite spectrum."""
    eigs = np.asarray(eigs, dtype=float)
    cut = kernel_cut(eigs, tol) if eigs.size else 0.0
    nonzero = eigs[eigs > cut]
    return complex(np.sum(nonzero ** (-complex(s)))) if nonzero.size else 0j


def eta(ops: Operators, s: complex, tol: float = KERNEL_TOL) -> complex:
    """Alternating sum over degrees of the block zeta functions.

    McKean-Singer pairing of the nonzero block spectra makes this vanish
    identically.
    """
    total = 0j
    for p in range(len(ops.complex.strata)):
        total += (-1) ** p * zeta_psd(ops.block_eigensystems[p][0], s, tol)
    return total


def analytic_torsion(ops: Operators, tol: float = KERNEL_TOL) -> float:
    """Ratio of even-degree to odd-degree nonzero eigenvalue products (= 1)."""
    log_even = 0.0
    log_odd = 0.0
    for p in range(len(ops.complex.strata)):
        eigs = ops.block_eigensystems[p][0]
        cut = kernel_cut(eigs, tol)
        s = fsum(log(x) for x in eigs[eigs > cut])
        if p % 2 == 0:
            log_even += s
        else:
            log_odd += s
    return exp(log_even - log_odd)


@dataclass(frozen=True)
class SpectralDistanceReport:
    distance: float
    bound: float


def spectral_distance(a: np.ndarray, b: np.ndarray) -> SpectralDistanceReport:
    """Lidskii comparison: mean eigenvalue gap vs mean entry difference."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"need symmetric matrices of one size, got {a.shape} and {b.shape}")
    n = a.shape[0]
    alpha = np.sort(np.linalg.eigvalsh(a))
    beta = np.sort(np.linalg.eigvalsh(b))
    distance = float(np.sum(np.abs(alpha - beta)) / n)
    bound = float(np.sum(np.abs(a - b)) / n)
    return SpectralDistanceReport(distance=distance, bound=bound)


def aligned_dirac_pair(g: SimpleGraph, h: SimpleGraph) -> tuple[np.ndarray, np.ndarray]:
    """Dirac matrices of two graphs embedded in the complete graph's indexing.

    Both graphs must share one vertex list.  Absent simplices become zero
    rows and columns, so the matrices are directly comparable and the
    Lidskii inequality applies.
    """
    if g.vertices != h.vertices:
        raise GraphMismatchError("aligned comparison requires a shared vertex list")
    if g.n > 12:
        raise CapacityError("complete-complex alignment is capped at 12 vertices")
    full = build_complex(SimpleGraph(g.vertices, combinations(g.vertices, 2)))
    out = []
    for graph in (g, h):
        ops = build_operators(build_complex(graph))
        big = np.zeros((full.v, full.v), dtype=np.int64)
        idx = [full.index[s] for s in ops.complex.simplices]
        big[np.ix_(idx, idx)] = ops.dirac
        out.append(big)
    return out[0], out[1]


def max_simplex_degree(*matrices: np.ndarray) -> int:
    """Largest column support among the given Dirac matrices."""
    return max(int(np.max(np.count_nonzero(m, axis=0))) if m.size else 0 for m in matrices)


def magnitude(g: SimpleGraph, cond_limit: float = 1e12) -> float:
    """Sum of the entries of Z^(-1) with Z_ij = exp(-geodesic distance)."""
    if g.n == 0:
        raise ComputationError("magnitude of the empty graph is undefined")
    if not g.is_connected():
        raise ComputationError("magnitude requires finite distances (graph is disconnected)")
    n = g.n
    pos = g.position
    z = np.empty((n, n))
    for v in g.vertices:
        dist = g.distances_from(v)
        for u, duv in dist.items():
            z[pos[v], pos[u]] = exp(-duv)
    cond = np.linalg.cond(z)
    if not np.isfinite(cond) or cond > cond_limit:
        raise ComputationError(f"similarity matrix is numerically singular (cond = {cond:.3e})")
    w = np.linalg.solve(z, np.ones(n))
    return float(np.sum(w))
