"""Exterior derivative blocks, the Dirac matrix and the Laplacian.

Everything here is exact integer arithmetic; floating point only enters
once a caller eigendecomposes the results.  The block d_k maps functions
on k-simplices to functions on (k+1)-simplices with the alternating sign
rule; stacking the blocks below the diagonal gives d with d^2 = 0, and
D = d + d^T squares to the block-diagonal Laplace-Beltrami operator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .complexes import CliqueComplex, OrientationAssignment, build_complex, SimpleGraph
from .errors import ConsistencyError


def exterior_derivative(
    c: CliqueComplex, o: OrientationAssignment | None, k: int
) -> np.ndarray:
    """Signed incidence matrix d_k from the k-stratum to the (k+1)-stratum.

    Entry (y, x) is o(y)*o(x)*(-1)^i when x is y with its i-th vertex
    (ascending order) removed, else 0.
    """
    if not 0 <= k < c.top_dim:
        raise ValueError(f"degree {k} out of range for a complex of top dimension {c.top_dim}")
    o = o or OrientationAssignment()
    rows, cols = c.count(k + 1), c.count(k)
    lower = c.local_index[k]
    d = np.zeros((rows, cols), dtype=np.int64)
    for j, y in enumerate(c.stratum(k + 1)):
        oy = o.sign(y)
        for i in range(len(y)):
            x = y[:i] + y[i + 1 :]
            d[j, lower[x]] = oy * o.sign(x) * (-1) ** i
    return d


@dataclass(frozen=True)
class Operators:
    """The assembled operator family of one complex and orientation.

    Attributes
    ----------
    dblocks : the signed incidence matrices d_0, d_1, ...
    d       : v x v strictly lower-block-triangular exterior derivative
    dirac   : D = d + d^T
    laplacian / lap_blocks : L = D^2 and its per-degree diagonal blocks
    parity  : +-1 vector, +1 on even-dimensional simplices
    """

    complex: CliqueComplex
    orientation: OrientationAssignment
    dblocks: tuple[np.ndarray, ...]
    d: np.ndarray
    dirac: np.ndarray
    laplacian: np.ndarray
    lap_blocks: tuple[np.ndarray, ...]
    parity: np.ndarray

    @property
    def v(self) -> int:
        return self.complex.v

    @property
    def offsets(self) -> tuple[int, ...]:
        return self.complex.offsets

    def block_slice(self, k: int) -> slice:
        start = self.complex.offsets[k]
        return slice(start, start + self.complex.count(k))

    @cached_property
    def dirac_eigensystem(self) -> tuple[np.ndarray, np.ndarray]:
        return np.linalg.eigh(self.dirac.astype(float))

    @cached_property
    def block_eigensystems(self) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
        return tuple(np.linalg.eigh(b.astype(float)) for b in self.lap_blocks)


def parity_vector(c: CliqueComplex) -> np.ndarray:
    p = np.empty(c.v, dtype=np.int64)
    for k in range(len(c.strata)):
        p[c.offsets[k] : c.offsets[k] + c.count(k)] = (-1) ** k
    return p


def build_operators(
    c: CliqueComplex, orientation: OrientationAssignment | None = None
) -> Operators:
    """Assemble d, D = d + d^T and L = D^2, verifying the block structure."""
    o = orientation or OrientationAssignment()
    v = c.v
    dblocks = tuple(exterior_derivative(c, o, k) for k in range(max(c.top_dim, 0)))
    d = np.zeros((v, v), dtype=np.int64)
    for k, blk in enumerate(dblocks):
        rs, cs = c.offsets[k + 1], c.offsets[k]
        d[rs : rs + blk.shape[0], cs : cs + blk.shape[1]] = blk
    dirac = d + d.T
    lap = dirac @ dirac
    blocks = []
    for k in range(len(c.strata)):
        s = slice(c.offsets[k], c.offsets[k] + c.count(k))
        blocks.append(lap[s, s].copy())
    # d.d = 0 is equivalent to L having no off-stratum entries; a violation
    # here is an assembly bug, never a property of the input graph
    check = lap.copy()
    for k in range(len(c.strata)):
        s = slice(c.offsets[k], c.offsets[k] + c.count(k))
        check[s, s] = 0
    if check.any():
        raise ConsistencyError("Laplacian has nonzero off-stratum blocks (d^2 != 0)")
    return Operators(
        complex=c,
        orientation=o,
        dblocks=dblocks,
        d=d,
        dirac=dirac,
        laplacian=lap,
        lap_blocks=tuple(blocks),
        parity=parity_vector(c),
    )


def operators_for(g: SimpleGraph, orientation=None, max_dim=None) -> Operators:
    return build_operators(build_complex(g, max_dim), orientation)


def simplex_degree(ops: Operators, p: int, x: int) -> int:
    """Number of (p+1)-simplices containing the simplex with global index x.

    Reads off the Laplacian diagonal: L_p(x,x) - (p+1) for p >= 1 and
    L_0(x,x) for p = 0.
    """
    c = ops.complex
    if not 0 <= p < len(c.strata):
        raise IndexError(f"no stratum of dimension {p}")
    lo = c.offsets[p]
    if not lo <= x < lo + c.count(p):
        raise IndexError(f"global index {x} is not in stratum {p}")
    diag = int(ops.lap_blocks[p][x - lo, x - lo])
    return diag if p == 0 else diag - (p + 1)


def path_count(ops: Operators, x: int, y: int, k: int) -> int:
    """Number of length-k paths between simplices x and y in the simplex graph.

    Exact: powers of |D| are taken over Python integers.
    """
    if k < 0:
        raise ValueError("path length must be nonnegative")
    v = ops.v
    if not (0 <= x < v and 0 <= y < v):
        raise IndexError("simplex index out of range")
    adj = np.abs(ops.dirac).astype(object)
    power = np.eye(v, dtype=object)
    for _ in range(k):
        power = power @ adj
    return int(power[x, y])


def matrix_to_json(m: np.ndarray) -> str:
    """Dense integer matrix as a JSON array of arrays, globalIndex order."""
    return json.dumps([[int(x) for x in row] for row in m], separators=(",", ":"))


def matrix_to_text(m: np.ndarray) -> str:
    """Dense integer matrix as whitespace-separated text, one row per line."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in m)
