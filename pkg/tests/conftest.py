"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own code paths: cliques
are enumerated by testing all vertex subsets, ranks are computed exactly
over the rationals, spanning trees by edge-subset enumeration.  Expected
values in the tests come from these, from the worked example, or from
closed forms.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from diracgraph import SimpleGraph, build_complex, example_graph, operators_for


@pytest.fixture(scope="session")
def example():
    return example_graph()


@pytest.fixture(scope="session")
def example_ops(example):
    return operators_for(example)


def octahedron() -> SimpleGraph:
    """K_{2,2,2}: all pairs adjacent except the three antipodal ones."""
    verts = range(6)
    anti = {frozenset((0, 3)), frozenset((1, 4)), frozenset((2, 5))}
    edges = [e for e in combinations(verts, 2) if frozenset(e) not in anti]
    return SimpleGraph(verts, edges)


def icosahedron() -> SimpleGraph:
    edges = [
        (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
        (1, 6), (2, 6), (2, 7), (3, 7), (3, 8),
        (4, 8), (4, 9), (5, 9), (5, 10), (1, 10),
        (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
        (6, 11), (7, 11), (8, 11), (9, 11), (10, 11),
    ]
    return SimpleGraph(range(12), edges)


def truncated_cube() -> SimpleGraph:
    """Cube with each corner cut: 24 vertices, triangles on the cuts."""
    verts = [(c, i) for c in range(8) for i in range(3)]
    index = {v: n for n, v in enumerate(verts)}
    edges = []
    for c in range(8):
        for i, j in combinations(range(3), 2):
            edges.append((index[(c, i)], index[(c, j)]))
    for c in range(8):
        for i in range(3):  # axis i edge of the cube at corner c
            c2 = c ^ (1 << i)
            if c < c2:
                edges.append((index[(c, i)], index[(c2, i)]))
    return SimpleGraph(range(24), edges)


def erdos_renyi(n: int, p: float, rng: random.Random) -> SimpleGraph:
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph(range(n), edges)


def random_suite(count=50, seed=20130605, n_max=8, ps=(0.3, 0.5, 0.7)):
    """The deterministic random-graph suite used by identity tests."""
    rng = random.Random(seed)
    graphs = []
    while len(graphs) < count:
        n = rng.randint(3, n_max)
        p = rng.choice(ps)
        graphs.append(erdos_renyi(n, p, rng))
    return graphs


# ---------------------------------------------------------------- oracles

def brute_cliques(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Every vertex subset that induces a complete subgraph (by definition)."""
    out = []
    for r in range(1, g.n + 1):
        found = False
        for subset in combinations(g.vertices, r):
            if all(g.has_edge(u, v) for u, v in combinations(subset, 2)):
                out.append(subset)
                found = True
        if not found:
            break
    return out


def brute_chi(g: SimpleGraph) -> int:
    return sum((-1) ** (len(s) - 1) for s in brute_cliques(g))


def exact_rank(m) -> int:
    """Rank of an integer matrix, exact Gaussian elimination over Q."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(m)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def betti_exact(g: SimpleGraph) -> list[int]:
    """Betti numbers by exact rank-nullity over Q (no floating point)."""
    c = build_complex(g)
    from diracgraph import exterior_derivative

    ranks = []
    for k in range(c.top_dim):
        ranks.append(exact_rank(exterior_derivative(c, None, k)))
    ranks.append(0)  # the top d_k is the zero map
    out = []
    prev_rank = 0
    for k in range(len(c.strata)):
        out.append(c.count(k) - ranks[k] - prev_rank)
        prev_rank = ranks[k]
    return out


def spanning_trees_brute(g: SimpleGraph) -> int:
    """Count spanning trees by enumerating (n-1)-edge subsets."""
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    count = 0
    for subset in combinations(g.edges, g.n - 1):
        parent = {v: v for v in g.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            count += 1
    return count


def automorphisms_brute(g: SimpleGraph) -> list[dict[int, int]]:
    """All automorphisms by filtering every permutation (test oracle)."""
    from itertools import permutations

    out = []
    for perm in permutations(g.vertices):
        t = dict(zip(g.vertices, perm))
        if all(g.has_edge(t[u], t[v]) for u, v in g.edges):
            out.append(t)
    return out
