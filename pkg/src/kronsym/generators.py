"""Random samplers, small-graph enumeration and named fixtures."""
from __future__ import annotations

import random
from itertools import combinations, permutations

import numpy as np

from .graph_core import Graph, build_graph, is_connected

# smallest rigid, connected, non-bipartite, R-thin graphs; 6 vertices, hence Kronecker-prime
RIGID_A = build_graph(6, [(0, 2), (1, 2), (1, 3), (1, 4), (2, 4), (3, 5)])
RIGID_B = build_graph(6, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (2, 3), (3, 5)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected_graph(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    edges |= {e for e in combinations(range(n), 2) if e not in edges and rng.random() < extra}
    return build_graph(n, sorted(edges))


def random_connected_bipartite_graph(n: int, rng: random.Random, extra: float = 0.3) -> Graph:
    if n < 2:
        raise ValueError("a connected bipartite graph with an edge needs n >= 2")
    side = [0, 1] + [rng.randrange(2) for _ in range(n - 2)]
    rng.shuffle(side)
    a = [v for v in range(n) if side[v] == 0]
    b = [v for v in range(n) if side[v] == 1]
    # grow a spanning tree by always attaching a new vertex to an opposite-side tree vertex
    tree = [a[0], b[0]]
    edges = {tuple(sorted((a[0], b[0])))}
    rest = [v for v in range(n) if v not in tree]
    rng.shuffle(rest)
    for v in rest:
        choices = [u for u in tree if side[u] != side[v]]
        u = rng.choice(choices)
        edges.add(tuple(sorted((u, v))))
        tree.append(v)
    edges |= {tuple(sorted((u, v))) for u in a for v in b if rng.random() < extra}
    return build_graph(n, sorted(edges))


def all_graphs(n: int) -> list[Graph]:
    """One representative of every isomorphism class on n <= 6 vertices.

    Canonical form is the least edge bitmask over all n! relabellings,
    computed for every labelled graph at once.
    """
    if n > 6:
        raise ValueError("exhaustive enumeration is limited to 6 vertices")
    pairs = list(combinations(range(n), 2))
    index = {e: i for i, e in enumerate(pairs)}
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    canon = masks.copy()
    bits = [(masks >> i) & 1 for i in range(len(pairs))]
    for perm in permutations(range(n)):
        img = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            img |= bits[i] << index[(a, b) if a < b else (b, a)]
        np.minimum(canon, img, out=canon)
    reps = np.unique(canon)
    return [build_graph(n, [pairs[i] for i in range(len(pairs)) if (int(m) >> i) & 1]) for m in reps]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]
