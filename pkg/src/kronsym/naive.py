"""Brute-force reference implementations: all n! bijections, all k^N labelings.

Deliberately shares nothing with the search code beyond the Graph type.
"""
from __future__ import annotations

from itertools import permutations, product

from .graph_core import Graph


def naive_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    edges = {frozenset(e) for e in g.edges}
    out = []
    for p in permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in edges for u, v in g.edges):
            out.append(p)
    return out


def _edge_perms(g: Graph, autos) -> list[tuple[int, ...]]:
    edges = g.edges
    pos = {frozenset(e): i for i, e in enumerate(edges)}
    perms = {tuple(pos[frozenset((p[u], p[v]))] for u, v in edges) for p in autos}
    return [q for q in perms if any(i != j for i, j in enumerate(q))]


def _vertex_perms(autos) -> list[tuple[int, ...]]:
    return [p for p in autos if any(i != j for i, j in enumerate(p))]


def _distinguishes(lab, perms) -> bool:
    return not any(all(lab[i] == lab[q[i]] for i in range(len(lab))) for q in perms)


def naive_count(g: Graph, k: int, kind: str = "vertex") -> int:
    autos = naive_automorphisms(g)
    perms = _vertex_perms(autos) if kind == "vertex" else _edge_perms(g, autos)
    size = g.n if kind == "vertex" else g.m
    return sum(_distinguishes(lab, perms) for lab in product(range(1, k + 1), repeat=size))


def naive_minimum(g: Graph, kind: str = "vertex") -> int:
    autos = naive_automorphisms(g)
    perms = _vertex_perms(autos) if kind == "vertex" else _edge_perms(g, autos)
    size = g.n if kind == "vertex" else g.m
    k = 1
    while True:
        if any(_distinguishes(lab, perms) for lab in product(range(1, k + 1), repeat=size)):
            return k
        k += 1


def naive_distinguishing_number(g: Graph) -> int:
    return naive_minimum(g, "vertex")


def naive_distinguishing_index(g: Graph) -> int:
    return naive_minimum(g, "edge")
