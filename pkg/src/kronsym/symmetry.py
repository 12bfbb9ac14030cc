"""Automorphism groups and labeling-preservation checks.

The group is found with a stabiliser chain: pick a base vertex from the first
non-singleton cell of the refined colouring, test every vertex of that cell
for an automorphism sending the base vertex there (fixing earlier base
points), then individualise and descend.  The product of the orbit sizes is
the exact order, and products of the transversal elements enumerate the group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from ._search import PairSearch
from .errors import GroupNotEnumerated, SizeCapExceeded
from .graph_core import Graph

Permutation = tuple[int, ...]
VertexLabeling = Sequence[int]
EdgeLabeling = Mapping[tuple[int, int], int]

AUTOMORPHISM_VERTEX_CAP = 32
ENUMERATION_CAP = 10**6


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """``p o q``: apply q first, then p."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_identity(p: Sequence[int]) -> bool:
    return all(x == y for x, y in enumerate(p))


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.n)):
        return False
    return all({p[u] for u in g.adj[v]} == g.adj[p[v]] for v in range(g.n))


def edge_action(g: Graph, p: Sequence[int], edges: list[tuple[int, int]] | None = None,
                index: dict[tuple[int, int], int] | None = None) -> Permutation:
    """Permutation of edge indices (positions in ``g.edges``) induced by a vertex automorphism."""
    if edges is None:
        edges = g.edges
    if index is None:
        index = {e: i for i, e in enumerate(edges)}
    out = []
    for u, v in edges:
        a, b = p[u], p[v]
        out.append(index[(a, b) if a < b else (b, a)])
    return tuple(out)


@dataclass(frozen=True)
class AutomorphismGroup:
    n: int
    order: int
    generators: tuple[Permutation, ...]
    base: tuple[int, ...]
    elements: tuple[Permutation, ...] | None = None

    @property
    def enumerated(self) -> bool:
        return self.elements is not None

    def require_elements(self) -> tuple[Permutation, ...]:
        if self.elements is None:
            raise GroupNotEnumerated(f"group of order {self.order} was not enumerated")
        return self.elements

    def orbits(self) -> list[frozenset[int]]:
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gen in self.generators:
            for x, y in enumerate(gen):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        groups: dict[int, set[int]] = {}
        for x in range(self.n):
            groups.setdefault(find(x), set()).add(x)
        return [frozenset(groups[r]) for r in sorted(groups)]


def automorphism_group(g: Graph, max_vertices: int = AUTOMORPHISM_VERTEX_CAP,
                       enumeration_cap: int = ENUMERATION_CAP) -> AutomorphismGroup:
    """Exact Aut(G); elements are listed (lexicographically, identity first) when order <= cap."""
    n = g.n
    if n > max_vertices:
        raise SizeCapExceeded(f"automorphism search limited to {max_vertices} vertices, got {n}")
    ident = identity(n)
    search = PairSearch(g.adj, g.adj)
    colors = search.initial()
    base: list[int] = []
    transversals: list[list[Permutation]] = []
    while True:
        left = colors[:n]
        sizes: dict[int, int] = {}
        for c in left:
            sizes[c] = sizes.get(c, 0) + 1
        target = min((c for c, k in sizes.items() if k > 1), default=None)
        if target is None:
            break
        b = left.index(target)
        reps: dict[int, Permutation] = {b: ident}
        found_here: list[Permutation] = []
        for w in range(n):
            if w in reps or colors[n + w] != target:
                continue
            found = search.search(search.individualize(colors, b, w))
            if found is None:
                continue
            found_here.append(tuple(found))
            # close the partial orbit under everything found so far to skip redundant searches
            frontier = list(reps.items())
            while frontier:
                u, tau = frontier.pop()
                for s in found_here:
                    img = s[u]
                    if img not in reps:
                        reps[img] = compose(s, tau)
                        frontier.append((img, reps[img]))
        base.append(b)
        transversals.append([reps[w] for w in sorted(reps)])
        colors = search.individualize(colors, b, b)

    order = math.prod(len(t) for t in transversals)
    generators = tuple(sorted({p for t in transversals for p in t if p != ident}))
    elements = None
    if order <= enumeration_cap:
        items = [ident]
        for trans in reversed(transversals):
            items = [compose(t, x) for t in trans for x in items]
        elements = tuple(sorted(items))
    return AutomorphismGroup(n, order, generators, tuple(base), elements)


def _check_labels(values) -> None:
    for lab in values:
        if not isinstance(lab, int) or lab < 1:
            raise ValueError(f"labels must be positive integers, got {lab!r}")


def is_distinguishing_vertex_labeling(g: Graph, group: AutomorphismGroup,
                                      labels: VertexLabeling) -> bool:
    if len(labels) != g.n:
        raise ValueError("labeling must assign every vertex")
    _check_labels(labels)
    for sigma in group.require_elements():
        if is_identity(sigma):
            continue
        if all(labels[x] == labels[sigma[x]] for x in range(g.n)):
            return False
    return True


def is_distinguishing_edge_labeling(g: Graph, group: AutomorphismGroup,
                                    labels: EdgeLabeling) -> bool:
    """No automorphism that actually moves some edge preserves every edge label.

    Automorphisms fixing every edge (swapping the ends of a K_2 component,
    permuting isolated vertices) are invisible to edge labels and are ignored.
    """
    edges = g.edges
    if set(labels) != set(edges):
        raise ValueError("edge labeling must cover exactly E(G)")
    _check_labels(labels.values())
    lab = [labels[e] for e in edges]
    index = {e: i for i, e in enumerate(edges)}
    for sigma in group.require_elements():
        act = edge_action(g, sigma, edges, index)
        if is_identity(act):
            continue
        if all(lab[i] == lab[act[i]] for i in range(len(edges))):
            return False
    return True


def vertex_actions(group: AutomorphismGroup) -> list[Permutation]:
    """Non-identity elements, in group order."""
    return [p for p in group.require_elements() if not is_identity(p)]


def edge_actions(g: Graph, group: AutomorphismGroup) -> list[Permutation]:
    """Distinct non-identity permutations of ``g.edges`` induced by Aut(G), sorted."""
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}
    acts = {edge_action(g, p, edges, index) for p in group.require_elements()}
    return sorted(a for a in acts if not is_identity(a))
