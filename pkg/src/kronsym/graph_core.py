"""Simple undirected graphs on dense vertex indices and their structural predicates."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError, IndexOutOfRange, LoopRejected, SizeCapExceeded

ISOMORPHISM_CAP = 16


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``; ``adj[v]`` is the open neighborhood of v."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise IndexOutOfRange(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise LoopRejected(f"loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise IndexOutOfRange(f"neighbor {u} of {v} outside [0, {self.n})")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


@dataclass(frozen=True)
class Partition:
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for cls in self.classes:
            if not cls:
                raise ValueError("empty class in partition")
            if seen & cls:
                raise ValueError("partition classes overlap")
            seen |= cls

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def as_sets(self) -> set[frozenset[int]]:
        return set(self.classes)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


@dataclass(frozen=True)
class Bipartition:
    """Two sides covering V with every edge crossing, or ``sides is None`` if an odd cycle exists."""

    sides: tuple[frozenset[int], frozenset[int]] | None

    @property
    def is_bipartite(self) -> bool:
        return self.sides is not None


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite_graph(*sizes: int) -> Graph:
    """Complete multipartite graph; parts are consecutive index blocks in the given order."""
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    edges = [(u, v) for a, b in combinations(blocks, 2) for u in a for v in b]
    return build_graph(start, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}: side one is ``0..a-1``, side two is ``a..a+b-1``."""
    return complete_multipartite_graph(a, b)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return complete_bipartite_graph(1, leaves)


def paw_graph() -> Graph:
    """Triangle 0-1-2 with a pendant vertex 3 attached to 0."""
    return build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def complement(g: Graph) -> Graph:
    full = frozenset(range(g.n))
    return Graph(g.n, tuple(full - g.adj[v] - {v} for v in range(g.n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(frozenset(u + shift for u in nb) for nb in h.adj)
    return Graph(g.n + h.n, adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced on ``vertices``, relabelled in increasing order; returns the old indices too."""
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u in order for v in g.adj[u] if v in index and u < v]
    return build_graph(len(order), edges), order


def connected_components(g: Graph) -> Partition:
    seen = [False] * g.n
    classes = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.add(u)
                    queue.append(u)
        classes.append(frozenset(comp))
    return Partition(tuple(classes))


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def bipartition(g: Graph) -> Bipartition:
    """BFS 2-colouring; the lowest vertex of every component lands on side 0."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return Bipartition(None)
    return Bipartition((frozenset(v for v in range(g.n) if side[v] == 0),
                        frozenset(v for v in range(g.n) if side[v] == 1)))


def is_bipartite(g: Graph) -> bool:
    return bipartition(g).is_bipartite


def r_equivalence_classes(g: Graph) -> Partition:
    """Group vertices with identical open neighborhoods, ordered by smallest member."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return Partition(tuple(sorted((frozenset(c) for c in groups.values()), key=min)))


def is_r_thin(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def has_isolated_vertex(g: Graph) -> bool:
    return any(not nb for nb in g.adj)


def relabel(g: Graph, image: Sequence[int]) -> Graph:
    """Graph whose edges are ``{image[u], image[v]}`` for every edge uv of g."""
    return build_graph(g.n, [(image[u], image[v]) for u, v in g.edges])


def find_isomorphism(g: Graph, h: Graph, cap: int = ISOMORPHISM_CAP) -> list[int] | None:
    """An edge-preserving bijection ``V(g) -> V(h)`` as an image list, or None."""
    if max(g.n, h.n) > cap:
        raise SizeCapExceeded(f"isomorphism test limited to {cap} vertices")
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(map(len, g.adj)) != sorted(map(len, h.adj)):
        return None
    from ._search import PairSearch

    return PairSearch(g.adj, h.adj).find()


def are_isomorphic(g: Graph, h: Graph, cap: int = ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(g, h, cap) is not None
