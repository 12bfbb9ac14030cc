"""Boolean square and Cartesian skeleton."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotBooleanSquareEdge
from .graph_core import Graph, build_graph


@dataclass(frozen=True)
class BooleanSquare:
    """Non-loop edges of G^s as a simple graph, plus the vertices carrying a loop."""

    base: Graph
    loop_vertices: frozenset[int]


def boolean_square(g: Graph) -> BooleanSquare:
    edges = [(x, y) for x in range(g.n) for y in range(x + 1, g.n) if g.adj[x] & g.adj[y]]
    loops = frozenset(v for v in range(g.n) if g.adj[v])
    return BooleanSquare(build_graph(g.n, edges), loops)


def is_dispensable(g: Graph, x: int, y: int) -> bool:
    """Whether xy of G^s is a loop or is witnessed removable by some vertex z.

    z ranges over all of V(G) (x and y included); the inclusions are strict.
    """
    nx, ny = g.adj[x], g.adj[y]
    common = nx & ny
    if x == y:
        if not nx:
            raise NotBooleanSquareEdge(f"isolated vertex {x} carries no loop")
        return True
    if not common:
        raise NotBooleanSquareEdge(f"{x}{y} is not an edge of the Boolean square")
    for z in range(g.n):
        nz = g.adj[z]
        first = common < (nx & nz) or (nx < nz < ny)
        if not first:
            continue
        if common < (ny & nz) or (ny < nz < nx):
            return True
    return False


def cartesian_skeleton(g: Graph) -> Graph:
    sq = boolean_square(g).base
    return build_graph(g.n, [(x, y) for x, y in sq.edges if not is_dispensable(g, x, y)])
