"""Kronecker and Cartesian graph products on row-major flattened vertex pairs."""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidPower, NotBipartite
from .graph_core import Graph, Partition, bipartition, build_graph, is_bipartite, is_connected


class DisconnectedFactorWarning(UserWarning):
    """The two-set split is well defined, but its sets may fall apart into more components."""


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major correspondence between coordinate tuples and flat vertex indices."""

    dims: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def flatten(self, coords: Sequence[int]) -> int:
        idx = 0
        for x, d in zip(coords, self.dims, strict=True):
            if not 0 <= x < d:
                raise IndexError(f"coordinate {x} outside [0, {d})")
            idx = idx * d + x
        return idx

    def unflatten(self, idx: int) -> tuple[int, ...]:
        if not 0 <= idx < self.size:
            raise IndexError(f"index {idx} outside [0, {self.size})")
        coords = []
        for d in reversed(self.dims):
            idx, x = divmod(idx, d)
            coords.append(x)
        return tuple(reversed(coords))


def kronecker(g: Graph, h: Graph) -> Graph:
    """G x H: (u,x)~(v,y) iff uv in E(G) and xy in E(H)."""
    nh = h.n
    edges = []
    for u, v in g.edges:
        for x, y in h.edges:
            edges.append((u * nh + x, v * nh + y))
            edges.append((u * nh + y, v * nh + x))
    return build_graph(g.n * nh, edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    nh = h.n
    edges = [(u * nh + x, u * nh + y) for u in range(g.n) for x, y in h.edges]
    edges += [(u * nh + x, v * nh + x) for u, v in g.edges for x in range(nh)]
    return build_graph(g.n * nh, edges)


_PRODUCTS = {"kronecker": kronecker, "kron": kronecker, "cartesian": cartesian, "cart": cartesian}


def product_power(kind: str, g: Graph, k: int) -> Graph:
    """Left-associated k-fold product ``((G * G) * G) ...``."""
    if k < 1:
        raise InvalidPower(f"product power needs k >= 1, got {k}")
    try:
        op = _PRODUCTS[kind]
    except KeyError:
        raise ValueError(f"unknown product kind {kind!r}") from None
    out = g
    for _ in range(k - 1):
        out = op(out, g)
    return out


def bipartite_split(g: Graph, h: Graph) -> Partition:
    """The vertex sets (V0xW0)u(V1xW1) and (V0xW1)u(V1xW0) of G x H, as flat indices."""
    bg, bh = bipartition(g), bipartition(h)
    if not bg.is_bipartite or not bh.is_bipartite:
        raise NotBipartite("both factors must be bipartite")
    if not (is_connected(g) and is_connected(h)):
        warnings.warn("factor is disconnected; split sets need not be components",
                      DisconnectedFactorWarning, stacklevel=2)
    (v0, v1), (w0, w1) = bg.sides, bh.sides
    nh = h.n
    even = frozenset(a * nh + b for a0, b0 in ((v0, w0), (v1, w1)) for a in a0 for b in b0)
    odd = frozenset(a * nh + b for a0, b0 in ((v0, w1), (v1, w0)) for a in a0 for b in b0)
    return Partition(tuple(c for c in (even, odd) if c))


def kronecker_is_connected(g: Graph, h: Graph) -> bool:
    """Connectivity of G x H predicted from the factors alone (odd-cycle criterion)."""
    if g.n == 1 or h.n == 1:
        return g.n * h.n == 1
    if not (is_connected(g) and is_connected(h)):
        return False
    return not (is_bipartite(g) and is_bipartite(h))


def kronecker_component_count(g: Graph, h: Graph) -> int | None:
    """Predicted component count of G x H for connected factors on >= 2 vertices, else None."""
    if g.n < 2 or h.n < 2 or not (is_connected(g) and is_connected(h)):
        return None
    return 2 if is_bipartite(g) and is_bipartite(h) else 1
