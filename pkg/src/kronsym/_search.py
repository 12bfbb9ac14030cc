"""Individualisation-refinement search for bijections between two graphs.

Both graphs live side by side in one union graph (left copy on ``0..nl-1``,
right copy shifted by ``nl``).  Colourings are refined jointly, so colour ids
are comparable across the halves; a branch dies as soon as some colour class
has different sizes on the two sides.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence


class PairSearch:
    def __init__(self, left_adj: Sequence[frozenset[int]], right_adj: Sequence[frozenset[int]]):
        self.nl = len(left_adj)
        self.nr = len(right_adj)
        shift = self.nl
        self.left_adj = left_adj
        self.right_adj = right_adj
        self.adj = [tuple(a) for a in left_adj] + [tuple(u + shift for u in a) for a in right_adj]
        self.nodes = 0

    def refine(self, colors: list[int]) -> list[int]:
        adj = self.adj
        k = len(set(colors))
        while True:
            sigs = [(colors[v], tuple(sorted([colors[u] for u in nb]))) for v, nb in enumerate(adj)]
            ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
            colors = [ranks[s] for s in sigs]
            if len(ranks) == k:
                return colors
            k = len(ranks)

    def balanced(self, colors: list[int]) -> bool:
        return Counter(colors[:self.nl]) == Counter(colors[self.nl:])

    def individualize(self, colors: list[int], v: int, w: int) -> list[int] | None:
        """Give left vertex v and right vertex w a shared fresh colour, then refine."""
        if colors[v] != colors[self.nl + w]:
            return None
        out = list(colors)
        fresh = max(colors) + 1
        out[v] = fresh
        out[self.nl + w] = fresh
        out = self.refine(out)
        return out if self.balanced(out) else None

    def initial(self) -> list[int] | None:
        if self.nl != self.nr:
            return None
        colors = self.refine([0] * (self.nl + self.nr))
        return colors if self.balanced(colors) else None

    def _leaf(self, colors: list[int]) -> list[int] | None:
        where = {colors[self.nl + w]: w for w in range(self.nr)}
        image = [where[colors[v]] for v in range(self.nl)]
        for v in range(self.nl):
            if {image[u] for u in self.left_adj[v]} != self.right_adj[image[v]]:
                return None
        return image

    def search(self, colors: list[int] | None) -> list[int] | None:
        """Depth-first search for one bijection compatible with ``colors``."""
        if colors is None:
            return None
        self.nodes += 1
        left = colors[:self.nl]
        counts = Counter(left)
        target = min((c for c, k in counts.items() if k > 1), default=None)
        if target is None:
            return self._leaf(colors)
        v = left.index(target)
        for w in range(self.nr):
            if colors[self.nl + w] == target:
                found = self.search(self.individualize(colors, v, w))
                if found is not None:
                    return found
        return None

    def find(self) -> list[int] | None:
        return self.search(self.initial())

    def extend(self, prefix: Sequence[tuple[int, int]]) -> list[int] | None:
        """A bijection sending each ``v`` to ``w`` for ``(v, w)`` in prefix, if one exists."""
        colors = self.initial()
        for v, w in prefix:
            if colors is None:
                return None
            colors = self.individualize(colors, v, w)
        return self.search(colors)
