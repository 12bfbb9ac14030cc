"""Exact distinguishing numbers and indices by pruned exhaustive search.

Labelings are built one item (vertex or edge) at a time.  Each non-trivial
automorphism stays "alive" until some assigned pair ``x, sigma(x)`` carries
different labels; once every item it moves is assigned and it is still alive,
it preserves the labeling and the branch is cut.  Alive sets are Python ints
used as bitsets over the group.  Labels are assigned in restricted-growth
form (item k may only open label ``max_so_far + 1``), which is sound because
renaming labels never changes whether a labeling is distinguishing.
"""
from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BudgetExceeded, LabelRangeMismatch, NoEdges
from .graph_core import (Graph, complete_bipartite_graph, connected_components, find_isomorphism,
                         induced_subgraph, is_connected)
from .symmetry import (AUTOMORPHISM_VERTEX_CAP, ENUMERATION_CAP, AutomorphismGroup,
                       EdgeLabeling, automorphism_group, edge_actions, vertex_actions)


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = AUTOMORPHISM_VERTEX_CAP
    max_nodes: int = 10**7
    time_cap: float | None = None
    enumeration_cap: int = ENUMERATION_CAP

    def __post_init__(self):
        if self.max_vertices <= 0 or self.max_nodes <= 0 or self.enumeration_cap <= 0:
            raise ValueError("budget caps must be positive")
        if self.time_cap is not None and self.time_cap <= 0:
            raise ValueError("time cap must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "SearchBudget":
        """Defaults overridden by KRONSYM_MAX_VERTICES / _MAX_NODES / _TIME_CAP / _ENUM_CAP."""
        env = {}
        for key, var, conv in (("max_vertices", "KRONSYM_MAX_VERTICES", int),
                               ("max_nodes", "KRONSYM_MAX_NODES", int),
                               ("time_cap", "KRONSYM_TIME_CAP", float),
                               ("enumeration_cap", "KRONSYM_ENUM_CAP", int)):
            if os.environ.get(var):
                env[key] = conv(os.environ[var])
        env.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**env)


@dataclass(frozen=True)
class DistinguishingResult:
    """Minimal label count with a witness.

    ``exhaustive`` means every labeling with ``value - 1`` labels was refuted
    by complete search; when False, ``value`` is only a certified upper bound.
    """

    kind: str
    value: int
    certificate: tuple[int, ...] | dict[tuple[int, int], int]
    exhaustive: bool
    nodes: int = 0
    group_order: int = 1


class _OutOfBudget(Exception):
    pass


def _bits(indices: list[int], width: int) -> int:
    if not indices:
        return 0
    arr = np.zeros(width, dtype=bool)
    arr[indices] = True
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


def _greedy_order(size: int, actions: list[tuple[int, ...]]) -> list[int]:
    """Order items so that automorphisms with small support become fully assigned early."""
    if not actions:
        return list(range(size))
    acts = np.array(actions, dtype=np.int64)
    moved = acts != np.arange(size)
    remaining = moved.sum(axis=1).astype(np.int64)
    chosen = np.zeros(size, dtype=bool)
    order = []
    big = size + 1
    for _ in range(size):
        masked = np.where(remaining > 0, remaining, big)
        s = int(np.argmin(masked))
        if masked[s] == big:
            item = int(np.argmin(chosen))
        else:
            item = int(np.flatnonzero(moved[s] & ~chosen)[0])
        chosen[item] = True
        order.append(item)
        remaining -= moved[:, item]
    return order


class LabelingSearch:
    """Backtracking over labelings of ``size`` items under a set of item permutations."""

    def __init__(self, size: int, actions: Sequence[Sequence[int]], budget: SearchBudget | None = None):
        self.size = size
        self.actions = [tuple(a) for a in actions]
        self.budget = budget or SearchBudget()
        self.order = _greedy_order(size, self.actions)
        pos = [0] * size
        for p, x in enumerate(self.order):
            pos[x] = p
        width = len(self.actions)
        pairs: dict[tuple[int, int], list[int]] = {}
        complete: list[list[int]] = [[] for _ in range(size)]
        for s, act in enumerate(self.actions):
            last = -1
            for x, y in enumerate(act):
                if x != y:
                    i, j = pos[x], pos[y]
                    if i < j:
                        i, j = j, i
                    pairs.setdefault((i, j), []).append(s)
                    last = max(last, i)
            complete[last].append(s)
        self.partners: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        for (i, j), ss in sorted(pairs.items()):
            self.partners[i].append((j, _bits(sorted(set(ss)), width)))
        self.complete = [_bits(c, width) for c in complete]
        self.all_alive = (1 << width) - 1
        self.nodes = 0
        self._deadline = None

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget
        if self._deadline is not None and not self.nodes & 1023 and time.monotonic() > self._deadline:
            raise _OutOfBudget

    def _start(self):
        cap = self.budget.time_cap
        self._deadline = None if cap is None else time.monotonic() + cap

    def _to_items(self, labs: list[int]) -> tuple[int, ...]:
        out = [0] * self.size
        for p, x in enumerate(self.order):
            out[x] = labs[p]
        return tuple(out)

    def first(self, k: int) -> tuple[int, ...] | None:
        """Least distinguishing labeling (in search order) with labels from 1..k, or None.

        Raises ``_OutOfBudget`` when the node budget or time cap runs out.
        """
        if self.size == 0:
            return () if not self.actions else None
        if k <= 0:
            return None
        self._start()
        labs = [0] * self.size
        size, partners, complete = self.size, self.partners, self.complete

        def dfs(i: int, alive: int, top: int) -> bool:
            if i == size:
                return True
            for c in range(1, min(k, top + 1) + 1):
                self._tick()
                killed = 0
                for j, mask in partners[i]:
                    if labs[j] != c:
                        killed |= mask
                nxt = alive & ~killed
                if nxt & complete[i]:
                    continue
                labs[i] = c
                if dfs(i + 1, nxt, max(top, c)):
                    return True
            return False

        if dfs(0, self.all_alive, 0):
            return self._to_items(labs)
        return None

    def count(self, k: int) -> int:
        """Number of distinguishing labelings with labels from 1..k (all of them, not up to renaming)."""
        if self.size == 0:
            return 0 if self.actions else 1
        if k <= 0:
            return 0
        self._start()
        labs = [0] * self.size
        size, partners, complete = self.size, self.partners, self.complete

        def dfs(i: int, alive: int) -> int:
            if i == size:
                return 1
            total = 0
            for c in range(1, k + 1):
                self._tick()
                killed = 0
                for j, mask in partners[i]:
                    if labs[j] != c:
                        killed |= mask
                nxt = alive & ~killed
                if nxt & complete[i]:
                    continue
                labs[i] = c
                total += dfs(i + 1, nxt)
            return total

        return dfs(0, self.all_alive)

    def iter_labelings(self, k: int):
        """Yield every distinguishing labeling with labels 1..k, in item order."""
        if self.size == 0:
            if not self.actions:
                yield ()
            return
        self._start()
        labs = [0] * self.size
        size, partners, complete = self.size, self.partners, self.complete

        def dfs(i: int, alive: int):
            if i == size:
                yield self._to_items(labs)
                return
            for c in range(1, k + 1):
                self._tick()
                killed = 0
                for j, mask in partners[i]:
                    if labs[j] != c:
                        killed |= mask
                nxt = alive & ~killed
                if nxt & complete[i]:
                    continue
                labs[i] = c
                yield from dfs(i + 1, nxt)

        yield from dfs(0, self.all_alive)

    def is_distinguishing(self, labels: Sequence[int]) -> bool:
        for act in self.actions:
            if all(labels[x] == labels[act[x]] for x in range(self.size)):
                return False
        return True

    def random_upper(self, start: int, tries: int, seed: int) -> tuple[int, tuple[int, ...]]:
        """Smallest k >= start for which random sampling finds a distinguishing labeling."""
        rng = random.Random(seed)
        for k in range(max(start, 1), self.size + 1):
            for _ in range(tries):
                labels = tuple(rng.randint(1, k) for _ in range(self.size))
                if self.is_distinguishing(labels):
                    return k, labels
        return self.size, tuple(range(1, self.size + 1))


def _minimise(kind: str, search: LabelingSearch, group_order: int, lower: int = 1,
              seed: int = 0) -> DistinguishingResult:
    k = lower
    while True:
        try:
            cert = search.first(k)
        except _OutOfBudget:
            value, cert = search.random_upper(k, 200, seed)
            return DistinguishingResult(kind, value, cert, False, search.nodes, group_order)
        if cert is not None:
            return DistinguishingResult(kind, k, cert, True, search.nodes, group_order)
        k += 1


def _group(g: Graph, budget: SearchBudget, group: AutomorphismGroup | None) -> AutomorphismGroup:
    if group is None:
        group = automorphism_group(g, budget.max_vertices, budget.enumeration_cap)
    return group


def _actions(g: Graph, kind: str, group: AutomorphismGroup) -> tuple[int, list[tuple[int, ...]]]:
    if kind == "vertex":
        return g.n, vertex_actions(group)
    if kind == "edge":
        return g.m, edge_actions(g, group)
    raise ValueError(f"kind must be 'vertex' or 'edge', got {kind!r}")


def _inequivalent(search: LabelingSearch, k: int, want: int) -> list[tuple[int, ...]]:
    """Up to ``want`` pairwise inequivalent distinguishing labelings with labels 1..k."""
    size = search.size
    seen: set[tuple[int, ...]] = set()
    found = []
    for lab in search.iter_labelings(k):
        canon = min([lab] + [tuple(lab[a[x]] for x in range(size)) for a in search.actions])
        if canon not in seen:
            seen.add(canon)
            found.append(lab)
            if len(found) == want:
                break
    return found


def _by_components(g: Graph, kind: str, budget: SearchBudget, order: int) -> DistinguishingResult:
    """Solve a disconnected graph one isomorphism class of components at a time.

    A labeling of a disjoint union is distinguishing iff each component's
    labeling is, and no two isomorphic components carry equivalent labelings;
    so a class of t copies of C needs the least k with t inequivalent
    distinguishing k-labelings of C, and the answer is the max over classes.
    """
    classes: list[list[tuple[Graph, list[int], list[int]]]] = []
    for comp in connected_components(g):
        sub, old = induced_subgraph(g, comp)
        for cls in classes:
            phi = find_isomorphism(cls[0][0], sub, cap=budget.max_vertices)
            if phi is not None:
                cls.append((sub, old, phi))
                break
        else:
            classes.append([(sub, old, list(range(sub.n)))])

    vertex_labels = [0] * g.n
    edge_labels: dict[tuple[int, int], int] = {}
    value, nodes, exhaustive = 0, 0, True
    for cls in classes:
        rep = cls[0][0]
        if kind == "edge" and rep.m == 0:
            continue
        size, acts = _actions(rep, kind, automorphism_group(rep, budget.max_vertices, budget.enumeration_cap))
        search = LabelingSearch(size, acts, budget)
        try:
            k = 1
            while search.first(k) is None:
                k += 1
            reps = _inequivalent(search, k, len(cls))
            while len(reps) < len(cls):
                k += 1
                reps = _inequivalent(search, k, len(cls))
        except _OutOfBudget:
            exhaustive = False
            k = size + len(cls)
            reps = [tuple(range(j * size + 1, (j + 1) * size + 1)) for j in range(len(cls))]
        nodes += search.nodes
        value = max(value, k)
        rep_edges = rep.edges
        for (sub, old, phi), lab in zip(cls, reps):
            if kind == "vertex":
                for x in range(rep.n):
                    vertex_labels[old[phi[x]]] = lab[x]
            else:
                for (u, v), c in zip(rep_edges, lab):
                    a, b = old[phi[u]], old[phi[v]]
                    edge_labels[(min(a, b), max(a, b))] = c
    if not exhaustive:
        value = max(value, len(set(edge_labels.values() if kind == "edge" else vertex_labels)))
    cert = tuple(vertex_labels) if kind == "vertex" else dict(sorted(edge_labels.items()))
    return DistinguishingResult(kind, value, cert, exhaustive, nodes, order)


def _solve(g: Graph, kind: str, budget: SearchBudget, group: AutomorphismGroup | None,
           strict: bool) -> DistinguishingResult:
    group = _group(g, budget, group)
    if group.enumerated:
        size, acts = _actions(g, kind, group)
        search = LabelingSearch(size, acts, budget)
        order = group.order if kind == "vertex" else len(acts) + 1
        res = _minimise(kind, search, order)
        if kind == "edge":
            cert = dict(zip(g.edges, res.certificate))
            res = DistinguishingResult(kind, res.value, cert, res.exhaustive, res.nodes, res.group_order)
    elif not is_connected(g):
        res = _by_components(g, kind, budget, group.order)
    else:
        group.require_elements()
    if strict and not res.exhaustive:
        raise BudgetExceeded(f"{kind} distinguishing search exceeded budget", res)
    return res


def distinguishing_number(g: Graph, budget: SearchBudget | None = None,
                          group: AutomorphismGroup | None = None, strict: bool = False) -> DistinguishingResult:
    """D(G), the fewest vertex labels admitting a labeling fixed only by the identity.

    With ``strict`` a budget overrun raises ``BudgetExceeded`` (carrying the
    flagged upper-bound result) instead of returning it.  Disconnected graphs
    whose group is too large to list are solved component class by class.
    """
    budget = budget or SearchBudget()
    if g.n == 0:
        return DistinguishingResult("vertex", 0, (), True)
    return _solve(g, "vertex", budget, group, strict)


def distinguishing_index(g: Graph, budget: SearchBudget | None = None,
                         group: AutomorphismGroup | None = None, strict: bool = False) -> DistinguishingResult:
    """D'(G), the edge-labeling analogue; automorphisms fixing every edge are disregarded."""
    budget = budget or SearchBudget()
    if g.m == 0:
        raise NoEdges("distinguishing index needs at least one edge")
    return _solve(g, "edge", budget, group, strict)


def _search_for(g: Graph, kind: str, budget: SearchBudget,
                group: AutomorphismGroup | None) -> tuple[LabelingSearch, int]:
    group = _group(g, budget, group)
    group.require_elements()
    size, acts = _actions(g, kind, group)
    return LabelingSearch(size, acts, budget), group.order if kind == "vertex" else len(acts) + 1


def count_distinguishing_labelings(g: Graph, k: int, kind: str = "vertex",
                                   budget: SearchBudget | None = None,
                                   group: AutomorphismGroup | None = None) -> int:
    budget = budget or SearchBudget()
    search, _ = _search_for(g, kind, budget, group)
    try:
        return search.count(k)
    except _OutOfBudget:
        raise BudgetExceeded(f"counting {k}-labelings exceeded budget") from None


def count_inequivalent_distinguishing(g: Graph, k: int, kind: str = "vertex",
                                      budget: SearchBudget | None = None,
                                      group: AutomorphismGroup | None = None) -> int:
    """Orbits of distinguishing k-labelings under Aut(G).

    Distinguishing labelings have trivial stabiliser, so every orbit has
    exactly |group| members; for edges the group is the one induced on E(G).
    """
    budget = budget or SearchBudget()
    search, order = _search_for(g, kind, budget, group)
    try:
        total = search.count(k)
    except _OutOfBudget:
        raise BudgetExceeded(f"counting {k}-labelings exceeded budget") from None
    if total % order:
        raise AssertionError(f"{total} distinguishing labelings not divisible by group order {order}")
    return total // order


def lift_kronecker_edge_labeling(g: Graph, lg: EdgeLabeling, h: Graph, lh: EdgeLabeling,
                                 lk: EdgeLabeling, a: int | None = None,
                                 b: int | None = None) -> dict[tuple[int, int], int]:
    """Edge labeling of G x H from labelings of G, H and of K_{a,b}.

    The two product edges built from G-edge e (label i) and H-edge f (label p)
    both receive ``lk`` of the edge ``z_i z'_p``, where ``z_i`` is vertex
    ``i - 1`` and ``z'_p`` is vertex ``a + p - 1`` of K_{a,b}.
    """
    if set(lg) != set(g.edges) or set(lh) != set(h.edges):
        raise LabelRangeMismatch("factor labelings must cover exactly the factor edges")
    a = max(lg.values()) if a is None else a
    b = max(lh.values()) if b is None else b
    if any(not 1 <= v <= a for v in lg.values()) or any(not 1 <= v <= b for v in lh.values()):
        raise LabelRangeMismatch(f"factor labels must lie in 1..{a} and 1..{b}")
    if set(lk) != set(complete_bipartite_graph(a, b).edges):
        raise LabelRangeMismatch(f"lk must label exactly the edges of K_{{{a},{b}}}")
    nh = h.n
    out: dict[tuple[int, int], int] = {}
    for (v, v2), i in lg.items():
        for (w, w2), p in lh.items():
            lab = lk[(i - 1, a + p - 1)]
            for x, y in ((v * nh + w, v2 * nh + w2), (v * nh + w2, v2 * nh + w)):
                out[(min(x, y), max(x, y))] = lab
    return out
