"""Closed-form distinguishing numbers and indices for product families.

All arithmetic is on integers; roots and logarithms are found by bounded
search so the off-by-one thresholds are exact.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .errors import DomainError, PreconditionViolated

EXACT, INTERVAL, UPPER = "exact", "interval", "upper_bound"


@dataclass(frozen=True)
class FormulaResult:
    kind: str
    value: int | tuple[int, int]
    fallback: bool = False

    def __post_init__(self):
        if self.kind == INTERVAL:
            lo, hi = self.value
            if hi != lo + 1 or lo < 1:
                raise ValueError(f"interval must be {{d, d+1}} with d >= 1, got {self.value}")
        elif self.kind in (EXACT, UPPER):
            if not isinstance(self.value, int) or self.value < 1:
                raise ValueError(f"value must be a positive integer, got {self.value!r}")
        else:
            raise ValueError(f"unknown result kind {self.kind!r}")

    def admits(self, actual: int) -> bool:
        """Whether an observed value is consistent with this result."""
        if self.kind == EXACT:
            return actual == self.value
        if self.kind == INTERVAL:
            return actual in self.value
        return actual <= self.value

    def __str__(self):
        if self.kind == INTERVAL:
            return "{%d,%d}" % self.value
        if self.kind == UPPER:
            return f"<={self.value}"
        return str(self.value)


def exact(v: int) -> FormulaResult:
    return FormulaResult(EXACT, v)


def upper(v: int, fallback: bool = False) -> FormulaResult:
    return FormulaResult(UPPER, v, fallback)


@dataclass(frozen=True)
class MultipartiteSpec:
    """``parts[i] = (a_i, j_i)``: j_i partite sets of size a_i, sizes strictly decreasing."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("empty multipartite spec")
        sizes = [a for a, _ in self.parts]
        if any(a < 1 or j < 1 for a, j in self.parts):
            raise ValueError("part sizes and multiplicities must be positive")
        if any(x <= y for x, y in zip(sizes, sizes[1:])):
            raise ValueError("part sizes must be strictly decreasing")

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> "MultipartiteSpec":
        counts = Counter(sizes)
        return cls(tuple(sorted(counts.items(), reverse=True)))

    def sizes(self) -> list[int]:
        return [a for a, j in self.parts for _ in range(j)]


def int_root_ceil(n: int, k: int) -> int:
    """Least d >= 1 with d**k >= n."""
    if n < 1 or k < 1:
        raise DomainError("integer root needs n, k >= 1")
    lo, hi = 1, 1
    while hi**k < n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k >= n:
            hi = mid
        else:
            lo = mid + 1
    return lo


def ceil_log(k: int, d: int) -> int:
    """Least e >= 0 with d**e >= k."""
    if d < 2 or k < 1:
        raise DomainError("ceil_log needs base >= 2 and argument >= 1")
    e, p = 0, 1
    while p < k:
        p *= d
        e += 1
    return e


def d_kron_complete(k: int, n: int) -> FormulaResult:
    """D(K_k x K_n); the pair is ordered so that k <= n (the product is symmetric)."""
    if k < 2 or n < 2:
        raise DomainError(f"need k, n >= 2, got ({k}, {n})")
    k, n = min(k, n), max(k, n)
    d = int_root_ceil(n, k)
    if d < 2:
        raise DomainError("thresholds need d >= 2")
    assert (d - 1) ** k < n <= d**k
    t = d**k - ceil_log(k, d)
    if n <= t - 1:
        return exact(d)
    if n >= t + 1:
        return exact(d + 1)
    return FormulaResult(INTERVAL, (d, d + 1))


def d_complete_multipartite(spec: MultipartiteSpec) -> FormulaResult:
    """Least p with C(p, a_i) >= j_i for every part class."""
    best = 1
    for a, j in spec.parts:
        p = max(a, best)
        while comb(p, a) < j:
            p += 1
        best = max(best, p)
    return exact(best)


def d_kron_complete_bipartite(m: int, n: int, p: int, q: int) -> FormulaResult:
    """D(K_{m,n} x K_{p,q}) for m >= n >= 1 and q >= p >= 1."""
    if not (m >= n >= 1 and q >= p >= 1):
        raise PreconditionViolated(f"need m >= n >= 1 and q >= p >= 1, got {(m, n, p, q)}")
    if m == n and p == q:
        return exact(m * q + 1)
    return exact(m * q)


def d_kron_stars(n: int, m: int) -> FormulaResult:
    if n < 3 or m < 3:
        raise DomainError("star formula needs n, m >= 3; use d_kron_complete_bipartite below that")
    return exact(n * m)


def dprime_k2_power(k: int) -> FormulaResult:
    if k < 2:
        raise DomainError("needs k >= 2")
    return exact(2 ** (k - 1))


def dprime_kron_paths(m: int, n: int) -> FormulaResult:
    if m < 2 or n < 2:
        raise DomainError("path orders must be >= 2")
    pair = tuple(sorted((m, n)))
    if pair == (2, 3):
        return exact(3)
    if pair == (3, 3):
        return exact(4)
    return exact(2)


def dprime_kron_path_star(m: int, n: int) -> FormulaResult:
    """D'(P_m x K_{1,n}) with m the path order and n the number of leaves."""
    if m < 2 or n < 2:
        raise DomainError("needs m >= 2 and n >= 2")
    if m == 2:
        return exact(n + 1)
    if m == 3:
        return exact(2 * n)
    return exact(n)


def dprime_kron_stars(n: int, m: int) -> FormulaResult:
    if not n >= m >= 3:
        raise PreconditionViolated(f"needs n >= m >= 3, got ({n}, {m})")
    return exact(n * m)


def dprime_bipartite_upper(n: int, m: int) -> FormulaResult:
    """ceil(n ** (1/m)) + 1 bounds D'(K_{n,m}); the larger side is taken as n."""
    n, m = max(n, m), min(n, m)
    if m < 1:
        raise DomainError("part sizes must be positive")
    return upper(int_root_ceil(n, m) + 1)


def dprime_kron_upper(a: int, b: int, budget=None) -> FormulaResult:
    """Upper bound D'(K_{a,b}) on D'(G x H) where a = D'(G), b = D'(H).

    Computed exactly by the solver when it fits the budget; otherwise the
    root bound is returned with ``fallback`` set.
    """
    from .distinguishing import SearchBudget, distinguishing_index
    from .graph_core import complete_bipartite_graph

    if a < 1 or b < 1 or max(a, b) < 2:
        raise DomainError("needs a, b >= 1 and max(a, b) >= 2")
    res = distinguishing_index(complete_bipartite_graph(a, b), budget or SearchBudget())
    if res.exhaustive:
        return upper(res.value)
    return upper(dprime_bipartite_upper(a, b).value, fallback=True)


FORMULAS = {
    "d_kron_complete": (d_kron_complete, 2),
    "d_complete_multipartite": (lambda *sizes: d_complete_multipartite(MultipartiteSpec.from_sizes(sizes)), None),
    "d_kron_complete_bipartite": (d_kron_complete_bipartite, 4),
    "d_kron_stars": (d_kron_stars, 2),
    "dprime_k2_power": (dprime_k2_power, 1),
    "dprime_kron_paths": (dprime_kron_paths, 2),
    "dprime_kron_path_star": (dprime_kron_path_star, 2),
    "dprime_kron_stars": (dprime_kron_stars, 2),
    "dprime_bipartite_upper": (dprime_bipartite_upper, 2),
    "dprime_kron_upper": (dprime_kron_upper, 2),
}
