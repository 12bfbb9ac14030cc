"""Theorem-verification suites producing JSON-lines reports.

Each suite checks closed forms and structural claims against the exact
solver or a direct construction, on small instances.  A case whose solver
run exceeds the vertex, enumeration or node caps is reported as
``skipped-budget`` rather than failed.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from math import comb
from itertools import combinations, combinations_with_replacement, product
from typing import Callable

from .distinguishing import (SearchBudget, count_distinguishing_labelings,
                             count_inequivalent_distinguishing, distinguishing_index,
                             distinguishing_number, lift_kronecker_edge_labeling)
from .errors import (BudgetExceeded, EnumerationCapExceeded, GroupNotEnumerated, SizeCapExceeded,
                     UnknownSuite)
from .families import (FormulaResult, MultipartiteSpec, d_complete_multipartite, d_kron_complete,
                       d_kron_complete_bipartite, d_kron_stars, dprime_bipartite_upper,
                       dprime_k2_power, dprime_kron_path_star, dprime_kron_paths, dprime_kron_stars,
                       dprime_kron_upper)
from .generators import (RIGID_A, RIGID_B, all_graphs, connected_graphs,
                         random_connected_bipartite_graph, random_graph)
from .graph_core import (Graph, are_isomorphic, bipartition, build_graph, complement,
                         complete_bipartite_graph, complete_graph, complete_multipartite_graph,
                         connected_components, cycle_graph, disjoint_union, empty_graph,
                         has_isolated_vertex, induced_subgraph, is_connected,
                         is_r_thin, path_graph, paw_graph, r_equivalence_classes, relabel,
                         star_graph)
from .products import (bipartite_split, cartesian, kronecker, kronecker_component_count,
                       kronecker_is_connected, product_power)
from .skeleton import boolean_square, cartesian_skeleton
from .symmetry import automorphism_group, is_automorphism, is_distinguishing_edge_labeling

PASS, FAIL, SKIP = "pass", "fail", "skipped-budget"
HARNESS_MAX_VERTICES = 48
_BUDGET_ERRORS = (BudgetExceeded, SizeCapExceeded, GroupNotEnumerated, EnumerationCapExceeded)


@dataclass(frozen=True)
class SuiteReportLine:
    suite: str
    case: str
    claim: str
    expected: str
    actual: str
    status: str
    elapsed_ms: float | None
    seed: int


class _Suite:
    def __init__(self, name: str, budget: SearchBudget, seed: int):
        self.name = name
        self.budget = budget
        self.seed = seed
        self.rng = random.Random(f"{name}:{seed}")
        self.lines: list[SuiteReportLine] = []

    def D(self, g: Graph) -> int:
        return distinguishing_number(g, self.budget, strict=True).value

    def Dp(self, g: Graph) -> int:
        return distinguishing_index(g, self.budget, strict=True).value

    def iso(self, g: Graph, h: Graph) -> bool:
        return are_isomorphic(g, h, cap=self.budget.max_vertices)

    def check(self, case: str, claim: str, expected, compute: Callable[[], object],
              accept: Callable[[object], bool] | None = None):
        """Run ``compute``; pass when ``accept(actual)`` (default: equality, or FormulaResult.admits)."""
        start = time.perf_counter()
        try:
            actual = compute()
        except _BUDGET_ERRORS as exc:
            status, shown = SKIP, f"budget: {type(exc).__name__}"
        else:
            if accept is not None:
                ok = accept(actual)
            elif isinstance(expected, FormulaResult):
                ok = expected.admits(actual)
            else:
                ok = actual == expected
            status, shown = (PASS if ok else FAIL), str(actual)
        elapsed = round((time.perf_counter() - start) * 1000, 3)
        self.lines.append(SuiteReportLine(self.name, case, claim, str(expected), shown, status,
                                          elapsed, self.seed))


def _bull() -> Graph:
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


NONBIP_RTHIN = {"K3": complete_graph(3), "C5": cycle_graph(5), "paw": paw_graph(),
                "bull": _bull(), "K4": complete_graph(4)}


def _suite_basics(s: _Suite):
    for n in range(3, 7):
        g = path_graph(n)
        s.check(f"D-P{n}", "D(P_n) = 2 for n >= 3", 2, lambda: s.D(g))
        s.check(f"Dp-P{n}", "D'(P_n) = 2 for n >= 3", 2, lambda: s.Dp(g))
    for n in range(3, 8):
        g = cycle_graph(n)
        want = 3 if n <= 5 else 2
        s.check(f"D-C{n}", "D(C_n) = 3 for n = 3,4,5 and 2 for n >= 6", want, lambda: s.D(g))
        s.check(f"Dp-C{n}", "D'(C_n) = 3 for n = 3,4,5 and 2 for n >= 6", want, lambda: s.Dp(g))
    for n in range(1, 7):
        s.check(f"D-K{n}", "D(K_n) = n", n, lambda: s.D(complete_graph(n)))
    for n in range(3, 7):
        g = path_graph(n)
        s.check(f"D-not-complete-P{n}", "D(G) = |V| only for complete G", True,
                lambda: s.D(g) < g.n)
    for p in range(2, 5):
        g = complete_bipartite_graph(p, p)
        s.check(f"D-K{p}{p}", "D(K_{p,p}) = p + 1", p + 1, lambda: s.D(g))
    s.check("Dp-K44", "D'(K_{p,p}) = 2 for p >= 4", 2, lambda: s.Dp(complete_bipartite_graph(4, 4)))
    s.check("D-rigid", "D(G) = 1 for asymmetric G", 1, lambda: s.D(RIGID_A))
    for n in range(1, 6):
        for i, g in enumerate(all_graphs(n)):
            s.check(f"complement-n{n}-{i:02d}", "D(G) = D(complement G) and equal |Aut|", True,
                    lambda: (s.D(g) == s.D(complement(g)) if g.n else True)
                    and automorphism_group(g).order == automorphism_group(complement(g)).order)


def _suite_kron_structure(s: _Suite):
    rng = s.rng
    for i in range(10):
        g = random_graph(rng.randint(1, 5), 0.5, rng)
        h = random_graph(rng.randint(1, 5), 0.5, rng)
        x = kronecker(g, h)
        s.check(f"size-{i:02d}", "|V(GxH)| = |V(G)||V(H)| and |E(GxH)| = 2|E(G)||E(H)|",
                (g.n * h.n, 2 * g.m * h.m), lambda: (x.n, x.m))
        s.check(f"commute-{i:02d}", "G x H isomorphic to H x G", True, lambda: s.iso(x, kronecker(h, g)))
    for i in range(5):
        g, h, k = (random_graph(rng.randint(1, 3), 0.6, rng) for _ in range(3))
        s.check(f"assoc-{i:02d}", "(G x H) x K isomorphic to G x (H x K)", True,
                lambda: s.iso(kronecker(kronecker(g, h), k), kronecker(g, kronecker(h, k))))
    for i in range(50):
        g = random_graph(rng.randint(2, 5), rng.choice([0.3, 0.5, 0.8]), rng)
        h = random_graph(rng.randint(2, 5), rng.choice([0.3, 0.5, 0.8]), rng)
        x = kronecker(g, h)
        predicted = kronecker_is_connected(g, h)
        count = kronecker_component_count(g, h)
        s.check(f"connectivity-{i:02d}", "GxH connected iff both connected and one has an odd cycle",
                (predicted, count), lambda: (is_connected(x), len(connected_components(x)) if count else None))
    for k in range(2, 6):
        for n in range(2, 6):
            s.check(f"complement-K{k}K{n}", "K_k x K_n is the complement of K_k [] K_n", True,
                    lambda: kronecker(complete_graph(k), complete_graph(n))
                    == complement(cartesian(complete_graph(k), complete_graph(n))))
    k2 = complete_graph(2)
    s.check("K2xK2", "K_2 x K_2 = 2K_2", True, lambda: s.iso(kronecker(k2, k2), disjoint_union(k2, k2)))
    s.check("K2xK3", "K_2 x K_3 = C_6", True, lambda: s.iso(kronecker(k2, complete_graph(3)), cycle_graph(6)))


def _suite_kron_complete(s: _Suite):
    for k in range(2, 7):
        for n in range(2, 7):
            if k * n > 12:
                continue
            f = d_kron_complete(k, n)
            s.check(f"K{k}xK{n}", "D(K_k x K_n) threshold formula", f,
                    lambda: s.D(kronecker(complete_graph(k), complete_graph(n))))


def _suite_relprime(s: _Suite):
    names = sorted(NONBIP_RTHIN)
    for a, b in combinations(names, 2):
        g, h = NONBIP_RTHIN[a], NONBIP_RTHIN[b]
        s.check(f"{a}x{b}", "D(G x H) = D(G [] H) for relatively prime non-bipartite R-thin G, H",
                True, lambda: s.D(kronecker(g, h)) == s.D(cartesian(g, h)))
        s.check(f"aut-{a}x{b}", "|Aut(G x H)| = |Aut(G)| |Aut(H)|", True,
                lambda: automorphism_group(kronecker(g, h), s.budget.max_vertices).order
                == automorphism_group(g).order * automorphism_group(h).order)


def _suite_powers(s: _Suite):
    for name in ("C5", "bull", "paw", "K4"):
        g = NONBIP_RTHIN[name]
        s.check(f"{name}^2", "D(xG^k) = 2 for k >= 2, G != K_3", 2,
                lambda: s.D(product_power("kronecker", g, 2)))
    k3 = complete_graph(3)
    s.check("K3^2", "D(K_3 x K_3) = 3", 3, lambda: s.D(product_power("kronecker", k3, 2)))
    s.check("K3^3", "D(xK_3^k) = 2 for k >= 3", 2, lambda: s.D(product_power("kronecker", k3, 3)))


def _multipartite_inequivalent(sizes, k: int) -> int:
    """Inequivalent distinguishing k-labelings of a complete multipartite graph.

    Each part needs distinct labels and equal-size parts need distinct label
    sets, so the count is the product over sizes a (multiplicity j) of C(C(k, a), j).
    """
    total = 1
    for a, j in MultipartiteSpec.from_sizes(sizes).parts:
        total *= comb(comb(k, a), j)
    return total


def _component_pipeline(m: int, n: int, p: int, q: int) -> int:
    """Split into components, apply the multipartite formula to each, then combine.

    A class of t isomorphic components needs t inequivalent labelings, so its
    value is raised from the per-component one until that many exist.
    """
    g, h = complete_bipartite_graph(m, n), complete_bipartite_graph(p, q)
    x = kronecker(g, h)
    classes: dict[tuple[int, ...], int] = {}
    for cls in bipartite_split(g, h):
        sub, _ = induced_subgraph(x, cls)
        sizes = tuple(sorted((len(side) for side in bipartition(sub).sides if side), reverse=True))
        classes[sizes] = classes.get(sizes, 0) + 1
    best = 0
    for sizes, t in classes.items():
        k = d_complete_multipartite(MultipartiteSpec.from_sizes(sizes)).value
        while _multipartite_inequivalent(sizes, k) < t:
            k += 1
        best = max(best, k)
    return best


def _suite_bipartite(s: _Suite):
    rng = s.rng
    for i in range(30):
        g = random_connected_bipartite_graph(rng.randint(2, 6), rng)
        h = random_connected_bipartite_graph(rng.randint(2, 6), rng)
        s.check(f"split-{i:02d}", "(V0xW0)u(V1xW1), (V0xW1)u(V1xW0) are the components of G x H",
                True, lambda: bipartite_split(g, h).as_sets() == connected_components(kronecker(g, h)).as_sets())
    for m, n, p, q in product(range(1, 4), repeat=4):
        if not (m >= n and q >= p):
            continue
        tag = f"K{m}{n}xK{p}{q}"
        f = d_kron_complete_bipartite(m, n, p, q)
        s.check(f"sizes-{tag}", "split sizes are mp+nq and mq+np", sorted([m * p + n * q, m * q + n * p]),
                lambda: sorted(len(c) for c in bipartite_split(complete_bipartite_graph(m, n),
                                                               complete_bipartite_graph(p, q))))
        s.check(f"pipeline-{tag}", "formula equals the component pipeline: split, multipartite value "
                "per component, isomorphic components raised until inequivalent", f,
                lambda: _component_pipeline(m, n, p, q))
        s.check(f"solver-{tag}", "D(K_{m,n} x K_{p,q}) formula vs exact solver", f,
                lambda: s.D(kronecker(complete_bipartite_graph(m, n), complete_bipartite_graph(p, q))))
    for n, m in ((3, 3), (3, 4), (4, 4)):
        f = d_kron_stars(n, m)
        s.check(f"stars-K1{n}xK1{m}", "D(K_{1,n} x K_{1,m}) = mn", f,
                lambda: s.D(kronecker(star_graph(n), star_graph(m))))
    for i in range(10):
        g = random_connected_bipartite_graph(rng.randint(2, 5), rng)
        h = random_connected_bipartite_graph(rng.randint(2, 5), rng)
        gs = sorted(map(len, bipartition(g).sides), reverse=True)
        hs = sorted(map(len, bipartition(h).sides))
        bound = d_kron_complete_bipartite(gs[0], gs[1], hs[0], hs[1]).value
        s.check(f"upper-{i:02d}", "D(G x H) <= D(K_{m,n} x K_{p,q}) for bipartite G, H",
                f"<={bound}", lambda: s.D(kronecker(g, h)), lambda v: v <= bound)


def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 0, -1):
        for rest in _partitions(total - p, p):
            yield (p,) + rest


def _suite_multipartite(s: _Suite):
    for total in range(1, 8):
        for sizes in _partitions(total, total):
            f = d_complete_multipartite(MultipartiteSpec.from_sizes(sizes))
            s.check("K" + "-".join(map(str, sizes)), "D(K_{a1^j1,...}) = min{p : C(p,a_i) >= j_i}", f,
                    lambda: s.D(complete_multipartite_graph(*sizes)))


def _rclass_bound(x: Graph) -> int:
    sizes = r_equivalence_classes(x).sizes()
    return d_complete_multipartite(MultipartiteSpec.from_sizes(sizes)).value


def _suite_bounds(s: _Suite):
    pool = [g for n in (2, 3, 5) for g in connected_graphs(n)]
    pairs = [(a, b) for a, b in combinations(range(len(pool)), 2)]
    s.rng.shuffle(pairs)
    for i, (a, b) in enumerate(pairs[:15]):
        g, h = pool[a], pool[b]

        def sandwich(g=g, h=h):
            x = kronecker(g, h)
            return s.D(cartesian(g, h)), s.D(x), _rclass_bound(x)

        s.check(f"rclass-{i:02d}", "D(G [] H) <= D(G x H) <= min{p : C(p,a_i) >= j_i} over R-classes",
                "ordered", sandwich, lambda t: t[0] <= t[1] <= t[2])
    thin = [g for n in range(2, 6) for g in connected_graphs(n) if is_r_thin(g)]
    pairs = list(combinations_with_replacement(range(len(thin)), 2))
    s.rng.shuffle(pairs)
    for i, (a, b) in enumerate(pairs[:10]):
        g, h = thin[a], thin[b]
        s.check(f"skeleton-{i:02d}", "D(G x H) <= D(S(G) [] S(H)) for R-thin G, H", "ordered",
                lambda: (s.D(kronecker(g, h)), s.D(cartesian(cartesian_skeleton(g), cartesian_skeleton(h)))),
                lambda t: t[0] <= t[1])


def _thin_pool() -> dict[str, Graph]:
    pool = {"K2": complete_graph(2), "K3": complete_graph(3), "K4": complete_graph(4),
            "P4": path_graph(4), "P5": path_graph(5), "C5": cycle_graph(5), "C6": cycle_graph(6),
            "C7": cycle_graph(7), "paw": paw_graph(), "bull": _bull()}
    return {k: g for k, g in pool.items() if is_r_thin(g) and not has_isolated_vertex(g)}


def _suite_skeleton(s: _Suite):
    c5 = cycle_graph(5)
    s.check("square-K2", "Boolean square of K_2 has no base edges", 0, lambda: boolean_square(complete_graph(2)).base.m)
    s.check("square-P3", "Boolean square of P_3 has base edge 02 only", [(0, 2)],
            lambda: boolean_square(path_graph(3)).base.edges)
    s.check("S-C5", "S(C_5) is the distance-two pentagon", True,
            lambda: cartesian_skeleton(c5).edges == boolean_square(c5).base.edges and s.iso(cartesian_skeleton(c5), c5))
    pool = _thin_pool()
    extra = [g for g in connected_graphs(5) if is_r_thin(g)]
    for i, g in enumerate(extra):
        pool[f"c5-{i:02d}"] = g
    names = sorted(pool)
    pairs = list(combinations_with_replacement(names, 2))
    fixed = [p for p in pairs if p[0] in ("C5", "C7", "paw") or p[1] in ("C5", "C7", "paw")]
    rest = [p for p in pairs if p not in fixed]
    s.rng.shuffle(rest)
    for a, b in fixed + rest[:20]:
        g, h = pool[a], pool[b]
        s.check(f"identity-{a}x{b}", "S(G x H) = S(G) [] S(H) vertex for vertex", True,
                lambda: cartesian_skeleton(kronecker(g, h)).edges
                == cartesian(cartesian_skeleton(g), cartesian_skeleton(h)).edges)
    for name in names:
        g = pool[name]
        perm = list(range(g.n))
        s.rng.shuffle(perm)
        s.check(f"transfer-{name}", "an isomorphism G -> H is an isomorphism S(G) -> S(H)", True,
                lambda: cartesian_skeleton(relabel(g, perm)) == relabel(cartesian_skeleton(g), perm))
        s.check(f"aut-{name}", "every automorphism of G is one of S(G)", True,
                lambda: all(is_automorphism(cartesian_skeleton(g), p) for p in automorphism_group(g).generators))


def _suite_paths(s: _Suite):
    k2 = complete_graph(2)
    for k in range(2, 5):
        x = product_power("kronecker", k2, k)
        copies = empty_graph(0)
        for _ in range(2 ** (k - 1)):
            copies = disjoint_union(copies, k2)
        s.check(f"K2^{k}-iso", "xK_2^k is 2^(k-1) disjoint K_2", True, lambda: s.iso(x, copies))
        s.check(f"K2^{k}-index", "D'(xK_2^k) = 2^(k-1)", dprime_k2_power(k), lambda: s.Dp(x))
    p3 = path_graph(3)
    s.check("P3xP2-iso", "P_3 x P_2 = P_3 u P_3", True,
            lambda: s.iso(kronecker(p3, path_graph(2)), disjoint_union(p3, p3)))
    s.check("P3xP3-iso", "P_3 x P_3 = K_{1,4} u C_4", True,
            lambda: s.iso(kronecker(p3, p3), disjoint_union(star_graph(4), cycle_graph(4))))
    for m in range(2, 8):
        for n in range(2, m + 1):
            if m * n > HARNESS_MAX_VERTICES:
                continue
            s.check(f"P{m}xP{n}", "D'(P_m x P_n) = 2 except (3,2) -> 3 and (3,3) -> 4",
                    dprime_kron_paths(m, n), lambda: s.Dp(kronecker(path_graph(m), path_graph(n))))


def _suite_k2h(s: _Suite):
    k2 = complete_graph(2)
    bip = {"P3": path_graph(3), "P4": path_graph(4), "P5": path_graph(5), "P6": path_graph(6),
           "C4": cycle_graph(4), "C6": cycle_graph(6), "K13": star_graph(3), "K14": star_graph(4),
           "K23": complete_bipartite_graph(2, 3), "K33": complete_bipartite_graph(3, 3)}
    for name, h in sorted(bip.items()):
        def run(h=h):
            d = s.Dp(h)
            obs = s.Dp(kronecker(k2, h))
            edge_count = count_inequivalent_distinguishing(h, d, "edge", s.budget)
            vertex_count = count_inequivalent_distinguishing(h, d, "vertex", s.budget)
            return d, obs, edge_count, vertex_count

        try:
            d, obs, ce, cv = run()
        except _BUDGET_ERRORS:
            s.check(f"sandwich-{name}", "d <= D'(K_2 x H) <= d+1 for bipartite H", "", run)
            continue
        s.check(f"sandwich-{name}", "d <= D'(K_2 x H) <= d+1 for bipartite H", f"[{d},{d + 1}]",
                lambda: obs, lambda v: d <= v <= d + 1)
        s.check(f"remark-edge-{name}", "D'(K_2 x H) = d+1 iff H has exactly one inequivalent "
                "distinguishing d-edge-labeling", d + 1 if ce == 1 else d, lambda: obs)
        s.check(f"remark-vertex-{name}", "D'(K_2 x H) = d+1 iff D(H, d) = 1 (vertex labelings, as printed)",
                d + 1 if cv == 1 else d, lambda: obs)
    for name in ("C5", "K3", "paw"):
        h = NONBIP_RTHIN[name]
        s.check(f"upper-{name}", "D'(K_2 x H) <= D'(H) + 1", "ordered",
                lambda: (s.Dp(kronecker(k2, h)), s.Dp(h)), lambda t: t[0] <= t[1] + 1)


def _suite_path_star(s: _Suite):
    for m in range(2, 7):
        for n in range(2, 5):
            s.check(f"P{m}xK1{n}", "D'(P_m x K_{1,n}): n for m >= 4, n+1 for m = 2, 2n for m = 3",
                    dprime_kron_path_star(m, n), lambda: s.Dp(kronecker(path_graph(m), star_graph(n))))


def _suite_star_index(s: _Suite):
    for n, m in ((3, 3), (4, 3)):
        s.check(f"K1{n}xK1{m}", "D'(K_{1,n} x K_{1,m}) = nm", dprime_kron_stars(n, m),
                lambda: s.Dp(kronecker(star_graph(n), star_graph(m))))
    for n, m in ((2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (8, 3)):
        b = dprime_bipartite_upper(n, m)
        s.check(f"bound-K{n}{m}", "D'(K_{n,m}) <= ceil(n^(1/m)) + 1", b,
                lambda: s.Dp(complete_bipartite_graph(n, m)))


def _suite_lift(s: _Suite):
    curated = [("paw", "paw"), ("paw", "K3"), ("K3", "C5"), ("paw", "C5"), ("K3", "K4")]
    for a, b in curated:
        g, h = NONBIP_RTHIN[a], NONBIP_RTHIN[b]

        def lifted(g=g, h=h):
            rg = distinguishing_index(g, s.budget, strict=True)
            rh = distinguishing_index(h, s.budget, strict=True)
            rk = distinguishing_index(complete_bipartite_graph(rg.value, rh.value), s.budget, strict=True)
            x = kronecker(g, h)
            lab = lift_kronecker_edge_labeling(g, rg.certificate, h, rh.certificate, rk.certificate)
            ok = is_distinguishing_edge_labeling(x, automorphism_group(x, s.budget.max_vertices), lab)
            return ok and len(set(lab.values())) <= rk.value

        s.check(f"lift-{a}x{b}", "lifted labeling from K_{D'(G),D'(H)} distinguishes G x H", True, lifted)
        s.check(f"bound-{a}x{b}", "D'(G x H) <= D'(K_{D'(G),D'(H)})", "ordered",
                lambda: (s.Dp(kronecker(g, h)), dprime_kron_upper(s.Dp(g), s.Dp(h), s.budget)),
                lambda t: t[1].admits(t[0]))
    s.check("rigid-AxA", "D'(G x G) = 2 for rigid prime G", 2, lambda: s.Dp(kronecker(RIGID_A, RIGID_A)))
    s.check("rigid-AxB", "D'(G x H) = 1 for non-isomorphic rigid G, H", 1, lambda: s.Dp(kronecker(RIGID_A, RIGID_B)))
    s.check("rigid-power-A2", "D'(xG^k) = 2 for rigid G, k = 2", 2,
            lambda: s.Dp(product_power("kronecker", RIGID_A, 2)))


def _suite_index_powers(s: _Suite):
    for name, g in (("C5", cycle_graph(5)), ("K3", complete_graph(3)), ("K4", complete_graph(4))):
        s.check(f"{name}^2", "D'(xG^2) = 2 (spot check)", 2, lambda: s.Dp(product_power("kronecker", g, 2)))
    s.check("K3^3", "D'(xK_3^3) = 2 (spot check)", 2, lambda: s.Dp(product_power("kronecker", complete_graph(3), 3)))


def _suite_counting(s: _Suite):
    s.check("P4-2", "inequivalent distinguishing 2-labelings of P_4", 6,
            lambda: count_inequivalent_distinguishing(path_graph(4), 2))
    s.check("K2-2", "inequivalent distinguishing 2-labelings of K_2", 1,
            lambda: count_inequivalent_distinguishing(complete_graph(2), 2))
    s.check("P3-1", "no distinguishing 1-labeling of P_3", 0,
            lambda: count_inequivalent_distinguishing(path_graph(3), 1))
    for n in range(1, 6):
        for i, g in enumerate(all_graphs(n)):
            order = automorphism_group(g).order
            for k in (2, 3):
                s.check(f"divisible-n{n}-{i:02d}-k{k}", "count of distinguishing k-labelings divisible by |Aut|",
                        0, lambda: count_distinguishing_labelings(g, k, "vertex", s.budget) % order)


def _suite_oracle(s: _Suite):
    from .naive import naive_distinguishing_index, naive_distinguishing_number

    for n in range(2, 6):
        for i, g in enumerate(connected_graphs(n)):
            s.check(f"n{n}-{i:02d}", "solver D, D' equal brute-force enumeration",
                    (naive_distinguishing_number(g), naive_distinguishing_index(g)),
                    lambda: (s.D(g), s.Dp(g)))


SUITES: dict[str, Callable[[_Suite], None]] = {
    "basics": _suite_basics,
    "bipartite": _suite_bipartite,
    "bounds": _suite_bounds,
    "counting": _suite_counting,
    "index_powers": _suite_index_powers,
    "k2h": _suite_k2h,
    "kron_complete": _suite_kron_complete,
    "kron_structure": _suite_kron_structure,
    "lift": _suite_lift,
    "multipartite": _suite_multipartite,
    "oracle": _suite_oracle,
    "path_star": _suite_path_star,
    "paths": _suite_paths,
    "powers": _suite_powers,
    "relprime": _suite_relprime,
    "skeleton": _suite_skeleton,
    "star_index": _suite_star_index,
}


def default_budget() -> SearchBudget:
    return SearchBudget.from_env(max_vertices=HARNESS_MAX_VERTICES)


def run_suite(suite: str, caps: SearchBudget | None = None, seed: int = 0) -> list[SuiteReportLine]:
    """Run one suite (or ``"all"``); lines are sorted by (suite, case)."""
    if suite == "all":
        names = sorted(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise UnknownSuite(f"unknown suite {suite!r}; known: all, {', '.join(sorted(SUITES))}")
    caps = caps or default_budget()
    lines = []
    for name in names:
        s = _Suite(name, caps, seed)
        SUITES[name](s)
        lines.extend(s.lines)
    return sorted(lines, key=lambda ln: (ln.suite, ln.case))


def emit_report(lines, timings: bool = True) -> bytes:
    """JSON-lines, UTF-8, keys in field order; ``timings=False`` nulls elapsed_ms for byte-stable output."""
    out = []
    for line in lines:
        row = asdict(line)
        if not timings:
            row["elapsed_ms"] = None
        out.append(json.dumps(row, ensure_ascii=False))
    return "".join(o + "\n" for o in out).encode("utf-8")


def exit_status(lines) -> int:
    return 1 if any(ln.status == FAIL for ln in lines) else 0
