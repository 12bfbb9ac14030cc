"""Acceptance criteria 1-12, each reported as one PASS/FAIL line at exact tolerance."""
import random
from itertools import combinations, combinations_with_replacement

import networkx as nx

from conftest import ACCEPTANCE
from kronsym.distinguishing import (SearchBudget, count_distinguishing_labelings,
                                    count_inequivalent_distinguishing, distinguishing_index,
                                    distinguishing_number, lift_kronecker_edge_labeling)
from kronsym.families import (MultipartiteSpec, d_complete_multipartite, d_kron_complete,
                              d_kron_complete_bipartite, d_kron_stars, dprime_kron_path_star)
from kronsym.generators import RIGID_A, RIGID_B, connected_graphs, random_connected_bipartite_graph, random_graph
from kronsym.graph_core import (are_isomorphic, bipartition, build_graph, complement,
                                complete_bipartite_graph, complete_graph, complete_multipartite_graph,
                                connected_components, cycle_graph, disjoint_union, empty_graph,
                                has_isolated_vertex, is_connected, is_r_thin, path_graph, paw_graph,
                                r_equivalence_classes, star_graph)
from kronsym.harness import _component_pipeline
from kronsym.naive import naive_distinguishing_index, naive_distinguishing_number
from kronsym.products import (bipartite_split, cartesian, kronecker, kronecker_component_count,
                              kronecker_is_connected, product_power)
from kronsym.skeleton import cartesian_skeleton
from kronsym.symmetry import automorphism_group, is_distinguishing_edge_labeling

WIDE = SearchBudget(max_vertices=48)


def D(g):
    return distinguishing_number(g, WIDE, strict=True).value


def Dp(g):
    return distinguishing_index(g, WIDE, strict=True).value


def report(n, failures, checked, note=""):
    detail = f"{checked - len(failures)}/{checked} checks"
    if failures:
        detail += "; failing: " + ", ".join(map(str, failures[:8]))
    if note:
        detail += f" ({note})"
    ACCEPTANCE[n] = (not failures, detail)
    print(f"criterion {n}: {'PASS' if not failures else 'FAIL'} {detail}")
    assert not failures, detail


def atlas(max_n):
    """Every graph on <= max_n vertices, one per isomorphism class, from networkx's atlas."""
    for ref in nx.graph_atlas_g():
        if ref.number_of_nodes() > max_n:
            break
        yield build_graph(ref.number_of_nodes(), list(ref.edges()))


def bull():
    return build_graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def test_01_oracle_equivalence():
    fails, checked, on_six = [], 0, 0
    for i, g in enumerate(atlas(6)):
        if g.n == 0 or not is_connected(g):
            continue
        on_six += g.n == 6
        checked += 1
        got = (D(g), Dp(g) if g.m else None)
        want = (naive_distinguishing_number(g), naive_distinguishing_index(g) if g.m else None)
        if got != want:
            fails.append(f"atlas#{i}:{got}!={want}")
    assert on_six == 112
    report(1, fails, checked, "all connected graphs on 1..6 vertices, 112 of them on 6")


def test_02_known_constants():
    cases = [(f"D(P{n})", D(path_graph(n)), 2) for n in range(3, 7)]
    cases += [(f"D'(P{n})", Dp(path_graph(n)), 2) for n in range(3, 7)]
    for n in range(3, 8):
        want = 3 if n <= 5 else 2
        cases += [(f"D(C{n})", D(cycle_graph(n)), want), (f"D'(C{n})", Dp(cycle_graph(n)), want)]
    cases += [(f"D(K{n})", D(complete_graph(n)), n) for n in range(1, 7)]
    cases += [(f"D(K{p},{p})", D(complete_bipartite_graph(p, p)), p + 1) for p in (2, 3)]
    cases.append(("D(K3xK3)", D(kronecker(complete_graph(3), complete_graph(3))), 3))
    report(2, [f"{name}={got}" for name, got, want in cases if got != want], len(cases))


def test_03_kronecker_structure():
    k2 = complete_graph(2)
    p3 = path_graph(3)
    cases = [("K2xK2~2K2", are_isomorphic(kronecker(k2, k2), disjoint_union(k2, k2)), True)]
    for k in (2, 3, 4):
        x = product_power("kronecker", k2, k)
        copies = empty_graph(0)
        for _ in range(2 ** (k - 1)):
            copies = disjoint_union(copies, k2)
        cases += [(f"K2^{k} iso", are_isomorphic(x, copies), True), (f"D'(K2^{k})", Dp(x), 2 ** (k - 1))]
    p3p2, p3p3 = kronecker(p3, path_graph(2)), kronecker(p3, p3)
    cases += [("P3xP2~2P3", are_isomorphic(p3p2, disjoint_union(p3, p3)), True), ("D'(P3xP2)", Dp(p3p2), 3),
              ("P3xP3~K14+C4", are_isomorphic(p3p3, disjoint_union(star_graph(4), cycle_graph(4))), True),
              ("D'(P3xP3)", Dp(p3p3), 4)]
    cases += [(f"D'(P{m}xP{n})", Dp(kronecker(path_graph(m), path_graph(n))), 2)
              for m, n in ((4, 3), (4, 4), (5, 4), (7, 5))]
    report(3, [f"{name}={got}" for name, got, want in cases if got != want], len(cases))


def test_04_complement_identity_and_thresholds():
    fails, checked = [], 0
    for k in range(2, 6):
        for n in range(2, 6):
            checked += 1
            kk, kn = complete_graph(k), complete_graph(n)
            if kronecker(kk, kn) != complement(cartesian(kk, kn)):
                fails.append(f"complement({k},{n})")
    for k in range(2, 6):
        for n in range(2, 6):
            if k * n > 10:
                continue
            checked += 1
            f = d_kron_complete(k, n)
            got = D(kronecker(complete_graph(k), complete_graph(n)))
            if not f.admits(got):
                fails.append(f"D(K{k}xK{n})={got} vs formula {f}")
    report(4, fails, checked)


def test_05_bipartite_split():
    rng = random.Random(5)
    fails, checked = [], 0
    for i in range(30):
        g = random_connected_bipartite_graph(rng.randint(2, 6), rng)
        h = random_connected_bipartite_graph(rng.randint(2, 6), rng)
        checked += 1
        if bipartite_split(g, h).as_sets() != connected_components(kronecker(g, h)).as_sets():
            fails.append(f"pair {i}")
    for m, n, p, q in ((1, 1, 1, 1), (2, 1, 1, 2), (3, 2, 1, 3), (3, 3, 2, 2), (2, 2, 2, 3)):
        checked += 1
        sizes = sorted(len(c) for c in bipartite_split(complete_bipartite_graph(m, n),
                                                       complete_bipartite_graph(p, q)))
        if sizes != sorted([m * p + n * q, m * q + n * p]):
            fails.append(f"sizes K{m}{n}xK{p}{q}")
    report(5, fails, checked)


def _partitions(total, largest):
    if total == 0:
        yield ()
        return
    for p in range(min(total, largest), 0, -1):
        for rest in _partitions(total - p, p):
            yield (p,) + rest


def test_06_complete_bipartite_and_star_formulas():
    fails, checked = [], 0
    for m in range(1, 4):
        for n in range(1, m + 1):
            for q in range(1, 4):
                for p in range(1, q + 1):
                    checked += 1
                    f = d_kron_complete_bipartite(m, n, p, q).value
                    pipe = _component_pipeline(m, n, p, q)
                    if f != pipe:
                        fails.append(f"K{m},{n}xK{p},{q}: formula {f}, pipeline {pipe}")
    for n, m in ((3, 3), (3, 4), (4, 3)):
        checked += 1
        if d_kron_stars(n, m).value != _component_pipeline(n, 1, 1, m):
            fails.append(f"stars {n},{m}")
    for total in range(1, 8):
        for sizes in _partitions(total, total):
            checked += 1
            f = d_complete_multipartite(MultipartiteSpec.from_sizes(sizes)).value
            if f != D(complete_multipartite_graph(*sizes)):
                fails.append(f"K{sizes}")
    report(6, fails, checked, "pipeline raises isomorphic components until enough inequivalent labelings exist")


def test_07_skeleton_identity():
    fixtures = {"paw": paw_graph(), "C5": cycle_graph(5), "C7": cycle_graph(7), "bull": bull(),
                "K3": complete_graph(3), "K4-e": build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])}
    pool = {k: g for k, g in fixtures.items() if is_r_thin(g) and not has_isolated_vertex(g)}
    assert "K4-e" not in pool  # its two degree-2 vertices are R-equivalent
    for i, g in enumerate(connected_graphs(5) + connected_graphs(6)):
        if is_r_thin(g):
            pool[f"g{i}"] = g
    names = sorted(pool)
    rng = random.Random(7)
    pairs = [(a, b) for a in ("paw", "C5", "C7") for b in names]
    others = list(combinations_with_replacement(names, 2))
    rng.shuffle(others)
    pairs += others[:40]
    fails = [f"{a}x{b}" for a, b in pairs
             if cartesian_skeleton(kronecker(pool[a], pool[b])).edges
             != cartesian(cartesian_skeleton(pool[a]), cartesian_skeleton(pool[b])).edges]
    report(7, fails, len(pairs))


def test_08_bound_suites():
    rng = random.Random(8)
    fails, checked = [], 0
    pool = [g for n in (2, 3, 4) for g in connected_graphs(n)]
    pairs = list(combinations(range(len(pool)), 2))
    rng.shuffle(pairs)
    for a, b in pairs[:15]:
        g, h = pool[a], pool[b]
        x = kronecker(g, h)
        upper = d_complete_multipartite(MultipartiteSpec.from_sizes(r_equivalence_classes(x).sizes())).value
        checked += 1
        lo, mid = D(cartesian(g, h)), D(x)
        if not lo <= mid <= upper:
            fails.append(f"rclass {a},{b}: {lo},{mid},{upper}")
    thin = [g for n in range(2, 6) for g in connected_graphs(n) if is_r_thin(g)]
    pairs = list(combinations_with_replacement(range(len(thin)), 2))
    rng.shuffle(pairs)
    for a, b in pairs[:10]:
        g, h = thin[a], thin[b]
        checked += 1
        if D(kronecker(g, h)) > D(cartesian(cartesian_skeleton(g), cartesian_skeleton(h))):
            fails.append(f"skeleton {a},{b}")
    bip = [path_graph(3), path_graph(4), path_graph(5), path_graph(6), cycle_graph(4), cycle_graph(6),
           star_graph(3), star_graph(4), complete_bipartite_graph(2, 3), complete_bipartite_graph(3, 3)]
    for h in bip:
        checked += 1
        d, got = Dp(h), Dp(kronecker(complete_graph(2), h))
        if not d <= got <= d + 1:
            fails.append(f"K2xH {h}: {got} vs d={d}")
    report(8, fails, checked)


def test_09_path_star():
    pairs = ((2, 2), (2, 3), (3, 2), (4, 2), (4, 3), (5, 2))
    fails = [f"P{m}xK1,{n}" for m, n in pairs
             if Dp(kronecker(path_graph(m), star_graph(n))) != dprime_kron_path_star(m, n).value]
    report(9, fails, len(pairs))


def test_10_lift_and_rigid_factors():
    fails, checked = [], 0
    for g, h, name in ((paw_graph(), paw_graph(), "paw x paw"), (paw_graph(), complete_graph(3), "paw x K3"),
                       (complete_graph(3), cycle_graph(5), "K3 x C5"), (paw_graph(), cycle_graph(5), "paw x C5"),
                       (complete_graph(3), complete_graph(4), "K3 x K4")):
        x = kronecker(g, h)
        assert x.n <= 20 and is_r_thin(g) and is_r_thin(h) and not bipartition(g).is_bipartite
        rg, rh = distinguishing_index(g), distinguishing_index(h)
        rk = distinguishing_index(complete_bipartite_graph(rg.value, rh.value))
        lab = lift_kronecker_edge_labeling(g, rg.certificate, h, rh.certificate, rk.certificate)
        checked += 1
        if not is_distinguishing_edge_labeling(x, automorphism_group(x), lab):
            fails.append(f"lift {name}")
    assert automorphism_group(RIGID_A).order == automorphism_group(RIGID_B).order == 1
    assert not are_isomorphic(RIGID_A, RIGID_B)
    checked += 2
    if Dp(kronecker(RIGID_A, RIGID_A)) != 2:
        fails.append("D'(GxG)")
    if Dp(kronecker(RIGID_A, RIGID_B)) != 1:
        fails.append("D'(GxH)")
    report(10, fails, checked)


def test_11_counting():
    fails, checked = [], 1
    if count_inequivalent_distinguishing(path_graph(4), 2, "vertex") != 6:
        fails.append("P4")
    for g in atlas(5):
        order = automorphism_group(g).order
        for k in (2, 3):
            checked += 1
            if count_distinguishing_labelings(g, k, "vertex") % order:
                fails.append(f"{g} k={k}")
    report(11, fails, checked)


def test_12_structural_properties():
    fails, checked = [], 0
    for g in atlas(6):
        if g.n == 0:
            continue
        checked += 1
        c = complement(g)
        if D(g) != D(c) or automorphism_group(g).order != automorphism_group(c).order:
            fails.append(str(g))
    rng = random.Random(12)
    for i in range(50):
        g = random_graph(rng.randint(2, 5), rng.choice([0.3, 0.5, 0.8]), rng)
        h = random_graph(rng.randint(2, 5), rng.choice([0.3, 0.5, 0.8]), rng)
        x = kronecker(g, h)
        checked += 1
        comps = len(connected_components(x))
        if kronecker_is_connected(g, h) != (comps == 1):
            fails.append(f"connectivity {i}")
        count = kronecker_component_count(g, h)
        if count is not None and count != comps:
            fails.append(f"count {i}")
    report(12, fails, checked)
