"""Compare two readings of the K_2 x H remark against the solver.

For bipartite H with d = D'(H) the observed D'(K_2 x H) is either d or d+1.
The edge reading predicts d+1 exactly when H has a single inequivalent
distinguishing d-edge-labeling; the vertex reading uses vertex labelings.
"""
import random

from kronsym.distinguishing import count_inequivalent_distinguishing, distinguishing_index
from kronsym.generators import random_connected_bipartite_graph
from kronsym.graph_core import complete_bipartite_graph, complete_graph, cycle_graph, path_graph, star_graph
from kronsym.products import kronecker


def main():
    rng = random.Random(3)
    cases = {"P3": path_graph(3), "P4": path_graph(4), "P5": path_graph(5), "P6": path_graph(6),
             "C4": cycle_graph(4), "C6": cycle_graph(6), "K1,3": star_graph(3), "K1,4": star_graph(4),
             "K2,3": complete_bipartite_graph(2, 3), "K3,3": complete_bipartite_graph(3, 3)}
    for i in range(4):
        cases[f"rand{i}"] = random_connected_bipartite_graph(rng.randint(4, 7), rng)
    print(f"{'H':7s} {'d':>2s} {'obs':>4s} {'#edge':>6s} {'edge':>5s} {'#vert':>6s} {'vert':>5s}")
    hits = {"edge": 0, "vertex": 0}
    for name, h in cases.items():
        d = distinguishing_index(h).value
        obs = distinguishing_index(kronecker(complete_graph(2), h)).value
        ce = count_inequivalent_distinguishing(h, d, "edge")
        cv = count_inequivalent_distinguishing(h, d, "vertex")
        pe, pv = d + (ce == 1), d + (cv == 1)
        hits["edge"] += pe == obs
        hits["vertex"] += pv == obs
        print(f"{name:7s} {d:2d} {obs:4d} {ce:6d} {pe:5d} {cv:6d} {pv:5d}")
    print(f"matches out of {len(cases)}: edge {hits['edge']}, vertex {hits['vertex']}")


if __name__ == "__main__":
    main()
