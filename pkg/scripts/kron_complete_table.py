"""Threshold formula for D(K_k x K_n) next to the exact solver, including boundary cases."""
from kronsym.distinguishing import distinguishing_number
from kronsym.families import d_kron_complete
from kronsym.graph_core import complete_graph
from kronsym.products import kronecker


def main(limit: int = 16):
    print(f"{'k':>2s} {'n':>2s} {'formula':>8s} {'solver':>6s}  ok")
    for k in range(2, 6):
        for n in range(k, 9):
            if k * n > limit:
                continue
            f = d_kron_complete(k, n)
            got = distinguishing_number(kronecker(complete_graph(k), complete_graph(n))).value
            print(f"{k:2d} {n:2d} {str(f):>8s} {got:6d}  {'yes' if f.admits(got) else 'NO'}")


if __name__ == "__main__":
    main()
