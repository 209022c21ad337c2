"""Time the numba and numpy kernel backends on complete graphs.

    python3 benchmarks/bench_kernels.py --max-n 8 --max-m 16

The numba column excludes the one-off import and compile cost, which is
reported separately on the first line.
"""
import argparse
import time

import numpy as np

from cutpoly import _kernels as K
from cutpoly.basepoly import all_orders
from cutpoly.graphs import complete_graph
from cutpoly.setfunctions import cut_function


def best_of(fn, *args, repeat=3):
    fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def edge_arrays(pairs):
    ei = np.array([i for i, _ in pairs], dtype=np.int64)
    ej = np.array([j for _, j in pairs], dtype=np.int64)
    return ei, ej, np.ones(len(pairs), dtype=np.int64)


def row(name, size, work, nb, npy):
    speedup = f"{npy / nb:8.1f}x" if nb else "       -"
    nb_s = f"{nb * 1e3:10.3f}" if nb else "         -"
    print(f"{name:<20}{size:>6}{work:>12}{nb_s}{npy * 1e3:10.3f}{speedup}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--max-m", type=int, default=16)
    args = ap.parse_args()

    if K.HAVE_NUMBA:
        t0 = time.perf_counter()
        K.jitted().cut_table(1, *edge_arrays([(0, 1)]))
        print(f"numba import and first compile/cache load: {time.perf_counter() - t0:.3f}s")
    else:
        print("numba unavailable; numpy column only")
    print(f"dispatch threshold CUTPOLY_NUMBA_MIN_WORK = {K.NUMBA_MIN_WORK}\n")
    print(f"{'kernel':<20}{'size':>6}{'work':>12}{'numba ms':>10}{'numpy ms':>10}{'speedup':>9}")

    for n in range(3, args.max_n + 1):
        g = complete_graph(n)
        pairs = g.pairs()
        ei, ej, w = edge_arrays(pairs)
        table, _ = cut_function(g).int_table
        perms = all_orders(n)
        cases = [
            ("cut_table", (1 << (n + 1)) * len(w), K.cut_table_np, "cut_table", (n, ei, ej, w)),
            ("submodular_witness", len(table) ** 2, K.submodular_witness_np, "submodular_witness", (table,)),
            ("order_vertices", perms.size, K.order_vertices_np, "order_vertices", (table, perms)),
        ]
        for name, work, np_fn, nb_name, fn_args in cases:
            nb = best_of(getattr(K.jitted(), nb_name), *fn_args) if K.HAVE_NUMBA else None
            row(name, n, work, nb, best_of(np_fn, *fn_args))

    all_pairs = complete_graph(7).pairs()
    for m in range(4, args.max_m + 1, 2):
        ei, ej, w = edge_arrays(all_pairs[:m])
        nb = best_of(K.jitted().sign_vector_points, 7, ei, ej, w, repeat=1) if K.HAVE_NUMBA else None
        row("sign_vector_points", m, (1 << m) * m, nb, best_of(K.sign_vector_points_np, 7, ei, ej, w, repeat=1))


if __name__ == "__main__":
    main()
