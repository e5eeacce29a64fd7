"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 8 10 12 14]

Prints one row per (kernel, n) with the median wall time of each backend and
the speedup. Both backends must return identical results; a mismatch aborts.
"""

import argparse
import statistics
import time

import numpy as np

from steiner_tsp import generators, kernels
from steiner_tsp.graph import shortest_path_metric


def _time(fn, repeat):
    out, times = None, []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def _cases(g):
    indptr, indices = g.csr()
    dist = shortest_path_metric(g).dist
    masks = g.adjacency_masks()
    required = sum(1 << v for v in range(0, g.n, 2))
    return {
        "bfs_all_pairs": lambda k: k.bfs_all_pairs(g.n, indptr, indices),
        "held_karp": lambda k: k.held_karp(dist),
        "steiner_cycle": lambda k: k.shortest_steiner_cycle(g.n, masks, required, dist),
    }


def _same(a, b):
    if hasattr(a, "shape"):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return a == b


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--sizes", type=int, nargs="+", default=[8, 10, 12, 14])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; only the Python backend is available")
    impls = {name: kernels.load_backend(name) for name in backends}
    print(f"{'kernel':<15}{'n':>4}" + "".join(f"{b + ' (s)':>14}" for b in backends) + f"{'speedup':>10}")
    for n in args.sizes:
        g = generators.random_biconnected(n, 2 * n, args.seed)
        for kernel, call in _cases(g).items():
            row, results = [], []
            for name, impl in impls.items():
                out, t = _time(lambda: call(impl), args.repeat)
                row.append(t)
                results.append(out)
            if not all(_same(results[0], r) for r in results[1:]):
                raise SystemExit(f"backends disagree on {kernel} at n={n}")
            speed = f"{row[-1] / row[0]:>9.1f}x" if len(row) > 1 and row[0] > 0 else f"{'-':>10}"
            print(f"{kernel:<15}{n:>4}" + "".join(f"{t:>14.5f}" for t in row) + speed)


if __name__ == "__main__":
    main()
