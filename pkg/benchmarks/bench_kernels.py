"""Compare the JIT cutset-enumeration kernel against the pure-Python bitset
fallback on progressively denser graphs.

Run:  python benchmarks/bench_kernels.py [--sizes 14,18,22]
"""

from __future__ import annotations

import argparse
import random
import time

from bei.graph import Graph
from bei.kernels import accel, bitset


def random_connected(n: int, extra_edges: int, rng: random.Random) -> Graph:
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    edges = {(min(a, b), max(a, b))
             for a, b in zip(labels, labels[1:])}  # random spanning path
    while len(edges) < n - 1 + extra_edges:
        a, b = rng.sample(range(1, n + 1), 2)
        edges.add((min(a, b), max(a, b)))
    return Graph(range(1, n + 1), sorted(edges))


def run_backend(fn, g: Graph, cand: list[int]):
    t0 = time.perf_counter()
    res = fn(g, cand)
    return time.perf_counter() - t0, res


def python_kernel(g: Graph, cand):
    return bitset.enumerate_cutset_masks(list(g.nbr), g.full_mask, cand)


def numba_kernel(g: Graph, cand):
    import numpy as np
    masks, counts = accel.enumerate_cutset_masks(
        np.array(g.nbr, dtype=np.uint64), np.uint64(g.full_mask),
        np.array(cand, dtype=np.int64))
    return [(int(m), int(c)) for m, c in zip(masks, counts)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="14,17,20",
                    help="comma list of vertex counts")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    accel.warmup()  # pay the JIT compile cost outside the timings
    print(f"{'n':>4} {'cand':>5} {'cutsets':>8} {'python (s)':>11} "
          f"{'numba (s)':>10} {'speedup':>8}")
    for n in (int(s) for s in args.sizes.split(",")):
        g = random_connected(n, n // 2, rng)
        cand = [i for i in range(g.n) if not g.free_vertex_mask >> i & 1]
        tp, rp = run_backend(python_kernel, g, cand)
        tn, rn = run_backend(numba_kernel, g, cand)
        assert sorted(rp) == sorted(rn), "backends disagree!"
        print(f"{n:>4} {len(cand):>5} {len(rp):>8} {tp:>11.4f} "
              f"{tn:>10.4f} {tp / tn:>7.1f}x")


if __name__ == "__main__":
    main()
