"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each kernel on identical inputs through both backends, checks the
outputs agree bit for bit, and prints a timing table.

    python benchmarks/bench_backends.py --n 200000 --repeats 5
"""

import argparse
import time

import numpy as np

from critdigraph._kernels import available_backends, load_backend
from critdigraph.digraph import sample_digraph, sample_undirected_edges


def timed(fn, args, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def agree(a, b):
    if isinstance(a, tuple):
        return all(agree(x, y) for x, y in zip(a, b))
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a == b


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=200_000,
                    help="vertex count for the large-graph kernels")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    backends = available_backends()
    if backends == ["python"]:
        print("compiled backend unavailable; timing the fallback only")
    modules = {name: load_backend(name) for name in backends}

    n = args.n
    d = sample_digraph(n, 1.0 / n, args.seed)
    indptr, indices = d.out_csr()
    order = np.arange(n, dtype=np.int32)

    small = sample_digraph(1500, 1.0 / 1500.0, args.seed, stream=1)
    s_indptr, s_indices = small.out_csr()

    us, vs = sample_undirected_edges(n, 1.0 / n, args.seed)
    us = us.astype(np.int32)
    vs = vs.astype(np.int32)

    cases = [
        (f"tarjan_components (n={n})", "tarjan_components",
         (n, indptr, indices)),
        (f"explore_digraph (n={n})", "explore_digraph",
         (n, indptr, indices, order, 1)),
        ("count_cycles (n=1500)", "count_cycles",
         (1500, s_indptr, s_indices, 1500)),
        (f"largest_component_size (n={n})", "largest_component_size",
         (n, us, vs)),
    ]

    width = max(len(label) for label, _, _ in cases)
    header = f"{'kernel':<{width}}  " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in cases:
        times = {}
        results = {}
        for b in backends:
            times[b], results[b] = timed(getattr(modules[b], name),
                                         call_args, args.repeats)
        if len(backends) == 2 and not agree(results["cython"], results["python"]):
            raise SystemExit(f"backend outputs diverge on {name}")
        row = f"{label:<{width}}  " + "".join(
            f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
