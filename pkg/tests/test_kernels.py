"""Kernel correctness against naive oracles, plus backend equivalence.

Both backends (compiled and pure Python) must produce bit-identical
results; the compiled one is only a faster implementation of the same
functions.
"""

import numpy as np
import pytest

from critdigraph import _kernels
from critdigraph._kernels import pykernels
from critdigraph.digraph import Digraph
from tests.conftest import cycles_oracle, random_arcs, strong_components_oracle

HAVE_SPEEDUPS = "cython" in _kernels.available_backends()

speedups = pytest.importorskip(
    "critdigraph._kernels._speedups") if HAVE_SPEEDUPS else None


def csr_of(n, arcs):
    return Digraph(n, arcs).out_csr()


def test_tarjan_against_oracle(np_rng):
    for _ in range(300):
        n = int(np_rng.integers(1, 13))
        p = float(np_rng.uniform(0.0, 0.4))
        arcs = random_arcs(np_rng, n, p)
        indptr, indices = csr_of(n, arcs)
        comp, ncomp = pykernels.tarjan_components(n, indptr, indices)
        got = {frozenset(np.nonzero(comp == c)[0].tolist()) for c in range(ncomp)}
        assert got == strong_components_oracle(n, arcs)


def test_tarjan_component_ids_cover_range(np_rng):
    arcs = random_arcs(np_rng, 30, 0.1)
    indptr, indices = csr_of(30, arcs)
    comp, ncomp = pykernels.tarjan_components(30, indptr, indices)
    assert comp.shape == (30,)
    assert set(comp.tolist()) == set(range(ncomp))


def test_tarjan_deep_path_no_recursion_limit():
    # 30k-vertex directed path; a recursive Tarjan would blow the stack
    n = 30_000
    us = np.arange(n - 1)
    arcs = np.stack([us, us + 1], axis=1)
    indptr, indices = Digraph(n, arcs).out_csr()
    comp, ncomp = pykernels.tarjan_components(n, indptr, indices)
    assert ncomp == n


def test_count_cycles_against_oracle(np_rng):
    for _ in range(200):
        n = int(np_rng.integers(2, 9))
        arcs = random_arcs(np_rng, n, 0.35)
        indptr, indices = csr_of(n, arcs)
        counts = pykernels.count_cycles(n, indptr, indices, n)
        want = cycles_oracle(n, arcs, n)
        got = {length: int(c) for length, c in enumerate(counts) if c > 0}
        assert got == want


def test_count_cycles_respects_cap():
    n = 6
    cyc = [(i, (i + 1) % n) for i in range(n)]
    indptr, indices = csr_of(n, cyc)
    counts = pykernels.count_cycles(n, indptr, indices, 5)
    assert counts.sum() == 0
    counts = pykernels.count_cycles(n, indptr, indices, 6)
    assert counts[6] == 1


def test_union_find_matches_bfs(np_rng):
    for _ in range(100):
        n = int(np_rng.integers(1, 40))
        mask = np.triu(np_rng.random((n, n)) < 0.08, k=1)
        us, vs = np.nonzero(mask)
        got = pykernels.largest_component_size(
            n, us.astype(np.int32), vs.astype(np.int32))
        # undirected reachability via the doubled arc set
        arcs = list(zip(us.tolist(), vs.tolist()))
        arcs += [(v, u) for u, v in arcs]
        adj = {v: [] for v in range(n)}
        for a, b in arcs:
            adj[a].append(b)
        best = 0
        seen = set()
        for s in range(n):
            if s in seen:
                continue
            comp = {s}
            frontier = [s]
            while frontier:
                nxt = []
                for x in frontier:
                    for y in adj[x]:
                        if y not in comp:
                            comp.add(y)
                            nxt.append(y)
                frontier = nxt
            seen |= comp
            best = max(best, len(comp))
        assert got == best


def test_explore_kernel_stops_at_first_zero():
    # 3-cycle with a pendant arc out of vertex 0: tau1 = 3, pendant unexplored
    d = Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3)])
    indptr, indices = d.out_csr()
    order = np.array([0, 1, 2, 3, 4], dtype=np.int32)
    x, eta, tau1, explored, back = pykernels.explore_digraph(
        5, indptr, indices, order, 1)
    assert tau1 == 4
    assert x.tolist()[-1] == 0
    assert explored.tolist()[0] == 0


@pytest.mark.skipif(not HAVE_SPEEDUPS, reason="compiled backend not built")
def test_backends_agree_bit_for_bit(np_rng):
    for _ in range(120):
        n = int(np_rng.integers(1, 25))
        arcs = random_arcs(np_rng, n, 0.15)
        indptr, indices = csr_of(n, arcs)

        c_py, k_py = pykernels.tarjan_components(n, indptr, indices)
        c_cy, k_cy = speedups.tarjan_components(n, indptr, indices)
        assert k_py == k_cy and np.array_equal(c_py, c_cy)

        cy_py = pykernels.count_cycles(n, indptr, indices, min(n, 8))
        cy_cy = speedups.count_cycles(n, indptr, indices, min(n, 8))
        assert np.array_equal(cy_py, cy_cy)

        order = np.arange(n, dtype=np.int32)
        a0 = int(np_rng.integers(1, n + 1))
        got_py = pykernels.explore_digraph(n, indptr, indices, order, a0)
        got_cy = speedups.explore_digraph(n, indptr, indices, order, a0)
        for a, b in zip(got_py, got_cy):
            if isinstance(a, np.ndarray):
                assert np.array_equal(a, b)
            else:
                assert a == b


@pytest.mark.skipif(not HAVE_SPEEDUPS, reason="compiled backend not built")
def test_union_find_backends_agree(np_rng):
    for _ in range(60):
        n = int(np_rng.integers(1, 60))
        mask = np.triu(np_rng.random((n, n)) < 0.06, k=1)
        us, vs = np.nonzero(mask)
        us = us.astype(np.int32)
        vs = vs.astype(np.int32)
        assert (pykernels.largest_component_size(n, us, vs)
                == speedups.largest_component_size(n, us, vs))


def test_load_backend_by_name():
    assert _kernels.load_backend("python").BACKEND_NAME == "python"
    with pytest.raises(ValueError):
        _kernels.load_backend("fortran")


def test_pure_env_forces_python_backend():
    import os
    import subprocess
    import sys
    env = dict(os.environ, CRITDIGRAPH_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c",
         "from critdigraph._kernels import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
