"""Shared oracles and generators.

Oracles are deliberately naive (dict adjacency, repeated BFS, O(n^2)
scans) so they cannot share a bug with the array kernels they check.
"""

import numpy as np
import pytest

from critdigraph.digraph import Digraph


def bfs_reachable(n, arcs, sources):
    """Vertex set reachable from ``sources`` following arcs forward."""
    adj = {v: [] for v in range(n)}
    for u, v in arcs:
        adj[u].append(v)
    seen = set(sources)
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return seen


def strong_components_oracle(n, arcs):
    """Set of frozensets: u ~ v iff each reaches the other."""
    reach = [bfs_reachable(n, arcs, [v]) for v in range(n)]
    comps = set()
    for v in range(n):
        comps.add(frozenset(u for u in reach[v] if v in reach[u]))
    return comps


def is_strongly_connected_oracle(n, arcs):
    return all(len(bfs_reachable(n, arcs, [v])) == n for v in range(n))


def cycles_oracle(n, arcs, max_len):
    """Count simple directed cycles by length, brute force over paths.

    A cycle is identified with its rotation starting at its smallest
    vertex, so each is counted exactly once.
    """
    adj = {v: sorted(w for u, w in arcs if u == v) for v in range(n)}
    counts = {}

    def extend(start, path, used):
        v = path[-1]
        for w in adj[v]:
            if w == start and len(path) >= 2:
                counts[len(path)] = counts.get(len(path), 0) + 1
            elif w > start and w not in used and len(path) < max_len:
                used.add(w)
                path.append(w)
                extend(start, path, used)
                path.pop()
                used.discard(w)

    for s in range(n):
        extend(s, [s], {s})
    return counts


def random_arcs(rng, n, p):
    """Arc list of one Erdos-Renyi draw from a test-side numpy Generator."""
    mask = rng.random((n, n)) < p
    np.fill_diagonal(mask, False)
    us, vs = np.nonzero(mask)
    return list(zip(us.tolist(), vs.tolist()))


def random_digraph(rng, n, p):
    return Digraph(n, random_arcs(rng, n, p))


@pytest.fixture
def np_rng():
    return np.random.default_rng(20260814)
