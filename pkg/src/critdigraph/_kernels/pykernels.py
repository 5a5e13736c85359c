"""Pure-Python graph kernels.

Reference implementations of the loop-heavy primitives.  The compiled
module ``_speedups`` mirrors these signatures and must produce identical
output bit for bit; equivalence is enforced by tests.
"""

from __future__ import annotations

import heapq

import numpy as np

BACKEND_NAME = "python"


def tarjan_components(n, indptr, indices):
    """Strongly connected components (iterative Tarjan).

    Returns (comp, ncomp) where comp[v] is the component id of v.  Ids
    are assigned in completion order, which is deterministic for a given
    CSR layout, so the compiled backend reproduces them exactly.
    """
    disc = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp = np.full(n, -1, dtype=np.int32)
    scc_stack: list[int] = []
    ncomp = 0
    counter = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, offset = work[-1]
            if offset == 0:
                disc[v] = low[v] = counter
                counter += 1
                scc_stack.append(v)
                on_stack[v] = 1
            descended = False
            row_start = indptr[v]
            for j in range(row_start + offset, indptr[v + 1]):
                w = indices[j]
                if disc[w] == -1:
                    work[-1] = (v, j - row_start + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w] and disc[w] < low[v]:
                    low[v] = disc[w]
            if descended:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
            if low[v] == disc[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
    return comp, ncomp


def explore_digraph(n, indptr, indices, order, a0_count):
    """Exploration process seeded at the first ``a0_count`` entries of ``order``.

    ``order`` is the fixed exploration priority: the seed set first (in
    ascending label order), then all remaining vertices ascending.  At
    each step the lowest-priority active vertex is explored; its
    unexplored out-neighbours become active.  Stops the first time the
    active count returns to zero.

    Returns (x, eta, tau1, explored, back_edges) where x[t-1], eta[t-1]
    are the active count and new-activation count after step t, explored
    lists vertices in exploration order, and back_edges counts arcs from
    explored non-seed vertices into the seed set.
    """
    rank = [0] * n
    for r in range(n):
        rank[order[r]] = r
    # 0 = unexplored, 1 = active, 2 = explored
    state = bytearray(n)
    heap: list[int] = list(range(a0_count))  # ranks 0..a0_count-1, already a heap
    x_hist: list[int] = []
    eta_hist: list[int] = []
    explored: list[int] = []
    x = a0_count
    for v in range(a0_count):
        state[order[v]] = 1
    while True:
        r = heapq.heappop(heap)
        w = order[r]
        eta = 0
        for j in range(indptr[w], indptr[w + 1]):
            u = indices[j]
            if state[u] == 0:
                state[u] = 1
                heapq.heappush(heap, rank[u])
                eta += 1
        state[w] = 2
        explored.append(w)
        x = x + eta - 1
        x_hist.append(x)
        eta_hist.append(eta)
        if x == 0:
            break
    in_seed = bytearray(n)
    for r in range(a0_count):
        in_seed[order[r]] = 1
    back = 0
    for v in explored:
        if in_seed[v]:
            continue
        for j in range(indptr[v], indptr[v + 1]):
            if in_seed[indices[j]]:
                back += 1
    return (
        np.array(x_hist, dtype=np.int64),
        np.array(eta_hist, dtype=np.int64),
        len(explored),
        np.array(explored, dtype=np.int32),
        back,
    )


def count_cycles(n, indptr, indices, max_len):
    """Count directed cycles of each length 2..max_len.

    Returns an int64 array c with c[len] = number of cycles of that
    length (c[0] = c[1] = 0).  Each cycle is enumerated once, rooted at
    its smallest vertex: DFS paths through larger vertices only.
    """
    counts = np.zeros(max_len + 1, dtype=np.int64)
    if max_len < 2:
        return counts
    on_path = bytearray(n)
    for s in range(n):
        stack = [(s, indptr[s])]
        on_path[s] = 1
        depth = 1
        while stack:
            v, ptr = stack[-1]
            descended = False
            j = ptr
            row_end = indptr[v + 1]
            while j < row_end:
                u = indices[j]
                j += 1
                if u == s:
                    if depth >= 2:
                        counts[depth] += 1
                elif u > s and not on_path[u] and depth < max_len:
                    stack[-1] = (v, j)
                    stack.append((u, indptr[u]))
                    on_path[u] = 1
                    depth += 1
                    descended = True
                    break
            if descended:
                continue
            stack.pop()
            on_path[v] = 0
            depth -= 1
    return counts


def largest_component_size(n, us, vs):
    """Largest connected-component size of an undirected edge list (union-find)."""
    parent = list(range(n))
    size = [1] * n
    best = 1 if n else 0
    for e in range(len(us)):
        a = us[e]
        b = vs[e]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a == b:
            continue
        if size[a] < size[b]:
            a, b = b, a
        parent[b] = a
        size[a] += size[b]
        if size[a] > best:
            best = size[a]
    return best
