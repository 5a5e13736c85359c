# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; mirrors pykernels exactly (see that module)."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

BACKEND_NAME = "cython"


def tarjan_components(Py_ssize_t n, long long[::1] indptr, int[::1] indices):
    cdef int[::1] comp = np.full(n, -1, dtype=np.int32)
    cdef long long *disc = <long long *> malloc(n * sizeof(long long))
    cdef long long *low = <long long *> malloc(n * sizeof(long long))
    cdef char *on_stack = <char *> malloc(n)
    cdef long long *scc_stack = <long long *> malloc(n * sizeof(long long))
    cdef long long *frame_v = <long long *> malloc(n * sizeof(long long))
    cdef long long *frame_off = <long long *> malloc(n * sizeof(long long))
    if not (disc and low and on_stack and scc_stack and frame_v and frame_off):
        free(disc); free(low); free(on_stack); free(scc_stack)
        free(frame_v); free(frame_off)
        raise MemoryError
    cdef Py_ssize_t root, top, sp
    cdef long long v, w, u, j, row_start, counter, ncomp
    cdef bint descended
    memset(on_stack, 0, n)
    for root in range(n):
        disc[root] = -1
    counter = 0
    ncomp = 0
    sp = 0
    try:
        for root in range(n):
            if disc[root] != -1:
                continue
            frame_v[0] = root
            frame_off[0] = 0
            top = 1
            while top > 0:
                v = frame_v[top - 1]
                if frame_off[top - 1] == 0:
                    disc[v] = counter
                    low[v] = counter
                    counter += 1
                    scc_stack[sp] = v
                    sp += 1
                    on_stack[v] = 1
                descended = False
                row_start = indptr[v]
                j = row_start + frame_off[top - 1]
                while j < indptr[v + 1]:
                    w = indices[j]
                    if disc[w] == -1:
                        frame_off[top - 1] = j - row_start + 1
                        frame_v[top] = w
                        frame_off[top] = 0
                        top += 1
                        descended = True
                        break
                    if on_stack[w] and disc[w] < low[v]:
                        low[v] = disc[w]
                    j += 1
                if descended:
                    continue
                top -= 1
                if top > 0:
                    u = frame_v[top - 1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == disc[v]:
                    while True:
                        sp -= 1
                        w = scc_stack[sp]
                        on_stack[w] = 0
                        comp[w] = <int> ncomp
                        if w == v:
                            break
                    ncomp += 1
    finally:
        free(disc); free(low); free(on_stack); free(scc_stack)
        free(frame_v); free(frame_off)
    return np.asarray(comp), int(ncomp)


cdef inline void _heap_push(long long *heap, Py_ssize_t *size, long long item) nogil:
    cdef Py_ssize_t pos = size[0]
    cdef Py_ssize_t parent
    size[0] += 1
    heap[pos] = item
    while pos > 0:
        parent = (pos - 1) >> 1
        if heap[parent] <= heap[pos]:
            break
        heap[parent], heap[pos] = heap[pos], heap[parent]
        pos = parent


cdef inline long long _heap_pop(long long *heap, Py_ssize_t *size) nogil:
    cdef long long result = heap[0]
    cdef Py_ssize_t pos = 0
    cdef Py_ssize_t child
    size[0] -= 1
    heap[0] = heap[size[0]]
    while True:
        child = 2 * pos + 1
        if child >= size[0]:
            break
        if child + 1 < size[0] and heap[child + 1] < heap[child]:
            child += 1
        if heap[pos] <= heap[child]:
            break
        heap[pos], heap[child] = heap[child], heap[pos]
        pos = child
    return result


def explore_digraph(Py_ssize_t n, long long[::1] indptr, int[::1] indices,
                    int[::1] order, Py_ssize_t a0_count):
    cdef long long[::1] rank = np.empty(n, dtype=np.int64)
    cdef char[::1] state = np.zeros(n, dtype=np.int8)
    cdef long long *heap = <long long *> malloc(n * sizeof(long long))
    if not heap:
        raise MemoryError
    cdef long long[::1] x_hist = np.empty(n, dtype=np.int64)
    cdef long long[::1] eta_hist = np.empty(n, dtype=np.int64)
    cdef int[::1] explored = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t heap_size = 0, t = 0, r
    cdef long long x, eta, w, u, j, back
    try:
        for r in range(n):
            rank[order[r]] = r
        for r in range(a0_count):
            state[order[r]] = 1
            _heap_push(heap, &heap_size, r)
        x = a0_count
        while True:
            w = order[_heap_pop(heap, &heap_size)]
            eta = 0
            for j in range(indptr[w], indptr[w + 1]):
                u = indices[j]
                if state[u] == 0:
                    state[u] = 1
                    _heap_push(heap, &heap_size, rank[u])
                    eta += 1
            state[w] = 2
            explored[t] = <int> w
            x = x + eta - 1
            x_hist[t] = x
            eta_hist[t] = eta
            t += 1
            if x == 0:
                break
        # arcs from explored non-seed vertices back into the seed set
        for r in range(n):
            state[r] = 0
        for r in range(a0_count):
            state[order[r]] = 1
        back = 0
        for r in range(t):
            w = explored[r]
            if state[w]:
                continue
            for j in range(indptr[w], indptr[w + 1]):
                if state[indices[j]]:
                    back += 1
    finally:
        free(heap)
    return (
        np.asarray(x_hist[:t]).copy(),
        np.asarray(eta_hist[:t]).copy(),
        int(t),
        np.asarray(explored[:t]).copy(),
        int(back),
    )


def count_cycles(Py_ssize_t n, long long[::1] indptr, int[::1] indices,
                 Py_ssize_t max_len):
    counts_arr = np.zeros(max_len + 1, dtype=np.int64)
    cdef long long[::1] counts = counts_arr
    if max_len < 2:
        return counts_arr
    cdef char[::1] on_path = np.zeros(n, dtype=np.int8)
    cdef long long *stack_v = <long long *> malloc((max_len + 1) * sizeof(long long))
    cdef long long *stack_ptr = <long long *> malloc((max_len + 1) * sizeof(long long))
    if not (stack_v and stack_ptr):
        free(stack_v); free(stack_ptr)
        raise MemoryError
    cdef Py_ssize_t s, top
    cdef long long v, u, j, row_end, depth
    cdef bint descended
    try:
        for s in range(n):
            stack_v[0] = s
            stack_ptr[0] = indptr[s]
            top = 1
            on_path[s] = 1
            depth = 1
            while top > 0:
                v = stack_v[top - 1]
                j = stack_ptr[top - 1]
                row_end = indptr[v + 1]
                descended = False
                while j < row_end:
                    u = indices[j]
                    j += 1
                    if u == s:
                        if depth >= 2:
                            counts[depth] += 1
                    elif u > s and not on_path[u] and depth < max_len:
                        stack_ptr[top - 1] = j
                        stack_v[top] = u
                        stack_ptr[top] = indptr[u]
                        top += 1
                        on_path[u] = 1
                        depth += 1
                        descended = True
                        break
                if descended:
                    continue
                top -= 1
                on_path[v] = 0
                depth -= 1
    finally:
        free(stack_v); free(stack_ptr)
    return counts_arr


def largest_component_size(Py_ssize_t n, int[::1] us, int[::1] vs):
    cdef long long *parent = <long long *> malloc(n * sizeof(long long))
    cdef long long *size = <long long *> malloc(n * sizeof(long long))
    if not (parent and size):
        free(parent); free(size)
        raise MemoryError
    cdef long long best = 1 if n > 0 else 0
    cdef Py_ssize_t e, m = us.shape[0]
    cdef long long a, b, tmp
    try:
        for e in range(n):
            parent[e] = e
            size[e] = 1
        for e in range(m):
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
                tmp = a; a = b; b = tmp
            parent[b] = a
            size[a] += size[b]
            if size[a] > best:
                best = size[a]
    finally:
        free(parent); free(size)
    return int(best)
