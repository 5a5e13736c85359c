"""Simple digraphs: sampling, components, hearts, ears, cycles.

The model throughout is the uniform random digraph on n labelled
vertices where each of the n(n-1) ordered pairs is an arc independently
with probability p.  Loops never occur; antiparallel pairs (2-cycles)
may.  Near p = 1/n the probability is parametrised as

    p = 1/n + lam * n**(-4/3)

so ``lam`` sweeps the scaling window in which the largest strongly
connected component has size of order n**(1/3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from . import _kernels, rng
from .errors import FormatError, ParameterError, StructureError

__all__ = [
    "Digraph",
    "MultiDigraph",
    "SccDecomposition",
    "EarDecomposition",
    "critical_probability",
    "cube_root",
    "sample_digraph",
    "sample_digraph_coupled",
    "scc_decompose",
    "heart",
    "ear_decomposition",
    "count_cycles_up_to",
    "undirected_largest_component",
    "sample_undirected_edges",
    "read_digraph",
    "write_digraph",
]


def cube_root(n: int) -> float:
    """n**(1/3), exact when n is a perfect cube."""
    r = round(n ** (1.0 / 3.0))
    if r * r * r == n:
        return float(r)
    return n ** (1.0 / 3.0)


def critical_probability(n: int, lam: float) -> float:
    """Arc probability 1/n + lam*n**(-4/3); must land in [0, 1]."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    p = 1.0 / n + lam * float(n) ** (-4.0 / 3.0)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"lam={lam} gives arc probability {p} outside [0, 1] at n={n}")
    return p


class Digraph:
    """Immutable simple digraph on vertices 0..n-1 (no loops, no parallel arcs)."""

    __slots__ = ("n", "m_arcs", "_tails", "_heads", "_indptr", "_indices", "_in_cache")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] | np.ndarray = ()):
        if n < 1:
            raise ParameterError(f"n must be >= 1, got {n}")
        arr = np.asarray(list(arcs) if not isinstance(arcs, np.ndarray) else arcs,
                         dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ParameterError("arcs must be pairs (u, v)")
        tails = arr[:, 0]
        heads = arr[:, 1]
        if arr.size:
            if tails.min() < 0 or heads.min() < 0 or tails.max() >= n or heads.max() >= n:
                raise ParameterError("arc endpoint out of range")
            bad = np.nonzero(tails == heads)[0]
            if bad.size:
                raise ParameterError(f"loop at vertex {int(tails[bad[0]])} not allowed")
            order = np.lexsort((heads, tails))
            tails = tails[order]
            heads = heads[order]
            dup = np.nonzero((tails[1:] == tails[:-1]) & (heads[1:] == heads[:-1]))[0]
            if dup.size:
                raise ParameterError(
                    f"duplicate arc ({int(tails[dup[0]])}, {int(heads[dup[0]])})"
                )
        self._finish_init(n, tails, heads)

    def _finish_init(self, n: int, tails: np.ndarray, heads: np.ndarray) -> None:
        self.n = n
        self.m_arcs = int(tails.shape[0])
        self._tails = tails
        self._heads = heads
        counts = np.bincount(tails, minlength=n) if tails.size else np.zeros(n, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        self._indptr = indptr
        self._indices = heads.astype(np.int32)
        self._in_cache = None

    @classmethod
    def _from_sorted_arcs(cls, n: int, tails: np.ndarray, heads: np.ndarray) -> "Digraph":
        """Trusted constructor: arcs already sorted by (tail, head), valid, unique."""
        self = object.__new__(cls)
        self._finish_init(n, tails.astype(np.int64), heads.astype(np.int64))
        return self

    # --- accessors -------------------------------------------------

    def out_csr(self) -> tuple[np.ndarray, np.ndarray]:
        return self._indptr, self._indices

    def in_csr(self) -> tuple[np.ndarray, np.ndarray]:
        if self._in_cache is None:
            order = np.lexsort((self._tails, self._heads))
            counts = (np.bincount(self._heads, minlength=self.n)
                      if self._heads.size else np.zeros(self.n, np.int64))
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            np.cumsum(counts, out=indptr[1:])
            self._in_cache = (indptr, self._tails[order].astype(np.int32))
        return self._in_cache

    def arc_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return self._tails, self._heads

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, v in zip(self._tails.tolist(), self._heads.tolist()):
            yield (u, v)

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.arcs())

    def out_degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def in_degrees(self) -> np.ndarray:
        return (np.bincount(self._heads, minlength=self.n)
                if self._heads.size else np.zeros(self.n, np.int64))

    def has_arc(self, u: int, v: int) -> bool:
        lo, hi = self._indptr[u], self._indptr[u + 1]
        pos = np.searchsorted(self._indices[lo:hi], v)
        return pos < hi - lo and self._indices[lo + pos] == v

    def out_neighbors(self, u: int) -> np.ndarray:
        return self._indices[self._indptr[u]:self._indptr[u + 1]]

    def excess(self) -> int:
        return self.m_arcs - self.n

    def induced_subgraph(self, vertices: Sequence[int]) -> "Digraph":
        """Subgraph on ``vertices`` relabelled 0..k-1 in ascending label order."""
        verts = np.unique(np.asarray(vertices, dtype=np.int64))
        if verts.size == 0:
            raise ParameterError("vertex set must be nonempty")
        if verts[0] < 0 or verts[-1] >= self.n:
            raise ParameterError("vertex out of range")
        member = np.zeros(self.n, dtype=bool)
        member[verts] = True
        keep = member[self._tails] & member[self._heads]
        relabel = np.full(self.n, -1, dtype=np.int64)
        relabel[verts] = np.arange(verts.size)
        return Digraph._from_sorted_arcs(
            int(verts.size), relabel[self._tails[keep]], relabel[self._heads[keep]]
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self._tails, other._tails)
                and np.array_equal(self._heads, other._heads))

    def __hash__(self) -> int:
        return hash((self.n, self._tails.tobytes(), self._heads.tobytes()))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m_arcs={self.m_arcs})"


class MultiDigraph:
    """Digraph with loops and parallel arcs allowed, over an explicit vertex set."""

    __slots__ = ("vertices", "arcs")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[tuple[int, int]]):
        self.vertices = tuple(sorted(set(int(v) for v in vertices)))
        if not self.vertices:
            raise ParameterError("vertex set must be nonempty")
        vset = set(self.vertices)
        self.arcs = tuple((int(u), int(v)) for u, v in arcs)
        for u, v in self.arcs:
            if u not in vset or v not in vset:
                raise ParameterError(f"arc ({u}, {v}) leaves the vertex set")

    @classmethod
    def on_range(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "MultiDigraph":
        return cls(range(n), arcs)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m_arcs(self) -> int:
        return len(self.arcs)

    def excess(self) -> int:
        return self.m_arcs - self.n

    def degrees(self) -> tuple[dict[int, int], dict[int, int]]:
        dout = {v: 0 for v in self.vertices}
        din = {v: 0 for v in self.vertices}
        for u, v in self.arcs:
            dout[u] += 1
            din[v] += 1
        return dout, din

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.arcs:
            if u == v or (u, v) in seen:
                return False
            seen.add((u, v))
        return True

    def to_digraph(self) -> Digraph:
        if not self.is_simple():
            raise StructureError("not a simple digraph (loop or parallel arc present)")
        relabel = {v: i for i, v in enumerate(self.vertices)}
        return Digraph(self.n, [(relabel[u], relabel[v]) for u, v in self.arcs])

    def __repr__(self) -> str:
        return f"MultiDigraph(n={self.n}, m_arcs={self.m_arcs})"


# --- sampling ------------------------------------------------------


def _skip_positions(total: int, p: float, seed: int, domain: int, stream: int) -> np.ndarray:
    """Strictly increasing positions in [0, total), each present w.p. p.

    Geometric skipping: consecutive gaps are iid Geometric(p), inverted
    from one uniform each, so the cost is O(1 + total*p) draws.
    """
    if total <= 0 or p <= 0.0:
        return np.empty(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(total, dtype=np.int64)
    log_q = math.log1p(-p)
    mean = total * p
    chunks: list[np.ndarray] = []
    pos = -1
    idx = 0
    batch = int(mean + 10.0 * math.sqrt(mean) + 16.0)
    while True:
        u = rng.uniforms(seed, domain, stream, idx, batch)
        idx += batch
        gaps = np.floor(np.log1p(-u) / log_q).astype(np.int64)
        steps = np.cumsum(gaps + 1)
        steps += pos
        cut = int(np.searchsorted(steps, total, side="left"))
        chunks.append(steps[:cut])
        if cut < batch:
            break
        pos = int(steps[-1])
        batch = max(int((total - 1 - pos) * p + 10.0 * math.sqrt((total - pos) * p) + 16.0), 16)
    return np.concatenate(chunks) if len(chunks) > 1 else chunks[0]


def _positions_to_arcs(n: int, positions: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Row-major rank over ordered pairs (u, v), u != v."""
    tails = positions // (n - 1)
    rem = positions - tails * (n - 1)
    heads = rem + (rem >= tails)
    return tails, heads


def _validate_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0 or math.isnan(p):
        raise ParameterError(f"arc probability must lie in [0, 1], got {p}")
    return p


def sample_digraph(n: int, p: float, seed: int, stream: int = 0) -> Digraph:
    """Draw one random digraph: each ordered pair is an arc independently w.p. p.

    ``stream`` selects an independent substream under the same seed; the
    Monte Carlo layer sets it to the trial index.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    p = _validate_probability(p)
    positions = _skip_positions(n * (n - 1), p, seed, rng.DOMAIN_ARCS, stream)
    tails, heads = _positions_to_arcs(n, positions)
    return Digraph._from_sorted_arcs(n, tails, heads)


def sample_digraph_coupled(n: int, p_values: Sequence[float], seed: int,
                           stream: int = 0) -> list[Digraph]:
    """Monotone-coupled draws at several probabilities from one randomness source.

    Every ordered pair receives a latent level U uniform on [0, 1); the
    digraph at probability p keeps exactly the pairs with U < p.  Arc
    sets are therefore nested: whenever p <= q the digraph at p is a
    subgraph of the one at q, deterministically, trial by trial.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    ps = [_validate_probability(p) for p in p_values]
    if not ps:
        return []
    p_max = max(ps)
    positions = _skip_positions(n * (n - 1), p_max, seed, rng.DOMAIN_ARCS, stream)
    # conditional law of a pair's level given presence at p_max: uniform [0, p_max)
    levels = rng.uniforms_at(seed, rng.DOMAIN_ARC_LEVELS, stream,
                             np.arange(positions.size, dtype=np.uint64)) * p_max
    out = []
    for p in ps:
        keep = positions[levels < p]
        tails, heads = _positions_to_arcs(n, keep)
        out.append(Digraph._from_sorted_arcs(n, tails, heads))
    return out


def sample_undirected_edges(n: int, p: float, seed: int,
                            stream: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Edge list of one G(n, p) draw (pairs i < j, each present w.p. p)."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    p = _validate_probability(p)
    total = n * (n - 1) // 2
    positions = _skip_positions(total, p, seed, rng.DOMAIN_UNDIRECTED, stream)
    if positions.size == 0:
        e = np.empty(0, dtype=np.int64)
        return e, e.copy()
    # invert the row-major rank over pairs (i, j), i < j
    shifted = n - 0.5
    i = np.floor(shifted - np.sqrt(shifted * shifted - 2.0 * positions)).astype(np.int64)
    offset = i * n - (i * (i + 1)) // 2
    too_far = offset > positions
    i[too_far] -= 1
    offset[too_far] = i[too_far] * n - (i[too_far] * (i[too_far] + 1)) // 2
    next_off = (i + 1) * n - ((i + 1) * (i + 2)) // 2
    too_near = positions >= next_off
    i[too_near] += 1
    offset[too_near] = i[too_near] * n - (i[too_near] * (i[too_near] + 1)) // 2
    j = positions - offset + i + 1
    return i, j


def undirected_largest_component(n: int, p: float, seed: int, stream: int = 0) -> int:
    """Size of the largest connected component of one G(n, p) draw."""
    us, vs = sample_undirected_edges(n, p, seed, stream)
    return _kernels.largest_component_size(n, us.astype(np.int32), vs.astype(np.int32))


# --- strongly connected components ---------------------------------


@dataclass
class SccDecomposition:
    """Partition into strongly connected components.

    ``comp_ids[v]`` is the component index of vertex v; ``sizes`` and
    ``excesses`` (internal arcs minus vertices) are indexed by component.
    ``components`` materialises the vertex lists lazily.
    """

    n: int
    comp_ids: np.ndarray
    sizes: np.ndarray
    excesses: np.ndarray
    _components: list[np.ndarray] | None = field(default=None, repr=False)

    @property
    def ncomp(self) -> int:
        return int(self.sizes.shape[0])

    @property
    def components(self) -> list[np.ndarray]:
        if self._components is None:
            order = np.argsort(self.comp_ids, kind="stable")
            bounds = np.cumsum(self.sizes)
            self._components = list(np.split(order, bounds[:-1]))
        return self._components

    @property
    def largest_size(self) -> int:
        return int(self.sizes.max())

    def largest_component_index(self) -> int:
        """Index of a largest component (smallest index on ties)."""
        return int(np.argmax(self.sizes))

    def largest_component(self) -> np.ndarray:
        return np.nonzero(self.comp_ids == self.largest_component_index())[0]

    def component_of(self, v: int) -> np.ndarray:
        return np.nonzero(self.comp_ids == self.comp_ids[v])[0]


def scc_decompose(d: Digraph) -> SccDecomposition:
    """Strongly connected components with per-component size and excess."""
    indptr, indices = d.out_csr()
    comp, ncomp = _kernels.tarjan_components(d.n, indptr, indices)
    sizes = np.bincount(comp, minlength=ncomp)
    tails, heads = d.arc_arrays()
    internal = comp[tails] == comp[heads]
    arc_counts = (np.bincount(comp[tails[internal]], minlength=ncomp)
                  if tails.size else np.zeros(ncomp, np.int64))
    return SccDecomposition(d.n, comp, sizes, arc_counts - sizes)


# --- heart ---------------------------------------------------------


def heart(d: Digraph) -> MultiDigraph:
    """Suppress every in-1/out-1 vertex, keeping original labels.

    The input must have minimum in- and out-degree 1 and no component
    that is a bare directed cycle; the result is the multidigraph on the
    vertices of total degree >= 3 obtained by contracting each maximal
    path through suppressed vertices into a single arc.  Loops and
    parallel arcs arise naturally and are kept.  Excess is preserved.
    """
    dout = d.out_degrees()
    din = d.in_degrees()
    zero = np.nonzero((dout == 0) | (din == 0))[0]
    if zero.size:
        v = int(zero[0])
        raise StructureError(
            f"vertex {v} has in-degree {int(din[v])} and out-degree {int(dout[v])};"
            " minimum semi-degree 1 required"
        )
    branch = np.nonzero(dout + din >= 3)[0]
    if branch.size == 0:
        cyc = _trace_bare_cycle(d, 0)
        raise StructureError(f"component {cyc} is a bare cycle; no heart exists")
    is_branch = np.zeros(d.n, dtype=bool)
    is_branch[branch] = True
    visited = np.zeros(d.n, dtype=bool)
    arcs: list[tuple[int, int]] = []
    for t in branch.tolist():
        for w in d.out_neighbors(t).tolist():
            while not is_branch[w]:
                visited[w] = True
                w = int(d.out_neighbors(w)[0])
            arcs.append((t, w))
    leftover = np.nonzero(~visited & ~is_branch)[0]
    if leftover.size:
        cyc = _trace_bare_cycle(d, int(leftover[0]))
        raise StructureError(f"component {cyc} is a bare cycle; no heart exists")
    return MultiDigraph(branch.tolist(), arcs)


def _trace_bare_cycle(d: Digraph, start: int) -> list[int]:
    cyc = [start]
    w = int(d.out_neighbors(start)[0])
    while w != start:
        cyc.append(w)
        w = int(d.out_neighbors(w)[0])
    return sorted(cyc)


# --- ear decomposition ----------------------------------------------


@dataclass
class EarDecomposition:
    """Ears of a strongly connected digraph.

    ``ears[0]`` is a directed cycle (as an arc sequence returning to its
    start); every later ear is a directed path whose endpoints lie in
    the union of earlier ears and whose interior vertices are new.  The
    ears partition the arc set, and their number is excess + 1.
    """

    ears: list[list[tuple[int, int]]]
    vertices_covered: int
    arcs_covered: int

    @property
    def counts(self) -> tuple[int, int]:
        return (self.vertices_covered, self.arcs_covered)

    def all_arcs(self) -> list[tuple[int, int]]:
        return [a for ear in self.ears for a in ear]


def _bfs_path(d: Digraph, source: int, targets: np.ndarray) -> list[int]:
    """Shortest path from source to any True target, ascending-label tie-break."""
    parent = np.full(d.n, -1, dtype=np.int64)
    parent[source] = source
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in d.out_neighbors(v).tolist():
                if parent[w] != -1:
                    continue
                parent[w] = v
                if targets[w]:
                    path = [w]
                    while path[-1] != source:
                        path.append(int(parent[path[-1]]))
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    raise StructureError("no path to target set; digraph is not strongly connected")


def ear_decomposition(d: Digraph) -> EarDecomposition:
    """Decompose a strongly connected digraph with >= 1 arc into ears."""
    if d.m_arcs == 0:
        raise StructureError("ear decomposition requires at least one arc")
    dec = scc_decompose(d)
    if dec.ncomp != 1:
        raise StructureError(
            f"digraph is not strongly connected ({dec.ncomp} components)"
        )
    covered_v = np.zeros(d.n, dtype=bool)
    covered_arcs: set[tuple[int, int]] = set()

    # initial ear: a shortest cycle through vertex 0 via its first out-neighbor
    first_hop = int(d.out_neighbors(0)[0])
    back = _bfs_path(d, first_hop, np.arange(d.n) == 0)
    cycle = [0] + back
    ear0 = [(cycle[i], cycle[i + 1]) for i in range(len(cycle) - 1)]
    for u, v in ear0:
        covered_arcs.add((u, v))
    covered_v[cycle] = True
    ears = [ear0]

    while len(covered_arcs) < d.m_arcs:
        start = None
        for u in np.nonzero(covered_v)[0].tolist():
            for w in d.out_neighbors(u).tolist():
                if (u, w) not in covered_arcs:
                    start = (u, w)
                    break
            if start:
                break
        assert start is not None, "uncovered arc must leave the covered set"
        u, w = start
        if covered_v[w]:
            ear = [(u, w)]
        else:
            # shortest route from w back to the covered set through new vertices
            path = _bfs_path_uncovered(d, w, covered_v)
            ear = [(u, w)] + [(path[i], path[i + 1]) for i in range(len(path) - 1)]
        for a, b in ear:
            covered_arcs.add((a, b))
            covered_v[a] = covered_v[b] = True
        ears.append(ear)
    return EarDecomposition(ears, int(covered_v.sum()), len(covered_arcs))


def _bfs_path_uncovered(d: Digraph, source: int, covered: np.ndarray) -> list[int]:
    """Shortest path from source to the covered set, interior vertices uncovered."""
    parent = np.full(d.n, -1, dtype=np.int64)
    parent[source] = source
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for w in d.out_neighbors(v).tolist():
                if parent[w] != -1:
                    continue
                parent[w] = v
                if covered[w]:
                    path = [w]
                    while path[-1] != source:
                        path.append(int(parent[path[-1]]))
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    raise StructureError("covered set unreachable; digraph is not strongly connected")


# --- cycle counting --------------------------------------------------


def count_cycles_up_to(d: Digraph, max_len: int) -> dict[int, int]:
    """Count directed cycles of each length 2..max_len.

    Returns {length: count} with zero-count lengths omitted.  Cycles are
    vertex sequences up to rotation; length 1 never occurs because loops
    are excluded from the model.
    """
    if max_len < 1:
        raise ParameterError(f"max_len must be >= 1, got {max_len}")
    indptr, indices = d.out_csr()
    counts = _kernels.count_cycles(d.n, indptr, indices, min(max_len, d.n))
    return {int(length): int(c) for length, c in enumerate(counts) if c > 0}


# --- text format ------------------------------------------------------


def write_digraph(d: Digraph, fp: IO[str]) -> None:
    """Write the text format: header "n m_arcs", then one "u v" per arc."""
    fp.write(f"{d.n} {d.m_arcs}\n")
    for u, v in d.arcs():
        fp.write(f"{u} {v}\n")


def read_digraph(fp: IO[str]) -> Digraph:
    """Parse the text format, rejecting loops and duplicates with line numbers.

    Lines starting with '#' are comments and are skipped anywhere in the
    file; reported line numbers count them.
    """
    lineno = 0

    def next_data_line() -> str:
        nonlocal lineno
        while True:
            line = fp.readline()
            if not line:
                return ""
            lineno += 1
            if line.lstrip().startswith("#"):
                continue
            return line

    header = next_data_line()
    if not header.strip():
        raise FormatError("missing header", line=max(lineno, 1))
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"header must be 'n m_arcs', got {header.strip()!r}",
                          line=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"header must be two integers, got {header.strip()!r}",
                          line=lineno)
    if n < 1:
        raise FormatError(f"n must be >= 1, got {n}", line=lineno)
    if m < 0:
        raise FormatError(f"arc count must be >= 0, got {m}", line=lineno)
    seen: set[tuple[int, int]] = set()
    arcs = np.empty((m, 2), dtype=np.int64)
    for i in range(m):
        line = next_data_line()
        if not line:
            raise FormatError(f"expected {m} arcs, found {i}", line=lineno + 1)
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v', got {line.strip()!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"expected integers, got {line.strip()!r}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"arc ({u}, {v}) out of range for n={n}", line=lineno)
        if u == v:
            raise FormatError(f"loop at vertex {u} not allowed", line=lineno)
        if (u, v) in seen:
            raise FormatError(f"duplicate arc ({u}, {v})", line=lineno)
        seen.add((u, v))
        arcs[i, 0] = u
        arcs[i, 1] = v
    trailing = next_data_line()
    if trailing.strip():
        raise FormatError(f"unexpected content {trailing.strip()!r}", line=lineno)
    return Digraph(n, arcs)
