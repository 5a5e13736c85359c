"""Counting strongly connected digraphs by size and excess.

Y(m, k) denotes the number of labelled strongly connected digraphs with
m vertices and excess k (arcs minus vertices).  This module provides an
exhaustive oracle for tiny m, two closed-form upper bounds, and the
generative machinery behind the refined bound: zero-truncated Poisson
degree sequences, the event that their sums hit m + k, and the two-stage
preheart configuration model.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import rng
from .digraph import MultiDigraph
from .errors import CritdigraphError, ParameterError, ResourceLimitError

__all__ = [
    "ENUMERATION_CONSTANT",
    "BRUTE_FORCE_MAX_VERTICES",
    "RefinedBound",
    "TpMoments",
    "TruncatedPoisson",
    "truncated_poisson",
    "DegreeSequence",
    "SigmaStats",
    "PreheartConfig",
    "strong_connectivity_census",
    "brute_force_scc_count",
    "ear_bound",
    "ear_bound_log",
    "refined_bound",
    "sample_degree_sequence",
    "estimate_sigma_probability",
    "preheart_count",
    "sample_preheart",
]

# prefactor of the small-excess bound C * m! * m^(3k-1) / (2k-1)!
ENUMERATION_CONSTANT = 441.0 * math.e**3 / 2.0

BRUTE_FORCE_MAX_VERTICES = 5

_CENSUS_CHUNK = 1 << 16


@lru_cache(maxsize=None)
def _strong_counts_by_arcs(m: int) -> tuple[int, ...]:
    """counts[a] = number of strongly connected digraphs on m vertices with a arcs.

    Exhaustive sweep over all 2^(m(m-1)) arc subsets; strong connectivity
    via boolean reachability closure, batched over subsets.
    """
    slots = [(u, v) for u in range(m) for v in range(m) if u != v]
    n_slots = len(slots)
    us = np.array([s[0] for s in slots], dtype=np.int64)
    vs = np.array([s[1] for s in slots], dtype=np.int64)
    counts = np.zeros(n_slots + 1, dtype=np.int64)
    squarings = max(math.ceil(math.log2(m - 1)), 0) if m > 1 else 0
    total = 1 << n_slots
    shifts = np.arange(n_slots, dtype=np.uint32)
    for lo in range(0, total, _CENSUS_CHUNK):
        masks = np.arange(lo, min(lo + _CENSUS_CHUNK, total), dtype=np.uint32)
        bits = ((masks[:, None] >> shifts) & 1).astype(np.uint8)
        adj = np.zeros((masks.size, m, m), dtype=np.uint8)
        adj[:, us, vs] = bits
        reach = adj | np.eye(m, dtype=np.uint8)
        for _ in range(squarings):
            reach = (np.matmul(reach, reach) > 0).astype(np.uint8)
        strong = reach.reshape(masks.size, -1).all(axis=1)
        counts += np.bincount(bits[strong].sum(axis=1), minlength=n_slots + 1)
    return tuple(int(c) for c in counts)


def strong_connectivity_census(m: int) -> dict[int, int]:
    """Map excess -> Y(m, excess) for every realizable excess, by brute force."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if m > BRUTE_FORCE_MAX_VERTICES:
        raise ResourceLimitError(
            f"brute-force census is capped at m = {BRUTE_FORCE_MAX_VERTICES}"
            f" (2^(m(m-1)) subsets); got m = {m}"
        )
    counts = _strong_counts_by_arcs(m)
    return {a - m: c for a, c in enumerate(counts) if c > 0}


def brute_force_scc_count(m: int, k: int) -> int:
    """Exact Y(m, k) for m <= 5, by enumerating every arc subset.

    Excess values outside the realizable range count zero digraphs and
    return 0 rather than raising.
    """
    census = strong_connectivity_census(m)
    return census.get(k, 0)


def ear_bound(m: int, k: int) -> Fraction:
    """Upper bound (m+k)^k * m^(2k) * (m-1)! / k! on Y(m, k), exact rational."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    return Fraction((m + k) ** k * m ** (2 * k) * math.factorial(m - 1),
                    math.factorial(k))


def ear_bound_log(m: int, k: int) -> float:
    """Natural log of ear_bound, safe far beyond float factorial range."""
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if k < 0:
        raise ParameterError(f"k must be >= 0, got {k}")
    return (k * math.log(m + k) + 2 * k * math.log(m)
            + math.lgamma(m) - math.lgamma(k + 1))


@dataclass(frozen=True)
class RefinedBound:
    """Small-excess bound C * m! * m^(3k-1) / (2k-1)! with its validity flag.

    The bound only holds for 1 <= k <= sqrt(m)/3; outside that range
    ``in_domain`` is False and the numbers are the bare formula value.
    ``value`` overflows to inf for large m; ``log_value`` never does.
    """

    m: int
    k: int
    log_value: float
    in_domain: bool

    @property
    def value(self) -> float:
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf


def refined_bound(m: int, k: int) -> RefinedBound:
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    log_value = (math.log(ENUMERATION_CONSTANT) + math.lgamma(m + 1)
                 + (3 * k - 1) * math.log(m) - math.lgamma(2 * k))
    return RefinedBound(m, k, log_value, in_domain=9 * k * k <= m)


# --- zero-truncated Poisson ------------------------------------------


@dataclass(frozen=True)
class TpMoments:
    mean: float
    variance: float
    third_abs_central: float


def _third_abs_closed_form(lam: float) -> float:
    e = math.expm1(lam)
    return (lam
            + (2 * lam**4 - 5 * lam**3 + 3 * lam**2 - lam) / e
            + 3 * (2 * lam**4 - 3 * lam**3 + lam**2) / e**2
            + 2 * (3 * lam**4 - 2 * lam**3) / e**3
            + 2 * lam**4 / e**4)


class TruncatedPoisson:
    """Poisson(lam) conditioned on being >= 1.

    pmf(i) = lam^i / (i! (e^lam - 1)) for i >= 1.  Sampling inverts a
    cached CDF; the cache extends itself until the requested quantile is
    covered (tail mass below 1e-15 at the initial cutoff).
    """

    def __init__(self, lam: float):
        lam = float(lam)
        if not lam > 0.0 or math.isinf(lam):
            raise ParameterError(f"lambda must be a positive real, got {lam}")
        self.lam = lam
        self._expm1 = math.expm1(lam)
        self.mean = lam * (1.0 + 1.0 / self._expm1)
        self.variance = self.mean * (1.0 + lam - self.mean)
        self._pmf_cache = None
        self._cdf_cache = None

    def pmf(self, i: int) -> float:
        if i < 1:
            return 0.0
        return math.exp(i * math.log(self.lam) - math.lgamma(i + 1)) / self._expm1

    def _build_cache(self, min_len: int) -> None:
        if self._pmf_cache is not None and self._pmf_cache.size >= min_len:
            return
        length = max(min_len, int(self.lam + 12.0 * math.sqrt(self.lam) + 34.0))
        vals = np.empty(length, dtype=np.float64)
        vals[0] = self.lam / self._expm1
        for i in range(1, length):
            vals[i] = vals[i - 1] * self.lam / (i + 1)
        self._pmf_cache = vals
        self._cdf_cache = np.cumsum(vals)

    def cdf(self, i: int) -> float:
        if i < 1:
            return 0.0
        self._build_cache(i)
        return float(min(self._cdf_cache[i - 1], 1.0))

    def quantile(self, u: np.ndarray) -> np.ndarray:
        """Inverse CDF, elementwise: smallest i >= 1 with cdf(i) > u."""
        u = np.asarray(u, dtype=np.float64)
        self._build_cache(2)
        while float(self._cdf_cache[-1]) <= float(u.max(initial=0.0)):
            before = float(self._cdf_cache[-1])
            self._build_cache(self._cdf_cache.size * 2)
            if float(self._cdf_cache[-1]) == before:
                # float cumsum plateaued a hair below the largest uniform;
                # the remaining mass is below one ulp, stop extending
                break
        return np.searchsorted(self._cdf_cache, u, side="right") + 1

    def sample(self, seed: int, count: int = 1, stream: int = 0) -> np.ndarray:
        return self.quantile(rng.uniforms(seed, rng.DOMAIN_TRUNCPOIS, stream, 0, count))

    def moments(self) -> TpMoments:
        # the closed form for E|Y - mean|^3 assumes only the value 1 sits
        # below the mean, i.e. mean < 2; sum the series directly otherwise
        if self.mean < 2.0:
            third = _third_abs_closed_form(self.lam)
        else:
            third = 0.0
            i = 1
            sigma = math.sqrt(self.variance)
            cutoff = self.mean + 30.0 * sigma + 30.0
            while i < cutoff:
                third += abs(i - self.mean) ** 3 * self.pmf(i)
                i += 1
        return TpMoments(self.mean, self.variance, third)


def truncated_poisson(lam: float) -> TruncatedPoisson:
    return TruncatedPoisson(lam)


# --- degree sequences and the sum event ------------------------------


@dataclass(frozen=True)
class DegreeSequence:
    """In/out degree lists with the target excess they are aimed at.

    ``attempts`` records how many i.i.d. draws a sampler consumed to
    produce this sequence (1 for an unconditioned draw).
    """

    m: int
    k: int
    d_out: np.ndarray
    d_in: np.ndarray
    attempts: int = 1

    def __post_init__(self):
        d_out = np.asarray(self.d_out, dtype=np.int64)
        d_in = np.asarray(self.d_in, dtype=np.int64)
        object.__setattr__(self, "d_out", d_out)
        object.__setattr__(self, "d_in", d_in)
        if d_out.shape != (self.m,) or d_in.shape != (self.m,):
            raise ParameterError("degree lists must each have length m")
        if self.m >= 1 and (d_out.min() < 1 or d_in.min() < 1):
            raise ParameterError("every degree must be >= 1")

    @property
    def sigma_holds(self) -> bool:
        target = self.m + self.k
        return int(self.d_out.sum()) == target and int(self.d_in.sum()) == target

    def core_vertices(self) -> np.ndarray:
        """T = vertices of total degree >= 3 (the heart's vertex set)."""
        return np.nonzero(self.d_out + self.d_in >= 3)[0]


def sample_degree_sequence(m: int, k: int, lam: float, seed: int,
                           mode: str = "raw", stream: int = 0,
                           max_attempts: int = 10_000_000) -> DegreeSequence:
    """Draw i.i.d. TP(lam) in/out degrees; optionally reject until sums hit m+k.

    Attempt a consumes uniforms at indices [2*m*a, 2*m*(a+1)), so results
    are a pure function of (seed, stream, attempt number) and independent
    of the rejection batch size.
    """
    if m < 1:
        raise ParameterError(f"m must be >= 1, got {m}")
    if mode not in ("raw", "conditioned"):
        raise ParameterError(f"mode must be 'raw' or 'conditioned', got {mode!r}")
    tp = TruncatedPoisson(lam)
    target = m + k
    if mode == "raw":
        u = rng.uniforms(seed, rng.DOMAIN_TRUNCPOIS, stream, 0, 2 * m)
        draws = tp.quantile(u)
        return DegreeSequence(m, k, draws[:m], draws[m:], attempts=1)
    batch = 256
    attempt = 0
    while attempt < max_attempts:
        n_att = min(batch, max_attempts - attempt)
        idx = (np.arange(attempt, attempt + n_att, dtype=np.uint64)[:, None]
               * np.uint64(2 * m)
               + np.arange(2 * m, dtype=np.uint64)[None, :])
        draws = tp.quantile(rng.uniforms_at(seed, rng.DOMAIN_TRUNCPOIS, stream, idx))
        ok = ((draws[:, :m].sum(axis=1) == target)
              & (draws[:, m:].sum(axis=1) == target))
        hit = np.nonzero(ok)[0]
        if hit.size:
            row = int(hit[0])
            return DegreeSequence(m, k, draws[row, :m], draws[row, m:],
                                  attempts=attempt + row + 1)
        attempt += n_att
    raise ResourceLimitError(
        f"no degree sequence with both sums {target} found in {max_attempts} attempts"
    )


@dataclass(frozen=True)
class SigmaStats:
    """Empirical frequency of both degree sums hitting m + k."""

    m: int
    k: int
    lam: float
    trials: int
    hits: int
    bound: float | None  # 147/(lam*m), stated for lam < 1 only

    @property
    def probability(self) -> float:
        return self.hits / self.trials


def estimate_sigma_probability(m: int, k: int, lam: float, trials: int,
                               seed: int) -> SigmaStats:
    """Monte Carlo estimate of the sum event's probability over raw draws.

    Trial t consumes the uniforms of stream t, so the estimate is
    deterministic and chunk-size independent.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    tp = TruncatedPoisson(lam)
    target = m + k
    hits = 0
    chunk = max(1, min(trials, 2_000_000 // (2 * m) + 1))
    cols = np.arange(2 * m, dtype=np.uint64)[None, :]
    for lo in range(0, trials, chunk):
        streams = np.arange(lo, min(lo + chunk, trials), dtype=np.uint64)[:, None]
        draws = tp.quantile(
            rng.uniforms_at(seed, rng.DOMAIN_TRUNCPOIS, streams, cols)
        )
        hits += int(((draws[:, :m].sum(axis=1) == target)
                     & (draws[:, m:].sum(axis=1) == target)).sum())
    bound = 147.0 / (lam * m) if lam < 1.0 else None
    return SigmaStats(m, k, lam, trials, hits, bound)


# --- preheart configuration model ------------------------------------


def preheart_count(m: int, m_prime: int, k: int) -> int:
    """Number of preheart configurations: (m'+k)/(m+k) * (m+k)!, exact."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if not 0 <= m_prime <= min(m, 2 * k):
        raise ParameterError(
            f"m_prime must lie in [0, min(m, 2k)] = [0, {min(m, 2 * k)}], got {m_prime}"
        )
    q, r = divmod((m_prime + k) * math.factorial(m + k), m + k)
    if r != 0:
        raise CritdigraphError(
            f"preheart count (m'={m_prime}, m={m}, k={k}) is not an integer"
        )
    return q


@dataclass(frozen=True)
class PreheartConfig:
    """One realization of the two-stage preheart configuration model.

    ``heart_matching`` pairs out-stub (vertex, copy) with in-stub
    (vertex, copy); heart arc j runs from the tail of out-stub j to the
    head of its matched in-stub.  ``arc_assignments[j]`` lists the
    degree-(1,1) vertices subdividing heart arc j in path order.
    """

    heart_matching: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    arc_assignments: tuple[tuple[int, ...], ...]
    resulting: MultiDigraph
    is_simple: bool = field(default=False)


def sample_preheart(ds: DegreeSequence, seed: int, stream: int = 0) -> PreheartConfig:
    """Stage 1: uniform stub matching on the degree->=3 core; stage 2:
    insert each degree-(1,1) vertex by subdividing a uniform current arc.
    """
    if not ds.sigma_holds:
        raise ParameterError("degree sums must both equal m + k")
    core = ds.core_vertices()
    if core.size == 0:
        raise ParameterError(
            "every vertex has in-degree = out-degree = 1; the sequence describes"
            " bare cycles, not a preheart"
        )
    out_stubs = [(int(v), c) for v in core for c in range(int(ds.d_out[v]))]
    in_stubs = [(int(v), c) for v in core for c in range(int(ds.d_in[v]))]
    if len(out_stubs) != len(in_stubs):
        raise CritdigraphError("stub counts diverge despite matching degree sums")

    strm = rng.PhiloxStream(seed, rng.DOMAIN_PREHEART, stream)
    perm = strm.shuffle(list(range(len(in_stubs))))
    matching = tuple((out_stubs[j], in_stubs[perm[j]]) for j in range(len(out_stubs)))
    # (tail, head, heart arc index); subdivision keeps the index so the
    # chain along each heart arc can be reassembled afterwards
    arcs = [(u, w, j) for j, ((u, _), (w, _)) in enumerate(matching)]

    core_set = set(core.tolist())
    for v in range(ds.m):
        if v in core_set:
            continue
        pos = strm.randbelow(len(arcs))
        u, w, h = arcs[pos]
        arcs[pos] = (u, v, h)
        arcs.append((v, w, h))

    succs: list[dict[int, int]] = [{} for _ in matching]
    for u, w, h in arcs:
        succs[h][u] = w
    assignments = []
    for j, ((tail, _), _) in enumerate(matching):
        succ = succs[j]
        chain = []
        v = succ[tail]
        while len(chain) < len(succ) - 1:
            chain.append(v)
            v = succ[v]
        assignments.append(tuple(chain))

    result = MultiDigraph(range(ds.m), [(u, w) for u, w, _ in arcs])
    dout, din = result.degrees()
    if (any(dout[v] != int(ds.d_out[v]) for v in range(ds.m))
            or any(din[v] != int(ds.d_in[v]) for v in range(ds.m))):
        raise CritdigraphError("realized degrees diverge from the degree sequence")
    return PreheartConfig(matching, tuple(assignments), result, result.is_simple())
