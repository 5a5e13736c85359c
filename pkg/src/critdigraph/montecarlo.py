"""Batch experiments over random digraphs in the critical window.

Every experiment derives each trial's randomness from (seed, trial
index) through independent counter-based streams, so results are pure
functions of the configuration and identical under any worker count or
scheduling order.  Empirical tail probabilities come with Wilson 99%
intervals; bound comparisons live with the callers (tests and CLI).
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _scipy_stats

from .bounds import janson_delta_upper, janson_mu_lower
from .digraph import (
    Digraph,
    critical_probability,
    cube_root,
    count_cycles_up_to,
    sample_digraph,
    sample_digraph_coupled,
    scc_decompose,
    undirected_largest_component,
)
from .errors import ParameterError, ResourceLimitError

__all__ = [
    "Z_99",
    "VERTEX_TRIALS_CAP",
    "ExperimentConfig",
    "TailRecord",
    "TailEstimate",
    "CycleWindowResult",
    "ExcessResult",
    "ConjectureResult",
    "CoupledMedianResult",
    "wilson",
    "wilson_radius",
    "largest_scc_sizes",
    "estimate_tail",
    "exact_cycle_expectation",
    "cycle_window_experiment",
    "excess_experiment",
    "conjecture_experiment",
    "coupled_median_experiment",
]

# two-sided 99% normal quantile used by all Wilson intervals
Z_99 = 2.5758293035489004

# default guard against accidentally enormous runs
VERTEX_TRIALS_CAP = 10_000_000_000


def wilson(hits: int, trials: int, z: float = Z_99) -> tuple[float, float]:
    """Wilson score interval (center, radius) for a binomial proportion."""
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if not 0 <= hits <= trials:
        raise ParameterError(f"hits must lie in [0, {trials}], got {hits}")
    ph = hits / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (ph + z2 / (2.0 * trials)) / denom
    radius = z * math.sqrt(ph * (1.0 - ph) / trials + z2 / (4.0 * trials * trials)) / denom
    return center, radius


def wilson_radius(hits: int, trials: int, z: float = Z_99) -> float:
    return wilson(hits, trials, z)[1]


@dataclass(frozen=True)
class ExperimentConfig:
    """Common experiment parameters; thresholds are stored sorted."""

    n: int
    lam: float
    trials: int
    seed: int
    thresholds: tuple[float, ...] = ()
    jobs: int = 1
    out: str | None = None
    fmt: str = "text"

    def __post_init__(self):
        if self.n < 8:
            raise ParameterError(f"n must be >= 8 (so n^(1/3) >= 2), got {self.n}")
        if self.trials < 1:
            raise ParameterError(f"trials must be >= 1, got {self.trials}")
        if self.jobs < 1:
            raise ParameterError(f"jobs must be >= 1, got {self.jobs}")
        object.__setattr__(self, "thresholds",
                           tuple(sorted(float(t) for t in self.thresholds)))
        # validates that p lands in [0, 1]
        critical_probability(self.n, self.lam)

    @property
    def p(self) -> float:
        return critical_probability(self.n, self.lam)


@dataclass(frozen=True)
class TailRecord:
    """One empirical tail probability with its Wilson 99% radius."""

    threshold: float
    hits: int
    trials: int

    @property
    def probability(self) -> float:
        return self.hits / self.trials

    @property
    def radius(self) -> float:
        return wilson_radius(self.hits, self.trials)


@dataclass
class TailEstimate:
    """Largest-SCC sizes across trials with tail probabilities derived
    from the one sorted sample.

    ``records`` holds the upper-tail event |C1| >= threshold * n^(1/3)
    for each configured threshold; ``lower_tail`` derives the
    complementary strict event |C1| < delta * n^(1/3).  ``sizes`` stays
    in trial order for dumping; tails use the sorted copy.
    """

    n: int
    lam: float
    p: float
    trials: int
    seed: int
    sizes: np.ndarray
    records: dict[float, TailRecord] = field(default_factory=dict)
    _sorted: np.ndarray | None = field(default=None, repr=False)

    def sorted_sizes(self) -> np.ndarray:
        if self._sorted is None:
            self._sorted = np.sort(self.sizes)
        return self._sorted

    @property
    def scaled(self) -> np.ndarray:
        return self.sizes / cube_root(self.n)

    def upper_tail(self, threshold: float) -> TailRecord:
        cut = threshold * cube_root(self.n)
        hits = int(self.trials - np.searchsorted(self.sorted_sizes(), cut, side="left"))
        return TailRecord(threshold, hits, self.trials)

    def lower_tail(self, delta: float) -> TailRecord:
        cut = delta * cube_root(self.n)
        hits = int(np.searchsorted(self.sorted_sizes(), cut, side="left"))
        return TailRecord(delta, hits, self.trials)

    def summary(self) -> tuple[float, float, float]:
        """(first quartile, median, third quartile) of |C1| * n^(-1/3)."""
        q1, q2, q3 = np.percentile(self.scaled, [25, 50, 75])
        return float(q1), float(q2), float(q3)

    def dump_rows(self):
        """Long-format rows (n, lambda, trial, L1, L1_scaled), trial order."""
        scale = cube_root(self.n)
        for t, s in enumerate(self.sizes):
            yield self.n, self.lam, t, int(s), int(s) / scale


def largest_scc_sizes(n: int, p: float, seed: int, start: int,
                      stop: int) -> np.ndarray:
    """Largest-SCC size of D(n, p) for trials start..stop-1 (stream = trial)."""
    out = np.empty(stop - start, dtype=np.int64)
    for t in range(start, stop):
        d = sample_digraph(n, p, seed, stream=t)
        out[t - start] = scc_decompose(d).largest_size
    return out


def _tail_chunk(task: tuple[int, float, int, int, int]) -> np.ndarray:
    return largest_scc_sizes(*task)


def estimate_tail(cfg: ExperimentConfig, progress=None,
                  max_vertex_trials: int = VERTEX_TRIALS_CAP) -> TailEstimate:
    """Sample D(n, p) cfg.trials times and record largest-SCC tail statistics.

    Deterministic for fixed (seed, trials) whatever cfg.jobs is: trial t
    always consumes stream t.  ``progress(done, total)`` is invoked
    after each finished chunk.
    """
    if cfg.n * cfg.trials > max_vertex_trials:
        raise ResourceLimitError(
            f"n*trials = {cfg.n * cfg.trials} exceeds the cap {max_vertex_trials}"
        )
    p = cfg.p
    step = max(1, math.ceil(cfg.trials / (cfg.jobs * 10)))
    tasks = [(cfg.n, p, cfg.seed, lo, min(lo + step, cfg.trials))
             for lo in range(0, cfg.trials, step)]
    parts: list[np.ndarray] = []
    done = 0
    if cfg.jobs == 1:
        for task in tasks:
            parts.append(_tail_chunk(task))
            done += len(parts[-1])
            if progress is not None:
                progress(done, cfg.trials)
    else:
        with multiprocessing.Pool(processes=cfg.jobs) as pool:
            for part in pool.imap(_tail_chunk, tasks):
                parts.append(part)
                done += len(part)
                if progress is not None:
                    progress(done, cfg.trials)
    sizes = np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)
    est = TailEstimate(cfg.n, cfg.lam, p, cfg.trials, cfg.seed, sizes)
    for thr in cfg.thresholds:
        est.records[thr] = est.upper_tail(thr)
    return est


# --- cycle statistics --------------------------------------------------


def _component_cycle_counts(d: Digraph, decomp, max_len: int) -> dict[int, int]:
    """Cycle counts by length over the whole digraph, capped at max_len.

    Every cycle lives inside one strongly connected component, so the
    search runs per component of size >= 2; at criticality those are
    few and small, which keeps the path enumeration cheap.
    """
    totals: dict[int, int] = {}
    for comp in decomp.components:
        if comp.size < 2:
            continue
        sub = d.induced_subgraph(comp)
        for length, count in count_cycles_up_to(sub, min(max_len, comp.size)).items():
            totals[length] = totals.get(length, 0) + count
    return totals


def exact_cycle_expectation(n: int, p: float, lo: int, hi: int) -> float:
    """E(number of cycles with length in [lo, hi]) in D(n, p), exactly
    sum_m C(n,m) (m-1)! p^m."""
    if lo < 2 or hi < lo:
        raise ParameterError(f"need 2 <= lo <= hi, got [{lo}, {hi}]")
    total = 0.0
    for m in range(lo, hi + 1):
        acc = 1.0
        for j in range(m):
            acc *= (n - j) * p
        total += acc / m
    return total


@dataclass(frozen=True)
class CycleWindowResult:
    """Occupancy statistics of the cycle-length window
    [ceil(delta*n^(1/3)), floor(delta^(1/2)*n^(1/3))]."""

    n: int
    delta: float
    lam: float
    p: float
    trials: int
    window: tuple[int, int]
    zero_hits: int
    mean_count: float
    exact_expectation: float
    janson_mu: float
    janson_delta: float

    @property
    def p_zero(self) -> float:
        return self.zero_hits / self.trials

    @property
    def p_zero_radius(self) -> float:
        return wilson_radius(self.zero_hits, self.trials)

    @property
    def janson_bound(self) -> float:
        try:
            return math.exp(-self.janson_mu + self.janson_delta)
        except OverflowError:
            return math.inf


def cycle_window_experiment(n: int, delta: float, lam: float, trials: int,
                            seed: int) -> CycleWindowResult:
    """Count cycles with lengths in the delta-window per trial.

    Reports the empirical probability the window is empty, the mean
    count against its exact expectation, and the Janson bound
    e^(-mu + Delta) assembled from the bound evaluators (Delta in its
    n_corrected form).
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    cbrt = cube_root(n)
    lo = math.ceil(delta * cbrt)
    if lo < 2:
        raise ParameterError(
            f"window start ceil(delta*n^(1/3)) = {lo} < 2; increase delta or n"
        )
    hi = math.floor(math.sqrt(delta) * cbrt)
    if hi < lo:
        raise ParameterError(f"window [{lo}, {hi}] is empty")
    p = critical_probability(n, lam)
    zero_hits = 0
    count_sum = 0
    for t in range(trials):
        d = sample_digraph(n, p, seed, stream=t)
        counts = _component_cycle_counts(d, scc_decompose(d), hi)
        x = sum(c for length, c in counts.items() if lo <= length <= hi)
        count_sum += x
        zero_hits += x == 0
    return CycleWindowResult(
        n, delta, lam, p, trials, (lo, hi), zero_hits,
        count_sum / trials, exact_cycle_expectation(n, p, lo, hi),
        janson_mu_lower(delta, lam, n),
        janson_delta_upper(delta, lam, n, "n_corrected"),
    )


@dataclass(frozen=True)
class ExcessResult:
    """Per-trial largest-SCC excess and capped total cycle count.

    ``threshold`` is n^(1/6); the two probabilities are the empirical
    P(cycle count > threshold) and P(excess >= threshold).
    ``structural_violations`` counts trials where the largest component
    held fewer than excess+1 cycles (expected never).
    """

    n: int
    lam: float
    p: float
    trials: int
    length_cap: int
    threshold: float
    excesses: np.ndarray
    cycle_counts: np.ndarray
    structural_violations: int

    @property
    def prob_many_cycles(self) -> float:
        return float((self.cycle_counts > self.threshold).mean())

    @property
    def prob_large_excess(self) -> float:
        return float((self.excesses >= self.threshold).mean())

    @property
    def median_excess(self) -> float:
        return float(np.median(self.excesses))


def excess_experiment(n: int, lam: float, trials: int, seed: int) -> ExcessResult:
    """Record the largest component's excess and the total count of
    cycles no longer than n^(1/3) * log log n, per trial."""
    if n < 1000:
        raise ParameterError(f"n must be >= 1000, got {n}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    p = critical_probability(n, lam)
    cap = math.floor(cube_root(n) * math.log(math.log(n)))
    threshold = float(n) ** (1.0 / 6.0)
    excesses = np.empty(trials, dtype=np.int64)
    counts = np.empty(trials, dtype=np.int64)
    violations = 0
    for t in range(trials):
        d = sample_digraph(n, p, seed, stream=t)
        decomp = scc_decompose(d)
        totals = _component_cycle_counts(d, decomp, cap)
        counts[t] = sum(totals.values())
        idx = decomp.largest_component_index()
        k = int(decomp.excesses[idx])
        excesses[t] = k
        comp = decomp.components[idx]
        if comp.size >= 2:
            inside = count_cycles_up_to(d.induced_subgraph(comp), int(comp.size))
            if sum(inside.values()) < k + 1:
                violations += 1
        elif k + 1 > 0:
            violations += 1
    return ExcessResult(n, lam, p, trials, cap, threshold, excesses, counts,
                        violations)


@dataclass(frozen=True)
class ConjectureResult:
    """Two-sample comparison of |C1(D)| n^(-1/3) against the product of
    two independent undirected |C1(G)| n^(-2/3) draws.  Report only;
    no pass/fail judgment is attached."""

    n: int
    lam: float
    p: float
    trials: int
    ks_statistic: float
    ks_pvalue: float
    directed_scaled: np.ndarray
    products: np.ndarray

    @property
    def directed_median(self) -> float:
        return float(np.median(self.directed_scaled))

    @property
    def product_median(self) -> float:
        return float(np.median(self.products))


def conjecture_experiment(n: int, lam: float, trials: int,
                          seed: int) -> ConjectureResult:
    """Compare the directed scaling limit sample with the conjectured
    product of two independent undirected ones."""
    if n < 10_000:
        raise ParameterError(f"n must be >= 10^4, got {n}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    p = critical_probability(n, lam)
    directed = largest_scc_sizes(n, p, seed, 0, trials) / cube_root(n)
    scale = float(n) ** (2.0 / 3.0)
    products = np.empty(trials, dtype=np.float64)
    for t in range(trials):
        a = undirected_largest_component(n, p, seed, stream=2 * t)
        b = undirected_largest_component(n, p, seed, stream=2 * t + 1)
        products[t] = (a / scale) * (b / scale)
    ks = _scipy_stats.ks_2samp(directed, products)
    return ConjectureResult(n, lam, p, trials, float(ks.statistic),
                            float(ks.pvalue), directed, products)


@dataclass(frozen=True)
class CoupledMedianResult:
    """Medians of |C1| n^(-1/3) across coupled lambda values.

    Arc sets are nested across the per-trial coupling, so the largest-SCC
    size is non-decreasing in lambda within every trial; ``violations``
    counts trials where that failed (expected zero, deterministically).
    """

    n: int
    lam_values: tuple[float, ...]
    trials: int
    medians: tuple[float, ...]
    violations: int
    sizes: np.ndarray

    @property
    def all_monotone(self) -> bool:
        return self.violations == 0

    @property
    def medians_nondecreasing(self) -> bool:
        return all(b >= a for a, b in zip(self.medians, self.medians[1:]))


def coupled_median_experiment(n: int, lam_values, trials: int,
                              seed: int) -> CoupledMedianResult:
    """Sample all lambda values per trial from one coupled arc source."""
    lams = tuple(float(l) for l in lam_values)
    if len(lams) < 2:
        raise ParameterError("need at least two lambda values")
    if any(b <= a for a, b in zip(lams, lams[1:])):
        raise ParameterError("lambda values must be strictly increasing")
    if n < 8:
        raise ParameterError(f"n must be >= 8, got {n}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    ps = [critical_probability(n, l) for l in lams]
    sizes = np.empty((trials, len(lams)), dtype=np.int64)
    for t in range(trials):
        for i, d in enumerate(sample_digraph_coupled(n, ps, seed, stream=t)):
            sizes[t, i] = scc_decompose(d).largest_size
    violations = int((np.diff(sizes, axis=1) < 0).any(axis=1).sum())
    medians = tuple(float(v) for v in np.median(sizes / cube_root(n), axis=0))
    return CoupledMedianResult(n, lams, trials, medians, violations, sizes)
