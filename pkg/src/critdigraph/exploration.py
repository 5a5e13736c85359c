"""Exploration of out-components and the abstract walks that bound it.

The exploration process reveals out-neighbourhoods one vertex at a time,
tracking the active count X_t = X_{t-1} + eta_t - 1 until it first hits
zero at tau1.  Run on a realized digraph it certifies strongly connected
components: the start set is a component exactly when no explored
outside vertex points back into it.  The abstract simulators reproduce
the process's distributional skeleton (eta_t binomial with a shrinking
pool) plus its lower auxiliary walk and upper martingale walk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import rng
from ._kernels import explore_digraph
from .digraph import Digraph, scc_decompose
from .errors import ParameterError, StructureError

__all__ = [
    "SQRT_2",
    "ExplorationTrace",
    "ProcessTauResult",
    "CoupledDominationResult",
    "explore",
    "certify_component",
    "simulate_process_tau",
    "simulate_coupled_domination",
    "process_horizon",
]

SQRT_2 = math.sqrt(2.0)

PROCESS_VARIANTS = ("exact", "lower_aux", "upper_martingale")


@dataclass(frozen=True)
class ExplorationTrace:
    """Full record of one exploration run.

    ``x[t]`` is the active count X_t for t = 0..tau1 (so x[0] = |A_0|
    and x[tau1] = 0); ``eta[t-1]`` is the activation count of step t.
    ``explored`` lists E_tau1 in exploration order; ``back_edges``
    counts arcs from explored non-seed vertices into the seed set.
    """

    n: int
    a0: tuple[int, ...]
    x: np.ndarray
    eta: np.ndarray
    tau1: int
    explored: np.ndarray
    back_edges: int

    @property
    def explored_set(self) -> frozenset[int]:
        return frozenset(int(v) for v in self.explored)

    @property
    def certifies(self) -> bool:
        return self.back_edges == 0

    def to_csv(self, fp) -> None:
        fp.write("t,X_t,eta_t\n")
        fp.write(f"0,{int(self.x[0])},\n")
        for t in range(1, self.tau1 + 1):
            fp.write(f"{t},{int(self.x[t])},{int(self.eta[t - 1])}\n")
        fp.write(f"tau1,{self.tau1}\n")
        fp.write(f"back_edges,{self.back_edges}\n")


def explore(d: Digraph, a0) -> ExplorationTrace:
    """Run the exploration seeded at a0 until the active set first empties.

    Vertex priority is fixed: a0 in ascending label order, then all
    remaining vertices ascending.  At tau1 the explored set is exactly
    the set of vertices reachable from a0.
    """
    seeds = sorted({int(v) for v in a0})
    if not seeds:
        raise ParameterError("a0 must be a nonempty vertex set")
    if seeds[0] < 0 or seeds[-1] >= d.n:
        raise ParameterError(
            f"a0 contains a vertex outside [0, {d.n - 1}]"
        )
    in_seed = np.zeros(d.n, dtype=bool)
    in_seed[seeds] = True
    order = np.concatenate(
        [np.array(seeds, dtype=np.int32),
         np.nonzero(~in_seed)[0].astype(np.int32)]
    )
    indptr, indices = d.out_csr()
    x_hist, eta, tau1, explored, back = explore_digraph(
        d.n, indptr, indices, order, len(seeds)
    )
    x = np.concatenate([np.array([len(seeds)], dtype=np.int64), x_hist])
    return ExplorationTrace(d.n, tuple(seeds), x, eta, tau1, explored, back)


def certify_component(d: Digraph, h_vertices) -> tuple[bool, int]:
    """Decide whether a strongly connected vertex set is a whole component.

    Explores from h_vertices; the set is a component of d iff no arc
    leads from the explored outside region back into it.
    """
    verts = sorted({int(v) for v in h_vertices})
    if not verts:
        raise ParameterError("h_vertices must be nonempty")
    if verts[0] < 0 or verts[-1] >= d.n:
        raise ParameterError(f"h_vertices contains a vertex outside [0, {d.n - 1}]")
    induced = d.induced_subgraph(verts)
    ncomp = scc_decompose(induced).ncomp
    if ncomp != 1:
        raise StructureError(
            f"h_vertices does not induce a strongly connected subdigraph"
            f" ({ncomp} components)"
        )
    trace = explore(d, verts)
    return trace.back_edges == 0, trace.back_edges


# --- abstract process simulators --------------------------------------


def process_horizon(m: int, n: int, c: float) -> int:
    """Largest integer step strictly below c * sqrt(m*n)."""
    limit = c * math.sqrt(m * n)
    return math.ceil(limit) - 1


@dataclass(frozen=True)
class ProcessTauResult:
    """Empirical stopping behaviour of an abstract exploration walk.

    ``hits`` counts trials whose stopping time fell strictly inside the
    horizon: first zero of X_t for exact/lower_aux, first excursion
    above 10m for upper_martingale.  ``checkpoint_means`` records the
    across-trial mean of the walk at requested steps (lanes that died
    stay frozen at 0; the martingale walk is never frozen).
    """

    variant: str
    m: int
    n: int
    p: float
    c: float
    trials: int
    horizon: int
    hits: int
    checkpoint_means: tuple[tuple[int, float], ...]
    stop_quartiles: tuple[float, float, float] | None
    final_mean: float

    @property
    def probability(self) -> float:
        return self.hits / self.trials


def _binomial_quantile(u: np.ndarray, pool, p: float) -> np.ndarray:
    """Elementwise inverse CDF of Bin(pool, p) at u; pool scalar or array.

    Inverts by walking the pmf recurrence; exact to float precision.
    The walk is capped far beyond any mass the 53-bit uniforms can
    reach, and values are clipped to the pool as a final guard.
    """
    pool = np.asarray(pool, dtype=np.int64)
    if p <= 0.0:
        return np.zeros(np.broadcast(u, pool).shape, dtype=np.int64)
    if p >= 1.0:
        return np.broadcast_to(pool, np.broadcast(u, pool).shape).copy()
    max_mean = float(pool.max()) * p
    cap = max(64, math.ceil(max_mean + 40.0 * math.sqrt(max_mean) + 60.0))
    ratio = p / (1.0 - p)
    pmf = np.exp(pool * math.log1p(-p))
    cdf = pmf * np.ones_like(u)
    live = (u >= cdf) & (pmf > 0)
    k = live.astype(np.int64)
    i = 1
    while live.any() and i <= cap:
        pmf = pmf * np.maximum(pool - (i - 1), 0) * (ratio / i)
        cdf = cdf + pmf
        live = live & (u >= cdf) & (pmf > 0)
        k += live
        i += 1
    return np.minimum(k, pool)


def _validate_process_args(m, n, p, c, trials):
    if not 1 <= m <= n:
        raise ParameterError(f"need 1 <= m <= n, got m={m}, n={n}")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"p must lie in [0, 1], got {p}")
    if not 0.0 < c < SQRT_2:
        raise ParameterError(f"c must lie in (0, sqrt(2)), got {c}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")


def simulate_process_tau(m: int, n: int, p: float, variant: str, c: float,
                         trials: int, seed: int,
                         checkpoints: tuple[int, ...] = ()) -> ProcessTauResult:
    """Simulate an abstract exploration walk to its stopping time.

    exact: X_t = X_{t-1} + eta_t - 1 with eta_t ~ Bin(n - X_{t-1} - (t-1), p),
    stopping at the first zero.  lower_aux replaces the pool by the
    deterministic n - t - 10m (clamped at 0).  upper_martingale walks
    M_t = M_{t-1} + B_t - 1 with B_t ~ Bin(n, 1/n) regardless of p (the
    choice that makes M_t a martingale) and stops when M_t > 10m.

    Reports the fraction of trials stopping strictly before c*sqrt(m*n).
    Trial j consumes stream j of the process domain, one uniform per
    step, so results are independent of execution order.
    """
    _validate_process_args(m, n, p, c, trials)
    if variant not in PROCESS_VARIANTS:
        raise ParameterError(
            f"variant must be one of {PROCESS_VARIANTS}, got {variant!r}"
        )
    horizon = process_horizon(m, n, c)
    streams = np.arange(trials, dtype=np.uint64)
    x = np.full(trials, m, dtype=np.int64)
    stopped = np.zeros(trials, dtype=bool)
    stop_time = np.zeros(trials, dtype=np.int64)
    wanted = {int(t) for t in checkpoints}
    recorded: list[tuple[int, float]] = []
    martingale = variant == "upper_martingale"
    pp = 1.0 / n if martingale else p
    for t in range(1, horizon + 1):
        if not martingale and stopped.all():
            break
        u = rng.uniforms_at(seed, rng.DOMAIN_PROCESS, streams, np.uint64(t))
        if variant == "exact":
            pool = n - x - (t - 1)
            if pool.min() < 0:
                raise AssertionError("unexplored pool went negative")
        elif variant == "lower_aux":
            pool = max(n - t - 10 * m, 0)
        else:
            pool = n
        eta = _binomial_quantile(u, pool, pp)
        if martingale:
            x = x + eta - 1
            crossed = ~stopped & (x > 10 * m)
            stop_time[crossed] = t
            stopped |= crossed
        else:
            x_next = x + eta - 1
            x = np.where(stopped, x, x_next)
            died = ~stopped & (x == 0)
            stop_time[died] = t
            stopped |= died
        if t in wanted:
            recorded.append((t, float(x.mean())))
    hits = int(stopped.sum())
    quartiles = None
    if hits:
        qs = np.percentile(stop_time[stopped], [25, 50, 75])
        quartiles = (float(qs[0]), float(qs[1]), float(qs[2]))
    return ProcessTauResult(variant, m, n, p, c, trials, horizon, hits,
                            tuple(recorded), quartiles, float(x.mean()))


@dataclass(frozen=True)
class CoupledDominationResult:
    """Outcome of pairing the walk with its lower auxiliary under shared noise.

    The walk draws eta_t = W_t + W'_t with W_t ~ Bin(n - t - 10m, p) and
    W'_t ~ Bin(10m - X_{t-1}, p); the auxiliary walk reuses the same W_t
    alone, so X'_t <= X_t must hold at every step before the walk first
    exceeds 10m.  ``violations`` counts trials where it ever failed.
    """

    m: int
    n: int
    p: float
    c: float
    trials: int
    horizon: int
    violations: int
    tau2_count: int
    walk_died: int
    aux_died: int

    @property
    def all_dominated(self) -> bool:
        return self.violations == 0


def simulate_coupled_domination(m: int, n: int, p: float, c: float,
                                trials: int, seed: int) -> CoupledDominationResult:
    """Run paired (walk, auxiliary) trials under the explicit coupling.

    Trial j uses stream j; step t consumes the two uniforms at indices
    2t and 2t+1 (one for W_t, one for W'_t).  Checking stops per trial
    at the first of: the walk exceeding 10m (its tau2), the walk dying,
    or the horizon.
    """
    _validate_process_args(m, n, p, c, trials)
    horizon = process_horizon(m, n, c)
    streams = np.arange(trials, dtype=np.uint64)
    x = np.full(trials, m, dtype=np.int64)
    x_aux = np.full(trials, m, dtype=np.int64)
    checking = np.ones(trials, dtype=bool)
    aux_alive = np.ones(trials, dtype=bool)
    violated = np.zeros(trials, dtype=bool)
    tau2_hit = np.zeros(trials, dtype=bool)
    walk_died = np.zeros(trials, dtype=bool)
    for t in range(1, horizon + 1):
        if not checking.any():
            break
        u_w = rng.uniforms_at(seed, rng.DOMAIN_PROCESS, streams, np.uint64(2 * t))
        u_wp = rng.uniforms_at(seed, rng.DOMAIN_PROCESS, streams, np.uint64(2 * t + 1))
        w = _binomial_quantile(u_w, max(n - t - 10 * m, 0), p)
        wp = _binomial_quantile(u_wp, np.maximum(10 * m - x, 0), p)
        x_next = x + w + wp - 1
        aux_next = np.maximum(x_aux + w - 1, 0)
        x = np.where(checking, x_next, x)
        x_aux = np.where(checking & aux_alive, aux_next, x_aux)
        aux_alive &= x_aux > 0
        crossed = checking & (x > 10 * m)
        tau2_hit |= crossed
        died = checking & (x <= 0)
        walk_died |= died
        # t < tau2 on every lane that did not cross, including the death step
        violated |= checking & ~crossed & (x_aux > x)
        checking = checking & ~crossed & ~died
    return CoupledDominationResult(
        m, n, p, c, trials, horizon,
        int(violated.sum()), int(tau2_hit.sum()),
        int(walk_died.sum()), int((~aux_alive).sum()),
    )
