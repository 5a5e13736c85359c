"""End-to-end acceptance gate.

Each test covers one numbered criterion and prints a single
"criterion N: PASS/FAIL" line with its runtime, bypassing capture, so
the gate's verdict is readable straight off the pytest output.  The
runtime limits are part of the criteria and are asserted, not advisory.
"""

import math
import time
from contextlib import contextmanager

import numpy as np
import pytest
from scipy import stats as sps

from critdigraph.bounds import (
    LOG_2,
    expected_large_components,
    janson_delta_upper,
    partition_constants,
    tau1_bound,
)
from critdigraph.digraph import critical_probability, cube_root, sample_digraph
from critdigraph.enumeration import (
    DegreeSequence,
    TruncatedPoisson,
    ear_bound,
    estimate_sigma_probability,
    preheart_count,
    refined_bound,
    sample_preheart,
    strong_connectivity_census,
)
from critdigraph.exploration import certify_component, explore, simulate_process_tau
from critdigraph.digraph import scc_decompose
from critdigraph.montecarlo import (
    ExperimentConfig,
    coupled_median_experiment,
    estimate_tail,
    wilson_radius,
)
from tests.conftest import bfs_reachable, strong_components_oracle

SEED = 20260814


@contextmanager
def criterion(capsys, label, limit_s):
    """Run one criterion, enforce its time limit, and print the verdict."""
    t0 = time.perf_counter()
    notes = []
    ok = False
    try:
        yield notes
        elapsed = time.perf_counter() - t0
        if elapsed >= limit_s:
            raise AssertionError(
                f"{label} exceeded its {limit_s:.0f}s budget: {elapsed:.1f}s"
            )
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        with capsys.disabled():
            print(f"\n{label}: {'PASS' if ok else 'FAIL'} "
                  f"[{elapsed:.1f}s] {'; '.join(notes)}")


def test_criterion_1_census_and_bounds(capsys):
    with criterion(capsys, "criterion 1", 10.0) as notes:
        totals = {1: 1, 2: 1, 3: 18, 4: 1606, 5: 565080}
        assert strong_connectivity_census(1) == {-1: 1}
        for m in range(2, 6):
            census = strong_connectivity_census(m)
            assert sum(census.values()) == totals[m]
            assert census[0] == math.factorial(m - 1)
            for k, exact in census.items():
                if k < 0:
                    continue
                assert exact <= ear_bound(m, k)
                if k >= 1:
                    assert exact <= refined_bound(m, k).value
        notes.append("census m <= 5 matches totals, both bounds dominate")


def test_criterion_2_partition_constants(capsys):
    with criterion(capsys, "criterion 2", 1.0) as notes:
        beta, gamma = partition_constants()
        assert beta == 91
        assert gamma == pytest.approx(0.06375005918560595, rel=1e-9)
        est = expected_large_components(4.0, 10**6, 0.0)
        assert est.zeta < 2e7
        assert est.eta == pytest.approx(0.03, rel=1e-12)
        notes.append(f"beta={beta} gamma={gamma:.6f} "
                     f"zeta={est.zeta:.4g} eta={est.eta}")


def test_criterion_3_janson_overlap(capsys):
    with criterion(capsys, "criterion 3", 1.0) as notes:
        delta = 1.0 / 800.0
        literal = janson_delta_upper(delta)
        assert literal == pytest.approx(1.1647, abs=1e-3)
        worst = 0.0
        for n in (2, 10**3, 10**6):
            val = janson_delta_upper(delta, 0.0, n, variant="n_corrected")
            assert val <= LOG_2
            worst = max(worst, val)
        notes.append(f"literal={literal:.6f}; n-corrected max={worst:.6f} "
                     f"<= log2={LOG_2:.6f}")


def test_criterion_4_certification_matches_oracle(capsys):
    with criterion(capsys, "criterion 4", 30.0) as notes:
        checked = 0
        for t in range(1000):
            n = 2 + t % 39
            d = sample_digraph(n, 2.0 / n, SEED, stream=t)
            arcs = list(d.arcs())
            dec = scc_decompose(d)
            got = {frozenset(c.tolist()) for c in dec.components}
            assert got == strong_components_oracle(n, arcs)
            assert explore(d, [0]).explored_set == bfs_reachable(n, arcs, [0])
            for comp in dec.components:
                ok, back = certify_component(d, comp.tolist())
                assert ok and back == 0
                if comp.size >= 2:
                    ok, back = certify_component(d, [int(comp[0])])
                    assert not ok and back >= 1
                checked += 1
        notes.append(f"1000 digraphs, {checked} components certified "
                     "in agreement with the oracle")


def test_criterion_5_exploration_death_probability(capsys):
    with criterion(capsys, "criterion 5", 600.0) as notes:
        m, n, c, trials = 900, 10**6, 1.0, 10_000
        bound, slack = tau1_bound(m, n, c)
        envelope = bound * math.exp(slack)
        res = simulate_process_tau(m, n, critical_probability(n, 0.0),
                                   "exact", c, trials, seed=SEED)
        radius = wilson_radius(res.hits, trials)
        assert res.probability <= envelope + 3.0 * radius
        notes.append(f"P(die early)={res.probability:.4f} <= "
                     f"{envelope:.4f} + 3*{radius:.4f}")


def test_criterion_6_preheart_uniformity(capsys):
    with criterion(capsys, "criterion 6", 60.0) as notes:
        assert preheart_count(4, 2, 1) == 72
        ds = DegreeSequence(4, 1, [2, 1, 1, 1], [1, 2, 1, 1])
        samples = 100_000
        counts = {}
        for t in range(samples):
            cfg = sample_preheart(ds, SEED, stream=t)
            key = (cfg.heart_matching, cfg.arc_assignments)
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 72
        expected = samples / 72
        stat = sum((c - expected) ** 2 / expected for c in counts.values())
        cutoff = sps.chi2.ppf(1.0 - 1e-3, 71)
        assert stat < cutoff
        notes.append(f"72 configurations seen; chi2={stat:.1f} < "
                     f"{cutoff:.1f} (71 dof, 1e-3)")


def test_criterion_7_window_statistics(capsys):
    with criterion(capsys, "criterion 7", 1800.0) as notes:
        # (a) lower tail at delta = 0.04 stays under the coarse envelope
        cfg = ExperimentConfig(n=46656, lam=0.0, trials=2000, seed=SEED)
        est = estimate_tail(cfg)
        rec = est.lower_tail(0.04)
        assert rec.probability <= 0.4 + 3.0 * rec.radius
        # (b) scaled medians are stable across n within a factor of 2
        medians = []
        for n in (8000, 27000, 64000):
            cfg_n = ExperimentConfig(n=n, lam=0.0, trials=600, seed=SEED + n)
            medians.append(float(np.median(estimate_tail(cfg_n).scaled)))
        assert max(medians) <= 2.0 * min(medians)
        # (c) coupled sampling keeps |C1| monotone in lambda, trialwise
        coup = coupled_median_experiment(46656, (-2.0, 0.0, 2.0), 400, SEED)
        assert coup.violations == 0
        assert coup.medians_nondecreasing
        notes.append(f"lower tail {rec.probability:.4f}; medians "
                     + "/".join(f"{v:.3f}" for v in medians)
                     + f"; coupled medians {coup.medians}")


def test_criterion_8_degree_model(capsys):
    with criterion(capsys, "criterion 8", 120.0) as notes:
        draws = 200_000
        for i, lam in enumerate((0.02, 0.5, 0.8)):
            tp = TruncatedPoisson(lam)
            mom = tp.moments()
            xs = tp.sample(SEED, draws, stream=i).astype(np.float64)
            se_mean = math.sqrt(mom.variance / draws)
            assert abs(xs.mean() - mom.mean) < 4.0 * se_mean
            mu4 = sum((j - mom.mean) ** 4 * tp.pmf(j) for j in range(1, 200))
            se_var = math.sqrt((mu4 - mom.variance**2) / draws)
            assert abs(xs.var() - mom.variance) < 4.0 * se_var
            mu6 = sum(abs(j - mom.mean) ** 6 * tp.pmf(j) for j in range(1, 200))
            emp_third = float(np.mean(np.abs(xs - mom.mean) ** 3))
            se_third = math.sqrt((mu6 - mom.third_abs_central**2) / draws)
            assert abs(emp_third - mom.third_abs_central) < 4.0 * se_third
        stats = estimate_sigma_probability(1000, 5, 0.5, trials=3000, seed=SEED)
        assert stats.bound == pytest.approx(147.0 / 500.0)
        se = math.sqrt(max(stats.probability * (1 - stats.probability), 1e-12)
                       / stats.trials)
        assert stats.probability <= stats.bound + 3.0 * se
        notes.append("moments within 4 SE at lam in {0.02, 0.5, 0.8}; "
                     f"P(sum event)={stats.probability:.5f} <= {stats.bound}")
