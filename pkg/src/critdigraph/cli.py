"""Command-line interface: every module behind one executable.

All randomized subcommands take --seed (or generate one and print it)
and echo their full resolved configuration into the output header as
'#'-prefixed lines (csv/text) or a "config" object (json), so any run
can be reproduced from its own output.  Exit codes: 0 success, 2
parameter/usage errors, 3 resource-cap violations.
"""

from __future__ import annotations

import json
import os
import sys
from fractions import Fraction

import click
import numpy as np

from . import bounds as bnd
from .digraph import (
    critical_probability,
    read_digraph,
    sample_digraph,
    scc_decompose,
    write_digraph,
)
from .enumeration import ear_bound, refined_bound, strong_connectivity_census
from .errors import CritdigraphError, ParameterError, ResourceLimitError
from .exploration import certify_component, explore
from .montecarlo import (
    ExperimentConfig,
    conjecture_experiment,
    cycle_window_experiment,
    estimate_tail,
    excess_experiment,
)

FORMAT_VERSION = 1


class NumberType(click.ParamType):
    """Decimal or rational literal; '1/800' parses exactly."""

    name = "number"

    def convert(self, value, param, ctx):
        if isinstance(value, (int, float)):
            return float(value)
        try:
            if "/" in value:
                return float(Fraction(value))
            return float(value)
        except (ValueError, ZeroDivisionError):
            self.fail(
                f"{value!r} is not a number (decimals and fractions like 1/800 work)",
                param, ctx,
            )


NUMBER = NumberType()

_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json", "text"]),
    default="text", show_default=True, help="Output format.",
)
_out_option = click.option(
    "--out", type=click.File("w"), default="-", show_default=True,
    help="Output file ('-' for stdout).",
)
_in_option = click.option(
    "--in", "in_fp", type=click.File("r"), default="-", show_default=True,
    help="Digraph file in the text format ('-' for stdin).",
)


def _resolve_seed(seed: int | None) -> tuple[int, str]:
    if seed is not None:
        return int(seed), "flag"
    return int.from_bytes(os.urandom(4), "big"), "auto"


def _json_default(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"not JSON serializable: {type(obj)!r}")


def _write_config_header(out, command: str, pairs) -> None:
    out.write(f"# critdigraph {command}\n")
    out.write(f"# format_version = {FORMAT_VERSION}\n")
    for key, value in pairs:
        out.write(f"# {key} = {_plain(value) if value is not None else ''}\n")


def _emit_fields(out, fmt: str, command: str, pairs, fields) -> None:
    """Write scalar result fields in the chosen format."""
    if fmt == "json":
        json.dump(
            {"command": command, "format_version": FORMAT_VERSION,
             "config": dict(pairs), "results": dict(fields)},
            out, indent=2, default=_json_default,
        )
        out.write("\n")
        return
    _write_config_header(out, command, pairs)
    if fmt == "csv":
        out.write("key,value\n")
        for key, value in fields:
            out.write(f"{key},{_plain(value)}\n")
    else:
        for key, value in fields:
            out.write(f"{key} = {_plain(value)}\n")


def _plain(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_vertices(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise ParameterError(
            f"vertex list must be comma-separated integers, got {text!r}"
        )
    if not values:
        raise ParameterError("vertex list is empty")
    return values


def _heartbeat(label: str):
    state = {"next": 10}

    def cb(done: int, total: int) -> None:
        pct = done * 100 // total
        while pct >= state["next"] and state["next"] <= 100:
            click.echo(f"{label}: {state['next']}% ({done}/{total} trials)", err=True)
            state["next"] += 10

    return cb


@click.group()
@click.version_option(package_name="critdigraph", prog_name="critdigraph")
def cli():
    """Critical-window random digraph toolkit."""


@cli.command("sample")
@click.option("--n", type=int, required=True, help="Number of vertices.")
@click.option("--p", type=NUMBER, default=None,
              help="Arc probability (overrides --lambda).")
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True,
              help="Window parameter; p = 1/n + lambda*n^(-4/3).")
@click.option("--seed", type=int, default=None, help="RNG seed (auto if omitted).")
@_out_option
def sample_cmd(n, p, lam, seed, out):
    """Draw one D(n, p) digraph and write it in the text format."""
    seed, seed_source = _resolve_seed(seed)
    if p is None:
        p = critical_probability(n, lam)
        p_source = "critical"
    else:
        p_source = "flag"
    d = sample_digraph(n, p, seed)
    _write_config_header(out, "sample", [
        ("n", n), ("lambda", lam), ("p", p), ("p_source", p_source),
        ("seed", seed), ("seed_source", seed_source),
    ])
    write_digraph(d, out)


@cli.command("scc")
@_in_option
@_format_option
@_out_option
def scc_cmd(in_fp, fmt, out):
    """Decompose a digraph into strongly connected components."""
    d = read_digraph(in_fp)
    dec = scc_decompose(d)
    pairs = [("n", d.n), ("m_arcs", d.m_arcs)]
    if fmt == "json":
        json.dump(
            {"command": "scc", "format_version": FORMAT_VERSION,
             "config": dict(pairs),
             "results": {
                 "ncomp": dec.ncomp,
                 "largest_size": int(dec.largest_size),
                 "largest_component_index": int(dec.largest_component_index()),
                 "components": [
                     {"id": i, "size": int(dec.sizes[i]),
                      "excess": int(dec.excesses[i])}
                     for i in range(dec.ncomp)
                 ],
             }},
            out, indent=2, default=_json_default,
        )
        out.write("\n")
        return
    _write_config_header(out, "scc", pairs)
    if fmt == "text":
        out.write(f"ncomp = {dec.ncomp}\n")
        out.write(f"largest_size = {int(dec.largest_size)}\n")
        out.write(f"largest_component_index = {int(dec.largest_component_index())}\n")
    out.write("comp_id,size,excess\n")
    for i in range(dec.ncomp):
        out.write(f"{i},{int(dec.sizes[i])},{int(dec.excesses[i])}\n")


@cli.command("explore")
@_in_option
@click.option("--a0", required=True, help="Seed vertex set, e.g. '0,1,2'.")
@_format_option
@_out_option
def explore_cmd(in_fp, a0, fmt, out):
    """Run the exploration process from a seed set and dump its trace."""
    d = read_digraph(in_fp)
    trace = explore(d, _parse_vertices(a0))
    pairs = [("n", d.n), ("m_arcs", d.m_arcs), ("a0", ",".join(map(str, trace.a0)))]
    if fmt == "json":
        json.dump(
            {"command": "explore", "format_version": FORMAT_VERSION,
             "config": dict(pairs),
             "results": {
                 "x": trace.x, "eta": trace.eta, "tau1": trace.tau1,
                 "explored": trace.explored,
                 "back_edges": trace.back_edges,
             }},
            out, indent=2, default=_json_default,
        )
        out.write("\n")
        return
    _write_config_header(out, "explore", pairs)
    trace.to_csv(out)


@cli.command("certify")
@_in_option
@click.option("--vertices", required=True,
              help="Candidate component vertex set, e.g. '0,1,2'.")
@_format_option
@_out_option
def certify_cmd(in_fp, vertices, fmt, out):
    """Check whether a strongly connected vertex set is a whole component."""
    d = read_digraph(in_fp)
    verts = _parse_vertices(vertices)
    is_component, back = certify_component(d, verts)
    pairs = [("n", d.n), ("m_arcs", d.m_arcs),
             ("vertices", ",".join(map(str, sorted(set(verts)))))]
    _emit_fields(out, fmt, "certify", pairs,
                 [("is_component", is_component), ("back_edges", back)])


@cli.command("enumerate")
@click.option("--m", type=int, required=True, help="Vertex count (<= 5).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="csv", show_default=True)
@_out_option
def enumerate_cmd(m, fmt, out):
    """Tabulate Y(m, k) by brute force against both closed-form bounds."""
    census = strong_connectivity_census(m)
    max_k = m * (m - 1) - m
    rows = []
    for k in range(0, max_k + 1):
        ear = ear_bound(m, k)
        ear_text = str(ear.numerator) if ear.denominator == 1 else repr(float(ear))
        if k >= 1:
            rb = refined_bound(m, k)
            refined_text = repr(rb.value)
            in_domain = rb.in_domain
        else:
            refined_text = ""
            in_domain = False
        rows.append((m, k, census.get(k, 0), ear_text, refined_text, in_domain))
    pairs = [("m", m)]
    if fmt == "json":
        json.dump(
            {"command": "enumerate", "format_version": FORMAT_VERSION,
             "config": dict(pairs),
             "results": [
                 {"m": r[0], "k": r[1], "exact": r[2], "ear_bound": r[3],
                  "refined_bound": r[4] or None, "refined_in_domain": r[5]}
                 for r in rows
             ]},
            out, indent=2, default=_json_default,
        )
        out.write("\n")
        return
    _write_config_header(out, "enumerate", pairs)
    out.write("m,k,exact,ear_bound,refined_bound,refined_in_domain\n")
    for r in rows:
        out.write(f"{r[0]},{r[1]},{r[2]},{r[3]},{r[4]},{_plain(r[5])}\n")


_BOUND_NAMES = [
    "lower-tail", "lower-tail-center", "upper-tail", "janson-mu",
    "janson-delta", "janson-delta-literal", "janson-delta-n-corrected",
    "tau1", "component-prob", "expected-large", "zeta-eta", "harmonic",
    "chernoff",
]


def _bound_entry(name, params, value, valid=True, slack=None):
    return {"name": name, "params": params, "value": value,
            "valid": valid, "slack_terms": slack or {}}


def _evaluate_bound(name, opt):
    delta, lam, n, A = opt["delta"], opt["lam"], opt["n"], opt["A"]
    m, c = opt["m"], opt["c"]
    if name == "lower-tail":
        value, valid = bnd.lower_tail_bound(delta, lam)
        return _bound_entry(name, {"delta": delta, "lambda": lam}, value, valid)
    if name == "lower-tail-center":
        return _bound_entry(name, {"delta": delta},
                            bnd.lower_tail_bound_center(delta))
    if name == "upper-tail":
        return _bound_entry(name, {"A": A, "lambda": lam},
                            bnd.upper_tail_bound(A, lam))
    if name == "janson-mu":
        return _bound_entry(name, {"delta": delta, "lambda": lam, "n": n},
                            bnd.janson_mu_lower(delta, lam, n))
    if name in ("janson-delta", "janson-delta-literal", "janson-delta-n-corrected"):
        variant = opt["variant"]
        if name.endswith("literal"):
            variant = "literal"
        elif name.endswith("n-corrected"):
            variant = "n_corrected"
        value = bnd.janson_delta_upper(delta, lam, n, variant)
        return _bound_entry(name, {"delta": delta, "lambda": lam, "n": n,
                                   "variant": variant}, value)
    if name == "tau1":
        value, slack = bnd.tau1_bound(m, n, c)
        return _bound_entry(name, {"m": m, "n": n, "c": c}, value,
                            slack={"m_sq_over_n": slack})
    if name == "component-prob":
        beta, gamma, value = bnd.component_prob_bound(m, n, opt["epsilon"], opt["r"])
        return _bound_entry(name, {"m": m, "n": n, "epsilon": opt["epsilon"],
                                   "r": opt["r"], "beta": beta, "gamma": gamma},
                            value)
    if name == "expected-large":
        est = bnd.expected_large_components(A, n, lam, mode=opt["mode"])
        return _bound_entry(name, {"A": A, "n": n, "lambda": lam,
                                   "mode": opt["mode"], "beta": 100.0,
                                   "gamma": 0.06, "zeta": est.zeta,
                                   "eta": est.eta},
                            est.value, est.valid)
    if name == "zeta-eta":
        est = bnd.expected_large_components(1.0, 2, 0.0)
        return _bound_entry(name, {"beta": 100.0, "gamma": 0.06},
                            {"zeta": est.zeta, "eta": est.eta})
    if name == "harmonic":
        return _bound_entry(name, {"n": n, "lambda": lam},
                            bnd.harmonic_cycle_bound(n, lam))
    if name == "chernoff":
        if opt["x"] is None or opt["p"] is None:
            raise ParameterError("chernoff requires --x and --p")
        return _bound_entry(name, {"x": opt["x"], "p": opt["p"]},
                            bnd.chernoff_g(opt["x"], opt["p"]))
    raise ParameterError(f"unknown bound name {name!r}")


@cli.command("bounds")
@click.option("--name", type=click.Choice(_BOUND_NAMES), default=None,
              help="Evaluate one named bound.")
@click.option("--all", "all_", is_flag=True, help="Evaluate every bound.")
@click.option("--delta", type=NUMBER, default=None, help="Window parameter delta.")
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True)
@click.option("--n", type=int, default=1_000_000, show_default=True)
@click.option("--A", "a_value", type=NUMBER, default=4.0, show_default=True)
@click.option("--m", type=int, default=900, show_default=True)
@click.option("--c", type=NUMBER, default=1.0, show_default=True)
@click.option("--epsilon", type=NUMBER, default=0.025, show_default=True)
@click.option("--r", type=int, default=45, show_default=True)
@click.option("--variant", type=click.Choice(["literal", "n_corrected"]),
              default="literal", show_default=True)
@click.option("--mode", type=click.Choice(["sum", "integral", "closed_form"]),
              default="closed_form", show_default=True)
@click.option("--x", type=NUMBER, default=None, help="Chernoff argument x.")
@click.option("--p", type=NUMBER, default=None, help="Chernoff argument p.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "text"]),
              default="json", show_default=True)
@_out_option
def bounds_cmd(name, all_, delta, lam, n, a_value, m, c, epsilon, r, variant,
               mode, x, p, fmt, out):
    """Evaluate the closed-form bounds with fully echoed parameters."""
    if (name is None) == (not all_):
        raise ParameterError("exactly one of --name or --all is required")
    opt = {"delta": delta, "lam": lam, "n": n, "A": a_value, "m": m, "c": c,
           "epsilon": epsilon, "r": r, "variant": variant, "mode": mode,
           "x": x, "p": p}
    if all_:
        if delta is None:
            raise ParameterError("--all requires --delta")
        names = ["lower-tail", "lower-tail-center", "upper-tail", "janson-mu",
                 "janson-delta-literal", "janson-delta-n-corrected", "tau1",
                 "component-prob", "expected-large", "zeta-eta"]
        if lam >= 0.0:
            names.append("harmonic")
        if x is not None and p is not None:
            names.append("chernoff")
    else:
        names = [name]
        needs_delta = {"lower-tail", "lower-tail-center", "janson-mu",
                       "janson-delta", "janson-delta-literal",
                       "janson-delta-n-corrected"}
        if name in needs_delta and delta is None:
            raise ParameterError(f"--name {name} requires --delta")
    entries = []
    for nm in names:
        try:
            entries.append(_evaluate_bound(nm, opt))
        except CritdigraphError as exc:
            if not all_:
                raise
            # --all still lists the evaluator; the entry carries the reason.
            entries.append(_bound_entry(nm, {}, None, valid=False,
                                        slack={"error": str(exc)}))
    pairs = [("lambda", lam), ("n", n), ("delta", delta), ("A", a_value),
             ("m", m), ("c", c), ("epsilon", epsilon), ("r", r)]
    if fmt == "json":
        json.dump({"command": "bounds", "format_version": FORMAT_VERSION,
                   "config": dict(pairs), "results": entries},
                  out, indent=2, default=_json_default)
        out.write("\n")
        return
    _write_config_header(out, "bounds", pairs)
    if fmt == "csv":
        out.write("name,value,valid,slack_terms\n")
    for e in entries:
        value = e["value"]
        if isinstance(value, dict):
            value_text = ";".join(f"{k}={_plain(v)}" for k, v in value.items())
        else:
            value_text = _plain(value)
        slack_text = ";".join(f"{k}={_plain(v)}" for k, v in e["slack_terms"].items())
        if fmt == "csv":
            out.write(f"{e['name']},{value_text},{_plain(e['valid'])},{slack_text}\n")
        else:
            suffix = f" (slack: {slack_text})" if slack_text else ""
            out.write(f"{e['name']} = {value_text} [valid={_plain(e['valid'])}]"
                      f"{suffix}\n")


@cli.command("tail")
@click.option("--n", type=int, required=True)
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True)
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--jobs", type=int, default=None,
              help="Worker processes (default: machine parallelism).")
@click.option("--A", "a_values", type=NUMBER, multiple=True,
              help="Upper-tail threshold(s), repeatable.")
@click.option("--delta", "deltas", type=NUMBER, multiple=True,
              help="Lower-tail threshold(s), repeatable.")
@click.option("--dump-samples", type=click.File("w"), default=None,
              help="Write per-trial sizes as CSV to this path.")
@_format_option
@_out_option
def tail_cmd(n, lam, trials, seed, jobs, a_values, deltas, dump_samples, fmt, out):
    """Estimate largest-SCC tail probabilities by Monte Carlo."""
    seed, seed_source = _resolve_seed(seed)
    jobs = jobs or os.cpu_count() or 1
    cfg = ExperimentConfig(n=n, lam=lam, trials=trials, seed=seed,
                           thresholds=a_values, jobs=jobs)
    est = estimate_tail(cfg, progress=_heartbeat("tail"))
    q1, med, q3 = est.summary()
    records = [("upper", thr, est.records[thr]) for thr in cfg.thresholds]
    records += [("lower", d, est.lower_tail(d)) for d in sorted(deltas)]
    pairs = [("n", n), ("lambda", lam), ("p", est.p), ("trials", trials),
             ("seed", seed), ("seed_source", seed_source), ("jobs", jobs),
             ("A", ",".join(repr(v) for v in cfg.thresholds)),
             ("delta", ",".join(repr(v) for v in sorted(deltas)))]
    if dump_samples is not None:
        dump_samples.write("n,lambda,trial,L1,L1_scaled\n")
        for row in est.dump_rows():
            dump_samples.write(f"{row[0]},{row[1]},{row[2]},{row[3]},{row[4]!r}\n")
    if fmt == "json":
        json.dump(
            {"command": "tail", "format_version": FORMAT_VERSION,
             "config": dict(pairs),
             "results": {
                 "records": [
                     {"kind": kind, "threshold": thr, "hits": rec.hits,
                      "trials": rec.trials, "probability": rec.probability,
                      "wilson_radius": rec.radius}
                     for kind, thr, rec in records
                 ],
                 "summary": {"q1": q1, "median": med, "q3": q3},
             }},
            out, indent=2, default=_json_default,
        )
        out.write("\n")
        return
    _write_config_header(out, "tail", pairs)
    if fmt == "text":
        out.write(f"summary_q1 = {q1!r}\n")
        out.write(f"summary_median = {med!r}\n")
        out.write(f"summary_q3 = {q3!r}\n")
    out.write("kind,threshold,hits,trials,probability,wilson_radius\n")
    for kind, thr, rec in records:
        out.write(f"{kind},{thr!r},{rec.hits},{rec.trials},"
                  f"{rec.probability!r},{rec.radius!r}\n")
    if fmt == "csv":
        out.write(f"# summary_q1 = {q1!r}\n")
        out.write(f"# summary_median = {med!r}\n")
        out.write(f"# summary_q3 = {q3!r}\n")


@cli.command("cycles")
@click.option("--n", type=int, required=True)
@click.option("--delta", type=NUMBER, required=True)
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True)
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=None)
@_format_option
@_out_option
def cycles_cmd(n, delta, lam, trials, seed, fmt, out):
    """Count cycles in the delta-window per trial; compare Janson bound."""
    seed, seed_source = _resolve_seed(seed)
    res = cycle_window_experiment(n, delta, lam, trials, seed)
    pairs = [("n", n), ("delta", delta), ("lambda", lam), ("p", res.p),
             ("trials", trials), ("seed", seed), ("seed_source", seed_source)]
    _emit_fields(out, fmt, "cycles", pairs, [
        ("window_lo", res.window[0]),
        ("window_hi", res.window[1]),
        ("zero_hits", res.zero_hits),
        ("p_zero", res.p_zero),
        ("p_zero_radius", res.p_zero_radius),
        ("mean_count", res.mean_count),
        ("exact_expectation", res.exact_expectation),
        ("janson_mu", res.janson_mu),
        ("janson_delta", res.janson_delta),
        ("janson_bound", res.janson_bound),
    ])


@cli.command("excess")
@click.option("--n", type=int, required=True)
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True)
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=None)
@_format_option
@_out_option
def excess_cmd(n, lam, trials, seed, fmt, out):
    """Record largest-component excess and capped cycle counts per trial."""
    seed, seed_source = _resolve_seed(seed)
    res = excess_experiment(n, lam, trials, seed)
    pairs = [("n", n), ("lambda", lam), ("p", res.p), ("trials", trials),
             ("seed", seed), ("seed_source", seed_source)]
    _emit_fields(out, fmt, "excess", pairs, [
        ("length_cap", res.length_cap),
        ("threshold", res.threshold),
        ("prob_many_cycles", res.prob_many_cycles),
        ("prob_large_excess", res.prob_large_excess),
        ("median_excess", res.median_excess),
        ("max_excess", int(res.excesses.max())),
        ("structural_violations", res.structural_violations),
    ])


@cli.command("conjecture")
@click.option("--n", type=int, required=True)
@click.option("--lambda", "lam", type=NUMBER, default=0.0, show_default=True)
@click.option("--trials", type=int, default=2000, show_default=True)
@click.option("--seed", type=int, default=None)
@_format_option
@_out_option
def conjecture_cmd(n, lam, trials, seed, fmt, out):
    """Compare |C1| n^(-1/3) with the product of two undirected copies.

    Reports the KS distance only; no pass/fail judgment is attached.
    """
    seed, seed_source = _resolve_seed(seed)
    res = conjecture_experiment(n, lam, trials, seed)
    pairs = [("n", n), ("lambda", lam), ("p", res.p), ("trials", trials),
             ("seed", seed), ("seed_source", seed_source)]
    _emit_fields(out, fmt, "conjecture", pairs, [
        ("ks_statistic", res.ks_statistic),
        ("ks_pvalue", res.ks_pvalue),
        ("directed_median", res.directed_median),
        ("product_median", res.product_median),
    ])


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="critdigraph", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return 2
    except click.ClickException as exc:
        exc.show()
        return 2
    except click.Abort:
        return 130
    except ResourceLimitError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except CritdigraphError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
