"""Command-line surface: run, verify, replay and analyze.

Exit codes: 0 success, 1 usage or input error, 2 step cap reached, 3 corrupted record.
Results go to stdout (JSON or CSV); logs and messages go to stderr.
"""

import argparse
import asyncio
import csv
import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from acyclic_coloring.config import AppConfig, load_config, seed_from_env
from acyclic_coloring.data.structures import GraphFamily, PaletteMode, RunReport
from acyclic_coloring.dyck.counting import count_dyck_even, growth_ratio
from acyclic_coloring.engine.coloring import PartialColoring
from acyclic_coloring.engine.runner import run_until_colored
from acyclic_coloring.errors import AcyclicColoringError, OracleRefusal, RecordCorruptionError
from acyclic_coloring.executor.bench_mode import BenchMode
from acyclic_coloring.graph.core import Graph, load_graph
from acyclic_coloring.graph.dangerous import DangerousSets, dangerous_set, effective_delta
from acyclic_coloring.graph.generators import generate_family
from acyclic_coloring.oracle.chromatic import brute_force_chi_a, square_greedy_baseline
from acyclic_coloring.oracle.verify import verify_acyclic
from acyclic_coloring.params.algo_params import (
    AlgoParams,
    catalog_bound_holds,
    catalog_bound_value,
    make_params,
    resolve_kappa,
)
from acyclic_coloring.params.arith import parse_kappa
from acyclic_coloring.records.catalog import CycleCatalog
from acyclic_coloring.records.record import RecordHeader, decode_record, encode_record
from acyclic_coloring.records.replay import replay_full
from acyclic_coloring.utils.get_log import GetLog
from acyclic_coloring.utils.log_icon import icon

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_STEP_CAP = 2
EXIT_CORRUPT = 3


class UsageError(Exception):
    pass


class CliArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 means step cap here, so raise instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_graph_source(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("graph source")
    group.add_argument("--graph", help="DIMACS .col file")
    group.add_argument("--family", choices=[f.value for f in GraphFamily], help="generated graph family")
    group.add_argument("--n", type=int, help="vertex count (cycle, path, empty, complete, random_regular, erdos_renyi)")
    group.add_argument("--d", type=int, help="degree (random_regular)")
    group.add_argument("--p", help="edge probability as decimal or fraction (erdos_renyi)")
    group.add_argument("--a", type=int, help="left side size (complete_bipartite)")
    group.add_argument("--b", type=int, help="right side size (complete_bipartite)")
    group.add_argument("--dim", type=int, help="dimension (hypercube)")
    group.add_argument("--graph-seed", type=int, help="seed of the random families (default: the run seed)")


def _add_algorithm_options(parser: argparse.ArgumentParser):
    parser.add_argument("--kappa", help="kappa as decimal or fraction (default from config, 1.0583)")
    parser.add_argument("--mode", choices=[m.value for m in PaletteMode], help="palette mode (default safe)")
    parser.add_argument("--seed", type=int, help="run seed (fallback: ACRC_SEED, then 0)")
    parser.add_argument("--step-cap", type=int, help="maximum number of steps (default 50 * n)")
    parser.add_argument("--audit", action="store_true", help="check every invariant after each step")


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(prog="acyclic-coloring", description="Randomized acyclic vertex coloring")
    parser.add_argument("--config", "-c", help="YAML configuration file path (optional, default auto-search config/config.yaml)")
    parser.add_argument("--log-level", help="debug, info, warning, error or critical")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="color a graph")
    _add_graph_source(run)
    _add_algorithm_options(run)
    run.add_argument("--emit-record", help="write the run record to this file")
    run.add_argument("--emit-coloring", help="write the coloring as a JSON array to this file")
    run.add_argument("--json", action="store_true", help="print the report as JSON")
    run.add_argument("--timing", action="store_true", help="include wall time in the report")

    verify = sub.add_parser("verify", help="check that a coloring is acyclic")
    _add_graph_source(verify)
    verify.add_argument("--coloring", required=True, help="JSON array of colors, entry i for vertex i+1")

    replay = sub.add_parser("replay", help="invert a run from its final coloring and record")
    _add_graph_source(replay)
    replay.add_argument("--coloring", required=True, help="final coloring written by run --emit-coloring")
    replay.add_argument("--record", required=True, help="record written by run --emit-record")

    analyze = sub.add_parser("analyze", help="CSV analyses")
    analyses = analyze.add_subparsers(dest="analysis", required=True)
    dyck = analyses.add_parser("dyck", help="even-descent Dyck word counts")
    dyck.add_argument("--t-max", type=int, required=True)
    bounds = analyses.add_parser("bounds", help="cycle catalog sizes against their bound")
    _add_graph_source(bounds)
    bounds.add_argument("--kappa")
    bounds.add_argument("--k-max", type=int, help="largest half-length k (default n // 2)")
    bench = analyses.add_parser("bench", help="repeated seeded runs")
    _add_graph_source(bench)
    _add_algorithm_options(bench)
    bench.add_argument("--trials", type=int, default=1)
    bench.add_argument("--seeds", type=int, nargs="+", help="explicit run seeds (overrides --trials)")
    bench.add_argument("--max-concurrent", type=int, help="worker pool size (default from config)")
    bench.add_argument("--report-dir", help="also write a JSON summary here")
    compare = analyses.add_parser("compare", help="exact acyclic chromatic number against the algorithm and the baseline")
    _add_graph_source(compare)
    _add_algorithm_options(compare)
    compare.add_argument("--max-n", type=int, help="largest graph for the exact search (default from config, 9)")
    return parser


def resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    return seed_from_env(0)


def load_graph_source(args, cfg: AppConfig, seed: int = 0) -> Tuple[Graph, str]:
    if args.graph and args.family:
        raise UsageError("use either --graph or --family, not both")
    if args.graph:
        return load_graph(args.graph), args.graph
    if not args.family:
        raise UsageError("a graph source is required: --graph PATH or --family NAME")
    names = ("n", "d", "p", "a", "b", "dim")
    params = {k: getattr(args, k) for k in names if getattr(args, k) is not None}
    graph_seed = args.graph_seed if args.graph_seed is not None else seed
    g = generate_family(args.family, params, graph_seed, cfg.generator.random_regular_max_retries)
    described = ",".join(f"{k}={v}" for k, v in params.items())
    return g, f"{args.family}({described})"


def prepare_params(g: Graph, kappa_text: Optional[str], mode: Optional[str], cfg: AppConfig) -> Tuple[AlgoParams, DangerousSets]:
    delta = effective_delta(g)
    kappa = resolve_kappa(delta, parse_kappa(kappa_text or cfg.algorithm.kappa))
    params = make_params(delta, kappa, PaletteMode(mode or cfg.algorithm.mode))
    logging.info(
        f"{icon['lightbulb']} delta={delta}, kappa={params.kappa_text}, palette={params.palette}, "
        f"list size={params.list_size} ({params.mode.value})"
    )
    return params, dangerous_set(g, kappa, delta)


def _step_cap(args, g: Graph, cfg: AppConfig) -> int:
    if args.step_cap is not None:
        if args.step_cap < 1:
            raise UsageError("--step-cap must be at least 1")
        return args.step_cap
    return max(cfg.algorithm.step_cap_factor * g.n, 1)


def _load_coloring(path: str, g: Graph) -> PartialColoring:
    try:
        values = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValueError(f"coloring file {path} is not valid JSON: {e}") from None
    if not isinstance(values, list):
        raise ValueError(f"coloring file {path} must hold a JSON array")
    return PartialColoring(g.n, values)


def cmd_run(args, cfg: AppConfig) -> int:
    seed = resolve_seed(args)
    g, source = load_graph_source(args, cfg, seed)
    params, dsets = prepare_params(g, args.kappa, args.mode, cfg)
    step_cap = _step_cap(args, g, cfg)

    logging.info(f"{icon['rocket']} Running on {source} with seed {seed}, step cap {step_cap}")
    started = time.perf_counter()
    result = run_until_colored(g, params, seed, step_cap, dsets=dsets, audit=args.audit)
    elapsed = time.perf_counter() - started

    header = RecordHeader(
        delta=params.delta,
        kappa=params.kappa_text,
        mode=params.mode,
        n=g.n,
        seed=seed,
        t=result.record.t,
        u_total=result.record.u_total,
    )
    blob = encode_record(result.record, header)
    if args.emit_record:
        Path(args.emit_record).write_bytes(blob)
        logging.info(f"Record written to {args.emit_record}")
    coloring = result.coloring.to_list()
    if args.emit_coloring:
        Path(args.emit_coloring).write_text(json.dumps(coloring) + "\n", encoding="utf-8")
        logging.info(f"Coloring written to {args.emit_coloring}")

    report = RunReport(
        source=source,
        n=g.n,
        m=g.m,
        delta=params.delta,
        kappa=params.kappa_text,
        mode=params.mode,
        palette=params.palette,
        list_size=params.list_size,
        seed=seed,
        terminated=result.terminated,
        steps=result.stats.steps,
        uncolorings=result.stats.uncolorings,
        u_total=result.record.u_total,
        histogram=result.stats.histogram,
        colors_used=result.coloring.colors_used(),
        r1_bits=result.record.r1_bits,
        r2_bits=result.record.r2_bits,
        record_bytes=len(blob),
        wall_time=round(elapsed, 6) if args.timing else None,
        coloring=coloring if args.json else None,
    )
    data = report.to_dict()
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for key in sorted(data):
            print(f"{key}: {data[key]}")
    return EXIT_OK if result.terminated else EXIT_STEP_CAP


def cmd_verify(args, cfg: AppConfig) -> int:
    g, _ = load_graph_source(args, cfg, resolve_seed(args))
    report = verify_acyclic(g, _load_coloring(args.coloring, g))
    print(json.dumps(report.to_dict(), sort_keys=True))
    if report.acyclic:
        logging.info(f"{icon['check']} Acyclic coloring with {report.colors_used} colors")
        return EXIT_OK
    logging.warning(f"{icon['cross']} Not acyclic (proper={report.proper}), witness {report.witness}")
    return EXIT_ERROR


def cmd_replay(args, cfg: AppConfig) -> int:
    header, rec = decode_record(Path(args.record).read_bytes())
    # generated families are rebuilt from the run seed unless --graph-seed overrides it
    g, _ = load_graph_source(args, cfg, header.seed)
    if header.n != g.n or header.delta != effective_delta(g):
        raise RecordCorruptionError(
            f"record was made for n={header.n}, delta={header.delta}; graph has n={g.n}, delta={effective_delta(g)}"
        )
    try:
        params = make_params(header.delta, parse_kappa(header.kappa), header.mode)
    except ValueError as e:
        raise RecordCorruptionError(f"record header parameters are invalid: {e}") from None
    dsets = dangerous_set(g, params.kappa, params.delta)
    final = _load_coloring(args.coloring, g)

    frames = replay_full(final, rec, g, params, dsets)
    print("step,vertex,color,kind,identifier")
    for i, frame in enumerate(frames, start=1):
        print(f"{i},{frame.to_row()}")
    logging.info(f"{icon['check']} Replayed {len(frames)} steps back to the empty coloring")
    return EXIT_OK


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def analyze_dyck(args, cfg: AppConfig) -> int:
    if args.t_max < 0:
        raise UsageError("--t-max must be non-negative")
    writer = _csv_writer()
    writer.writerow(["t", "count", "ratio"])
    for t in range(1, args.t_max + 1):
        writer.writerow([t, count_dyck_even(t), format(growth_ratio(t), ".12f")])
    return EXIT_OK


def analyze_bounds(args, cfg: AppConfig) -> int:
    g, source = load_graph_source(args, cfg, resolve_seed(args))
    params, dsets = prepare_params(g, args.kappa, None, cfg)
    catalog = CycleCatalog(g, dsets)
    k_max = args.k_max if args.k_max is not None else g.n // 2
    writer = _csv_writer()
    writer.writerow(["vertex", "k", "size", "bound", "margin", "holds"])
    violations = 0
    for v in g.vertices:
        for k in range(2, k_max + 1):
            size = catalog.size(v, k)
            bound = catalog_bound_value(params, k)
            holds = catalog_bound_holds(params, k, size)
            violations += not holds
            writer.writerow([v, k, size, format(bound, ".6f"), format(bound - size, ".6f"), str(holds).lower()])
    if violations:
        logging.error(f"{icon['cross']} {violations} catalogs of {source} exceed their bound")
        return EXIT_ERROR
    return EXIT_OK


def analyze_bench(args, cfg: AppConfig) -> int:
    seed = resolve_seed(args)
    g, source = load_graph_source(args, cfg, seed)
    params, _ = prepare_params(g, args.kappa, args.mode, cfg)
    if args.trials < 1 and not args.seeds:
        raise UsageError("--trials must be at least 1")
    max_concurrent = args.max_concurrent or cfg.bench.max_concurrent_trials
    bench = BenchMode(max_concurrent_trials=max_concurrent)
    session, summary, report_path = asyncio.run(
        bench.run(
            g,
            params,
            source,
            seed=seed,
            trials=args.trials,
            seeds=args.seeds,
            step_cap=_step_cap(args, g, cfg),
            audit=args.audit,
            log_cfg=cfg.log.model_dump(),
            report_dir=args.report_dir or cfg.bench.report_dir,
        )
    )
    writer = _csv_writer()
    writer.writerow(["trial", "seed", "t", "U_t", "colors_used", "record_bits", "t_log2_l", "status"])
    for result in session.ordered_results():
        writer.writerow([result.trial_index] + result.to_row())
    if report_path:
        logging.info(f"Bench report: {report_path}")
    count = summary["count"]
    return EXIT_OK if count["terminated"] == count["total"] else EXIT_STEP_CAP


def analyze_compare(args, cfg: AppConfig) -> int:
    seed = resolve_seed(args)
    g, source = load_graph_source(args, cfg, seed)
    params, dsets = prepare_params(g, args.kappa, args.mode, cfg)
    max_n = args.max_n if args.max_n is not None else cfg.oracle.brute_force_max_n
    writer = _csv_writer()
    writer.writerow(["method", "colors_used", "acyclic"])

    try:
        writer.writerow(["exact", brute_force_chi_a(g, max_n=max_n), "true"])
    except OracleRefusal as e:
        logging.warning(f"{icon['warning']} Skipping the exact value for {source}: {e}")

    result = run_until_colored(g, params, seed, _step_cap(args, g, cfg), dsets=dsets, audit=args.audit)
    if result.terminated:
        report = verify_acyclic(g, result.coloring)
        writer.writerow(["algorithm", report.colors_used, str(report.acyclic).lower()])
    else:
        writer.writerow(["algorithm", result.coloring.colors_used(), "false"])

    report = verify_acyclic(g, square_greedy_baseline(g))
    writer.writerow(["square_greedy", report.colors_used, str(report.acyclic).lower()])
    return EXIT_OK if result.terminated else EXIT_STEP_CAP


ANALYSES = {
    "dyck": analyze_dyck,
    "bounds": analyze_bounds,
    "bench": analyze_bench,
    "compare": analyze_compare,
}


def cmd_analyze(args, cfg: AppConfig) -> int:
    return ANALYSES[args.analysis](args, cfg)


COMMANDS = {"run": cmd_run, "verify": cmd_verify, "replay": cmd_replay, "analyze": cmd_analyze}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        cfg = load_config(args.config)
    except (FileNotFoundError, ValueError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_ERROR

    try:
        GetLog.get_log(log_level=args.log_level or cfg.log.level, save_locally=cfg.log.save_locally)
        return COMMANDS[args.command](args, cfg)
    except RecordCorruptionError as e:
        print(f"[ERROR] record corrupted: {e}", file=sys.stderr)
        return EXIT_CORRUPT
    except (UsageError, AcyclicColoringError, ValueError, OSError) as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        GetLog.reset()
