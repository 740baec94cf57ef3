"""Command-line interface.

Subcommands: ``gen-synthetic`` (write a synthetic network file),
``hazard`` (write the per-scenario edge failure probability table),
``pipeline`` (run the full seeded experiment loop), ``infer`` (solve a
single instance from a probe file), and ``oracle`` (exact solve of a
small instance). Exit codes: 0 success, 2 configuration error, 3 data
error, 4 infeasible probes.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from pathlib import Path

from .errors import ConfigError, FaultmapError, InfeasibleProbes
from .hazard import failure_prob_table, load_fragility, load_scenarios
from .inference import ALGORITHM_NAMES, GREEDY_ALGORITHMS, Solution, exhaustive_optimal
from .network import load_network, save_network
from .pipeline import config_from_dict, run_pipeline, write_results
from .probes import load_probes
from .synthetic import KINDS, generate_network
from .validation import check_probes

SEED_ENV_VAR = "FAULTMAP_SEED"


def _env_seed() -> int:
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from None


def _float_list(raw: str) -> list[float]:
    try:
        return [float(part) for part in raw.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats, got {raw!r}") from None


def _str_list(raw: str) -> list[str]:
    return [part for part in raw.split(",") if part != ""]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faultmap",
        description="Infer failed edges of infrastructure networks from connectivity "
        "and point probes, and run the hazard-simulation pipeline around it.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-synthetic", help="write a synthetic network file")
    gen.add_argument("--kind", choices=KINDS, required=True)
    gen.add_argument("--size", type=int, required=True, help="side length (grid) or node count")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", required=True)

    haz = sub.add_parser("hazard", help="write the edge failure probability table as CSV")
    haz.add_argument("--network", required=True)
    haz.add_argument("--scenarios", required=True)
    haz.add_argument("--fragility", required=True)
    haz.add_argument("--out", required=True)

    pipe = sub.add_parser("pipeline", help="run the seeded simulate-infer-score loop")
    pipe.add_argument("--config", help="JSON config file; individual flags override it")
    pipe.add_argument("--network")
    pipe.add_argument("--scenarios")
    pipe.add_argument("--fragility")
    pipe.add_argument("--gamma-c", type=_float_list, help="comma-separated grid, e.g. 0.1,0.5,0.9")
    pipe.add_argument("--gamma-i", type=float)
    pipe.add_argument("--trials", type=int)
    pipe.add_argument("--seed", type=int)
    pipe.add_argument("--algorithms", type=_str_list, help=f"subset of {','.join(ALGORITHM_NAMES)}")
    pipe.add_argument("--f1-mode", choices=("paper", "standard"))
    pipe.add_argument("--oracle-edge-budget", type=int)
    pipe.add_argument("--workers", type=int)
    pipe.add_argument("--timing", action="store_true", default=None,
                      help="fill wall_ms (breaks byte-identical reruns)")
    pipe.add_argument("--out", default="results.csv")

    for name, help_text in (
        ("infer", "solve one instance from a probe file"),
        ("oracle", "exact solve of one small instance"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--network", required=True)
        cmd.add_argument("--scenarios", required=True)
        cmd.add_argument("--fragility", required=True)
        cmd.add_argument("--probes", required=True)
        cmd.add_argument("--out", help="write the solution JSON here instead of stdout")
        if name == "infer":
            cmd.add_argument(
                "--algorithm", choices=tuple(GREEDY_ALGORITHMS), default="jointpathmap"
            )
        else:
            cmd.add_argument("--max-edges", type=int, default=20)
    return parser


def cmd_gen_synthetic(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    net = generate_network(args.kind, args.size, seed)
    save_network(net, args.out)
    print(f"wrote {args.out}: {net.n_nodes} nodes, {net.n_edges} edges, L={net.hop_bound}")
    return 0


def cmd_hazard(args: argparse.Namespace) -> int:
    net = load_network(args.network)
    scenarios = load_scenarios(args.scenarios)
    fragility = load_fragility(args.fragility)
    table = failure_prob_table(net, scenarios, fragility)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("scenario_id", "edge_id", "prob"))
        for o in range(table.n_scenarios):
            for e in range(table.n_edges):
                writer.writerow((o, e, repr(float(table.probs[o, e]))))
    print(f"wrote {args.out}: {table.n_scenarios} scenarios x {table.n_edges} edges")
    return 0


def cmd_pipeline(args: argparse.Namespace) -> int:
    merged: dict = {}
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"config file {args.config}: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigError(f"config file {args.config} must hold a JSON object")
        merged.update(loaded)
    overrides = {
        "network": args.network,
        "scenarios": args.scenarios,
        "fragility": args.fragility,
        "gamma_c": args.gamma_c,
        "gamma_i": args.gamma_i,
        "trials": args.trials,
        "seed": args.seed,
        "algorithms": args.algorithms,
        "f1_mode": args.f1_mode,
        "oracle_edge_budget": args.oracle_edge_budget,
        "workers": args.workers,
        "timing": args.timing,
    }
    merged.update({k: v for k, v in overrides.items() if v is not None})
    if "seed" not in merged:
        merged["seed"] = _env_seed()
    config = config_from_dict(merged)
    result = run_pipeline(config)
    out = write_results(result, args.out)
    print(f"wrote {out} ({len(result.rows)} data rows + {len(result.summary)} summary rows)")
    return 0


def _solution_payload(solution: Solution) -> dict:
    def bits(value: float) -> float | str:
        return value if math.isfinite(value) else "inf"

    return {
        "algorithm": solution.algorithm,
        "scenario": solution.scenario,
        "failed_edges": sorted(solution.failed_edges),
        "serviced": sorted(solution.serviced),
        "cost": {
            "model_cost": bits(solution.cost.model_cost),
            "data_cost": bits(solution.cost.data_cost),
            "total": bits(solution.cost.total),
            "feasible": solution.cost.feasible,
        },
        "iterations": solution.iterations,
        "trace": [[edge, bits(cost)] for edge, cost in solution.trace],
    }


def _solve_single(args: argparse.Namespace, exact: bool) -> int:
    net = load_network(args.network)
    scenarios = load_scenarios(args.scenarios)
    fragility = load_fragility(args.fragility)
    probes = load_probes(args.probes)
    check_probes(net, probes)
    table = failure_prob_table(net, scenarios, fragility)
    if exact:
        solution = exhaustive_optimal(net, table, scenarios, probes, max_edges=args.max_edges)
    else:
        solution = GREEDY_ALGORITHMS[args.algorithm](net, table, scenarios, probes)
    payload = json.dumps(_solution_payload(solution), indent=2)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    else:
        print(payload)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handlers = {
        "gen-synthetic": cmd_gen_synthetic,
        "hazard": cmd_hazard,
        "pipeline": cmd_pipeline,
        "infer": lambda a: _solve_single(a, exact=False),
        "oracle": lambda a: _solve_single(a, exact=True),
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleProbes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (FaultmapError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
