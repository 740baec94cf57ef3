"""Seeded end-to-end experiment pipeline.

Each trial draws a disaster scenario, samples damage from the hazard
table, computes the surviving service, samples probes at every requested
connectivity rate, runs the configured inference algorithms, and scores
them against the ground truth. Everything is a pure function of the
configuration (seed included): reruns produce byte-identical CSV output,
with any number of workers.
"""

from __future__ import annotations

import csv
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from functools import partial
from pathlib import Path
from statistics import fmean
from typing import Sequence

from .errors import ConfigError, FaultmapError
from .evaluation import F1_MODES, TrialScore, aggregate, score, u_edge_proportion
from .hazard import (
    FailureProbTable,
    ScenarioSet,
    failure_prob_table,
    load_fragility,
    sample_damage,
    sample_scenario,
    scenarios_from_dict,
)
from .inference import ALGORITHM_NAMES, GREEDY_ALGORITHMS, Solution, exhaustive_optimal
from .network import InfraNetwork, load_network
from .probes import sample_probes
from .seeding import derive_seed, rng_from
from .serviceability import serviced_set

CSV_HEADER = (
    "trial_id",
    "seed",
    "true_scenario",
    "inferred_scenario",
    "algorithm",
    "gamma_c",
    "gamma_i",
    "|I|",
    "|Ihat|",
    "precision",
    "recall",
    "f1",
    "u_edge_prop",
    "mdl_total",
    "mdl_model",
    "mdl_data",
    "optimal_mdl",
    "wall_ms",
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one pipeline run depends on."""

    network: str
    scenarios: str
    fragility: str
    gamma_c: tuple[float, ...] = (0.5,)
    gamma_i: float = 0.3
    trials: int = 30
    seed: int = 0
    algorithms: tuple[str, ...] = ("jointpathmap",)
    f1_mode: str = "paper"
    oracle_edge_budget: int = 20
    workers: int = 1
    timing: bool = False

    def __post_init__(self) -> None:
        if not self.gamma_c:
            raise ConfigError("gamma_c grid must be nonempty")
        for g in (*self.gamma_c, self.gamma_i):
            if not 0.0 <= g <= 1.0:
                raise ConfigError(f"sampling rate {g} outside [0, 1]")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if not self.algorithms:
            raise ConfigError("algorithm list must be nonempty")
        for alg in self.algorithms:
            if alg not in ALGORITHM_NAMES:
                raise ConfigError(f"unknown algorithm {alg!r}, expected one of {ALGORITHM_NAMES}")
        if self.f1_mode not in F1_MODES:
            raise ConfigError(f"f1_mode must be one of {F1_MODES}, got {self.f1_mode!r}")
        if self.oracle_edge_budget < 1:
            raise ConfigError("oracle_edge_budget must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


def config_from_dict(data: dict) -> ExperimentConfig:
    """Build a config from a JSON-shaped dict, rejecting unknown keys."""
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    for path_key in ("network", "scenarios", "fragility"):
        if path_key not in data:
            raise ConfigError(f"config is missing required key {path_key!r}")
    coerced = dict(data)
    try:
        if "gamma_c" in coerced:
            raw = coerced["gamma_c"]
            if not isinstance(raw, (list, tuple)):
                raw = [raw]
            coerced["gamma_c"] = tuple(float(g) for g in raw)
        if "gamma_i" in coerced:
            coerced["gamma_i"] = float(coerced["gamma_i"])
        for int_key in ("trials", "seed", "oracle_edge_budget", "workers"):
            if int_key in coerced:
                coerced[int_key] = int(coerced[int_key])
        if "algorithms" in coerced:
            coerced["algorithms"] = tuple(str(a) for a in coerced["algorithms"])
        coerced["timing"] = bool(coerced.get("timing", False))
        return ExperimentConfig(**coerced)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"malformed config: {exc}") from None


@dataclass(frozen=True)
class TrialInputs:
    """Immutable per-run inputs shared by every trial worker."""

    net: InfraNetwork
    table: FailureProbTable
    scenarios: ScenarioSet
    config: ExperimentConfig


@dataclass(frozen=True)
class ResultRow:
    trial_id: int
    seed: int
    true_scenario: int
    inferred_scenario: int
    algorithm: str
    gamma_c: float
    gamma_i: float
    n_failed: int
    n_inferred: int
    precision: float
    recall: float
    f1: float
    u_edge_prop: float
    mdl_total: float
    mdl_model: float
    mdl_data: float
    optimal_mdl: float | None
    wall_ms: float | None


def _fmt(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        if math.isinf(value):
            return "inf"
        return repr(value)
    return str(value)


def _row_to_csv(row: ResultRow) -> list[str]:
    return [
        _fmt(row.trial_id),
        _fmt(row.seed),
        _fmt(row.true_scenario),
        _fmt(row.inferred_scenario),
        row.algorithm,
        _fmt(row.gamma_c),
        _fmt(row.gamma_i),
        _fmt(row.n_failed),
        _fmt(row.n_inferred),
        _fmt(row.precision),
        _fmt(row.recall),
        _fmt(row.f1),
        _fmt(row.u_edge_prop),
        _fmt(row.mdl_total),
        _fmt(row.mdl_model),
        _fmt(row.mdl_data),
        _fmt(row.optimal_mdl),
        _fmt(row.wall_ms),
    ]


def load_inputs(config: ExperimentConfig) -> tuple[TrialInputs, bool]:
    """Load data files and precompute the hazard table.

    Returns the shared trial inputs and whether scenario priors were
    defaulted to uniform (surfaced in the run metadata).
    """
    net = load_network(config.network)
    with open(config.scenarios, encoding="utf-8") as fh:
        raw = json.load(fh)
    entries = raw.get("scenarios", []) if isinstance(raw, dict) else []
    priors_defaulted = any(isinstance(e, dict) and "prior" not in e for e in entries)
    scenarios = scenarios_from_dict(raw)
    fragility = load_fragility(config.fragility)
    table = failure_prob_table(net, scenarios, fragility)
    if "exhaustive" in config.algorithms and net.n_edges > config.oracle_edge_budget:
        raise ConfigError(
            f"exhaustive oracle permitted only for |E| <= {config.oracle_edge_budget}, "
            f"network has {net.n_edges} edges"
        )
    return TrialInputs(net=net, table=table, scenarios=scenarios, config=config), priors_defaulted


def _timed_solve(solver, *args, timing: bool, **kwargs) -> tuple[Solution, float | None]:
    if not timing:
        return solver(*args, **kwargs), None
    start = time.perf_counter()
    solution = solver(*args, **kwargs)
    return solution, (time.perf_counter() - start) * 1e3


def run_trial(inputs: TrialInputs, trial: int) -> list[ResultRow]:
    """Simulate, infer, and score one trial across the gamma_c grid.

    Errors carry the trial index so failures in a long run are traceable.
    """
    try:
        return _run_trial_inner(inputs, trial)
    except FaultmapError as exc:
        raise type(exc)(f"trial {trial}: {exc}") from exc


def _run_trial_inner(inputs: TrialInputs, trial: int) -> list[ResultRow]:
    cfg = inputs.config
    net, table, scenarios = inputs.net, inputs.table, inputs.scenarios
    child_seed = derive_seed(cfg.seed, trial)
    true_scenario = sample_scenario(scenarios, rng_from(cfg.seed, trial, "scenario"))
    true_failed = sample_damage(table, true_scenario, rng_from(cfg.seed, trial, "damage"))
    true_serviced = serviced_set(net, true_failed)

    rows: list[ResultRow] = []
    for gc_index, gamma_c in enumerate(cfg.gamma_c):
        probes = sample_probes(
            true_serviced,
            true_failed,
            gamma_c,
            cfg.gamma_i,
            rng_from(cfg.seed, trial, "probes", gc_index),
        )
        oracle: Solution | None = None
        oracle_ms: float | None = None
        if "exhaustive" in cfg.algorithms:
            oracle, oracle_ms = _timed_solve(
                exhaustive_optimal,
                net,
                table,
                scenarios,
                probes,
                max_edges=cfg.oracle_edge_budget,
                timing=cfg.timing,
            )
        for alg in cfg.algorithms:
            if alg == "exhaustive":
                solution, wall_ms = oracle, oracle_ms
            else:
                solution, wall_ms = _timed_solve(
                    GREEDY_ALGORITHMS[alg], net, table, scenarios, probes, timing=cfg.timing
                )
            precision, recall, f1 = score(true_failed, solution.failed_edges, cfg.f1_mode)
            rows.append(
                ResultRow(
                    trial_id=trial,
                    seed=child_seed,
                    true_scenario=true_scenario,
                    inferred_scenario=solution.scenario,
                    algorithm=alg,
                    gamma_c=gamma_c,
                    gamma_i=cfg.gamma_i,
                    n_failed=len(true_failed),
                    n_inferred=len(solution.failed_edges),
                    precision=precision,
                    recall=recall,
                    f1=f1,
                    u_edge_prop=u_edge_proportion(net, true_failed, solution.failed_edges),
                    mdl_total=solution.cost.total,
                    mdl_model=solution.cost.model_cost,
                    mdl_data=solution.cost.data_cost,
                    optimal_mdl=oracle.cost.total if oracle is not None else None,
                    wall_ms=wall_ms,
                )
            )
    return rows


def _summary_csv_rows(config: ExperimentConfig, rows: Sequence[ResultRow]) -> list[list[str]]:
    """One mean row per (gamma_c, algorithm) group, in generation order."""
    out: list[list[str]] = []
    for gamma_c in config.gamma_c:
        for alg in config.algorithms:
            group = [r for r in rows if r.algorithm == alg and r.gamma_c == gamma_c]
            if not group:
                continue
            report = aggregate(
                [
                    TrialScore(
                        precision=r.precision,
                        recall=r.recall,
                        f1=r.f1,
                        u_edge_proportion=r.u_edge_prop,
                    )
                    for r in group
                ]
            )
            with_oracle = group[0].optimal_mdl is not None
            out.append(
                [
                    "mean",
                    "",
                    "",
                    "",
                    alg,
                    _fmt(gamma_c),
                    _fmt(config.gamma_i),
                    _fmt(fmean(r.n_failed for r in group)),
                    _fmt(fmean(r.n_inferred for r in group)),
                    _fmt(report.mean.precision),
                    _fmt(report.mean.recall),
                    _fmt(report.mean.f1),
                    _fmt(report.mean.u_edge_proportion),
                    _fmt(fmean(r.mdl_total for r in group)),
                    _fmt(fmean(r.mdl_model for r in group)),
                    _fmt(fmean(r.mdl_data for r in group)),
                    _fmt(fmean(r.optimal_mdl for r in group)) if with_oracle else "",
                    "",
                ]
            )
    return out


@dataclass(frozen=True)
class PipelineResult:
    rows: tuple[ResultRow, ...]
    summary: tuple[tuple[str, ...], ...]
    meta: dict


def run_pipeline(config: ExperimentConfig) -> PipelineResult:
    """Run all trials and aggregate; deterministic for a fixed config."""
    inputs, priors_defaulted = load_inputs(config)
    trial_ids = range(config.trials)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            per_trial = list(pool.map(partial(run_trial, inputs), trial_ids))
    else:
        per_trial = [run_trial(inputs, t) for t in trial_ids]
    rows = tuple(row for trial_rows in per_trial for row in trial_rows)
    summary = tuple(tuple(r) for r in _summary_csv_rows(config, rows))
    config_echo = {}
    for f in fields(ExperimentConfig):
        value = getattr(config, f.name)
        config_echo[f.name] = list(value) if isinstance(value, tuple) else value
    meta = {
        "config": config_echo,
        "n_nodes": inputs.net.n_nodes,
        "n_edges": inputs.net.n_edges,
        "n_scenarios": len(inputs.scenarios),
        "scenario_priors": "uniform-default" if priors_defaulted else "explicit",
    }
    return PipelineResult(rows=rows, summary=summary, meta=meta)


def write_results(result: PipelineResult, csv_path: str | Path) -> Path:
    """Write the results CSV plus a deterministic metadata sidecar."""
    csv_path = Path(csv_path)
    with open(csv_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in result.rows:
            writer.writerow(_row_to_csv(row))
        for summary_row in result.summary:
            writer.writerow(summary_row)
    meta_path = csv_path.with_suffix(".meta.json")
    with open(meta_path, "w", encoding="utf-8") as fh:
        json.dump(result.meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return csv_path
