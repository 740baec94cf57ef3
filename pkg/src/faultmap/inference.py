"""Failure-set inference by greedy description-length descent.

The main solver iterates over disaster scenarios; for each it grows a
failure set from the observed point probes, always adding the edge whose
inclusion lowers the cost the most, and finally keeps the scenario with
the cheapest explanation. Two reduced-objective baselines and an
exhaustive enumerator for small instances share the same machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InfeasibleProbes, TooLarge
from .hazard import FailureProbTable, ScenarioSet
from .mdl import (
    EPSILON_BITS,
    INF,
    MdlCost,
    connectivity_data_cost,
    data_cost,
    edge_assignment_bits,
    scenario_prior_bits,
    total_cost,
)
from .network import InfraNetwork
from .probes import ProbeSet
from .serviceability import serviced_set
from .validation import check_instance


@dataclass(frozen=True)
class Solution:
    """Inferred failure set with its cost breakdown and search trace.

    ``trace`` lists (edge added, objective value after adding) per greedy
    iteration; objective values decrease strictly. For the exhaustive
    solver the trace is empty and ``iterations`` counts evaluated
    candidates.
    """

    algorithm: str
    scenario: int
    failed_edges: frozenset[int]
    serviced: frozenset[int]
    cost: MdlCost
    iterations: int
    trace: tuple[tuple[int, float], ...]


Objective = Callable[[int, set[int]], float]
Breakdown = Callable[[int, frozenset[int]], MdlCost]


def _greedy_solve(
    net: InfraNetwork,
    scenarios: ScenarioSet,
    objective: Objective,
    initial: frozenset[int],
    breakdown: Breakdown,
    algorithm: str,
) -> Solution:
    """Run the per-scenario greedy loop and keep the cheapest scenario.

    Within an iteration the current cost is fixed, so the edge with the
    largest strict decrease is the one with the smallest candidate cost;
    ties break toward the smallest edge id, and ties between scenario
    costs break toward the smallest scenario index.
    """
    best_alpha = INF
    best_state: tuple[int, frozenset[int], tuple[tuple[int, float], ...]] | None = None
    for o in range(len(scenarios)):
        failed = set(initial)
        current = objective(o, failed)
        trace: list[tuple[int, float]] = []
        while True:
            chosen = -1
            chosen_val = INF
            for e in range(net.n_edges):
                if e in failed:
                    continue
                failed.add(e)
                val = objective(o, failed)
                failed.discard(e)
                if val < chosen_val:
                    chosen_val = val
                    chosen = e
            if chosen < 0 or not chosen_val < current - EPSILON_BITS:
                break
            failed.add(chosen)
            current = chosen_val
            trace.append((chosen, chosen_val))
        if current < best_alpha:
            best_alpha = current
            best_state = (o, frozenset(failed), tuple(trace))
    if best_state is None or not math.isfinite(best_alpha):
        raise InfeasibleProbes(
            f"{algorithm}: no scenario admits a finite-cost solution for these probes"
        )
    o, failed_final, trace_final = best_state
    costs = [cost for _, cost in trace_final]
    assert all(b < a - EPSILON_BITS for a, b in zip(costs, costs[1:])), "descent not strict"
    assert initial <= failed_final, "initial probe edges dropped from the solution"
    return Solution(
        algorithm=algorithm,
        scenario=o,
        failed_edges=failed_final,
        serviced=serviced_set(net, failed_final),
        cost=breakdown(o, failed_final),
        iterations=len(trace_final),
        trace=trace_final,
    )


def joint_path_map(
    net: InfraNetwork,
    table: FailureProbTable,
    scenarios: ScenarioSet,
    probes: ProbeSet,
) -> Solution:
    """Greedy full-cost minimization over joint probes.

    Starts each scenario's failure set at the observed point probes and
    adds the edge that lowers the total description length the most until
    no strict decrease remains.
    """
    check_instance(net, table, scenarios, probes)

    def objective(o: int, failed: set[int]) -> float:
        return total_cost(net, table, o, failed, probes).total

    def breakdown(o: int, failed: frozenset[int]) -> MdlCost:
        return total_cost(net, table, o, failed, probes)

    return _greedy_solve(
        net, scenarios, objective, frozenset(probes.qi), breakdown, "jointpathmap"
    )


def model_cost_baseline(
    net: InfraNetwork,
    table: FailureProbTable,
    scenarios: ScenarioSet,
    probes: ProbeSet,
) -> Solution:
    """Greedy minimization of the model cost alone.

    Ignores the observed data when selecting edges (so it starts from an
    empty failure set and only ever adds edges with failure probability
    above one half), but never breaks the connectivity evidence: a
    candidate that would de-service an observed node is rejected. The
    reported cost is the full description length of the final set, which
    is infinite whenever the point probes are left unexplained.
    """
    check_instance(net, table, scenarios, probes)

    def objective(o: int, failed: set[int]) -> float:
        if not probes.qc <= serviced_set(net, failed):
            return INF
        return scenario_prior_bits(table, o) + edge_assignment_bits(table, o, failed)

    def breakdown(o: int, failed: frozenset[int]) -> MdlCost:
        return total_cost(net, table, o, failed, probes)

    return _greedy_solve(net, scenarios, objective, frozenset(), breakdown, "modelcost")


def only_connectivity(
    net: InfraNetwork,
    table: FailureProbTable,
    scenarios: ScenarioSet,
    probes: ProbeSet,
) -> Solution:
    """Greedy minimization for an observer without point probes.

    The point-probe channel does not exist for this observer: the failure
    set starts empty and the data cost keeps only the connectivity terms.
    """
    check_instance(net, table, scenarios, probes)

    def objective(o: int, failed: set[int]) -> float:
        serviced = serviced_set(net, failed)
        return (
            scenario_prior_bits(table, o)
            + edge_assignment_bits(table, o, failed)
            + connectivity_data_cost(serviced, probes.qc, probes.gamma_c)
        )

    def breakdown(o: int, failed: frozenset[int]) -> MdlCost:
        serviced = serviced_set(net, failed)
        model = scenario_prior_bits(table, o) + edge_assignment_bits(table, o, failed)
        data = connectivity_data_cost(serviced, probes.qc, probes.gamma_c)
        total = model + data
        return MdlCost(
            model_cost=model, data_cost=data, total=total, feasible=math.isfinite(total)
        )

    return _greedy_solve(
        net, scenarios, objective, frozenset(), breakdown, "onlyconnectivity"
    )


def exhaustive_optimal(
    net: InfraNetwork,
    table: FailureProbTable,
    scenarios: ScenarioSet,
    probes: ProbeSet,
    max_edges: int = 20,
) -> Solution:
    """Exact minimizer by enumerating every failure set containing the probes.

    Any optimum must contain the point probes, so enumeration over
    supersets of ``qi`` is exact. Deterministic tie-breaking: the first
    minimum in (scenario index, subset bitmask over ascending free edge
    ids) order wins.
    """
    check_instance(net, table, scenarios, probes)
    if net.n_edges > max_edges:
        raise TooLarge(
            f"exhaustive search limited to {max_edges} edges, network has {net.n_edges}"
        )
    free = [e for e in range(net.n_edges) if e not in probes.qi]
    base = frozenset(probes.qi)
    # serviceability and data cost depend on the mask only, so compute
    # them once per mask and sweep scenarios vectorized
    with np.errstate(divide="ignore"):
        fail_bits = -np.log2(table.probs)
        survive_bits = -np.log2(1.0 - table.probs)
    prior_bits = [scenario_prior_bits(table, o) for o in range(len(scenarios))]
    best_key: tuple[float, int, int] | None = None
    best: tuple[frozenset[int], MdlCost] | None = None
    for mask in range(1 << len(free)):
        failed = set(base)
        bits = mask
        j = 0
        while bits:
            if bits & 1:
                failed.add(free[j])
            bits >>= 1
            j += 1
        serviced = serviced_set(net, failed)
        data = data_cost(serviced, failed, probes)
        selector = np.zeros(net.n_edges, dtype=bool)
        if failed:
            selector[list(failed)] = True
        assignment = np.where(selector, fail_bits, survive_bits).sum(axis=1)
        for o in range(len(scenarios)):
            model = prior_bits[o] + float(assignment[o])
            total = model + data
            key = (total, o, mask)
            if best_key is None or key < best_key:
                best_key = key
                best = (
                    frozenset(failed),
                    MdlCost(
                        model_cost=model,
                        data_cost=data,
                        total=total,
                        feasible=math.isfinite(total),
                    ),
                )
    assert best_key is not None and best is not None
    if not math.isfinite(best_key[0]):
        raise InfeasibleProbes(
            "exhaustive: no scenario admits a finite-cost solution for these probes"
        )
    failed_final, cost_final = best
    return Solution(
        algorithm="exhaustive",
        scenario=best_key[1],
        failed_edges=failed_final,
        serviced=serviced_set(net, failed_final),
        cost=cost_final,
        iterations=len(scenarios) * (1 << len(free)),
        trace=(),
    )


GREEDY_ALGORITHMS: dict[str, Callable[..., Solution]] = {
    "jointpathmap": joint_path_map,
    "modelcost": model_cost_baseline,
    "onlyconnectivity": only_connectivity,
}

ALGORITHM_NAMES = (*GREEDY_ALGORITHMS, "exhaustive")
