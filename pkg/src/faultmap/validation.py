"""Input validation helpers shared by solvers, estimators, and the CLI."""

from __future__ import annotations

from typing import Iterable

from .errors import BadIndex, OutOfRangeProbability, ValidationError
from .hazard import FailureProbTable, ScenarioSet
from .network import InfraNetwork, NodeRole
from .probes import ProbeSet


def check_probability(value: float, name: str) -> float:
    if not 0.0 <= value <= 1.0:
        raise OutOfRangeProbability(f"{name} must lie in [0, 1], got {value}")
    return value


def check_edge_ids(net: InfraNetwork, edge_ids: Iterable[int], context: str) -> None:
    for e in edge_ids:
        if not 0 <= e < net.n_edges:
            raise BadIndex(f"{context}: edge id {e} out of range 0..{net.n_edges - 1}")


def check_probes(net: InfraNetwork, probes: ProbeSet) -> None:
    """Probe ids must exist and connectivity probes must be demand nodes."""
    for v in probes.qc:
        if not 0 <= v < net.n_nodes:
            raise BadIndex(f"connectivity probe {v} out of range 0..{net.n_nodes - 1}")
        if net.roles[v] is not NodeRole.DEMAND:
            raise ValidationError(
                f"connectivity probe {v} is a {net.roles[v].value} node, not demand"
            )
    check_edge_ids(net, probes.qi, "point probe")


def check_instance(
    net: InfraNetwork,
    table: FailureProbTable,
    scenarios: ScenarioSet,
    probes: ProbeSet,
) -> None:
    """Cross-check the pieces of one inference instance against each other."""
    if table.n_edges != net.n_edges:
        raise ValidationError(
            f"table covers {table.n_edges} edges, network has {net.n_edges}"
        )
    if table.n_scenarios != len(scenarios):
        raise ValidationError(
            f"table covers {table.n_scenarios} scenarios, set has {len(scenarios)}"
        )
    check_probes(net, probes)
