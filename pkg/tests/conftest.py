"""Shared test networks and hazard inputs."""

from __future__ import annotations

import numpy as np
import pytest

from faultmap.hazard import (
    DisasterScenario,
    FailureProbTable,
    FragilityMap,
    FragilityParams,
    ScenarioSet,
)
from faultmap.network import InfraNetwork, NodeRole, build_network


@pytest.fixture
def line3() -> InfraNetwork:
    """Supply - transshipment - demand, hop bound 2."""
    return build_network(
        [("supply", 35.0, -90.0), ("transshipment", 35.05, -90.0), ("demand", 35.1, -90.0)],
        [(0, 1), (1, 2)],
        hop_bound=2,
    )


@pytest.fixture
def star4() -> InfraNetwork:
    """Supply hub with three demand leaves; every edge is service-critical."""
    return build_network(
        [
            ("supply", 35.0, -90.0),
            ("demand", 35.05, -90.0),
            ("demand", 35.0, -90.05),
            ("demand", 34.95, -90.0),
        ],
        [(0, 1), (0, 2), (0, 3)],
        hop_bound=1,
    )


# Ground truth used throughout for the 9-node redundant network: failing
# edges 1, 5, 8 leaves demand {2, 5, 7} serviced, and edge 1 is redundant
# (node 2 keeps its direct supply edge), so it is invisible to
# connectivity evidence.
FIG9_FAILED = frozenset({1, 5, 8})
FIG9_SERVICED = frozenset({2, 5, 7})


@pytest.fixture
def fig9() -> InfraNetwork:
    """One supply, redundant paths, demand nodes both near and far."""
    nodes = [
        ("supply", 35.00, -90.00),
        ("transshipment", 35.02, -90.01),
        ("demand", 35.04, -90.02),
        ("transshipment", 35.00, -90.04),
        ("transshipment", 34.98, -90.02),
        ("demand", 35.03, -90.00),
        ("demand", 35.01, -90.06),
        ("demand", 34.97, -90.00),
        ("demand", 34.96, -90.04),
    ]
    edges = [(0, 1), (1, 2), (0, 2), (1, 5), (0, 3), (3, 6), (0, 4), (4, 7), (4, 8)]
    return build_network(nodes, edges, hop_bound=2)


MODERATE_FRAGILITY = FragilityMap(
    role_params={
        NodeRole.SUPPLY: None,
        NodeRole.DEMAND: FragilityParams(median_pga=1.2, beta=0.5),
        NodeRole.TRANSSHIPMENT: FragilityParams(median_pga=1.0, beta=0.5),
    }
)

# Keeps every edge failure probability well below one half at desk-scale
# distances and magnitudes around 6.5.
MILD_FRAGILITY = FragilityMap(
    role_params={
        NodeRole.SUPPLY: None,
        NodeRole.DEMAND: FragilityParams(median_pga=1.8, beta=0.5),
        NodeRole.TRANSSHIPMENT: FragilityParams(median_pga=1.6, beta=0.5),
    }
)


def single_scenario(lat: float = 35.0, lon: float = -90.0, magnitude: float = 6.5) -> ScenarioSet:
    return ScenarioSet((DisasterScenario(epicenter=(lat, lon), magnitude=magnitude, prior=1.0),))


def uniform_table(net: InfraNetwork, prob: float, n_scenarios: int = 1) -> FailureProbTable:
    """Constant-probability table with uniform priors, for hand-checkable costs."""
    probs = np.full((n_scenarios, net.n_edges), prob, dtype=float)
    priors = np.full(n_scenarios, 1.0 / n_scenarios)
    return FailureProbTable(probs=probs, priors=priors)


def table_from_rows(rows, priors=None) -> FailureProbTable:
    probs = np.asarray(rows, dtype=float)
    if priors is None:
        priors = np.full(probs.shape[0], 1.0 / probs.shape[0])
    return FailureProbTable(probs=probs, priors=np.asarray(priors, dtype=float))
