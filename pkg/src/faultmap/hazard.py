"""Seismic hazard pipeline: ground motion, fragility, and damage sampling.

The chain runs epicentral distance -> median peak ground acceleration
(attenuation) -> node failure probability (lognormal fragility) -> edge
failure probability (an edge fails when either incident node does) ->
Monte-Carlo damage scenarios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    MissingFragility,
    NegativeDistance,
    OutOfRangeProbability,
    ValidationError,
)
from .network import InfraNetwork, NodeRole, haversine_km, load_json

MAGNITUDE_BAND = (4.0, 9.0)

# Geometric spreading offset of the attenuation relation, in km.
_NEAR_FIELD_KM = 9.3

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class FragilityParams:
    """Lognormal fragility curve for one component type.

    ``median_pga`` is the peak ground acceleration (in g) at which the
    component reaches the failed damage state; ``beta`` is the lognormal
    standard deviation.
    """

    median_pga: float
    beta: float

    def __post_init__(self) -> None:
        if self.median_pga <= 0.0:
            raise ValidationError(f"median_pga must be > 0, got {self.median_pga}")
        if self.beta <= 0.0:
            raise ValidationError(f"beta must be > 0, got {self.beta}")


@dataclass(frozen=True)
class DisasterScenario:
    """One candidate earthquake: epicenter, moment magnitude, prior."""

    epicenter: tuple[float, float]
    magnitude: float
    prior: float

    def __post_init__(self) -> None:
        lat, lon = self.epicenter
        object.__setattr__(self, "epicenter", (float(lat), float(lon)))
        if not 0.0 <= self.prior <= 1.0:
            raise OutOfRangeProbability(f"scenario prior must lie in [0, 1], got {self.prior}")
        lo, hi = MAGNITUDE_BAND
        if not lo <= self.magnitude <= hi:
            raise ValidationError(
                f"magnitude {self.magnitude} outside plausible band [{lo}, {hi}]"
            )


@dataclass(frozen=True)
class ScenarioSet:
    """Finite set of disaster scenarios whose priors sum to one."""

    scenarios: tuple[DisasterScenario, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "scenarios", tuple(self.scenarios))
        if not self.scenarios:
            raise ValidationError("scenario set is empty")
        total = math.fsum(s.prior for s in self.scenarios)
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"scenario priors sum to {total!r}, expected 1.0")

    def __len__(self) -> int:
        return len(self.scenarios)

    def __iter__(self):
        return iter(self.scenarios)

    def __getitem__(self, index: int) -> DisasterScenario:
        return self.scenarios[index]

    @property
    def priors(self) -> tuple[float, ...]:
        return tuple(s.prior for s in self.scenarios)


@dataclass(frozen=True)
class FragilityMap:
    """Fragility parameters per role and per node.

    ``None`` marks a component as invulnerable (failure probability 0).
    Node-level entries override role-level ones. Transshipment nodes
    without any entry default to invulnerable; supply and demand nodes
    must be covered.
    """

    role_params: Mapping[NodeRole, FragilityParams | None] = field(default_factory=dict)
    node_params: Mapping[int, FragilityParams | None] = field(default_factory=dict)

    def for_node(self, node_id: int, role: NodeRole) -> FragilityParams | None:
        if node_id in self.node_params:
            return self.node_params[node_id]
        if role in self.role_params:
            return self.role_params[role]
        if role is NodeRole.TRANSSHIPMENT:
            return None
        raise MissingFragility(f"no fragility entry for node {node_id} (role {role.value})")


@dataclass(frozen=True)
class FailureProbTable:
    """Per-scenario, per-edge failure probabilities plus scenario priors.

    ``probs`` has shape (n_scenarios, n_edges); both arrays are frozen.
    """

    probs: np.ndarray
    priors: np.ndarray

    def __post_init__(self) -> None:
        probs = np.array(self.probs, dtype=float)
        priors = np.array(self.priors, dtype=float)
        if probs.ndim != 2:
            raise ValidationError(f"probability table must be 2-D, got shape {probs.shape}")
        if priors.shape != (probs.shape[0],):
            raise ValidationError("one prior per scenario required")
        if np.any((probs < 0.0) | (probs > 1.0)):
            raise OutOfRangeProbability("table entries must lie in [0, 1]")
        probs.flags.writeable = False
        priors.flags.writeable = False
        object.__setattr__(self, "probs", probs)
        object.__setattr__(self, "priors", priors)

    @property
    def n_scenarios(self) -> int:
        return self.probs.shape[0]

    @property
    def n_edges(self) -> int:
        return self.probs.shape[1]

    def row(self, scenario_index: int) -> np.ndarray:
        return self.probs[scenario_index]


def attenuation_median_pga(magnitude: float, distance_km: float) -> float:
    """Median peak ground acceleration (g) from magnitude and distance.

    Empirical attenuation of ground motion with epicentral distance R:

        ln(pga) = 2.2 + 0.81 (Mw - 6.0) - 1.27 ln(sqrt(R^2 + 9.3^2))
                  - 0.0021 sqrt(R^2 + 9.3^2) + 0.11 max[ln(R / 100), 0]

    The far-field max term is 0 for R <= 100 km, which also covers R = 0.
    """
    if distance_km < 0.0:
        raise NegativeDistance(f"distance must be >= 0, got {distance_km}")
    spread = math.hypot(distance_km, _NEAR_FIELD_KM)
    ln_pga = 2.2 + 0.81 * (magnitude - 6.0) - 1.27 * math.log(spread) - 0.0021 * spread
    if distance_km > 100.0:
        ln_pga += 0.11 * math.log(distance_km / 100.0)
    return math.exp(ln_pga)


def fragility_failure_prob(pga: float, params: FragilityParams) -> float:
    """Failure probability at a given peak ground acceleration.

    Cumulative lognormal: Phi[(1/beta) ln(pga / median)], evaluated via
    the complementary error function; 0 at pga = 0.
    """
    if pga < 0.0:
        raise ValidationError(f"pga must be >= 0, got {pga}")
    if pga == 0.0:
        return 0.0
    z = math.log(pga / params.median_pga) / params.beta
    return 0.5 * math.erfc(-z / _SQRT2)


def edge_failure_prob(p1: float, p2: float) -> float:
    """Failure probability of an edge whose incident nodes fail with p1, p2.

    The edge fails when either endpoint does: p1 + p2 - p1 * p2.
    """
    for p in (p1, p2):
        if not 0.0 <= p <= 1.0:
            raise OutOfRangeProbability(f"node failure probability {p} outside [0, 1]")
    return p1 + p2 - p1 * p2


def node_failure_prob(
    scenario: DisasterScenario, lat: float, lon: float, params: FragilityParams | None
) -> float:
    """Failure probability of one node under one scenario (0 if invulnerable)."""
    if params is None:
        return 0.0
    distance = haversine_km(scenario.epicenter[0], scenario.epicenter[1], lat, lon)
    pga = attenuation_median_pga(scenario.magnitude, distance)
    return fragility_failure_prob(pga, params)


def failure_prob_table(
    net: InfraNetwork, scenarios: ScenarioSet, fragility: FragilityMap
) -> FailureProbTable:
    """Per-scenario edge failure probabilities for a whole network.

    Pure function of its inputs: identical arguments produce bit-identical
    tables.
    """
    params = [fragility.for_node(i, net.roles[i]) for i in range(net.n_nodes)]
    probs = np.empty((len(scenarios), net.n_edges), dtype=float)
    for o, scenario in enumerate(scenarios):
        node_probs = [
            node_failure_prob(scenario, net.lats[i], net.lons[i], params[i])
            for i in range(net.n_nodes)
        ]
        for e, (u, v) in enumerate(net.edges):
            probs[o, e] = edge_failure_prob(node_probs[u], node_probs[v])
    return FailureProbTable(probs=probs, priors=np.array(scenarios.priors, dtype=float))


def sample_damage(
    table: FailureProbTable, scenario_index: int, rng: np.random.Generator
) -> frozenset[int]:
    """Draw a failed-edge set: each edge fails independently per the table."""
    row = table.row(scenario_index)
    draws = rng.random(row.shape[0])
    return frozenset(int(e) for e in np.nonzero(draws < row)[0])


def sample_scenario(scenarios: ScenarioSet, rng: np.random.Generator) -> int:
    """Draw a scenario index according to the priors."""
    r = rng.random()
    cumulative = 0.0
    for i, s in enumerate(scenarios):
        cumulative += s.prior
        if r < cumulative:
            return i
    return len(scenarios) - 1


def random_scenarios(
    net: InfraNetwork,
    count: int,
    magnitudes: Sequence[float],
    rng: np.random.Generator,
) -> ScenarioSet:
    """Scenario set with epicenters at random node locations.

    Each scenario pairs a uniformly chosen node location with a magnitude
    drawn uniformly from ``magnitudes``; priors are uniform. The magnitude
    set is a required input with no claimed default.
    """
    if count < 1:
        raise ValidationError("scenario count must be >= 1")
    if not magnitudes:
        raise ValidationError("magnitude set must be nonempty")
    prior = 1.0 / count
    picks = []
    for _ in range(count):
        node = int(rng.integers(net.n_nodes))
        mag = float(magnitudes[int(rng.integers(len(magnitudes)))])
        picks.append(
            DisasterScenario(
                epicenter=(net.lats[node], net.lons[node]), magnitude=mag, prior=prior
            )
        )
    return ScenarioSet(scenarios=tuple(picks))


def scenarios_from_dict(data: dict) -> ScenarioSet:
    """Parse the scenario file schema; missing priors default to uniform.

    Either every entry carries a ``prior`` or none does (uniform fallback).
    """
    try:
        raw = data["scenarios"]
    except (KeyError, TypeError):
        raise ValidationError("scenario file must contain a 'scenarios' list") from None
    if not raw:
        raise ValidationError("scenario file lists no scenarios")
    have_priors = ["prior" in entry for entry in raw]
    if any(have_priors) and not all(have_priors):
        raise ValidationError("either all scenarios carry a prior or none does")
    uniform = 1.0 / len(raw)
    scenarios = tuple(
        DisasterScenario(
            epicenter=(float(entry["epicenter"][0]), float(entry["epicenter"][1])),
            magnitude=float(entry["magnitude"]),
            prior=float(entry.get("prior", uniform)),
        )
        for entry in raw
    )
    return ScenarioSet(scenarios=scenarios)


def scenarios_to_dict(scenarios: ScenarioSet) -> dict:
    return {
        "scenarios": [
            {
                "epicenter": [s.epicenter[0], s.epicenter[1]],
                "magnitude": s.magnitude,
                "prior": s.prior,
            }
            for s in scenarios
        ]
    }


def load_scenarios(path: str | Path) -> ScenarioSet:
    try:
        return scenarios_from_dict(load_json(path))
    except ValidationError as exc:
        if str(path) in str(exc):
            raise
        raise ValidationError(f"{path}: {exc}") from None


_ROLE_NAMES = {role.value for role in NodeRole}


def _parse_fragility_value(key: str, value: object) -> FragilityParams | None:
    if value == "invulnerable":
        return None
    if isinstance(value, dict):
        try:
            return FragilityParams(
                median_pga=float(value["median_pga"]), beta=float(value["beta"])
            )
        except KeyError as exc:
            raise ValidationError(f"fragility entry {key!r} missing field {exc}") from None
    raise ValidationError(
        f"fragility entry {key!r} must be 'invulnerable' or have median_pga/beta"
    )


def fragility_from_dict(data: dict) -> FragilityMap:
    """Parse the fragility file: role names or node ids mapping to params."""
    role_params: dict[NodeRole, FragilityParams | None] = {}
    node_params: dict[int, FragilityParams | None] = {}
    for key, value in data.items():
        parsed = _parse_fragility_value(key, value)
        if key in _ROLE_NAMES:
            role_params[NodeRole(key)] = parsed
        elif key.lstrip("-").isdigit():
            node_id = int(key)
            if node_id < 0:
                raise ValidationError(f"fragility node id {key!r} must be >= 0")
            node_params[node_id] = parsed
        else:
            raise ValidationError(f"fragility key {key!r} is neither a role nor a node id")
    return FragilityMap(role_params=role_params, node_params=node_params)


def load_fragility(path: str | Path) -> FragilityMap:
    try:
        return fragility_from_dict(load_json(path))
    except ValidationError as exc:
        if str(path) in str(exc):
            raise
        raise ValidationError(f"{path}: {exc}") from None
