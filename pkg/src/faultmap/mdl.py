"""Two-part description-length cost of a candidate network state.

The model cost covers transmitting the hypothesis (scenario, serviced set,
failure set); the data cost covers transmitting the observed probes given
that hypothesis. All costs are in bits (base-2 logs); impossible events and
infeasible hypotheses surface as the floating-point infinity sentinel, not
exceptions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import AbstractSet

import numpy as np

from .hazard import FailureProbTable
from .network import InfraNetwork
from .probes import ProbeSet
from .serviceability import serviced_set

INF = math.inf

# Strict-decrease guard for cost comparisons downstream.
EPSILON_BITS = 1e-9

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class MdlCost:
    """Cost breakdown of one candidate (scenario, serviced set, failure set)."""

    model_cost: float
    data_cost: float
    total: float
    feasible: bool


def log2_binom(n: int, k: int) -> float:
    """log2 of the binomial coefficient C(n, k), via log-gamma."""
    if k < 0 or k > n:
        return -INF
    return (math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)) / _LN2


def scenario_prior_bits(table: FailureProbTable, scenario_index: int) -> float:
    """Bits to transmit the scenario choice; +inf for a zero prior."""
    prior = float(table.priors[scenario_index])
    if prior <= 0.0:
        return INF
    return -math.log2(prior)


def edge_assignment_bits(
    table: FailureProbTable, scenario_index: int, failed: AbstractSet[int]
) -> float:
    """Bits for the per-edge failed/survived assignment under one scenario."""
    row = table.row(scenario_index)
    mask = np.zeros(row.shape[0], dtype=bool)
    if failed:
        mask[list(failed)] = True
    with np.errstate(divide="ignore"):
        bits = np.where(mask, -np.log2(row), -np.log2(1.0 - row))
    return float(bits.sum())


def model_cost(
    net: InfraNetwork,
    table: FailureProbTable,
    scenario_index: int,
    failed: AbstractSet[int],
    serviced: AbstractSet[int],
) -> float:
    """Bits to transmit (scenario, serviced set, failure set).

    Returns +inf when the serviced set is not exactly the one induced by
    the failure set (feasibility indicator 0), or when an asserted edge
    event has probability zero.
    """
    if serviced != serviced_set(net, failed):
        return INF
    return scenario_prior_bits(table, scenario_index) + edge_assignment_bits(
        table, scenario_index, failed
    )


def _channel_bits(n: int, k: int, gamma: float) -> float:
    """Size-plus-content bits for one Bernoulli-sampled probe channel.

    k of n elements were observed at rate gamma. The rate terms appear
    twice (once in the size code, once in the content code); the 0*log 0
    convention zeroes vacuous terms, and asserting an inclusion at rate 0
    (or an exclusion at rate 1) costs +inf.
    """
    if k > 0 and gamma == 0.0:
        return INF
    if n - k > 0 and gamma == 1.0:
        return INF
    bits = -log2_binom(n, k)
    if k > 0:
        bits -= 2.0 * k * math.log2(gamma)
    if n - k > 0:
        bits -= 2.0 * (n - k) * math.log2(1.0 - gamma)
    return bits


def data_cost(
    serviced: AbstractSet[int], failed: AbstractSet[int], probes: ProbeSet
) -> float:
    """Bits to transmit both probe sets given the hypothesis.

    +inf when a probe lies outside the hypothesized set it was sampled
    from (the model cannot have produced the data).
    """
    if not (probes.qc <= serviced and probes.qi <= failed):
        return INF
    return _channel_bits(len(failed), len(probes.qi), probes.gamma_i) + _channel_bits(
        len(serviced), len(probes.qc), probes.gamma_c
    )


def connectivity_data_cost(
    serviced: AbstractSet[int], qc: AbstractSet[int], gamma_c: float
) -> float:
    """Data cost of the connectivity channel alone (no point-probe terms)."""
    if not qc <= serviced:
        return INF
    return _channel_bits(len(serviced), len(qc), gamma_c)


def total_cost(
    net: InfraNetwork,
    table: FailureProbTable,
    scenario_index: int,
    failed: AbstractSet[int],
    probes: ProbeSet,
) -> MdlCost:
    """Full description length of a failure-set hypothesis against probes.

    The serviced set is derived from the failure set, so the feasibility
    indicator inside the model cost is satisfied by construction; +inf can
    still arise from zero-probability events or uncovered probes.
    """
    serviced = serviced_set(net, failed)
    model = scenario_prior_bits(table, scenario_index) + edge_assignment_bits(
        table, scenario_index, failed
    )
    data = data_cost(serviced, failed, probes)
    total = model + data
    return MdlCost(model_cost=model, data_cost=data, total=total, feasible=math.isfinite(total))
