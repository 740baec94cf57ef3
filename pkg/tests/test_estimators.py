"""Estimator API surface: params, cloning, fitted attributes."""

from __future__ import annotations

import numpy as np
import pytest
from sklearn.base import clone

from faultmap.errors import BadIndex, ValidationError
from faultmap.estimators import (
    ExhaustiveOptimal,
    JointPathMap,
    ModelCostGreedy,
    OnlyConnectivity,
)
from faultmap.hazard import failure_prob_table
from faultmap.inference import joint_path_map
from faultmap.probes import ProbeSet, sample_probes

from conftest import FIG9_FAILED, FIG9_SERVICED, MODERATE_FRAGILITY, single_scenario

ALL_ESTIMATORS = (JointPathMap, ModelCostGreedy, OnlyConnectivity, ExhaustiveOptimal)


@pytest.fixture
def fitted_world(fig9):
    scenarios = single_scenario()
    table = failure_prob_table(fig9, scenarios, MODERATE_FRAGILITY)
    probes = sample_probes(FIG9_SERVICED, FIG9_FAILED, 0.7, 0.3, np.random.default_rng(6))
    return fig9, table, scenarios, probes


def test_get_params_round_trip(fitted_world):
    net, table, scenarios, _ = fitted_world
    est = JointPathMap(network=net, hazard_table=table, scenarios=scenarios)
    params = est.get_params()
    assert params["network"] is net
    assert params["hazard_table"] is table
    rebuilt = JointPathMap(**params)
    assert rebuilt.get_params() == params


def test_clone_preserves_configuration(fitted_world):
    net, table, scenarios, _ = fitted_world
    est = ExhaustiveOptimal(network=net, hazard_table=table, scenarios=scenarios, max_edges=12)
    twin = clone(est)
    assert twin.max_edges == 12
    assert twin.network == net


def test_fit_sets_attributes(fitted_world):
    net, table, scenarios, probes = fitted_world
    est = JointPathMap(network=net, hazard_table=table, scenarios=scenarios).fit(probes)
    reference = joint_path_map(net, table, scenarios, probes)
    assert est.solution_ == reference
    assert est.failed_edges_ == reference.failed_edges
    assert est.scenario_ == reference.scenario
    assert est.serviced_ == reference.serviced
    assert est.cost_ == reference.cost
    assert est.n_iter_ == reference.iterations


def test_fit_predict_sorted_ids(fitted_world):
    net, table, scenarios, probes = fitted_world
    for cls in ALL_ESTIMATORS:
        est = cls(network=net, hazard_table=table, scenarios=scenarios)
        predicted = est.fit_predict(probes)
        assert predicted.dtype.kind == "i"
        assert list(predicted) == sorted(est.failed_edges_)


def test_unfitted_has_no_attributes(fitted_world):
    net, table, scenarios, _ = fitted_world
    est = JointPathMap(network=net, hazard_table=table, scenarios=scenarios)
    with pytest.raises(AttributeError):
        est.failed_edges_


def test_score_is_standard_f1(fitted_world):
    net, table, scenarios, probes = fitted_world
    est = JointPathMap(network=net, hazard_table=table, scenarios=scenarios)
    value = est.score(probes, FIG9_FAILED)
    hits = len(est.failed_edges_ & FIG9_FAILED)
    p = hits / len(est.failed_edges_) if est.failed_edges_ else 1.0
    r = hits / len(FIG9_FAILED)
    assert value == pytest.approx(2 * p * r / (p + r) if p + r else 0.0)


def test_unconfigured_estimator_rejected():
    with pytest.raises(ValidationError, match="network"):
        JointPathMap().fit(ProbeSet(frozenset(), frozenset(), 0.5, 0.5))


def test_probe_validation_through_fit(fitted_world):
    net, table, scenarios, _ = fitted_world
    bad_edge = ProbeSet(qc=frozenset(), qi=frozenset({99}), gamma_c=0.5, gamma_i=0.5)
    est = JointPathMap(network=net, hazard_table=table, scenarios=scenarios)
    with pytest.raises(BadIndex):
        est.fit(bad_edge)
    not_demand = ProbeSet(qc=frozenset({0}), qi=frozenset(), gamma_c=0.5, gamma_i=0.5)
    with pytest.raises(ValidationError):
        est.fit(not_demand)
