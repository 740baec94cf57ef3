"""Estimator-style wrappers around the inference algorithms.

Each estimator is configured with the known world (network, failure
probability table, scenario set) and fitted on an observed :class:`ProbeSet`;
the inferred state is exposed through trailing-underscore attributes.
``get_params``/``set_params``/``clone`` behave as scikit-learn expects, so
the solvers compose with the wider ecosystem.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .errors import ValidationError
from .evaluation import score as _score
from .inference import (
    Solution,
    exhaustive_optimal,
    joint_path_map,
    model_cost_baseline,
    only_connectivity,
)
from .probes import ProbeSet


class BaseFailureMapper(BaseEstimator):
    """Shared fit/predict surface of the failure-set inference estimators.

    Attributes set by :meth:`fit`:

    - ``solution_``: the full :class:`~faultmap.inference.Solution`.
    - ``failed_edges_``: inferred failed edge ids (frozenset).
    - ``scenario_``: index of the selected disaster scenario.
    - ``serviced_``: serviced demand nodes induced by the inference.
    - ``cost_``: description-length breakdown of the solution.
    - ``n_iter_``: number of greedy additions (or candidates evaluated).
    """

    def __init__(self, network=None, hazard_table=None, scenarios=None):
        self.network = network
        self.hazard_table = hazard_table
        self.scenarios = scenarios

    def _solve(self, probes: ProbeSet) -> Solution:
        raise NotImplementedError

    def fit(self, probes: ProbeSet, y=None):
        """Infer the failure set explaining the observed probes."""
        for name in ("network", "hazard_table", "scenarios"):
            if getattr(self, name) is None:
                raise ValidationError(f"estimator parameter {name!r} is not set")
        solution = self._solve(probes)
        self.solution_ = solution
        self.failed_edges_ = solution.failed_edges
        self.scenario_ = solution.scenario
        self.serviced_ = solution.serviced
        self.cost_ = solution.cost
        self.n_iter_ = solution.iterations
        return self

    def fit_predict(self, probes: ProbeSet, y=None) -> np.ndarray:
        """Fit and return the inferred failed edge ids, ascending."""
        return np.asarray(sorted(self.fit(probes).failed_edges_), dtype=int)

    def score(self, probes: ProbeSet, true_failed) -> float:
        """Standard F1 of the inference against a known failure set.

        Transductive: fits on ``probes`` before scoring.
        """
        inferred = frozenset(int(e) for e in self.fit_predict(probes))
        return _score(frozenset(int(e) for e in true_failed), inferred, mode="standard")[2]


class JointPathMap(BaseFailureMapper):
    """Greedy full-cost inference from joint connectivity and point probes."""

    def _solve(self, probes: ProbeSet) -> Solution:
        return joint_path_map(self.network, self.hazard_table, self.scenarios, probes)


class ModelCostGreedy(BaseFailureMapper):
    """Baseline that greedily minimizes the model cost alone."""

    def _solve(self, probes: ProbeSet) -> Solution:
        return model_cost_baseline(self.network, self.hazard_table, self.scenarios, probes)


class OnlyConnectivity(BaseFailureMapper):
    """Baseline for an observer with connectivity probes only."""

    def _solve(self, probes: ProbeSet) -> Solution:
        return only_connectivity(self.network, self.hazard_table, self.scenarios, probes)


class ExhaustiveOptimal(BaseFailureMapper):
    """Exact enumerator for small instances (edge-count guarded)."""

    def __init__(self, network=None, hazard_table=None, scenarios=None, max_edges=20):
        super().__init__(network=network, hazard_table=hazard_table, scenarios=scenarios)
        self.max_edges = max_edges

    def _solve(self, probes: ProbeSet) -> Solution:
        return exhaustive_optimal(
            self.network, self.hazard_table, self.scenarios, probes, max_edges=self.max_edges
        )
