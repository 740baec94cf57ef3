"""Failure-set inference for infrastructure networks.

Given an undirected network with supply/demand/transshipment roles, a set
of candidate disaster scenarios with per-edge failure probabilities, and
two kinds of observations (a sample of still-serviced demand nodes and a
small sample of failed edges), the solvers recover the full failed-edge
set by minimizing a two-part description-length cost. The package also
ships the seismic hazard pipeline used to simulate ground truth and an
experiment harness for evaluating the inference.
"""

from .errors import (
    BadIndex,
    BadSize,
    ConfigError,
    DuplicateEdge,
    EmptyTrialList,
    FaultmapError,
    InfeasibleProbes,
    MissingFragility,
    NegativeDistance,
    NoDemandNode,
    NoSupplyNode,
    OutOfRangeProbability,
    SelfLoop,
    TooLarge,
    ValidationError,
)
from .estimators import (
    BaseFailureMapper,
    ExhaustiveOptimal,
    JointPathMap,
    ModelCostGreedy,
    OnlyConnectivity,
)
from .evaluation import ScoreReport, TrialScore, aggregate, score, u_edge_proportion
from .hazard import (
    DisasterScenario,
    FailureProbTable,
    FragilityMap,
    FragilityParams,
    ScenarioSet,
    attenuation_median_pga,
    edge_failure_prob,
    failure_prob_table,
    fragility_failure_prob,
    load_fragility,
    load_scenarios,
    random_scenarios,
    sample_damage,
    sample_scenario,
)
from .inference import (
    Solution,
    exhaustive_optimal,
    joint_path_map,
    model_cost_baseline,
    only_connectivity,
)
from .mdl import EPSILON_BITS, MdlCost, data_cost, log2_binom, model_cost, total_cost
from .network import (
    InfraNetwork,
    NodeRole,
    build_network,
    haversine_km,
    load_network,
    save_network,
)
from .pipeline import ExperimentConfig, run_pipeline, write_results
from .probes import ProbeSet, load_probes, sample_probes, save_probes
from .seeding import derive_seed, rng_from
from .serviceability import is_feasible, serviced_set
from .synthetic import generate_network

__version__ = "0.1.0"

__all__ = [
    "BadIndex",
    "BadSize",
    "BaseFailureMapper",
    "ConfigError",
    "DisasterScenario",
    "DuplicateEdge",
    "EmptyTrialList",
    "EPSILON_BITS",
    "ExhaustiveOptimal",
    "ExperimentConfig",
    "FailureProbTable",
    "FaultmapError",
    "FragilityMap",
    "FragilityParams",
    "InfeasibleProbes",
    "InfraNetwork",
    "JointPathMap",
    "MdlCost",
    "MissingFragility",
    "ModelCostGreedy",
    "NegativeDistance",
    "NoDemandNode",
    "NoSupplyNode",
    "NodeRole",
    "OnlyConnectivity",
    "OutOfRangeProbability",
    "ProbeSet",
    "ScenarioSet",
    "ScoreReport",
    "SelfLoop",
    "Solution",
    "TooLarge",
    "TrialScore",
    "ValidationError",
    "aggregate",
    "attenuation_median_pga",
    "build_network",
    "data_cost",
    "derive_seed",
    "edge_failure_prob",
    "exhaustive_optimal",
    "failure_prob_table",
    "fragility_failure_prob",
    "generate_network",
    "haversine_km",
    "is_feasible",
    "joint_path_map",
    "load_fragility",
    "load_network",
    "load_probes",
    "load_scenarios",
    "log2_binom",
    "model_cost",
    "model_cost_baseline",
    "only_connectivity",
    "random_scenarios",
    "rng_from",
    "run_pipeline",
    "sample_damage",
    "sample_probes",
    "sample_scenario",
    "save_network",
    "save_probes",
    "score",
    "serviced_set",
    "total_cost",
    "u_edge_proportion",
    "write_results",
]
