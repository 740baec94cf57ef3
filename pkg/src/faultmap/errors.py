"""Exception types raised across the package."""

from __future__ import annotations


class FaultmapError(Exception):
    """Base class for all package errors."""


class ValidationError(FaultmapError):
    """An input object violates a structural invariant."""


class BadIndex(ValidationError):
    """A node or edge id is out of range."""


class SelfLoop(ValidationError):
    """An edge connects a node to itself."""


class DuplicateEdge(ValidationError):
    """The same undirected edge appears twice."""


class NoSupplyNode(ValidationError):
    """A network has no supply node."""


class NoDemandNode(ValidationError):
    """A network has no demand node."""


class NegativeDistance(ValidationError):
    """A distance argument is negative."""


class OutOfRangeProbability(ValidationError):
    """A probability lies outside [0, 1]."""


class MissingFragility(ValidationError):
    """A node has no fragility entry and no role-level default applies."""


class InfeasibleProbes(FaultmapError):
    """No disaster scenario admits a finite-cost explanation of the probes."""


class TooLarge(FaultmapError):
    """An instance exceeds the exhaustive-search edge budget."""


class EmptyTrialList(FaultmapError):
    """Aggregation was asked for zero trials."""


class BadSize(ValidationError):
    """A synthetic-network size parameter is too small."""


class ConfigError(FaultmapError):
    """An experiment configuration is malformed or inconsistent."""
