"""Observation model: connectivity probes and point probes.

Connectivity probes sample the serviced demand nodes with rate ``gamma_c``;
point probes sample the failed edges with rate ``gamma_i``. Both are
independent Bernoulli draws per element, iterated in ascending id order so
results are seed-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import AbstractSet

import numpy as np

from .errors import OutOfRangeProbability, ValidationError
from .network import load_json


@dataclass(frozen=True)
class ProbeSet:
    """Observed probes plus the sampling rates they were drawn with."""

    qc: frozenset[int]
    qi: frozenset[int]
    gamma_c: float
    gamma_i: float

    def __post_init__(self) -> None:
        for name, value in (("gamma_c", self.gamma_c), ("gamma_i", self.gamma_i)):
            if not 0.0 <= value <= 1.0:
                raise OutOfRangeProbability(f"{name} must lie in [0, 1], got {value}")
        object.__setattr__(self, "qc", frozenset(int(v) for v in self.qc))
        object.__setattr__(self, "qi", frozenset(int(e) for e in self.qi))


def sample_probes(
    serviced: AbstractSet[int],
    failed: AbstractSet[int],
    gamma_c: float,
    gamma_i: float,
    rng: np.random.Generator,
) -> ProbeSet:
    """Draw probe sets from ground truth.

    Each serviced node enters ``qc`` independently with probability
    ``gamma_c``; each failed edge enters ``qi`` with ``gamma_i``. All
    serviced-node draws happen before the failed-edge draws.
    """
    qc = frozenset(v for v in sorted(serviced) if rng.random() < gamma_c)
    qi = frozenset(e for e in sorted(failed) if rng.random() < gamma_i)
    return ProbeSet(qc=qc, qi=qi, gamma_c=gamma_c, gamma_i=gamma_i)


def probes_from_dict(data: dict) -> ProbeSet:
    try:
        return ProbeSet(
            qc=frozenset(int(v) for v in data["qc"]),
            qi=frozenset(int(e) for e in data["qi"]),
            gamma_c=float(data["gamma_c"]),
            gamma_i=float(data["gamma_i"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"probe file missing field: {exc}") from None


def probes_to_dict(probes: ProbeSet) -> dict:
    return {
        "qc": sorted(probes.qc),
        "qi": sorted(probes.qi),
        "gamma_c": probes.gamma_c,
        "gamma_i": probes.gamma_i,
    }


def load_probes(path: str | Path) -> ProbeSet:
    try:
        return probes_from_dict(load_json(path))
    except ValidationError as exc:
        if str(path) in str(exc):
            raise
        raise ValidationError(f"{path}: {exc}") from None


def save_probes(probes: ProbeSet, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(probes_to_dict(probes), fh, indent=2)
        fh.write("\n")
