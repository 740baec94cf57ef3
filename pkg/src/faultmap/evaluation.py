"""Scoring of inferred failure sets against ground truth."""

from __future__ import annotations

from dataclasses import dataclass
from statistics import fmean
from typing import AbstractSet, Sequence

from .errors import EmptyTrialList, ValidationError
from .network import InfraNetwork
from .serviceability import serviced_set

F1_MODES = ("paper", "standard")


def score(
    true_failed: AbstractSet[int],
    inferred: AbstractSet[int],
    mode: str = "paper",
) -> tuple[float, float, float]:
    """Precision, recall, and F1 of an inferred failure set.

    Limit cases: precision is 1 when both sets are empty (no failures,
    none claimed) and 0 when only the prediction is empty; recall is 1
    when there are no true failures. ``mode`` selects the F1 formula:
    ``paper`` uses p*r/(p+r) (maximum 0.5), ``standard`` the conventional
    2pr/(p+r).
    """
    if mode not in F1_MODES:
        raise ValidationError(f"f1 mode must be one of {F1_MODES}, got {mode!r}")
    hits = len(true_failed & inferred)
    if inferred:
        precision = hits / len(inferred)
    else:
        precision = 1.0 if not true_failed else 0.0
    recall = hits / len(true_failed) if true_failed else 1.0
    if precision + recall == 0.0:
        f1 = 0.0
    elif mode == "paper":
        f1 = precision * recall / (precision + recall)
    else:
        f1 = 2.0 * precision * recall / (precision + recall)
    return precision, recall, f1


def u_edge_proportion(
    net: InfraNetwork,
    true_failed: AbstractSet[int],
    inferred: AbstractSet[int],
) -> float:
    """Proportion of true failures that are invisible to connectivity evidence.

    Starting from the inferred set, missed true failures are admitted one
    by one (ascending edge id) whenever their inclusion leaves the
    serviced set unchanged; the count of admitted edges over the true
    failure count is returned. 0 by convention when nothing failed.
    """
    if not true_failed:
        return 0.0
    working = set(inferred)
    baseline = serviced_set(net, working)
    added = 0
    for e in sorted(true_failed - working):
        if serviced_set(net, working | {e}) == baseline:
            working.add(e)
            added += 1
    return added / len(true_failed)


@dataclass(frozen=True)
class TrialScore:
    """Metrics of one trial."""

    precision: float
    recall: float
    f1: float
    u_edge_proportion: float


@dataclass(frozen=True)
class ScoreReport:
    """Per-trial rows plus their arithmetic means."""

    rows: tuple[TrialScore, ...]
    mean: TrialScore


def aggregate(trials: Sequence[TrialScore]) -> ScoreReport:
    """Arithmetic mean of each metric across trials, rows preserved."""
    if not trials:
        raise EmptyTrialList("cannot aggregate zero trials")
    mean = TrialScore(
        precision=fmean(t.precision for t in trials),
        recall=fmean(t.recall for t in trials),
        f1=fmean(t.f1 for t in trials),
        u_edge_proportion=fmean(t.u_edge_proportion for t in trials),
    )
    return ScoreReport(rows=tuple(trials), mean=mean)
