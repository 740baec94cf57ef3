"""Serviced-set computation under edge failures.

A demand node is serviced when it retains at least one path of at most
``hop_bound`` edges to any supply node after the failed edges are removed.
"""

from __future__ import annotations

from collections import deque
from typing import AbstractSet, Iterable

from .network import InfraNetwork


def serviced_set(net: InfraNetwork, failed: Iterable[int]) -> frozenset[int]:
    """Demand nodes reachable from some supply node within the hop bound.

    Multi-source BFS from all supply nodes, truncated at depth
    ``net.hop_bound``, skipping edges in ``failed``. Only demand nodes are
    ever members of the result.
    """
    blocked = failed if isinstance(failed, (set, frozenset)) else set(failed)
    dist = [-1] * net.n_nodes
    queue: deque[int] = deque()
    for s in net.supply_nodes:
        dist[s] = 0
        queue.append(s)
    bound = net.hop_bound
    adjacency = net.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du == bound:
            continue
        for v, eid in adjacency[u]:
            if dist[v] < 0 and eid not in blocked:
                dist[v] = du + 1
                queue.append(v)
    return frozenset(v for v in net.demand_nodes if dist[v] >= 0)


def is_feasible(net: InfraNetwork, failed: Iterable[int], qc: AbstractSet[int]) -> bool:
    """Whether every observed-serviced node stays serviced under ``failed``.

    This is the containment relaxation used during search; it coincides
    with the exact feasibility indicator of a model tuple whenever the
    tuple's serviced set is derived from its failure set.
    """
    return qc <= serviced_set(net, failed)
