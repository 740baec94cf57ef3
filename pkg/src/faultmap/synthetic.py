"""Desk-scale synthetic networks for experiments and tests."""

from __future__ import annotations

import math

import numpy as np

from .errors import BadSize, ValidationError
from .network import InfraNetwork, NodeRole, build_network

KINDS = ("grid", "ring", "star")

_DEMAND_SHARE = 0.75


def _mixed_roles(
    n: int, fixed: dict[int, NodeRole], rng: np.random.Generator
) -> list[NodeRole]:
    """Assign demand/transshipment to the non-fixed nodes, seeded.

    Guarantees at least one demand node so the result always validates.
    """
    roles: list[NodeRole] = []
    for i in range(n):
        if i in fixed:
            roles.append(fixed[i])
        else:
            pick = NodeRole.DEMAND if rng.random() < _DEMAND_SHARE else NodeRole.TRANSSHIPMENT
            roles.append(pick)
    if NodeRole.DEMAND not in roles:
        for i in range(n):
            if i not in fixed:
                roles[i] = NodeRole.DEMAND
                break
    return roles


def generate_network(kind: str, size: int, seed: int) -> InfraNetwork:
    """Build a synthetic network; same (kind, size, seed) gives the same graph.

    ``grid`` is a size x size lattice with supply at the corners, ``ring``
    a cycle of ``size`` nodes with two supplies across from each other,
    ``star`` a supply hub with ``size - 1`` demand leaves. Interior roles
    mix demand and transshipment nodes pseudo-randomly; the hop bound
    defaults to a value that services the whole intact graph.
    """
    if size < 3:
        raise BadSize(f"synthetic size must be >= 3, got {size}")
    rng = np.random.default_rng(seed)
    if kind == "grid":
        n = size * size
        corners = {0, size - 1, n - size, n - 1}
        roles = _mixed_roles(n, {c: NodeRole.SUPPLY for c in corners}, rng)
        nodes = [
            (roles[r * size + c], 35.0 + 0.05 * r, -90.0 + 0.05 * c)
            for r in range(size)
            for c in range(size)
        ]
        edges = []
        for r in range(size):
            for c in range(size):
                i = r * size + c
                if c + 1 < size:
                    edges.append((i, i + 1))
                if r + 1 < size:
                    edges.append((i, i + size))
        return build_network(nodes, edges, hop_bound=2 * (size - 1))
    if kind == "ring":
        supplies = {0: NodeRole.SUPPLY, size // 2: NodeRole.SUPPLY}
        roles = _mixed_roles(size, supplies, rng)
        nodes = [
            (
                roles[i],
                35.0 + 0.3 * math.sin(2.0 * math.pi * i / size),
                -90.0 + 0.3 * math.cos(2.0 * math.pi * i / size),
            )
            for i in range(size)
        ]
        edges = [(i, (i + 1) % size) for i in range(size)]
        return build_network(nodes, edges, hop_bound=max(1, size // 2))
    if kind == "star":
        nodes = [(NodeRole.SUPPLY, 35.0, -90.0)]
        for i in range(1, size):
            angle = 2.0 * math.pi * (i - 1) / (size - 1)
            nodes.append((NodeRole.DEMAND, 35.0 + 0.1 * math.sin(angle), -90.0 + 0.1 * math.cos(angle)))
        edges = [(0, i) for i in range(1, size)]
        return build_network(nodes, edges, hop_bound=1)
    raise ValidationError(f"unknown synthetic kind {kind!r}, expected one of {KINDS}")
