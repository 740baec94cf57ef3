"""Immutable graph model for infrastructure networks.

Nodes carry one of three roles (supply, demand, transshipment) plus WGS84
coordinates; edges are undirected and identified by dense integer ids in
input order. Serviceability of a demand node is judged against the hop
bound ``hop_bound`` stored on the network.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

from .errors import (
    BadIndex,
    DuplicateEdge,
    NoDemandNode,
    NoSupplyNode,
    SelfLoop,
    ValidationError,
)

EARTH_RADIUS_KM = 6371.0


class NodeRole(Enum):
    SUPPLY = "supply"
    DEMAND = "demand"
    TRANSSHIPMENT = "transshipment"


def haversine_km(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Great-circle distance in km between two WGS84 points."""
    phi1, phi2 = math.radians(lat1), math.radians(lat2)
    dphi = phi2 - phi1
    dlam = math.radians(lon2 - lon1)
    a = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(a)))


@dataclass(frozen=True)
class InfraNetwork:
    """Validated, immutable infrastructure network.

    Construct through :func:`build_network`; the adjacency index and the
    per-role node tuples are derived there and must stay consistent with
    the edge list. Instances are safe to share across workers.
    """

    roles: tuple[NodeRole, ...]
    lats: tuple[float, ...]
    lons: tuple[float, ...]
    edges: tuple[tuple[int, int], ...]
    hop_bound: int
    adjacency: tuple[tuple[tuple[int, int], ...], ...]
    supply_nodes: tuple[int, ...]
    demand_nodes: tuple[int, ...]
    transshipment_nodes: tuple[int, ...]

    @property
    def n_nodes(self) -> int:
        return len(self.roles)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def edge_endpoints(self, edge_id: int) -> tuple[int, int]:
        """Endpoints of an edge as an ascending node-id pair."""
        if not 0 <= edge_id < len(self.edges):
            raise BadIndex(f"edge id {edge_id} out of range 0..{len(self.edges) - 1}")
        return self.edges[edge_id]

    def node_role(self, node_id: int) -> NodeRole:
        if not 0 <= node_id < len(self.roles):
            raise BadIndex(f"node id {node_id} out of range 0..{len(self.roles) - 1}")
        return self.roles[node_id]


def _coerce_role(value: NodeRole | str, index: int) -> NodeRole:
    if isinstance(value, NodeRole):
        return value
    try:
        return NodeRole(value)
    except ValueError:
        raise ValidationError(f"node {index}: unknown role {value!r}") from None


def build_network(
    nodes: Sequence[tuple[NodeRole | str, float, float]],
    edges: Sequence[tuple[int, int]],
    hop_bound: int,
) -> InfraNetwork:
    """Validate and freeze a network from raw node and edge lists.

    Node and edge ids are assigned in input order. Rejects self-loops,
    duplicate undirected edges, out-of-range endpoints, and networks
    without at least one supply and one demand node.
    """
    if hop_bound < 1:
        raise ValidationError(f"hop bound must be >= 1, got {hop_bound}")
    n = len(nodes)
    roles = tuple(_coerce_role(r, i) for i, (r, _, _) in enumerate(nodes))
    lats = tuple(float(lat) for _, lat, _ in nodes)
    lons = tuple(float(lon) for _, _, lon in nodes)

    canonical: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        if not (0 <= u < n and 0 <= v < n):
            raise BadIndex(f"edge {eid}: endpoint ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"edge {eid}: self-loop at node {u}")
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise DuplicateEdge(f"edge {eid}: duplicate of {pair}")
        seen.add(pair)
        canonical.append(pair)
        adjacency[u].append((v, eid))
        adjacency[v].append((u, eid))

    supply = tuple(i for i, r in enumerate(roles) if r is NodeRole.SUPPLY)
    demand = tuple(i for i, r in enumerate(roles) if r is NodeRole.DEMAND)
    transshipment = tuple(i for i, r in enumerate(roles) if r is NodeRole.TRANSSHIPMENT)
    if not supply:
        raise NoSupplyNode("network has no supply node")
    if not demand:
        raise NoDemandNode("network has no demand node")

    return InfraNetwork(
        roles=roles,
        lats=lats,
        lons=lons,
        edges=tuple(canonical),
        hop_bound=hop_bound,
        adjacency=tuple(tuple(nbrs) for nbrs in adjacency),
        supply_nodes=supply,
        demand_nodes=demand,
        transshipment_nodes=transshipment,
    )


def network_from_dict(data: dict) -> InfraNetwork:
    """Build a network from the JSON file schema.

    Expects ``{"L": int, "nodes": [{"id", "role", "lat", "lon"}],
    "edges": [{"id", "u", "v"}]}`` with both id sequences contiguous
    from 0.
    """
    try:
        hop_bound = int(data["L"])
        raw_nodes = data["nodes"]
        raw_edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"network file missing field: {exc}") from None

    for seq, kind in ((raw_nodes, "node"), (raw_edges, "edge")):
        ids = [entry.get("id") for entry in seq]
        if ids != list(range(len(seq))):
            raise ValidationError(f"{kind} ids must be contiguous 0..{len(seq) - 1}, got {ids}")

    nodes = [(entry["role"], entry["lat"], entry["lon"]) for entry in raw_nodes]
    edges = [(int(entry["u"]), int(entry["v"])) for entry in raw_edges]
    return build_network(nodes, edges, hop_bound)


def network_to_dict(net: InfraNetwork) -> dict:
    return {
        "L": net.hop_bound,
        "nodes": [
            {"id": i, "role": net.roles[i].value, "lat": net.lats[i], "lon": net.lons[i]}
            for i in range(net.n_nodes)
        ],
        "edges": [{"id": e, "u": u, "v": v} for e, (u, v) in enumerate(net.edges)],
    }


def load_json(path: str | Path) -> dict:
    """Parse a JSON file, naming the file and position on errors."""
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"{path}: {exc}") from None


def load_network(path: str | Path) -> InfraNetwork:
    try:
        return network_from_dict(load_json(path))
    except ValidationError as exc:
        if str(path) in str(exc):
            raise
        raise ValidationError(f"{path}: {exc}") from None


def save_network(net: InfraNetwork, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(network_to_dict(net), fh, indent=2)
        fh.write("\n")
