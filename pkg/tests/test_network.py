"""Network construction, validation, and file round-trips."""

from __future__ import annotations

import json

import numpy as np
import pytest

from faultmap.errors import (
    BadIndex,
    DuplicateEdge,
    NoDemandNode,
    NoSupplyNode,
    SelfLoop,
    ValidationError,
)
from faultmap.network import (
    NodeRole,
    build_network,
    haversine_km,
    load_network,
    network_from_dict,
    network_to_dict,
    save_network,
)

LINE_NODES = [("supply", 35.0, -90.0), ("transshipment", 35.05, -90.0), ("demand", 35.1, -90.0)]


def test_minimal_line_graph(line3):
    assert line3.n_nodes == 3
    assert line3.n_edges == 2
    assert line3.supply_nodes == (0,)
    assert line3.transshipment_nodes == (1,)
    assert line3.demand_nodes == (2,)


def test_edge_endpoints_ascending(line3):
    assert line3.edge_endpoints(0) == (0, 1)
    assert line3.edge_endpoints(1) == (1, 2)


def test_edge_endpoints_out_of_range(line3):
    with pytest.raises(BadIndex):
        line3.edge_endpoints(5)
    with pytest.raises(BadIndex):
        line3.edge_endpoints(-1)


def test_duplicate_edge_rejected():
    with pytest.raises(DuplicateEdge, match="edge 1"):
        build_network(LINE_NODES, [(0, 1), (0, 1)], 2)


def test_reversed_duplicate_rejected():
    with pytest.raises(DuplicateEdge):
        build_network(LINE_NODES, [(0, 1), (1, 0)], 2)


def test_self_loop_rejected():
    with pytest.raises(SelfLoop, match="node 1"):
        build_network(LINE_NODES, [(0, 1), (1, 1)], 2)


def test_missing_roles_rejected():
    demand_only = [("demand", 0.0, 0.0), ("demand", 1.0, 1.0)]
    with pytest.raises(NoSupplyNode):
        build_network(demand_only, [(0, 1)], 1)
    supply_only = [("supply", 0.0, 0.0), ("supply", 1.0, 1.0)]
    with pytest.raises(NoDemandNode):
        build_network(supply_only, [(0, 1)], 1)


def test_endpoint_out_of_range():
    with pytest.raises(BadIndex, match="edge 1"):
        build_network(LINE_NODES, [(0, 1), (1, 7)], 2)


def test_hop_bound_must_be_positive():
    with pytest.raises(ValidationError):
        build_network(LINE_NODES, [(0, 1), (1, 2)], 0)


def test_unknown_role_rejected():
    with pytest.raises(ValidationError):
        build_network([("reservoir", 0.0, 0.0), ("demand", 1.0, 1.0)], [(0, 1)], 1)


def test_role_partition_random_networks():
    rng = np.random.default_rng(7)
    role_values = [r.value for r in NodeRole]
    for _ in range(25):
        n = int(rng.integers(3, 30))
        roles = [role_values[int(rng.integers(3))] for _ in range(n)]
        roles[0], roles[1] = "supply", "demand"
        nodes = [(r, float(rng.uniform(-60, 60)), float(rng.uniform(-120, 120))) for r in roles]
        edges = [(i, i + 1) for i in range(n - 1)]
        net = build_network(nodes, edges, 3)
        assert len(net.supply_nodes) + len(net.demand_nodes) + len(net.transshipment_nodes) == n


def test_adjacency_round_trip(fig9):
    for eid, (u, v) in enumerate(fig9.edges):
        assert [nbr for nbr, e in fig9.adjacency[u] if e == eid] == [v]
        assert [nbr for nbr, e in fig9.adjacency[v] if e == eid] == [u]
    degree_total = sum(len(nbrs) for nbrs in fig9.adjacency)
    assert degree_total == 2 * fig9.n_edges


def test_construction_deterministic(fig9):
    nodes = [(fig9.roles[i].value, fig9.lats[i], fig9.lons[i]) for i in range(fig9.n_nodes)]
    again = build_network(nodes, list(fig9.edges), fig9.hop_bound)
    assert again == fig9


def _utility_scale_payload():
    """59 nodes / 73 edges with the utility-network role split 9/37/13."""
    rng = np.random.default_rng(1234)
    roles = ["supply"] * 9 + ["demand"] * 37 + ["transshipment"] * 13
    nodes = [
        {
            "id": i,
            "role": roles[i],
            "lat": 35.0 + float(rng.uniform(0, 0.4)),
            "lon": -90.1 + float(rng.uniform(0, 0.4)),
        }
        for i in range(59)
    ]
    seen = set()
    edges = []
    order = rng.permutation(59)
    for i in range(1, 59):  # random spanning tree first
        u = int(order[i])
        v = int(order[int(rng.integers(i))])
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    while len(edges) < 73:
        u, v = (int(x) for x in rng.integers(0, 59, size=2))
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            continue
        seen.add(key)
        edges.append((u, v))
    return {
        "L": 3,
        "nodes": nodes,
        "edges": [{"id": e, "u": u, "v": v} for e, (u, v) in enumerate(edges)],
    }


def test_utility_scale_file_ingestion(tmp_path):
    path = tmp_path / "utility.json"
    path.write_text(json.dumps(_utility_scale_payload()))
    net = load_network(path)
    assert net.n_nodes == 59
    assert net.n_edges == 73
    assert len(net.supply_nodes) == 9
    assert len(net.demand_nodes) == 37
    assert len(net.transshipment_nodes) == 13


def test_file_round_trip(tmp_path, fig9):
    path = tmp_path / "net.json"
    save_network(fig9, path)
    assert load_network(path) == fig9


def test_non_contiguous_ids_rejected():
    payload = network_to_dict(
        build_network(LINE_NODES, [(0, 1), (1, 2)], 2)
    )
    payload["nodes"][2]["id"] = 5
    with pytest.raises(ValidationError, match="contiguous"):
        network_from_dict(payload)


def test_haversine_reference_points():
    assert haversine_km(0.0, 0.0, 0.0, 0.0) == 0.0
    # one degree of longitude at the equator
    assert haversine_km(0.0, 0.0, 0.0, 1.0) == pytest.approx(111.19, abs=0.05)
    # symmetric
    assert haversine_km(35.1, -90.0, 35.4, -89.8) == pytest.approx(
        haversine_km(35.4, -89.8, 35.1, -90.0)
    )
