"""Bounded reachability against the brute-force path enumerator."""

from __future__ import annotations

import itertools

import numpy as np

from faultmap.network import build_network
from faultmap.serviceability import is_feasible, serviced_set
from faultmap.synthetic import generate_network

from conftest import FIG9_FAILED, FIG9_SERVICED
from oracles import bruteforce_serviced


def test_line_intact_and_cut(line3):
    assert serviced_set(line3, set()) == frozenset({2})
    assert serviced_set(line3, {1}) == frozenset()
    assert serviced_set(line3, {0}) == frozenset()


def test_fig9_matches_brute_force(fig9):
    got = serviced_set(fig9, FIG9_FAILED)
    assert got == FIG9_SERVICED
    assert got == bruteforce_serviced(fig9, FIG9_FAILED)


def test_fig9_redundant_edge_is_invisible(fig9):
    # dropping edge 1 from the failure set changes nothing: node 2 keeps
    # its direct supply edge
    assert serviced_set(fig9, FIG9_FAILED - {1}) == serviced_set(fig9, FIG9_FAILED)
    # the other two failures are each visible on their own
    for e in (5, 8):
        assert serviced_set(fig9, FIG9_FAILED - {e}) != serviced_set(fig9, FIG9_FAILED)


def test_hop_bound_respected(fig9):
    # node 6 sits two hops out; at hop bound 1 only direct neighbors count
    short = build_network(
        [(fig9.roles[i].value, fig9.lats[i], fig9.lons[i]) for i in range(fig9.n_nodes)],
        list(fig9.edges),
        hop_bound=1,
    )
    assert serviced_set(short, set()) == frozenset({2})


def test_raising_bound_never_shrinks(fig9):
    nodes = [(fig9.roles[i].value, fig9.lats[i], fig9.lons[i]) for i in range(fig9.n_nodes)]
    previous: frozenset[int] = frozenset()
    for bound in range(1, 6):
        net = build_network(nodes, list(fig9.edges), hop_bound=bound)
        current = serviced_set(net, {8})
        assert previous <= current
        previous = current
    # beyond the diameter the bound no longer matters
    net_diam = build_network(nodes, list(fig9.edges), hop_bound=fig9.n_nodes)
    assert previous == serviced_set(net_diam, {8})


def test_antitone_in_failures(fig9):
    rng = np.random.default_rng(21)
    for _ in range(200):
        small = {int(e) for e in rng.integers(0, fig9.n_edges, size=3)}
        extra = {int(e) for e in rng.integers(0, fig9.n_edges, size=2)}
        assert serviced_set(fig9, small | extra) <= serviced_set(fig9, small)


def test_all_edges_failed_services_nobody(fig9, line3, star4):
    for net in (fig9, line3, star4):
        assert serviced_set(net, set(range(net.n_edges))) == frozenset()


def test_exhaustive_agreement_small_networks(line3, star4):
    for net in (line3, star4):
        for r in range(net.n_edges + 1):
            for failed in itertools.combinations(range(net.n_edges), r):
                assert serviced_set(net, set(failed)) == bruteforce_serviced(net, set(failed))


def test_exhaustive_agreement_random_subsets_on_grid():
    net = generate_network("grid", 3, seed=5)
    rng = np.random.default_rng(9)
    for _ in range(300):
        failed = {int(e) for e in np.nonzero(rng.random(net.n_edges) < 0.3)[0]}
        assert serviced_set(net, failed) == bruteforce_serviced(net, failed)


def test_is_feasible(fig9):
    assert is_feasible(fig9, FIG9_FAILED, frozenset({2, 5}))
    assert is_feasible(fig9, FIG9_FAILED, frozenset())
    assert not is_feasible(fig9, FIG9_FAILED, frozenset({6}))
    # containment agrees with recomputation for every subset of a small net
    qc = frozenset({2, 5})
    for r in range(4):
        for failed in itertools.combinations(range(fig9.n_edges), r):
            expected = qc <= bruteforce_serviced(fig9, set(failed))
            assert is_feasible(fig9, set(failed), qc) == expected
