"""Shared fixtures: the n<=7 atlas corpus and a memoized oracle."""

from __future__ import annotations

import pytest

from decymatch import Graph, oracle_decide

import brute


def _from_networkx(nxg) -> Graph:
    nodes = sorted(nxg.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(pos[u], pos[v]) for u, v in nxg.edges()])


@pytest.fixture(scope="session")
def atlas_graphs():
    """All 1253 graphs on up to 7 vertices, one per isomorphism class."""
    from networkx.generators.atlas import graph_atlas_g

    return [_from_networkx(nxg) for nxg in graph_atlas_g()[1:]]


@pytest.fixture(scope="session")
def atlas_connected(atlas_graphs):
    return [g for g in atlas_graphs if g.n >= 1 and g.is_connected()]


@pytest.fixture(scope="session")
def oracle():
    """Memoized oracle_decide keyed by the exact labeled graph."""
    cache = {}

    def run(g: Graph):
        key = (g.n, g.edges)
        if key not in cache:
            cache[key] = oracle_decide(g)
        return cache[key]

    return run


@pytest.fixture(scope="session")
def dh_graphs_8():
    """All connected distance-hereditary graphs with at most 8 vertices."""
    return brute.connected_dh_graphs(8)


@pytest.fixture(scope="session")
def chordal_graphs_8():
    """All connected chordal graphs with at most 8 vertices."""
    return brute.connected_chordal_graphs(8)
