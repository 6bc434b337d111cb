import random

import pytest

from decymatch import (
    Graph,
    PreconditionError,
    SizeCapError,
    density_ok,
    find_bad_subgraph,
    is_biconnected,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_sparse_2conn_dh,
    is_sparse_chordal,
    is_split,
)
from decymatch.blocks import NAMED_PATTERNS
from decymatch.recognize import class_report, sparse_report

import brute


def replay_peo(g: Graph, order) -> bool:
    """Eliminating in the given order must always find a clique neighborhood."""
    remaining = set(range(g.n))
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        nbrs = [u for u in g.adj[v] if u in remaining and u != v]
        for i, a in enumerate(nbrs):
            for b in nbrs[i + 1:]:
                if not g.has_edge(a, b):
                    return False
        remaining.discard(v)
    return sorted(order) == sorted(range(g.n))


def replay_prune(g: Graph, steps, allow_pendant: bool) -> bool:
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    for step in steps:
        v, kind, partner = step.vertex, step.kind, step.partner
        if kind == "pendant":
            if not (allow_pendant and adj[v] == {partner}):
                return False
        elif kind == "true_twin":
            if not (partner in adj[v] and adj[v] - {partner} == adj[partner] - {v}):
                return False
        elif kind == "false_twin":
            if not (partner not in adj[v] and adj[v] == adj[partner]):
                return False
        else:
            return False
        for u in adj[v]:
            adj[u].discard(v)
        del adj[v]
    return all(not s for s in adj.values())


class TestChordal:
    def test_tree_is_chordal(self):
        assert is_chordal(brute.path(6)).ok

    def test_square_certificate(self):
        res = is_chordal(brute.square())
        assert not res.ok
        assert sorted(res.chordless_cycle) == [0, 1, 2, 3]

    def test_atlas_vs_brute_with_certificates(self, atlas_connected):
        for g in atlas_connected:
            res = is_chordal(g)
            assert res.ok == brute.is_chordal_brute(g)
            if res.ok:
                assert replay_peo(g, res.elimination_order)
            else:
                self._assert_chordless(g, res.chordless_cycle)

    @staticmethod
    def _assert_chordless(g, cyc):
        assert len(cyc) >= 4
        k = len(cyc)
        for i, u in enumerate(cyc):
            for j in range(i + 1, k):
                adjacent = g.has_edge(u, cyc[j])
                on_cycle = (j - i == 1) or (i == 0 and j == k - 1)
                assert adjacent == on_cycle

    def test_random_certificates_remain_valid(self):
        rng = random.Random(23)
        non_chordal = 0
        while non_chordal < 150:
            g = brute.random_graph(rng.randint(5, 12), rng.uniform(0.15, 0.6), rng)
            res = is_chordal(g)
            if res.ok:
                assert replay_peo(g, res.elimination_order)
            else:
                non_chordal += 1
                self._assert_chordless(g, res.chordless_cycle)

    def test_lexbfs_dense_stress(self):
        # heavy group churn in the partition refinement; the order must stay a
        # permutation and chordality must agree with brute force on small n
        from decymatch.recognize import lexbfs_order

        rng = random.Random(77)
        for _ in range(200):
            g = brute.random_graph(rng.randint(2, 32), rng.uniform(0.05, 0.95), rng)
            order = lexbfs_order(g)
            assert sorted(order) == list(range(g.n))
            if g.n <= 7:
                assert is_chordal(g).ok == brute.is_chordal_brute(g)


class TestSplit:
    def test_star_is_split(self):
        assert is_split(brute.star(5))

    def test_2k2_is_not(self):
        assert not is_split(Graph(4, [(0, 1), (2, 3)]))

    def test_atlas_vs_forbidden_subgraphs(self, atlas_graphs):
        for g in atlas_graphs:
            assert is_split(g) == brute.is_split_brute(g)


class TestDistanceHereditary:
    def test_cograph_k23_is_dh(self):
        assert is_distance_hereditary(brute.k23()).ok

    def test_house_is_not(self):
        res = is_distance_hereditary(brute.house())
        assert not res.ok
        assert res.forbidden_name == "house"

    def test_atlas_vs_brute_with_certificates(self, atlas_connected):
        for g in atlas_connected:
            res = is_distance_hereditary(g)
            assert res.ok == brute.is_dh_brute(g)
            if res.ok:
                assert replay_prune(g, res.elimination, allow_pendant=True)
            else:
                name = res.forbidden_name
                verts = res.forbidden_vertices
                assert name in {"house", "hole", "domino", "gem"}
                if name == "hole":
                    assert len(verts) >= 5
                    sub = brute.induced_edges(g, verts)
                    assert len(sub) == len(verts)
                else:
                    pn, pe = NAMED_PATTERNS[name]
                    sub = brute.induced_edges(g, verts)
                    relabel = {v: i for i, v in enumerate(sorted(verts))}
                    got = Graph(pn, [(relabel[u], relabel[v]) for u, v in sub])
                    assert brute.isomorphic(got, Graph(pn, pe))


class TestCograph:
    def test_k4_is_cograph(self):
        assert is_cograph(brute.k4()).ok

    def test_p4_certificate_is_itself(self):
        res = is_cograph(brute.path(4))
        assert not res.ok
        assert sorted(res.forbidden_vertices) == [0, 1, 2, 3]

    def test_atlas_vs_brute(self, atlas_graphs):
        for g in atlas_graphs:
            res = is_cograph(g)
            assert res.ok == brute.is_cograph_brute(g)
            if res.ok:
                assert replay_prune(g, res.elimination, allow_pendant=False)
            else:
                a, b, c, d = res.forbidden_vertices
                assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
                assert not g.has_edge(a, c) and not g.has_edge(b, d)
                assert not g.has_edge(a, d)


class TestDensityAndBadSubgraph:
    def test_density_examples(self):
        assert density_ok(Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                                    (1, 2), (2, 3), (3, 4)]))  # n=6 m=8
        assert not density_ok(brute.k4())
        assert density_ok(brute.k33minus())

    def test_gem_is_bad_whole(self):
        assert find_bad_subgraph(brute.gem()) == (0, 1, 2, 3, 4)

    def test_chains_are_bad_whole(self):
        for k in range(4):
            g = brute.chain(k)
            assert g.n == 2 * k + 7 and g.m == 3 * k + 10
            assert find_bad_subgraph(g) == tuple(range(g.n))

    def test_square_not_bad(self):
        assert find_bad_subgraph(brute.square()) is None

    def test_size_cap(self):
        with pytest.raises(SizeCapError):
            find_bad_subgraph(brute.path(17))

    def test_vs_brute(self, atlas_graphs):
        for g in atlas_graphs:
            got = find_bad_subgraph(g)
            assert (got is not None) == brute.bad_subgraph_exists(g)
            if got is not None:
                k = len(got)
                assert len(brute.induced_edges(g, got)) > (3 * k) // 2 - 1

    def test_sparse_implies_density(self):
        rng = random.Random(2)
        for _ in range(300):
            g = brute.random_graph(rng.randint(1, 12), rng.uniform(0.1, 0.6), rng)
            if find_bad_subgraph(g) is None:
                assert density_ok(g)

    def test_density_does_not_imply_sparse(self):
        # K4 with a pendant path: whole-graph density holds, K4 inside is bad
        edges = list(brute.k4().edges) + [(3, 4), (4, 5), (5, 6)]
        g = Graph(7, edges)
        assert density_ok(g)
        assert find_bad_subgraph(g) is not None

    def test_sparse_closed_under_subgraphs(self):
        rng = random.Random(13)
        checked = 0
        while checked < 60:
            g = brute.random_graph(rng.randint(2, 10), rng.uniform(0.2, 0.5), rng)
            if find_bad_subgraph(g) is not None:
                continue
            checked += 1
            keep = [v for v in range(g.n) if rng.random() < 0.7]
            relabel = {v: i for i, v in enumerate(sorted(keep))}
            h = Graph(len(keep), [
                (relabel[u], relabel[v]) for u, v in brute.induced_edges(g, keep)
            ])
            assert find_bad_subgraph(h) is None

    def test_sparse_has_two_low_degree_vertices(self):
        rng = random.Random(17)
        for _ in range(300):
            g = brute.random_graph(rng.randint(2, 12), rng.uniform(0.1, 0.7), rng)
            if find_bad_subgraph(g) is None:
                low = [v for v in range(g.n) if g.degree(v) <= 2]
                assert len(low) >= 2

    def test_sparse_excludes_k4_k33_gem(self, atlas_graphs):
        for g in atlas_graphs:
            if find_bad_subgraph(g) is None:
                assert not brute.contains_subgraph(g, brute.k4())
                assert not brute.contains_subgraph(g, brute.k33())
                assert not brute.contains_subgraph(g, brute.gem())


def _fairly_cubic_corpus():
    """2-connected fairly cubic graphs with n <= 14: cubic graphs with one
    edge subdivided twice, plus the diamond."""
    out = [brute.diamond()]
    for base in (brute.k4(), brute.k33(), brute.prism(), brute.petersen()):
        u, v = min(base.edges)
        n = base.n
        edges = [e for e in base.sorted_edges() if e != (u, v)]
        edges += [(u, n), (n, n + 1), (n + 1, v)]
        out.append(Graph(n + 2, edges))
    return out


class TestSparseDeciders:
    def test_2conn_fairly_cubic_sparse(self):
        from decymatch import degree_profile

        for g in _fairly_cubic_corpus():
            assert degree_profile(g).is_fairly_cubic
            assert brute.two_connected_brute(g)
            assert find_bad_subgraph(g) is None

    def test_sparse_chordal_examples(self):
        assert is_sparse_chordal(brute.diamond())
        assert not is_sparse_chordal(brute.chain(2))

    def test_sparse_chordal_requires_chordal(self):
        with pytest.raises(PreconditionError):
            is_sparse_chordal(brute.square())

    def test_sparse_chordal_vs_bad_subgraph(self, atlas_connected):
        for g in atlas_connected:
            if is_chordal(g).ok:
                assert is_sparse_chordal(g) == (find_bad_subgraph(g) is None)

    def test_sparse_chordal_all_chordal_to_8(self, chordal_graphs_8):
        for g in chordal_graphs_8:
            assert is_sparse_chordal(g) == (find_bad_subgraph(g) is None)

    def test_sparse_chordal_random_block_trees(self):
        from decymatch.bench import generate_chordal_instance

        for seed in range(25):
            g = generate_chordal_instance(14, seed=seed).graph
            if g.n <= 16:
                assert is_sparse_chordal(g) == (find_bad_subgraph(g) is None)

    def test_sparse_2conn_dh_examples(self):
        assert is_sparse_2conn_dh(brute.k24())
        assert not is_sparse_2conn_dh(brute.domino())

    def test_sparse_2conn_dh_requires_biconnected(self):
        with pytest.raises(PreconditionError):
            is_sparse_2conn_dh(brute.path(4))

    def test_sparse_2conn_dh_vs_bad_subgraph(self, atlas_connected):
        for g in atlas_connected:
            if g.n >= 3 and is_biconnected(g) and is_distance_hereditary(g).ok:
                assert is_sparse_2conn_dh(g) == (find_bad_subgraph(g) is None)

    def test_sparse_2conn_dh_all_to_8(self, dh_graphs_8):
        # beyond 6 vertices no 2-connected DH graph is sparse, and the
        # pattern-list decider must agree with the exhaustive search
        for g in dh_graphs_8:
            if g.n >= 3 and is_biconnected(g):
                assert is_sparse_2conn_dh(g) == (find_bad_subgraph(g) is None)
                if g.n > 6:
                    assert find_bad_subgraph(g) is not None


class TestSparseDHCycles:
    def test_cycle_induced_subgraphs_in_sparse_dh(self, dh_graphs_8):
        # in a sparse distance-hereditary graph, the subgraph induced by any
        # cycle is a triangle, square, diamond, or K33 minus an edge
        allowed = [brute.triangle(), brute.square(), brute.diamond(), brute.k33minus()]
        for g in dh_graphs_8:
            if g.n > 8 or find_bad_subgraph(g) is not None:
                continue
            for cyc in brute.all_cycles(g):
                sub_edges = brute.induced_edges(g, cyc)
                relabel = {v: i for i, v in enumerate(sorted(cyc))}
                got = Graph(len(cyc), [
                    (relabel[u], relabel[v]) for u, v in sub_edges
                ])
                assert any(brute.isomorphic(got, pat) for pat in allowed)


class TestReports:
    def test_classify_k24(self):
        g = brute.k24()
        rep = class_report(g).to_json()
        assert rep["split"]["value"] is False
        assert rep["distance_hereditary"]["value"] is True
        assert rep["cograph"]["value"] is True
        assert rep["chordal"]["value"] is False
        srep = sparse_report(g).to_json()
        assert srep["density_ok"] is True
        assert srep["bad_subgraph"] is None
        assert srep["sparse"] is True

    def test_classify_empty_graph(self):
        g = Graph(5, [])
        rep = class_report(g).to_json()
        assert all(
            rep[k]["value"] for k in ("chordal", "split", "distance_hereditary", "cograph")
        )
        assert sparse_report(g).sparse is True

    def test_sparse_report_large_chordal(self):
        from decymatch.bench import generate_chordal_instance

        g = generate_chordal_instance(60, seed=4).graph
        rep = sparse_report(g)
        assert rep.method == "class-characterization"
        assert rep.sparse is True

    def test_sparse_report_large_chain(self):
        # a chain inside a big chordal graph gets localized as a bad subgraph
        g = brute.chain(8)  # 23 vertices, beyond the exhaustive cap
        rep = sparse_report(g)
        assert rep.method == "class-characterization"
        assert rep.sparse is False
        assert rep.bad_subgraph is not None
        k = len(rep.bad_subgraph)
        assert len(brute.induced_edges(g, rep.bad_subgraph)) > (3 * k) // 2 - 1
