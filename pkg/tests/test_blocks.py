import random
from itertools import permutations

import pytest

from decymatch import Graph, GraphError, block_decomposition, classify_block
from decymatch.blocks import classify_edge_set

import brute


def two_triangles():
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


class TestDecomposition:
    def test_two_triangles_share_vertex(self):
        bd = block_decomposition(two_triangles())
        assert len(bd.blocks) == 2
        assert bd.cut_vertices == {2}
        assert not bd.bridges
        assert set(bd.block_kinds) == {"triangle"}
        assert set(bd.leaf_blocks) == {0, 1}

    def test_chain_k1_blocks(self):
        # diamond, one triangle, diamond: 3 blocks, 2 cut vertices
        bd = block_decomposition(brute.chain(1))
        assert sorted(bd.block_kinds) == ["diamond", "diamond", "triangle"]
        assert len(bd.cut_vertices) == 2
        assert not bd.bridges

    def test_blocks_partition_edges(self, atlas_graphs):
        for g in atlas_graphs:
            bd = block_decomposition(g)
            seen = [e for blk in bd.blocks for e in blk]
            assert len(seen) == g.m
            assert set(seen) == g.edges

    def test_blocks_partition_edges_random(self):
        rng = random.Random(11)
        for _ in range(1000):
            n = rng.randint(1, 64)
            g = brute.random_graph(n, rng.uniform(0.02, 0.3), rng)
            bd = block_decomposition(g)
            seen = [e for blk in bd.blocks for e in blk]
            assert len(seen) == g.m and set(seen) == g.edges
            for i, blk in enumerate(bd.blocks):
                verts = set()
                for u, v in blk:
                    verts.add(u)
                    verts.add(v)
            # two blocks share at most one vertex, which must be a cut vertex
            for i in range(len(bd.blocks)):
                for j in range(i + 1, len(bd.blocks)):
                    shared = set(bd.block_vertices[i]) & set(bd.block_vertices[j])
                    assert len(shared) <= 1
                    assert all(v in bd.cut_vertices for v in shared)

    def test_against_brute_force(self):
        rng = random.Random(3)
        for _ in range(40):
            g = brute.random_connected_graph(8, rng.uniform(0.2, 0.5), rng)
            bd = block_decomposition(g)
            got = sorted(map(sorted, bd.blocks))
            want = sorted(map(sorted, brute.blocks_brute(g)))
            assert got == want
            assert sorted(bd.cut_vertices) == brute.cut_vertices_brute(g)

    def test_bridges_are_single_edge_blocks(self, atlas_graphs):
        for g in atlas_graphs:
            bd = block_decomposition(g)
            singles = {blk[0] for blk in bd.blocks if len(blk) == 1}
            assert singles == bd.bridges

    def test_leaf_blocks_have_one_cut_vertex(self):
        bd = block_decomposition(brute.chain(2))
        for i in bd.leaf_blocks:
            cuts = [v for v in bd.block_vertices[i] if v in bd.cut_vertices]
            assert len(cuts) == 1
        leaf_kinds = {bd.block_kinds[i] for i in bd.leaf_blocks}
        assert leaf_kinds == {"diamond"}


class TestClassify:
    def test_single_edge_is_bridge(self):
        g = brute.path(2)
        assert classify_block(g, [(0, 1)]) == "bridge"

    def test_named_patterns(self):
        for builder, kind in [
            (brute.triangle, "triangle"),
            (brute.square, "square"),
            (brute.diamond, "diamond"),
            (brute.k23, "K23"),
            (brute.k24, "K24"),
            (brute.k33minus, "K33minus"),
            (brute.k4, "other"),
            (brute.house, "other"),
            (brute.gem, "other"),
            (brute.domino, "other"),
        ]:
            g = builder()
            assert classify_block(g, sorted(g.edges)) == kind

    def test_k33minus_by_exhaustive_isomorphism(self):
        # cross-check the tag with a full 6! isomorphism scan
        pattern = brute.k33minus()
        rng = random.Random(5)
        for _ in range(10):
            perm = list(range(6))
            rng.shuffle(perm)
            g = Graph(6, [(perm[u], perm[v]) for u, v in pattern.edges])
            assert brute.isomorphic(g, pattern)
            assert classify_block(g, sorted(g.edges)) == "K33minus"

    def test_relabeling_invariance(self):
        rng = random.Random(9)
        for builder in (brute.triangle, brute.square, brute.diamond, brute.k23,
                        brute.k24, brute.k33minus, brute.house, brute.domino):
            base = builder()
            kind0, _ = classify_edge_set(sorted(base.edges))
            for _ in range(12):
                perm = list(range(base.n))
                rng.shuffle(perm)
                g = Graph(base.n, [(perm[u], perm[v]) for u, v in base.edges])
                kind, _ = classify_edge_set(sorted(g.edges))
                assert kind == kind0

    def test_all_six_vertex_blocks_vs_brute(self):
        # every 2-connected graph on <= 6 vertices classifies consistently
        # with permutation isomorphism against the fixed patterns
        rng = random.Random(1)
        patterns = {
            "triangle": brute.triangle(),
            "square": brute.square(),
            "diamond": brute.diamond(),
            "K23": brute.k23(),
            "K24": brute.k24(),
            "K33minus": brute.k33minus(),
        }
        for _ in range(120):
            n = rng.randint(3, 6)
            g = brute.random_connected_graph(n, rng.uniform(0.4, 0.9), rng)
            if not brute.two_connected_brute(g):
                continue
            kind, _ = classify_edge_set(sorted(g.edges))
            want = "other"
            for name, pat in patterns.items():
                if brute.isomorphic(g, pat):
                    want = name
                    break
            assert kind == want

    def test_pattern_mapping_is_an_isomorphism(self):
        for builder in (brute.square, brute.k23, brute.k24, brute.k33minus):
            g = builder()
            kind, mapping = classify_edge_set(sorted(g.edges))
            from decymatch.blocks import PATTERN_EDGES

            mapped = {
                tuple(sorted((mapping[a], mapping[b]))) for a, b in PATTERN_EDGES[kind]
            }
            assert mapped == g.edges

    def test_foreign_edge_rejected(self):
        with pytest.raises(GraphError):
            classify_block(brute.triangle(), [(0, 3)])

    def test_large_block_is_other(self):
        g = brute.cycle(7)
        assert classify_block(g, sorted(g.edges)) == "other"
