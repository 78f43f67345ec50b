"""Graph automorphism search, refinement, blocks, normalizer."""

import random

import pytest

from cayleygrr import autgraph, cayley, grouptab, perm


def pc(text, degree):
    return perm.parse_cycles(text, degree)


def random_graph(seed, n):
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < 0.5]
    return cayley.Graph.from_edges(n, edges)


class TestColoring:
    def test_contiguity_enforced(self):
        with pytest.raises(ValueError):
            autgraph.Coloring([0, 2, 2])  # color 1 missing

    def test_cells_listed_by_color(self):
        c = autgraph.Coloring([1, 0, 1, 0])
        assert c.cells == ((1, 3), (0, 2))

    def test_equality(self):
        assert autgraph.Coloring([0, 1]) == autgraph.Coloring([0, 1])
        assert autgraph.Coloring([0, 1]) != autgraph.Coloring([0, 0])


class TestRefineEquitable:
    def test_path_splits_by_degree(self):
        g = cayley.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        col = autgraph.refine_equitable(g)
        assert col.color_of == [0, 1, 1, 0]
        assert col.cells == ((0, 3), (1, 2))

    def test_star_separates_center(self):
        g = cayley.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
        col = autgraph.refine_equitable(g)
        assert col.color_of == [1, 0, 0, 0]

    def test_regular_graph_stays_uniform(self):
        g = cayley.circulant_graph(7, [1, 2])
        assert autgraph.refine_equitable(g).color_of == [0] * 7

    def test_initial_coloring_respected(self):
        g = cayley.circulant_graph(7, [1, 2])
        init = autgraph.Coloring([0, 0, 0, 1, 1, 1, 1])
        col = autgraph.refine_equitable(g, init)
        assert col.color_of == [1, 0, 1, 3, 2, 2, 3]

    def test_idempotent(self):
        for seed in range(8):
            g = random_graph(seed, 9)
            once = autgraph.refine_equitable(g)
            twice = autgraph.refine_equitable(g, once)
            assert once == twice

    def test_result_is_equitable(self):
        for seed in range(8):
            g = random_graph(seed + 50, 9)
            col = autgraph.refine_equitable(g)
            adj = g.adjacency_sets()
            for cell in col.cells:
                for other in col.cells:
                    counts = {sum(1 for w in adj[v] if w in set(other))
                              for v in cell}
                    assert len(counts) == 1


class TestAutomorphismGroup:
    def test_cycle(self):
        aut = autgraph.automorphism_group(cayley.circulant_graph(6, [1]))
        assert aut.order == 12  # dihedral

    def test_circulant_seven(self):
        aut = autgraph.automorphism_group(cayley.circulant_graph(7, [1, 2]))
        assert aut.order == 14

    def test_complete_graph(self):
        g = cayley.Graph.from_edges(5, [(i, j) for i in range(5)
                                        for j in range(i + 1, 5)])
        assert autgraph.automorphism_group(g).order == 120

    def test_petersen(self):
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                 (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                 (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
        aut = autgraph.automorphism_group(cayley.Graph.from_edges(10, edges))
        assert aut.order == 120

    def test_empty_and_tiny(self):
        assert autgraph.automorphism_group(
            cayley.Graph.from_edges(1, [])).order == 1
        assert autgraph.automorphism_group(
            cayley.Graph.from_edges(2, [])).order == 2

    def test_generators_are_automorphisms(self):
        for seed in range(6):
            g = random_graph(seed + 9, 8)
            aut = autgraph.automorphism_group(g)
            adj = g.adjacency_sets()
            for gen in aut.generators:
                for v in range(8):
                    assert {gen[w] for w in adj[v]} == set(adj[gen[v]])

    def test_coloring_restricts(self):
        g = cayley.circulant_graph(6, [1])
        fixed = autgraph.Coloring([1, 0, 0, 0, 0, 0])
        aut = autgraph.automorphism_group(g, coloring=fixed)
        assert aut.order == 2  # only the reflection fixing vertex 0

    def test_node_budget(self):
        g = cayley.circulant_graph(9, [1, 2])
        with pytest.raises(autgraph.NodeBudgetExceeded):
            autgraph.automorphism_group(g, node_budget=1)

    def test_vertex_limit(self):
        g = cayley.Graph.from_edges(12, [(0, 1)])
        with pytest.raises(cayley.VertexLimitExceeded):
            autgraph.automorphism_group(g, vertex_limit=10)

    def test_contains(self):
        aut = autgraph.automorphism_group(cayley.circulant_graph(5, [1]))
        rot = tuple((v + 1) % 5 for v in range(5))
        assert aut.contains(rot)
        assert not aut.contains(pc("(1,2)", 5))


class TestBruteForce:
    def test_matches_engine_on_samples(self):
        for seed in range(25):
            g = random_graph(seed, 7)
            fast = autgraph.automorphism_group(g)
            brute = autgraph.brute_force_automorphisms(g)
            assert fast.order == brute.order
            assert all(brute.contains(h) for h in fast.generators)
            assert all(fast.contains(h) for h in brute.generators)

    def test_rejects_large(self):
        with pytest.raises(ValueError):
            autgraph.brute_force_automorphisms(
                cayley.Graph.from_edges(11, []))

    def test_empty_graph(self):
        assert autgraph.brute_force_automorphisms(
            cayley.Graph.from_edges(0, [])).order == 1


class TestVertexStabilizer:
    def test_cycle_stabilizer(self):
        aut = autgraph.automorphism_group(cayley.circulant_graph(6, [1]))
        assert autgraph.vertex_stabilizer_order(aut, 0) == 2

    def test_transitive_orbit(self):
        aut = autgraph.automorphism_group(cayley.circulant_graph(7, [1, 2]))
        assert aut.orbit_of(0) == list(range(7))


class TestBlocks:
    def test_invariant_partition(self):
        g = cayley.circulant_graph(6, [1])
        aut = autgraph.automorphism_group(g)
        # antipodal pairs form an invariant partition of the hexagon
        block_of = [v % 3 for v in range(6)]
        assert autgraph.is_partition_invariant(aut, block_of)

    def test_non_invariant_partition(self):
        g = cayley.circulant_graph(6, [1])
        aut = autgraph.automorphism_group(g)
        assert not autgraph.is_partition_invariant(aut, [0, 0, 1, 1, 1, 1])

    def test_block_action_shape(self):
        g = cayley.circulant_graph(6, [1])
        aut = autgraph.automorphism_group(g)
        block_of = [v % 3 for v in range(6)]
        action = autgraph.block_action(aut, block_of)
        assert len(action) == len(aut.generators)
        assert all(sorted(a) == [0, 1, 2] for a in action)

    def test_block_action_rejects_bad_partition(self):
        g = cayley.circulant_graph(6, [1])
        aut = autgraph.automorphism_group(g)
        with pytest.raises(ValueError):
            autgraph.block_action(aut, [0, 0, 1, 1, 1, 1])

    def test_accepts_plain_generator_lists(self):
        rot = tuple((v + 1) % 6 for v in range(6))
        assert autgraph.is_partition_invariant([rot], [v % 3 for v in range(6)])
        assert autgraph.block_action([rot], [v % 3 for v in range(6)]) == [
            (1, 2, 0)]


class TestNormalizer:
    def test_cyclic_circulant(self):
        t = grouptab.enumerate_group([pc("(1,2,3,4,5,6,7)", 7)])
        x = t.gen_perms[0]
        members = [t.idx(perm.power(x, e)) for e in (1, 2, 5, 6)]
        g = cayley.cayley_graph(t, members)
        aut = autgraph.automorphism_group(g)
        assert aut.order == 14
        assert autgraph.normalizer_order_of_regular_subgroup(aut, t) == 14

    def test_a5_standard_set(self, a5_table):
        conn = cayley.standard_connection_set(
            a5_table, pc("(1,2,3,4,5)", 5), pc("(1,2)(3,4)", 5), 5)
        g = cayley.cayley_graph(a5_table, conn)
        aut = autgraph.automorphism_group(g)
        assert aut.order == 120
        assert autgraph.normalizer_order_of_regular_subgroup(
            aut, a5_table) == 120

    def test_degree_mismatch_rejected(self, a5_table):
        aut = autgraph.automorphism_group(cayley.circulant_graph(7, [1, 2]))
        with pytest.raises(ValueError):
            autgraph.normalizer_order_of_regular_subgroup(aut, a5_table)
