import random
from math import comb, factorial

import pytest

from sperner import (
    build_graph,
    enumerate_partitions,
    graph_from_edges,
    load_fixture,
    max_clique,
    solve_sp,
    tiny_oracle,
    verify_sperner,
)


def shape_count(n, k, min_size):
    """Independent candidate count: sum over class-size shapes of the multinomial."""

    def shapes(total, parts, minimum):
        if parts == 1:
            if total >= minimum:
                yield (total,)
            return
        for first in range(minimum, total - minimum * (parts - 1) + 1):
            for rest in shapes(total - first, parts - 1, first):
                yield (first,) + rest

    total = 0
    for shape in shapes(n, k, min_size):
        ways = factorial(n)
        for s in shape:
            ways //= factorial(s)
        mult = {}
        for s in shape:
            mult[s] = mult.get(s, 0) + 1
        for m in mult.values():
            ways //= factorial(m)
        total += ways
    return total


def random_graph(rng, num, p):
    edges = [
        (u, v) for u in range(num) for v in range(u + 1, num) if rng.random() < p
    ]
    return graph_from_edges(num, edges)


class TestEnumeration:
    def test_stirling_4_2(self):
        candidates = enumerate_partitions(4, 2, min_class_size=1)
        assert len(candidates) == 7  # second-kind count for (4, 2)

    def test_shape_count_9_4(self):
        candidates = enumerate_partitions(9, 4, min_class_size=2)
        assert len(candidates) == 1260 == shape_count(9, 4, 2)

    def test_shape_count_7_3(self):
        candidates = enumerate_partitions(7, 3, min_class_size=2)
        assert len(candidates) == 105 == shape_count(7, 3, 2)

    def test_matches_shape_oracle(self):
        for n, k, m in [(6, 3, 1), (6, 3, 2), (8, 4, 2), (8, 3, 2), (10, 4, 2), (10, 4, 1)]:
            assert len(enumerate_partitions(n, k, m)) == shape_count(n, k, m), (n, k, m)

    def test_all_distinct_and_sorted(self):
        candidates = enumerate_partitions(7, 3, 2)
        keys = [p._key() for p in candidates.partitions]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)

    def test_min_size_respected(self):
        candidates = enumerate_partitions(8, 3, 2)
        assert all(min(p.sizes) >= 2 for p in candidates.partitions)

    def test_infeasible(self):
        with pytest.raises(ValueError, match="no candidates"):
            enumerate_partitions(5, 3, 2)


class TestGraph:
    def test_adjacency_symmetric_no_loops(self):
        graph = build_graph(enumerate_partitions(7, 3, 2))
        for v in range(graph.num_vertices):
            assert not graph.adj[v] >> v & 1
            nb = graph.adj[v]
            while nb:
                lsb = nb & -nb
                u = lsb.bit_length() - 1
                nb ^= lsb
                assert graph.adj[u] >> v & 1

    def test_containment_blocks_edge(self):
        candidates = enumerate_partitions(6, 2, 2)
        graph = build_graph(candidates)
        parts = candidates.partitions
        for u in range(len(parts)):
            for v in range(len(parts)):
                if u == v:
                    continue
                expected = all(
                    (c & ~d != 0 and d & ~c != 0)
                    for c in parts[u].classes
                    for d in parts[v].classes
                )
                assert bool(graph.adj[u] >> v & 1) == expected

    def test_bundled_7_3_system_is_a_clique(self):
        candidates = enumerate_partitions(7, 3, 2)
        graph = build_graph(candidates)
        index = {p: i for i, p in enumerate(candidates.partitions)}
        vertices = [index[p] for p in load_fixture("fig-7-3").partitions]
        for u in vertices:
            for v in vertices:
                if u != v:
                    assert graph.adj[u] >> v & 1


class TestTinyOracle:
    def test_empty_graph(self):
        assert tiny_oracle(graph_from_edges(0, [])) == 0
        assert tiny_oracle(graph_from_edges(5, [])) == 1

    def test_complete_graph(self):
        edges = [(u, v) for u in range(6) for v in range(u + 1, 6)]
        assert tiny_oracle(graph_from_edges(6, edges)) == 6

    def test_cap(self):
        with pytest.raises(ValueError, match="2000"):
            tiny_oracle(graph_from_edges(2001, []))


class TestMaxClique:
    def test_small_sp_values(self):
        assert max_clique(build_graph(enumerate_partitions(5, 2, 2))).size == 4
        assert max_clique(build_graph(enumerate_partitions(6, 3, 2))).size == 5
        assert max_clique(build_graph(enumerate_partitions(7, 3, 2))).size == 5

    def test_sp_7_3_agrees_with_oracle(self):
        graph = build_graph(enumerate_partitions(7, 3, 2))
        outcome = max_clique(graph)
        assert outcome.proven_optimal
        assert outcome.size == tiny_oracle(graph) == 5
        assert outcome.size <= outcome.root_bound

    def test_agrees_with_oracle_on_random_graphs(self):
        rng = random.Random(20240815)
        for num, p in [(15, 0.3), (15, 0.7), (25, 0.5), (35, 0.4), (40, 0.8), (48, 0.6)]:
            graph = random_graph(rng, num, p)
            outcome = max_clique(graph)
            assert outcome.proven_optimal
            assert outcome.size == tiny_oracle(graph), (num, p)
            assert outcome.size <= outcome.root_bound
            # witness really is a clique
            for u in outcome.vertices:
                for v in outcome.vertices:
                    if u != v:
                        assert graph.adj[u] >> v & 1

    def test_deterministic_witness(self):
        graph = build_graph(enumerate_partitions(7, 3, 2))
        a = max_clique(graph)
        b = max_clique(graph)
        assert a.vertices == b.vertices and a.nodes_explored == b.nodes_explored

    def test_target_stops_early(self):
        graph = build_graph(enumerate_partitions(7, 3, 2))
        outcome = max_clique(graph, target=4)
        assert outcome.size >= 4
        assert not outcome.proven_optimal

    def test_time_budget_returns_best_so_far(self):
        graph = build_graph(enumerate_partitions(8, 3, 2))
        outcome = max_clique(graph, time_budget=0.0)
        assert not outcome.proven_optimal
        assert outcome.size >= 1  # greedy seed still reports a clique

    def test_symmetry_reduction_matches_default(self):
        for n, k in [(6, 3), (7, 3), (5, 2), (8, 4)]:
            graph = build_graph(enumerate_partitions(n, k, 2))
            assert max_clique(graph).size == max_clique(graph, symmetry_reduction=True).size

    def test_symmetry_reduction_needs_candidates(self):
        with pytest.raises(ValueError, match="candidate set"):
            max_clique(graph_from_edges(3, [(0, 1)]), symmetry_reduction=True)


class TestSolveSp:
    def test_witness_roundtrip(self):
        outcome = solve_sp(7, 3)
        assert outcome.size == 5
        assert outcome.best is not None
        assert verify_sperner(outcome.best).valid
        assert len(outcome.best) == 5

    def test_min_class_size_one_same_maximum(self):
        # singleton-class candidates never help once two partitions exist
        for n, k in [(5, 2), (6, 3), (6, 2), (7, 3)]:
            loose = solve_sp(n, k, min_class_size=1)
            tight = solve_sp(n, k, min_class_size=2)
            assert loose.size == tight.size, (n, k)
