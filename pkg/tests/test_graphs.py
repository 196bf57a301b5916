import math

import numpy as np
import pytest

from oddhom import (
    INFINITE,
    Graph,
    complete,
    cycle,
    distance_partition,
    fixture,
    fold_cycle,
    from_graph6,
    generalized_mycielski,
    girth,
    has_walk_of_length,
    identify_vertices,
    is_connected,
    list_threads,
    max_thread_length,
    odd_girth,
    odd_k4,
    path,
    shortest_odd_cycle,
    to_graph6,
)
from oddhom.hom import find_homomorphism

from conftest import random_graph


class TestGraphType:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            Graph([0b010, 0, 0])

    def test_rejects_bits_above_order(self):
        with pytest.raises(ValueError):
            Graph([0b1000, 0, 0])

    def test_order_cap(self):
        with pytest.raises(ValueError):
            Graph.from_edges(65, [])

    def test_immutable(self):
        g = cycle(5)
        with pytest.raises(AttributeError):
            g.order = 6

    def test_equality_is_labelled(self):
        assert cycle(5) == cycle(5)
        relabelled = Graph.from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)])
        assert relabelled != cycle(5)


class TestOddGirth:
    def test_c5(self):
        assert odd_girth(cycle(5)) == 5

    def test_grotzsch(self):
        assert odd_girth(generalized_mycielski(2)) == 5

    def test_bipartite_is_infinite(self):
        k33 = Graph.from_edges(6, [(i, j + 3) for i in range(3) for j in range(3)])
        assert odd_girth(k33) == INFINITE

    def test_odd_k4(self):
        assert odd_girth(odd_k4(1, 2, 2)) == 5

    def test_always_odd_or_infinite(self, rng):
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            og = odd_girth(g)
            assert og == INFINITE or og % 2 == 1

    def test_shortest_odd_cycle_is_one(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 9), 0.4)
            og = odd_girth(g)
            c = shortest_odd_cycle(g)
            if og == INFINITE:
                assert c is None
            else:
                assert len(c) == og and len(set(c)) == og
                for a, b in zip(c, c[1:] + c[:1]):
                    assert g.has_edge(a, b)


class TestGirth:
    def test_c7(self):
        assert girth(cycle(7)) == 7

    def test_odd_k4_with_short_even_face(self):
        # The two length-1 threads and their partners bound a 4-cycle.
        assert girth(odd_k4(1, 1, 5)) == 4

    def test_forest(self):
        assert girth(path(5)) == INFINITE

    def test_girth_le_odd_girth(self, rng):
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 9), rng.random())
            assert girth(g) <= odd_girth(g)

    def test_against_brute_force_cycles(self, rng):
        def brute_girth(g):
            best = math.inf
            n = g.order
            def extend(start, cur, used, length):
                nonlocal best
                for w in g.neighbors(cur):
                    if w == start and length >= 3:
                        best = min(best, length)
                    elif w > start and not used >> w & 1:
                        extend(start, w, used | 1 << w, length + 1)
            for s in range(n):
                extend(s, s, 1 << s, 1)
            return best

        for _ in range(80):
            g = random_graph(rng, rng.randint(3, 8), rng.random())
            assert girth(g) == brute_girth(g)


class TestDistancePartition:
    def test_c7_symmetry(self):
        for v in range(7):
            dp = distance_partition(cycle(7), v)
            assert (len(dp.n1), len(dp.n2), len(dp.n3plus)) == (2, 2, 2)

    def test_star_center(self):
        star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
        dp = distance_partition(star, 0)
        assert (len(dp.n1), len(dp.n2), len(dp.n3plus)) == (4, 0, 0)

    def test_fig2a_u0(self):
        dp = distance_partition(fixture("fig2a"), 0)
        assert (len(dp.n1), len(dp.n2), len(dp.n3plus)) == (3, 5, 6)

    def test_partitions_and_layer_edges(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), rng.random())
            v = rng.randrange(g.order)
            dp = distance_partition(g, v)
            parts = [{v}, set(dp.n1), set(dp.n2), set(dp.n3plus)]
            assert set().union(*parts) == set(range(g.order))
            assert sum(len(p) for p in parts) == g.order
            for u in dp.n2 | dp.n3plus:
                assert not g.has_edge(v, u)
            for u in dp.n1:
                for w in dp.n3plus:
                    assert not g.has_edge(u, w)

    def test_invalid_vertex(self):
        with pytest.raises(ValueError):
            distance_partition(cycle(5), 5)


class TestWalks:
    def test_c5_adjacent_length4(self):
        assert has_walk_of_length(cycle(5), 0, 1, 4)

    def test_c5_closed_length3(self):
        assert not has_walk_of_length(cycle(5), 0, 0, 3)

    def test_length_zero(self):
        assert has_walk_of_length(cycle(5), 2, 2, 0)
        assert not has_walk_of_length(cycle(5), 2, 3, 0)

    def test_matches_adjacency_powers(self, rng):
        for _ in range(40):
            n = rng.randint(2, 8)
            g = random_graph(rng, n, rng.random())
            a = np.zeros((n, n), dtype=np.int64)
            for u, v in g.edges():
                a[u, v] = a[v, u] = 1
            power = np.eye(n, dtype=np.int64)
            for length in range(9):
                for u in range(n):
                    for v in range(n):
                        assert has_walk_of_length(g, u, v, length) == (power[u, v] > 0)
                power = power @ a


class TestThreads:
    def test_odd_k4_223(self):
        assert max_thread_length(odd_k4(2, 2, 3)) == 3

    def test_cycle_is_one_closed_thread(self):
        threads = list_threads(cycle(9))
        assert len(threads) == 1 and len(threads[0]) - 1 == 9
        assert max_thread_length(cycle(9)) == 9

    def test_k4(self):
        assert max_thread_length(complete(4)) == 1

    def test_tadpole_loop(self):
        # Triangle with a pendant edge: the loop is a closed thread at the
        # branch vertex, the pendant a thread of length 1.
        g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3)])
        lengths = sorted(len(p) - 1 for p in list_threads(g))
        assert lengths == [1, 3]

    def test_threads_cover_all_edges_once(self, rng):
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 9), rng.random())
            seen = set()
            for p in list_threads(g):
                for a, b in zip(p, p[1:]):
                    e = frozenset((a, b))
                    assert e not in seen
                    seen.add(e)
            assert len(seen) == g.edge_count()


class TestQuotients:
    def test_identify_c9_distance2(self):
        h = identify_vertices(cycle(9), 0, 2)
        assert h.order == 8
        assert odd_girth(h) == 7

    def test_identify_path_endpoints_merges_parallel(self):
        h = identify_vertices(path(3), 0, 2)
        assert h.order == 2 and h.edge_count() == 1

    def test_identify_c5_creates_triangle(self):
        assert odd_girth(identify_vertices(cycle(5), 0, 2)) == 3

    def test_identify_rejects_adjacent(self):
        with pytest.raises(ValueError):
            identify_vertices(cycle(5), 0, 1)

    def test_identify_is_homomorphic_image(self, rng):
        done = 0
        while done < 25:
            g = random_graph(rng, rng.randint(4, 7), 0.45)
            pairs = [(u, v) for u in range(g.order) for v in range(u + 1, g.order)
                     if not g.has_edge(u, v)]
            if not pairs:
                continue
            u, v = rng.choice(pairs)
            h = identify_vertices(g, u, v)
            assert find_homomorphism(g, h) is not None
            done += 1

    def test_fold_c9_gives_c7(self):
        h = fold_cycle(cycle(9), list(range(9)))
        assert h.order == 7
        assert odd_girth(h) == 7

    def test_fold_rejects_non_cycles(self):
        with pytest.raises(ValueError):
            fold_cycle(cycle(9), [0, 1, 2, 3, 4])
        with pytest.raises(ValueError):
            fold_cycle(cycle(9), list(range(8)))


class TestGraph6:
    def test_k3(self):
        assert to_graph6(complete(3)) == "Bw"

    def test_singleton(self):
        assert to_graph6(Graph.from_edges(1, [])) == "@"

    def test_round_trip_random(self, rng):
        for _ in range(120):
            g = random_graph(rng, rng.randint(1, 14), rng.random())
            assert from_graph6(to_graph6(g)) == g

    def test_large_order_form(self):
        g = cycle(63)
        line = to_graph6(g)
        assert line.startswith("~")
        assert from_graph6(line) == g
        assert from_graph6(to_graph6(cycle(64))) == cycle(64)

    def test_matches_independent_encoder(self, rng):
        nx = pytest.importorskip("networkx")
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 12), rng.random())
            ref = nx.Graph()
            ref.add_nodes_from(range(g.order))
            ref.add_edges_from(g.edges())
            theirs = nx.to_graph6_bytes(ref, header=False).decode().strip()
            assert to_graph6(g) == theirs

    def test_rejects_malformed(self):
        for bad in ["", "B", "Bww", "~??", chr(30) + "w"]:
            with pytest.raises(ValueError):
                from_graph6(bad)

    def test_accepts_optional_header(self):
        assert from_graph6(">>graph6<<Bw") == complete(3)


def test_connectivity():
    assert is_connected(cycle(5))
    two = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert not is_connected(two)
