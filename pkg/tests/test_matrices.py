import random

import pytest

from quiverkit import (
    adjacency_matrix,
    build_graph,
    canonical_key,
    count_paths_bruteforce,
    count_paths_matrix,
    graph_from_matrix,
    has_loop,
    is_nilpotent,
    mat_mul,
    mat_pow,
    matrix_from_rows,
)
from quiverkit.errors import DimensionMismatch, InfiniteBundlePresent, QuiverError

import fixtures as fx


class TestAdjacency:
    def test_two_loops_and_exit(self):
        g = build_graph(["1", "2"], [("a", "1", "1"), ("b", "1", "1"), ("c", "1", "2")])
        assert adjacency_matrix(g).rows == ((2, 1), (0, 0))

    def test_three_then_two(self):
        g = graph_from_matrix([[0, 3, 0], [0, 0, 2], [0, 0, 0]])
        assert adjacency_matrix(g).rows == ((0, 3, 0), (0, 0, 2), (0, 0, 0))

    def test_edgeless(self):
        g = build_graph(["a", "b", "c"])
        assert adjacency_matrix(g).rows == ((0, 0, 0),) * 3

    def test_bundles_rejected(self):
        f, _ = fx.bundle_and_edge_pair()
        with pytest.raises(InfiniteBundlePresent):
            adjacency_matrix(f)

    def test_negative_entries_rejected(self):
        with pytest.raises(QuiverError):
            matrix_from_rows([[0, -1], [0, 0]])


class TestProducts:
    def test_parallel_edges_square_to_zero(self):
        m = matrix_from_rows([[0, 3], [0, 0]])
        assert mat_pow(m, 2).is_zero()

    def test_unitriangular_power(self):
        m = matrix_from_rows([[1, 1, 1], [0, 1, 1], [0, 0, 0]])
        for k in (1, 2, 5, 9):
            assert mat_pow(m, k).rows == ((1, k, k), (0, 1, 1), (0, 0, 0))

    def test_identity_power(self):
        ident = matrix_from_rows([[1, 0], [0, 1]])
        assert mat_pow(ident, 5) == ident

    def test_bidiagonal_full_power_is_corner_product(self):
        m = matrix_from_rows([[0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4], [0, 0, 0, 0]])
        cube = mat_pow(m, 3)
        assert cube.rows[0][3] == 24 and cube.total() == 24

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_mul(matrix_from_rows([[1]]), matrix_from_rows([[1, 0], [0, 1]]))


class TestCountPathsMatrix:
    def test_two_loops_and_exit_closed_form(self):
        g = build_graph(["1", "2"], [("a", "1", "1"), ("b", "1", "1"), ("c", "1", "2")])
        for k in range(1, 9):
            assert count_paths_matrix(g, k) == 3 * 2 ** (k - 1)

    def test_fan_two_paths(self):
        assert count_paths_matrix(fx.eleven_edge_fan(), 2) == 15

    def test_two_loops_one_loop_closed_form(self):
        g = build_graph(["1", "2"], [("a", "1", "1"), ("b", "1", "1"), ("c", "2", "2")])
        for k in range(1, 9):
            assert count_paths_matrix(g, k) == 2**k + 1


class TestNilpotency:
    def test_fan_index_five(self):
        assert is_nilpotent(adjacency_matrix(fx.eleven_edge_fan())) == 5

    def test_positive_diagonal(self):
        assert is_nilpotent(matrix_from_rows([[1]])) is None

    def test_strict_upper(self):
        assert is_nilpotent(matrix_from_rows([[0, 1], [0, 0]])) == 2


class TestGraphFromMatrix:
    def test_parallel_edge_expansion(self):
        g = graph_from_matrix([[2, 1], [0, 0]])
        assert g.n_edges == 3
        assert canonical_key(g) == canonical_key(
            build_graph(["1", "2"], [("a", "1", "1"), ("b", "1", "1"), ("c", "1", "2")])
        )

    def test_zero_matrix(self):
        g = graph_from_matrix([[0]])
        assert g.vertices == ("1",) and g.edges == ()

    def test_round_trip(self):
        rng = random.Random(23)
        for _ in range(60):
            dim = rng.randint(1, 5)
            rows = [[rng.randint(0, 3) for _ in range(dim)] for _ in range(dim)]
            m = matrix_from_rows(rows)
            assert adjacency_matrix(graph_from_matrix(m)) == m


class TestCrossEngineProperties:
    def test_power_additivity(self):
        rng = random.Random(41)
        for _ in range(200):
            g = fx.random_graph(rng, max_edges=8, max_vertices=5)
            a = adjacency_matrix(g)
            powers = {1: a}
            for k in range(2, 13):
                powers[k] = mat_mul(powers[k - 1], a)
            for k1 in range(1, 7):
                for k2 in range(1, 7):
                    assert powers[k1 + k2] == mat_mul(powers[k1], powers[k2])

    def test_matrix_equals_dfs(self):
        rng = random.Random(43)
        for _ in range(120):
            g = fx.random_graph(rng, max_edges=6, max_vertices=5)
            kmax = 8 if not has_loop(g) else 6
            for k in range(1, kmax + 1):
                assert count_paths_matrix(g, k) == count_paths_bruteforce(g, k)

    def test_nilpotent_iff_loop_free(self):
        rng = random.Random(47)
        for _ in range(150):
            g = fx.random_graph(rng, max_edges=8, max_vertices=5)
            index = is_nilpotent(adjacency_matrix(g))
            assert (index is not None) == (not has_loop(g))
