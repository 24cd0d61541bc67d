import math
import random

import pytest

from quiverkit import (
    Path,
    build_graph,
    count_paths_bruteforce,
    enumerate_all_finite_paths,
    enumerate_paths,
    has_loop,
    is_connected_undirected,
    is_path,
    longest_path,
    loop_from_permutation,
    sinks,
    subpath,
)
from quiverkit.errors import (
    DanglingEndpoint,
    DuplicateId,
    HasLoop,
    IndexOutOfRange,
    InfiniteBundlePresent,
    InvalidPermutation,
    ResultCapExceeded,
    StarIdCollision,
)

import fixtures as fx


class TestBuildGraph:
    def test_single_loop(self):
        g = fx.single_loop()
        assert g.vertices == ("v",)
        assert g.edges[0].src == "v" and g.edges[0].dst == "v"

    def test_empty_graph(self):
        g = build_graph([], [])
        assert g.vertices == () and g.edges == ()

    def test_dangling_endpoint(self):
        with pytest.raises(DanglingEndpoint):
            build_graph(["v"], [("e", "v", "w")])

    def test_duplicate_ids(self):
        with pytest.raises(DuplicateId):
            build_graph(["v", "v"])
        with pytest.raises(DuplicateId):
            build_graph(["v"], [("e", "v", "v"), ("e", "v", "v")])

    def test_star_reserved(self):
        with pytest.raises(StarIdCollision):
            build_graph(["v"], [("e*", "v", "v")])

    def test_bundle_endpoints_checked(self):
        with pytest.raises(DanglingEndpoint):
            build_graph(["v"], [], [("v", "w")])


class TestIsPath:
    def test_chain(self):
        g = fx.chain(2)
        assert is_path(g, ["e0", "e1"])
        assert not is_path(g, ["e1", "e0"])

    def test_loop_repeats(self):
        g = fx.single_loop()
        assert is_path(g, ["e", "e"])
        assert is_path(g, ["e"] * 5)


class TestEnumeratePaths:
    def test_loop_graph_one_per_length(self):
        g = fx.single_loop()
        assert enumerate_paths(g, 5) == [Path.from_edges(["e"] * 5)]

    def test_chain_full_length(self):
        g = fx.chain(4)
        assert len(enumerate_paths(g, 4)) == 1

    def test_length_zero_is_vertices(self):
        g = fx.chain(2)
        assert enumerate_paths(g, 0) == [Path.vertex(v) for v in g.vertices]

    def test_crossed_loops_count(self):
        assert len(enumerate_paths(fx.looped_pair_with_crossings(), 3)) == 16

    def test_cap(self):
        with pytest.raises(ResultCapExceeded):
            enumerate_paths(fx.looped_pair_with_crossings(), 10, cap=100)

    def test_lexicographic_order(self):
        g = fx.looped_pair_with_crossings()
        paths = [p.edges for p in enumerate_paths(g, 2)]
        assert paths == sorted(paths)

    def test_bundles_rejected(self):
        f, _ = fx.bundle_and_edge_pair()
        with pytest.raises(InfiniteBundlePresent):
            enumerate_paths(f, 1)


class TestEnumerateAllFinitePaths:
    def test_two_edge_chain(self):
        paths = enumerate_all_finite_paths(fx.chain(2))
        assert len(paths) == 6  # 3 vertices + 2 edges + 1 two-path
        lengths = sorted(p.length for p in paths)
        assert lengths == [0, 0, 0, 1, 1, 2]

    def test_loop_rejected(self):
        with pytest.raises(HasLoop):
            enumerate_all_finite_paths(fx.single_loop())

    def test_empty_graph(self):
        assert enumerate_all_finite_paths(build_graph([], [])) == []


class TestHasLoop:
    def test_self_loop(self):
        assert has_loop(fx.single_loop())

    def test_two_cycle(self):
        assert has_loop(fx.two_cycle())

    def test_fan_is_loop_free(self):
        assert not has_loop(fx.eleven_edge_fan())

    def test_bundle_counts_for_reachability(self):
        g = build_graph(["v", "w"], [("e", "v", "w")], [("w", "v")])
        assert has_loop(g)


class TestCounting:
    def test_sixteen_edge_demo(self):
        assert count_paths_bruteforce(fx.sixteen_edge_demo(), 3) == 6

    def test_unitriangular(self):
        assert count_paths_bruteforce(fx.unitriangular_three(), 4) == 11

    def test_length_one_is_edge_count(self):
        rng = random.Random(5)
        for _ in range(20):
            g = fx.random_graph(rng)
            assert count_paths_bruteforce(g, 1) == g.n_edges

    def test_long_lengths_use_folding(self):
        g = fx.single_loop()
        assert count_paths_bruteforce(g, 25) == 1
        assert count_paths_bruteforce(fx.looped_pair_with_crossings(), 25) == 2**26


class TestSubpath:
    def test_middle(self):
        assert subpath(Path.from_edges("abc"), 2, 1) == Path.from_edges("bc")

    def test_offset_zero_is_single_edge(self):
        assert subpath(Path.from_edges("abc"), 1, 0) == Path.from_edges("a")

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            subpath(Path.from_edges("a"), 1, 1)
        with pytest.raises(IndexOutOfRange):
            subpath(Path.from_edges("abc"), 0, 1)


class TestLoopFromPermutation:
    def test_two_cycle_swap(self):
        g = fx.two_cycle()
        loop = loop_from_permutation(g, Path.from_edges(["e", "f"]), [2, 1])
        assert loop is not None
        assert is_path(g, loop.edges)
        assert g.path_source(loop) == g.path_target(loop)

    def test_identity_gives_none(self):
        g = fx.two_cycle()
        assert loop_from_permutation(g, Path.from_edges(["e", "f"]), [1, 2]) is None

    def test_chain_swap_not_a_path(self):
        g = fx.chain(2)
        assert loop_from_permutation(g, Path.from_edges(["e0", "e1"]), [2, 1]) is None

    def test_invalid_permutation(self):
        g = fx.two_cycle()
        with pytest.raises(InvalidPermutation):
            loop_from_permutation(g, Path.from_edges(["e", "f"]), [1, 1])

    def test_loop_free_graphs_always_none(self):
        # on loop-free graphs no nontrivial permutation of a path is a path
        rng = random.Random(99)
        for _ in range(50):
            g = fx.random_loopfree(rng)
            for k in range(2, 5):
                for p in enumerate_paths(g, k)[:10]:
                    for _ in range(6):
                        sigma = list(range(1, k + 1))
                        rng.shuffle(sigma)
                        if sigma == sorted(sigma):
                            continue
                        assert loop_from_permutation(g, p, sigma) is None


class TestSinksAndConnectivity:
    def test_chain_sink(self):
        assert sinks(fx.chain(1)) == {"v1"}

    def test_loop_has_no_sink(self):
        assert sinks(fx.single_loop()) == set()

    def test_fan_single_sink(self):
        assert sinks(fx.eleven_edge_fan()) == {"u3"}

    def test_bundle_source_not_a_sink(self):
        f, _ = fx.bundle_and_edge_pair()
        assert sinks(f) == {"w1"}

    def test_chain_connected(self):
        assert is_connected_undirected(fx.chain(2))

    def test_isolated_pair_not_connected(self):
        assert not is_connected_undirected(build_graph(["v", "w"]))

    def test_single_sink_loop_free_implies_connected(self):
        # exactly one sink forces undirected connectivity on loop-free graphs
        rng = random.Random(31)
        seen = 0
        for _ in range(300):
            g = fx.random_loopfree(rng)
            if not g.edges:
                continue
            if len(sinks(g)) == 1:
                seen += 1
                assert is_connected_undirected(g)
        assert seen > 10


class TestLongestPath:
    def test_chain(self):
        g = fx.chain(4)
        assert longest_path(g).length == 4

    def test_demo_graph(self):
        assert longest_path(fx.sixteen_edge_demo()).length == 3

    def test_single_vertex(self):
        assert longest_path(build_graph(["v"])) == Path.vertex("v")

    def test_loop_rejected(self):
        with pytest.raises(HasLoop):
            longest_path(fx.single_loop())

    def test_tie_break_is_lexicographic(self):
        g = build_graph(["a", "b"], [("z", "a", "b"), ("y", "a", "b")])
        assert longest_path(g) == Path.from_edges(["y"])


class TestPathSpaceInvariants:
    def test_enumerated_paths_are_paths(self):
        rng = random.Random(7)
        for _ in range(40):
            g = fx.random_graph(rng)
            for k in range(0, 4):
                for p in enumerate_paths(g, k):
                    assert p.base or is_path(g, p.edges)

    def test_binomial_bound_loop_free(self):
        rng = random.Random(11)
        for _ in range(60):
            g = fx.random_loopfree(rng)
            n = g.n_edges
            for k in range(1, n + 1):
                count = count_paths_bruteforce(g, k)
                assert count == len(enumerate_paths(g, k))
                assert count <= math.comb(n, k)

    def test_second_longest_at_most_two(self):
        rng = random.Random(13)
        for _ in range(80):
            g = fx.random_loopfree(rng)
            if g.n_edges >= 2:
                assert count_paths_bruteforce(g, g.n_edges - 1) <= 2

    def test_enumeration_finite_iff_loop_free(self):
        rng = random.Random(17)
        for _ in range(40):
            g = fx.random_graph(rng)
            if has_loop(g):
                with pytest.raises(HasLoop):
                    enumerate_all_finite_paths(g)
            else:
                paths = enumerate_all_finite_paths(g)
                assert len(paths) == sum(
                    count_paths_bruteforce(g, k) for k in range(0, g.n_edges + 1)
                )
