"""Shared graph fixtures, named by their structure."""

from __future__ import annotations

import random

from quiverkit import Graph, build_graph, graph_from_matrix, matrix_from_rows


def single_loop() -> Graph:
    return build_graph(["v"], [("e", "v", "v")])


def single_edge() -> Graph:
    return build_graph(["v", "w"], [("e", "v", "w")])


def doubled_edge() -> Graph:
    return build_graph(["v", "w"], [("e", "v", "w"), ("f", "v", "w")])


def two_cycle() -> Graph:
    return build_graph(["v", "w"], [("e", "v", "w"), ("f", "w", "v")])


def chain(n: int) -> Graph:
    vs = [f"v{i}" for i in range(n + 1)]
    return build_graph(vs, [(f"e{i}", f"v{i}", f"v{i+1}") for i in range(n)])


def line_graph(n_vertices: int) -> Graph:
    return chain(n_vertices - 1)


def from_counts(spec) -> Graph:
    """Graph on vertices 1..m from (src, dst, multiplicity) triples."""
    m = max(max(s, d) for s, d, _ in spec)
    rows = [[0] * m for _ in range(m)]
    for s, d, c in spec:
        rows[s - 1][d - 1] += c
    return graph_from_matrix(matrix_from_rows(rows))


def looped_pair_with_crossings() -> Graph:
    """Two looped vertices joined both ways; adjacency is the all-ones 2x2."""
    return build_graph(
        ["x", "y"],
        [("l1", "x", "x"), ("l2", "y", "y"), ("c1", "x", "y"), ("c2", "y", "x")],
    )


def eleven_edge_fan() -> Graph:
    """Five vertices, eleven edges, one sink; nilpotency index five."""
    return build_graph(
        ["u1", "u2", "u3", "u4", "u5"],
        [
            ("e1", "u5", "u1"),
            ("e2", "u5", "u4"),
            ("e3", "u5", "u2"),
            ("e4", "u1", "u3"),
            ("e5", "u1", "u3"),
            ("e6", "u1", "u4"),
            ("e7", "u2", "u1"),
            ("e8", "u2", "u3"),
            ("e9", "u2", "u4"),
            ("e10", "u4", "u3"),
            ("e11", "u4", "u3"),
        ],
    )


def looped_source_fan() -> Graph:
    """Loop at p, two edges p->w, one p->v, loop at w, one v->w."""
    return build_graph(
        ["p", "v", "w"],
        [
            ("l1", "p", "p"),
            ("a", "p", "w"),
            ("b", "p", "w"),
            ("c", "p", "v"),
            ("l2", "w", "w"),
            ("d", "v", "w"),
        ],
    )


def loop_with_exit() -> Graph:
    return build_graph(["v", "w"], [("e", "v", "v"), ("g", "v", "w")])


def loop_with_incoming() -> Graph:
    return build_graph(["v", "w"], [("e", "v", "v"), ("g", "w", "v")])


def loop_with_two_exits() -> Graph:
    return build_graph(
        ["v1", "v2", "v3"],
        [("l", "v1", "v1"), ("a", "v1", "v2"), ("b", "v1", "v3")],
    )


def two_loops_two_sinks() -> Graph:
    return build_graph(
        ["v1", "v2", "v3", "v4"],
        [
            ("l1", "v1", "v1"),
            ("l2", "v2", "v2"),
            ("a", "v1", "v2"),
            ("b", "v1", "v3"),
            ("c", "v1", "v4"),
            ("d", "v2", "v3"),
            ("f", "v2", "v4"),
        ],
    )


def unitriangular_three() -> Graph:
    """Adjacency [[1,1,1],[0,1,1],[0,0,0]]; has 2k+3 paths of length k."""
    return graph_from_matrix([[1, 1, 1], [0, 1, 1], [0, 0, 0]])


def two_sources_one_sink() -> Graph:
    return build_graph(
        ["v1", "v2", "v3"], [("e", "v1", "v2"), ("f", "v3", "v2")]
    )


def rose(n: int) -> Graph:
    return build_graph(["v"], [(f"e{i}", "v", "v") for i in range(1, n + 1)])


def bundle_and_edge_pair() -> tuple[Graph, Graph]:
    """An infinite bundle v->w1 next to a single edge v->w2.

    The union of the two graphs admits both inclusions, the intersection
    admits neither (saturation fails at v inside the edge graph).
    """
    f = build_graph(["w1", "v"], [], [("v", "w1")])
    g = build_graph(["v", "w2"], [("e", "v", "w2")])
    return f, g


def sixteen_edge_demo() -> Graph:
    """Two components, sixteen edges, six 3-paths; the reshaping demo input."""
    vertices = [f"a{i}" for i in range(1, 8)] + [f"b{i}" for i in range(1, 6)]
    edges = [
        ("e01", "a1", "a4"),
        ("e02", "a1", "a5"),
        ("e03", "a6", "a2"),
        ("e04", "a1", "a2"),
        ("e05", "a1", "a2"),
        ("e06", "a2", "a3"),
        ("e07", "a2", "a3"),
        ("e08", "a3", "a4"),
        ("e09", "a7", "a4"),
        ("e10", "b1", "b5"),
        ("e11", "b1", "b2"),
        ("e12", "b3", "b4"),
        ("e13", "b3", "b5"),
        ("e14", "b3", "b5"),
        ("e15", "b4", "b5"),
        ("e16", "b4", "b5"),
    ]
    return build_graph(vertices, edges)


#: Printed reshaping stages of the sixteen-edge demo with their 3-path counts.
SIXTEEN_EDGE_STAGES: list[tuple[Graph, int]] = [
    (
        from_counts(
            [(1, 4, 1), (1, 2, 4), (2, 3, 2), (2, 4, 1), (3, 4, 1), (4, 5, 1),
             (5, 6, 1), (6, 7, 2), (4, 7, 1), (5, 7, 2)]
        ),
        31,
    ),
    (
        from_counts(
            [(1, 2, 4), (2, 3, 2), (2, 4, 1), (3, 4, 2), (4, 5, 1), (5, 6, 1),
             (6, 7, 2), (4, 7, 1), (5, 7, 2)]
        ),
        43,
    ),
    (
        from_counts(
            [(1, 2, 4), (2, 3, 2), (3, 4, 3), (4, 5, 1), (5, 6, 1), (6, 7, 2),
             (4, 7, 1), (5, 7, 2)]
        ),
        47,
    ),
    (
        from_counts(
            [(1, 2, 2), (2, 3, 4), (3, 4, 3), (4, 5, 1), (5, 6, 1), (6, 7, 2),
             (4, 7, 1), (5, 7, 2)]
        ),
        59,
    ),
    (
        from_counts(
            [(1, 2, 2), (2, 3, 3), (3, 4, 4), (4, 5, 1), (5, 6, 1), (6, 7, 2),
             (4, 7, 1), (5, 7, 2)]
        ),
        62,
    ),
    (
        from_counts(
            [(1, 2, 3), (2, 3, 4), (3, 4, 3), (4, 5, 1), (5, 6, 2), (3, 6, 1),
             (4, 6, 2)]
        ),
        90,
    ),
    (
        from_counts([(1, 2, 3), (2, 3, 4), (3, 4, 4), (4, 5, 2), (3, 5, 3)]),
        116,
    ),
    (from_counts([(1, 2, 4), (2, 3, 4), (3, 4, 8)]), 128),
]


def six_dim_connected_solutions() -> list[Graph]:
    return [
        from_counts([(1, 2, 4)]),
        from_counts([(1, 2, 1), (2, 3, 1)]),
        from_counts([(1, 2, 2), (3, 2, 1)]),
        from_counts([(2, 1, 2), (2, 3, 1)]),
    ]


def five_dim_solutions() -> list[Graph]:
    return [
        build_graph([f"v{i}" for i in range(5)]),
        build_graph([f"v{i}" for i in range(4)], [("e", "v0", "v1")]),
        build_graph(["v0", "v1", "v2"], [("e", "v0", "v1"), ("f", "v0", "v1")]),
        build_graph(["v0", "v1", "v2"], [("e", "v1", "v0"), ("f", "v1", "v2")]),
        build_graph(["v0", "v1", "v2"], [("e", "v0", "v1"), ("f", "v2", "v1")]),
        build_graph(["v0", "v1"], [("e", "v0", "v1"), ("f", "v0", "v1"), ("g", "v0", "v1")]),
    ]


# ---------------------------------------------------------------------------
# random corpora


def random_loopfree(rng: random.Random, max_edges: int = 8, max_vertices: int = 6) -> Graph:
    """A random DAG-shaped multigraph (edges only go index-forward)."""
    m = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(m)]
    edges = []
    if m >= 2:
        for t in range(rng.randint(0, max_edges)):
            i = rng.randrange(m - 1)
            j = rng.randrange(i + 1, m)
            edges.append((f"e{t}", vs[i], vs[j]))
    return build_graph(vs, edges)


def random_graph(rng: random.Random, max_edges: int = 5, max_vertices: int = 4) -> Graph:
    """A random multigraph; loops of any length allowed."""
    m = rng.randint(1, max_vertices)
    vs = [f"v{i}" for i in range(m)]
    edges = [
        (f"e{t}", rng.choice(vs), rng.choice(vs))
        for t in range(rng.randint(1, max_edges))
    ]
    return build_graph(vs, edges)
