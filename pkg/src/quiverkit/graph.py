"""Finite directed multigraphs, paths, and path enumeration.

Conventions used throughout the toolkit:

* A *graph* is a finite directed multigraph: parallel edges and self-loops
  are allowed, every edge knows its source and target vertex.
* A *path* of length n >= 1 is a tuple of edges (e_1, ..., e_n) with
  t(e_i) = s(e_{i+1}); vertices are paths of length 0.  Edges and vertices
  may repeat inside a path, so a graph with a cycle has paths of every
  length.
* A *loop* is a directed closed path of ANY length >= 1, not merely an edge
  from a vertex to itself.
* An *infinite bundle* marks countably many parallel edges between one
  vertex pair.  Bundles are opaque to all path machinery (enumeration and
  counting reject graphs containing them); reachability-style operations
  treat a bundle like a single edge.

Vertices and edges keep insertion order; enumeration emits paths in
lexicographic edge-id order, so all results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    DanglingEndpoint,
    DuplicateId,
    HasLoop,
    IndexOutOfRange,
    InfiniteBundlePresent,
    InvalidPermutation,
    QuiverError,
    ResultCapExceeded,
    StarIdCollision,
    UnknownEdge,
)

DEFAULT_ENUM_CAP = 10**7

#: DFS counting switches to a vector-matrix sweep above this path length.
_DFS_LENGTH_LIMIT = 20


@dataclass(frozen=True)
class Edge:
    """A directed edge with a graph-unique id."""

    id: str
    src: str
    dst: str


@dataclass(frozen=True)
class Path:
    """An edge sequence with coherent endpoints.

    Length-0 paths are vertices: ``base`` holds the vertex id and ``edges``
    is empty.  For positive length, ``base`` is empty and ``edges`` carries
    the edge ids; endpoints are resolved against the owning graph.
    """

    base: str = ""
    edges: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if bool(self.base) == bool(self.edges):
            raise QuiverError("path needs exactly one of: base vertex, edge sequence")

    @classmethod
    def vertex(cls, v: str) -> "Path":
        return cls(base=v)

    @classmethod
    def from_edges(cls, edge_ids: Iterable[str]) -> "Path":
        return cls(edges=tuple(edge_ids))

    @property
    def length(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        if self.base:
            return f"Path@{self.base}"
        return "Path(" + ",".join(self.edges) + ")"


@dataclass(frozen=True)
class Graph:
    """An immutable finite directed multigraph.

    Construct through :func:`build_graph`, which validates ids and
    endpoints.  All derived lookups are cached; instances are hashable and
    safe to share across threads.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    infinite_bundles: tuple[tuple[str, str], ...] = ()

    # navigation ---------------------------------------------------------

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.src].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.dst].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def _out_sorted(self) -> dict[str, tuple[Edge, ...]]:
        return {v: tuple(sorted(es, key=lambda e: e.id)) for v, es in self._out.items()}

    @cached_property
    def bundle_out(self) -> dict[str, tuple[str, ...]]:
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        for src, dst in self.infinite_bundles:
            out[src].append(dst)
        return {v: tuple(ds) for v, ds in out.items()}

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in[v]

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise UnknownEdge(f"unknown edge id {edge_id!r}") from None

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    # path endpoints ------------------------------------------------------

    def path_source(self, p: Path) -> str:
        return p.base if p.base else self.edge(p.edges[0]).src

    def path_target(self, p: Path) -> str:
        return p.base if p.base else self.edge(p.edges[-1]).dst


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str, str] | Edge] = (),
    infinite_bundles: Iterable[tuple[str, str]] = (),
) -> Graph:
    """Validate and build a graph from raw ids.

    ``edges`` holds (id, src, dst) triples.  Raises :class:`DuplicateId` on
    repeated ids, :class:`DanglingEndpoint` when an edge or bundle touches an
    unknown vertex, and :class:`StarIdCollision` for edge ids containing the
    reserved ghost marker ``*``.
    """
    vs = tuple(vertices)
    seen: set[str] = set()
    for v in vs:
        if not v:
            raise QuiverError("vertex ids must be nonempty strings")
        if v in seen:
            raise DuplicateId(f"duplicate vertex id {v!r}")
        seen.add(v)

    es: list[Edge] = []
    eseen: set[str] = set()
    for raw in edges:
        e = raw if isinstance(raw, Edge) else Edge(*raw)
        if not e.id:
            raise QuiverError("edge ids must be nonempty strings")
        if "*" in e.id:
            raise StarIdCollision(f"edge id {e.id!r} uses the reserved ghost marker '*'")
        if e.id in eseen:
            raise DuplicateId(f"duplicate edge id {e.id!r}")
        eseen.add(e.id)
        if e.src not in seen or e.dst not in seen:
            raise DanglingEndpoint(f"edge {e.id!r} references unknown vertex")
        es.append(e)

    bundles: list[tuple[str, str]] = []
    for src, dst in infinite_bundles:
        if src not in seen or dst not in seen:
            raise DanglingEndpoint(f"bundle ({src!r}, {dst!r}) references unknown vertex")
        if (src, dst) not in bundles:
            bundles.append((src, dst))
    return Graph(vertices=vs, edges=tuple(es), infinite_bundles=tuple(sorted(bundles)))


def _require_no_bundles(graph: Graph) -> None:
    if graph.infinite_bundles:
        raise InfiniteBundlePresent("operation rejects graphs with infinite bundles")


def is_path(graph: Graph, edge_seq: Sequence[str]) -> bool:
    """True iff consecutive edges share endpoints (t(e_i) = s(e_{i+1}))."""
    edges = [graph.edge(eid) for eid in edge_seq]
    return all(edges[i].dst == edges[i + 1].src for i in range(len(edges) - 1))


def has_loop(graph: Graph) -> bool:
    """True iff the graph contains a directed cycle.

    A bundle from v to w counts like a single v->w edge for reachability.
    """
    succ: dict[str, set[str]] = {v: set() for v in graph.vertices}
    for e in graph.edges:
        succ[e.src].add(e.dst)
    for src, dst in graph.infinite_bundles:
        succ[src].add(dst)

    WHITE, GRAY, BLACK = 0, 1, 2
    color = {v: WHITE for v in graph.vertices}
    for root in graph.vertices:
        if color[root] != WHITE:
            continue
        stack: list[tuple[str, Iterator[str]]] = [(root, iter(sorted(succ[root])))]
        color[root] = GRAY
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == GRAY:
                    return True
                if color[w] == WHITE:
                    color[w] = GRAY
                    stack.append((w, iter(sorted(succ[w]))))
                    advanced = True
                    break
            if not advanced:
                color[v] = BLACK
                stack.pop()
    return False


def enumerate_paths(graph: Graph, k: int, cap: int = DEFAULT_ENUM_CAP) -> list[Path]:
    """All paths of length exactly k, in lexicographic edge-id order.

    k = 0 yields one length-0 path per vertex (insertion order).  Raises
    :class:`ResultCapExceeded` once more than ``cap`` paths would be emitted.
    """
    _require_no_bundles(graph)
    if k < 0:
        raise QuiverError("path length k must be >= 0")
    if k == 0:
        return [Path.vertex(v) for v in graph.vertices]

    out = graph._out_sorted
    results: list[Path] = []
    prefix: list[str] = []

    def extend(v: str, remaining: int) -> None:
        if remaining == 0:
            if len(results) >= cap:
                raise ResultCapExceeded(f"more than {cap} paths of length {k}")
            results.append(Path.from_edges(prefix))
            return
        for e in out[v]:
            prefix.append(e.id)
            extend(e.dst, remaining - 1)
            prefix.pop()

    # starting edges sorted plus sorted extensions emit in lexicographic order
    for e in sorted(graph.edges, key=lambda e: e.id):
        prefix.append(e.id)
        extend(e.dst, k - 1)
        prefix.pop()
    return results


def enumerate_all_finite_paths(graph: Graph, cap: int = DEFAULT_ENUM_CAP) -> list[Path]:
    """The full finite-path space, vertices included, grouped by length.

    Defined only for loop-free graphs (otherwise the space is infinite);
    raises :class:`HasLoop`.
    """
    _require_no_bundles(graph)
    if has_loop(graph):
        raise HasLoop("path space is infinite: the graph contains a loop")
    results: list[Path] = [Path.vertex(v) for v in graph.vertices]
    for k in range(1, graph.n_edges + 1):
        layer = enumerate_paths(graph, k, cap=cap)
        if not layer:
            break
        results.extend(layer)
    return results


def count_paths_bruteforce(graph: Graph, k: int) -> int:
    """Count paths of length k by direct DFS extension (no materialization).

    Independent of the adjacency-matrix engine for k <= 20; beyond that the
    count is folded vertex-by-vertex (exact integers throughout).
    """
    _require_no_bundles(graph)
    if k < 0:
        raise QuiverError("path length k must be >= 0")
    if k == 0:
        return len(graph.vertices)
    out = graph._out
    if k <= _DFS_LENGTH_LIMIT:

        def walk(v: str, remaining: int) -> int:
            if remaining == 0:
                return 1
            return sum(walk(e.dst, remaining - 1) for e in out[v])

        return sum(walk(e.dst, k - 1) for e in graph.edges)

    counts = {v: 1 for v in graph.vertices}
    for _ in range(k):
        counts = {v: sum(counts[e.dst] for e in out[v]) for v in graph.vertices}
    return sum(counts.values())


def subpath(path: Path, i: int, k: int) -> Path:
    """The subpath (e_i, ..., e_{i+k}) of a positive-length path.

    ``i`` is 1-based and ``k`` is an offset, so the result always has k+1
    edges; k = 0 picks the single edge e_i.  (The offset convention makes k
    one less than the sub-tuple size.)
    """
    n = path.length
    if n == 0:
        raise IndexOutOfRange("subpaths are defined for paths of length >= 1")
    if not (1 <= i <= n) or k < 0 or k > n - i:
        raise IndexOutOfRange(f"subpath indices i={i}, k={k} out of range for length {n}")
    return Path.from_edges(path.edges[i - 1 : i + k])


def loop_from_permutation(graph: Graph, path: Path, sigma: Sequence[int]) -> Optional[Path]:
    """Extract a loop witnessing that a permuted path forces a cycle.

    ``sigma`` lists the images of positions 1..n.  If sigma is not the
    identity and (e_{sigma(1)}, ..., e_{sigma(n)}) is again a path, the two
    orderings are spliced into a closed path, which is returned.  Otherwise
    returns None.  On loop-free graphs the permuted sequence can never be a
    path, so the result there is always None.
    """
    n = path.length
    if sorted(sigma) != list(range(1, n + 1)):
        raise InvalidPermutation(f"sigma must be a bijection of 1..{n}")
    if all(sigma[i] == i + 1 for i in range(n)):
        return None
    permuted = tuple(path.edges[sigma[i] - 1] for i in range(n))
    if not is_path(graph, permuted):
        return None

    j = next(i + 1 for i in range(n) if sigma[i] != i + 1)
    inv_j = sigma.index(j) + 1  # sigma^{-1}(j), strictly greater than j
    # (e_{sigma(j)}, ..., e_j) read from the permuted path, then the stretch
    # (e_{j+1}, ..., e_{sigma(j)-1}) from the original closes the cycle.
    part1 = permuted[j - 1 : inv_j]
    part2 = path.edges[j : sigma[j - 1] - 1]
    return Path.from_edges(part1 + part2)


def sinks(graph: Graph) -> set[str]:
    """Vertices that emit nothing (no edge and no bundle)."""
    return {
        v
        for v in graph.vertices
        if not graph.out_edges(v) and not graph.bundle_out[v]
    }


def is_connected_undirected(graph: Graph) -> bool:
    """True iff every vertex pair is joined by an undirected path.

    Bundles count as connections.  Graphs with at most one vertex are
    connected by convention.
    """
    if len(graph.vertices) <= 1:
        return True
    adj: dict[str, set[str]] = {v: set() for v in graph.vertices}
    links = [(e.src, e.dst) for e in graph.edges] + list(graph.infinite_bundles)
    for a, b in links:
        adj[a].add(b)
        adj[b].add(a)
    seen = {graph.vertices[0]}
    stack = [graph.vertices[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(graph.vertices)


def longest_path(graph: Graph) -> Path:
    """A maximal-length path; ties broken by lexicographic edge-id order."""
    _require_no_bundles(graph)
    if has_loop(graph):
        raise HasLoop("longest path undefined: the graph contains a loop")
    if not graph.vertices:
        raise QuiverError("longest path undefined on the empty graph")

    best_from: dict[str, tuple[int, tuple[str, ...]]] = {}

    def best(v: str) -> tuple[int, tuple[str, ...]]:
        if v in best_from:
            return best_from[v]
        choice = (0, ())
        for e in graph._out_sorted[v]:
            ln, tail = best(e.dst)
            cand = (ln + 1, (e.id,) + tail)
            if cand[0] > choice[0] or (cand[0] == choice[0] and cand[1] < choice[1]):
                choice = cand
        best_from[v] = choice
        return choice

    top: tuple[int, tuple[str, ...], str] | None = None
    for v in graph.vertices:
        ln, tail = best(v)
        cand = (ln, tail, v)
        if (
            top is None
            or cand[0] > top[0]
            or (cand[0] == top[0] and (cand[1], cand[2]) < (top[1], top[2]))
        ):
            top = cand
    assert top is not None
    length, tail, v0 = top
    return Path.from_edges(tail) if length else Path.vertex(v0)
