"""The extremal k-path count and the graph-reshaping pipeline.

For a loop-free graph with N edges, the number of length-k paths is at most

    P(N, k) = (n + 1)^r * n^(k - r)     where N = n*k + r, 0 <= r < k,

and the bound is attained by a *thick path*: k+1 totally ordered vertices
whose consecutive pairs carry bundles of parallel edges with sizes as equal
as possible.  :func:`maximize_with_trace` turns an arbitrary loop-free graph
into that maximizer through moves that never decrease the k-path count,
recording a snapshot and an exact count after every move; the resulting
trace is a machine-checkable certificate (:func:`verify_trace`).

The moves, in pipeline order:

1. drop vertices touching no edge,
2. repeatedly identify *unrelated* vertex pairs (no directed path either
   way) until the reachability order is total,
3. sweep the front positions 1..k: re-source skipping edges one vertex
   forward and insertion-rotate the front bundle so bundle sizes stay
   sorted ascending,
4. while the longest path exceeds k, merge the first vertex into vertex
   k+1 (its bundle re-attaches one pair further down) and re-sweep,
5. re-attach any residual skipping edges (they carry no k-paths),
6. re-balance the bundle profile one unit at a time; each move strictly
   increases the bundle product.

:func:`brute_force_max` is an independent oracle: it exhaustively scans
loop-free multigraphs (upper-triangular count matrices over all useful
vertex counts, combined with a partition scan over edge-disjoint
components) and must agree with the closed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from .errors import (
    ConfigInvalid,
    HasLoop,
    InvalidRange,
    NoKPath,
    NotInFkForm,
    QuiverError,
    SearchBudgetExceeded,
    TooManyVertices,
)
from .graph import Graph, _require_no_bundles, build_graph, has_loop
from .matrices import count_paths_matrix, graph_from_matrix, matrix_from_rows

BundleProfile = tuple[int, ...]

STEP_KINDS = (
    "RemoveIsolated",
    "IdentifyUnrelated",
    "ShiftE2",
    "ShiftSortE3E4",
    "MergeGl",
    "AttachResidual",
    "Redistribute",
)

_CANON_DIM_LIMIT = 8


# ---------------------------------------------------------------------------
# closed form and maximizer


def optimal_bound(n_edges: int, k: int) -> int:
    """P(N, k) = (n+1)^r * n^(k-r) with N = n*k + r, 0 <= r < k."""
    if not 1 <= k <= n_edges:
        raise InvalidRange(f"need 1 <= k <= N, got k={k}, N={n_edges}")
    n, r = divmod(n_edges, k)
    return (n + 1) ** r * n ** (k - r)


def bound_decomposition(n_edges: int, k: int) -> tuple[int, int]:
    """The (n, r) of N = n*k + r used by the bound."""
    if not 1 <= k <= n_edges:
        raise InvalidRange(f"need 1 <= k <= N, got k={k}, N={n_edges}")
    return divmod(n_edges, k)


def balanced_profile(n_edges: int, k: int) -> BundleProfile:
    """Ascending bundle profile of the maximizer: r sizes n+1 placed last."""
    n, r = bound_decomposition(n_edges, k)
    return (n,) * (k - r) + (n + 1,) * r


def thick_path_graph(profile: Sequence[int]) -> Graph:
    """Thick path with the given consecutive bundle sizes."""
    k = len(profile)
    rows = [[0] * (k + 1) for _ in range(k + 1)]
    for i, b in enumerate(profile):
        rows[i][i + 1] = int(b)
    return graph_from_matrix(matrix_from_rows(rows))


def maximizer_graph(n_edges: int, k: int) -> Graph:
    """The thick path attaining optimal_bound(N, k)."""
    return thick_path_graph(balanced_profile(n_edges, k))


# ---------------------------------------------------------------------------
# canonical form


def canonical_key(graph: Graph) -> tuple:
    """Isomorphism-invariant key: minimal adjacency rows over all orderings.

    Exact (all vertex permutations); refuses graphs beyond 8 vertices.
    Bundles enter as a parallel 0/1 layer permuted in lockstep.
    """
    m = len(graph.vertices)
    if m > _CANON_DIM_LIMIT:
        raise TooManyVertices(f"canonical form supports at most {_CANON_DIM_LIMIT} vertices")
    pos = {v: i for i, v in enumerate(graph.vertices)}
    adj = [[0] * m for _ in range(m)]
    for e in graph.edges:
        adj[pos[e.src]][pos[e.dst]] += 1
    bun = [[0] * m for _ in range(m)]
    for s, d in graph.infinite_bundles:
        bun[pos[s]][pos[d]] = 1

    best: tuple | None = None
    for perm in itertools.permutations(range(m)):
        cand = (
            tuple(tuple(adj[perm[i]][perm[j]] for j in range(m)) for i in range(m)),
            tuple(tuple(bun[perm[i]][perm[j]] for j in range(m)) for i in range(m)),
        )
        if best is None or cand < best:
            best = cand
    return (m,) if best is None else (m, *best)


# ---------------------------------------------------------------------------
# pipeline moves


def remove_isolated(graph: Graph) -> Graph:
    """Drop vertices not touching any edge or bundle."""
    used = set()
    for e in graph.edges:
        used.add(e.src)
        used.add(e.dst)
    for s, d in graph.infinite_bundles:
        used.add(s)
        used.add(d)
    kept = tuple(v for v in graph.vertices if v in used)
    if len(kept) == len(graph.vertices):
        return graph
    return Graph(vertices=kept, edges=graph.edges, infinite_bundles=graph.infinite_bundles)


def _reachable(succ: dict[str, set[str]], start: str) -> set[str]:
    seen: set[str] = set()
    stack = [start]
    while stack:
        v = stack.pop()
        for w in succ[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def identify_unrelated(graph: Graph) -> Graph:
    """Merge unrelated vertex pairs until the reachability order is total.

    Repeatedly takes the lexicographically first pair (u, w) with no
    directed path in either direction and absorbs w into u.  Identifying
    unrelated vertices cannot close a cycle, and every edge sequence that
    was a path stays one, so no k-path count decreases.
    """
    _require_no_bundles(graph)
    if has_loop(graph):
        raise HasLoop("identify_unrelated requires a loop-free graph")

    vertices = list(graph.vertices)
    endpoints = {e.id: (e.src, e.dst) for e in graph.edges}
    edge_order = [e.id for e in graph.edges]

    while True:
        succ: dict[str, set[str]] = {v: set() for v in vertices}
        for src, dst in endpoints.values():
            succ[src].add(dst)
        reach = {v: _reachable(succ, v) for v in vertices}
        pair = next(
            (
                (u, w)
                for u, w in itertools.combinations(sorted(vertices), 2)
                if w not in reach[u] and u not in reach[w]
            ),
            None,
        )
        if pair is None:
            break
        u, w = pair
        vertices.remove(w)
        for eid, (src, dst) in endpoints.items():
            endpoints[eid] = (u if src == w else src, u if dst == w else dst)

    edges = [(eid, *endpoints[eid]) for eid in edge_order]
    return build_graph(vertices, edges)


def _total_order(graph: Graph) -> list[str]:
    """Vertices in their unique topological order.

    Raises unless the reachability relation is a total order (equivalently,
    consecutive vertices are always joined by an edge).
    """
    _require_no_bundles(graph)
    indeg = {v: 0 for v in graph.vertices}
    for e in graph.edges:
        indeg[e.dst] += 1
    remaining = dict(indeg)
    out = {v: [e.dst for e in graph.out_edges(v)] for v in graph.vertices}
    order: list[str] = []
    active = set(graph.vertices)
    while active:
        sources = [v for v in active if remaining[v] == 0]
        if not sources:
            raise HasLoop("graph contains a loop")
        if len(sources) > 1:
            raise QuiverError("vertices are not totally ordered by reachability")
        v = sources[0]
        order.append(v)
        active.remove(v)
        for w in out[v]:
            remaining[w] -= 1
    return order


def _bundles_along(order: Sequence[str], endpoints: dict[str, tuple[str, str]]) -> list[list[str]]:
    """Edge ids per consecutive pair; index i holds edges order[i] -> order[i+1]."""
    pos = {v: i for i, v in enumerate(order)}
    bundles: list[list[str]] = [[] for _ in range(len(order) - 1)]
    for eid in sorted(endpoints):
        src, dst = endpoints[eid]
        if pos[dst] - pos[src] == 1:
            bundles[pos[src]].append(eid)
    return bundles


def _rebuild(graph: Graph, vertices: Sequence[str], endpoints: dict[str, tuple[str, str]]) -> Graph:
    edges = [(e.id, *endpoints[e.id]) for e in graph.edges if e.id in endpoints]
    return build_graph(vertices, edges)


def _align_passes(graph: Graph, k: int) -> list[tuple[str, Graph]]:
    """One front sweep: for each position p = 1..k re-source the skips of
    vertex p one step forward, then insertion-rotate bundle p into the
    sorted front.  Returns the (kind, snapshot) list of changed passes."""
    order = _total_order(graph)
    length = len(order) - 1
    if length < k:
        raise NoKPath(f"longest path has length {length} < k = {k}")
    pos = {v: i for i, v in enumerate(order)}
    endpoints = {e.id: (e.src, e.dst) for e in graph.edges}
    snapshots: list[tuple[str, Graph]] = []

    for p in range(1, k + 1):
        changed = False
        front = order[p - 1]
        for eid in sorted(endpoints):
            src, dst = endpoints[eid]
            if src == front and pos[dst] > p:
                endpoints[eid] = (order[p], dst)
                changed = True

        bundles = _bundles_along(order, endpoints)
        sizes = [len(b) for b in bundles[:p]]
        new = sizes[-1]
        insert_at = sum(1 for s in sizes[:-1] if s <= new)
        if insert_at != p - 1:
            rotated = bundles[:insert_at] + [bundles[p - 1]] + bundles[insert_at : p - 1]
            for i, bundle in enumerate(rotated):
                for eid in bundle:
                    endpoints[eid] = (order[i], order[i + 1])
            changed = True

        if changed:
            kind = "ShiftE2" if p == 1 else "ShiftSortE3E4"
            snapshots.append((kind, _rebuild(graph, order, endpoints)))

    return snapshots


def align_and_sort(graph: Graph, k: int) -> Graph:
    """Sweep the graph into sorted-front form (see :func:`_align_passes`)."""
    passes = _align_passes(graph, k)
    return passes[-1][1] if passes else graph


def _front_profile(graph: Graph, k: int) -> tuple[list[str], BundleProfile]:
    """Check sorted-front form; return (order, front bundle sizes)."""
    order = _total_order(graph)
    if len(order) - 1 < k:
        raise NotInFkForm(f"longest path shorter than k = {k}")
    pos = {v: i for i, v in enumerate(order)}
    sizes = [0] * k
    for e in graph.edges:
        if pos[e.src] < k:
            if pos[e.dst] != pos[e.src] + 1:
                raise NotInFkForm(f"edge {e.id!r} emitted by the front skips ahead")
            sizes[pos[e.src]] += 1
    if any(sizes[i] > sizes[i + 1] for i in range(k - 1)):
        raise NotInFkForm(f"front bundle sizes {sizes} are not ascending")
    return order, tuple(sizes)


def merge_front(graph: Graph, k: int) -> Graph:
    """Identify the first vertex with vertex k+1.

    Requires sorted-front form with longest path length l > k.  The first
    bundle re-attaches between vertices k+1 and k+2, the vertex count and
    longest path both drop by one, and the k-path count cannot decrease.
    """
    order, _ = _front_profile(graph, k)
    if len(order) - 1 == k:
        raise NotInFkForm("longest path already has length k; nothing to merge")
    first, target_src, target_dst = order[0], order[k], order[k + 1]
    endpoints = {}
    for e in graph.edges:
        if e.src == first:
            endpoints[e.id] = (target_src, target_dst)
        else:
            endpoints[e.id] = (e.src, e.dst)
    return _rebuild(graph, order[1:], endpoints)


def attach_residual(graph: Graph, k: int) -> Graph:
    """Re-attach edges that skip vertices to consecutive pairs.

    On a (k+1)-vertex totally ordered graph a skipping edge lies on no
    k-path, so moving it costs nothing; each one joins the currently
    smallest bundle (leftmost on ties).
    """
    order = _total_order(graph)
    if len(order) - 1 != k:
        raise QuiverError("residual attachment expects exactly k+1 ordered vertices")
    pos = {v: i for i, v in enumerate(order)}
    endpoints = {e.id: (e.src, e.dst) for e in graph.edges}
    skips = [eid for eid in sorted(endpoints) if pos[endpoints[eid][1]] - pos[endpoints[eid][0]] > 1]
    if not skips:
        return graph
    sizes = [len(b) for b in _bundles_along(order, endpoints)]
    for eid in skips:
        i = sizes.index(min(sizes))
        endpoints[eid] = (order[i], order[i + 1])
        sizes[i] += 1
    return _rebuild(graph, order, endpoints)


def redistribute(profile: Sequence[int]) -> BundleProfile:
    """Even out a bundle profile one unit at a time; returns it ascending.

    While two sizes differ by more than one, a unit moves from a largest to
    a smallest bundle; each move strictly increases the product, because
    (b_i - 1)(b_j + 1) = b_i*b_j + (b_i - b_j - 1) > b_i*b_j.
    """
    if not profile:
        raise QuiverError("redistribute requires a nonempty profile")
    vals = [int(b) for b in profile]
    while max(vals) - min(vals) > 1:
        vals[vals.index(max(vals))] -= 1
        vals[vals.index(min(vals))] += 1
    return tuple(sorted(vals))


# ---------------------------------------------------------------------------
# trace


@dataclass(frozen=True)
class ReshapeStep:
    kind: str
    graph: Graph
    count: int


@dataclass(frozen=True)
class ReshapeTrace:
    """Snapshots of the reshaping pipeline with exact k-path counts."""

    k: int
    steps: tuple[ReshapeStep, ...]

    @property
    def final_graph(self) -> Graph:
        return self.steps[-1].graph

    @property
    def final_count(self) -> int:
        return self.steps[-1].count

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(s.count for s in self.steps)


def _mint_vertices(existing: Iterable[str], count: int) -> list[str]:
    taken = set(existing)
    minted = []
    i = 1
    while len(minted) < count:
        name = f"x{i}"
        if name not in taken:
            minted.append(name)
        i += 1
    return minted


def _chain_rebuild(graph: Graph, order: list[str], k: int) -> Graph:
    # No k-paths exist (longest path < k), so any re-attachment is free:
    # lay all edges on a (k+1)-vertex chain, one per pair, surplus on the last.
    vertices = list(order) + _mint_vertices(order, k + 1 - len(order))
    eids = sorted(e.id for e in graph.edges)
    endpoints = {}
    for i in range(k - 1):
        endpoints[eids[i]] = (vertices[i], vertices[i + 1])
    for eid in eids[k - 1 :]:
        endpoints[eid] = (vertices[k - 1], vertices[k])
    return _rebuild(graph, vertices, endpoints)


def maximize_with_trace(graph: Graph, k: int) -> ReshapeTrace:
    """Reshape ``graph`` into the k-path maximizer, returning the certificate.

    Counts along the trace never decrease and the final snapshot is the
    balanced thick path with optimal_bound(N, k) paths of length k;
    :func:`verify_trace` re-checks all of that from scratch.
    """
    _require_no_bundles(graph)
    if has_loop(graph):
        raise HasLoop("the bound applies to loop-free graphs only")
    n_edges = graph.n_edges
    if not 1 <= k <= n_edges:
        raise InvalidRange(f"need 1 <= k <= N, got k={k}, N={n_edges}")

    steps: list[ReshapeStep] = []

    def record(kind: str, g: Graph) -> Graph:
        steps.append(ReshapeStep(kind=kind, graph=g, count=count_paths_matrix(g, k)))
        return g

    current = record("RemoveIsolated", remove_isolated(graph))

    identified = identify_unrelated(current)
    if identified != current:
        current = record("IdentifyUnrelated", identified)

    order = _total_order(current)
    if len(order) - 1 < k:
        current = record("AttachResidual", _chain_rebuild(current, order, k))
    else:
        while True:
            for kind, snapshot in _align_passes(current, k):
                current = record(kind, snapshot)
            if len(_total_order(current)) - 1 == k:
                break
            current = record("MergeGl", merge_front(current, k))
        residual = attach_residual(current, k)
        if residual != current:
            current = record("AttachResidual", residual)

    order = _total_order(current)
    profile = tuple(len(b) for b in _bundles_along(order, {e.id: (e.src, e.dst) for e in current.edges}))
    target = redistribute(profile)
    if target != profile:
        pool = [eid for b in _bundles_along(order, {e.id: (e.src, e.dst) for e in current.edges}) for eid in b]
        endpoints = {}
        at = 0
        for i, size in enumerate(target):
            for eid in pool[at : at + size]:
                endpoints[eid] = (order[i], order[i + 1])
            at += size
        current = record("Redistribute", _rebuild(current, order, endpoints))

    return ReshapeTrace(k=k, steps=tuple(steps))


def verify_trace(trace: ReshapeTrace, n_edges: Optional[int] = None) -> list[str]:
    """Re-check a trace from scratch; returns human-readable violations.

    Verifies step kinds, constant edge count, loop-freeness, stored counts,
    monotonicity, final optimality, and the final thick-path shape.  An
    empty list means the certificate holds.
    """
    problems: list[str] = []
    if not trace.steps:
        return ["trace has no steps"]
    expected_edges = n_edges if n_edges is not None else trace.steps[0].graph.n_edges

    previous = None
    for i, step in enumerate(trace.steps):
        if step.kind not in STEP_KINDS:
            problems.append(f"step {i}: unknown kind {step.kind!r}")
        if step.graph.n_edges != expected_edges:
            problems.append(f"step {i}: edge count {step.graph.n_edges} != {expected_edges}")
        if has_loop(step.graph):
            problems.append(f"step {i}: snapshot contains a loop")
            continue
        recount = count_paths_matrix(step.graph, trace.k)
        if recount != step.count:
            problems.append(f"step {i}: stored count {step.count} != recount {recount}")
        if previous is not None and recount < previous:
            problems.append(f"step {i}: count decreased {previous} -> {recount}")
        previous = recount

    bound = optimal_bound(expected_edges, trace.k)
    if trace.final_count != bound:
        problems.append(f"final count {trace.final_count} != optimal bound {bound}")
    try:
        order = _total_order(trace.final_graph)
        pos = {v: i for i, v in enumerate(order)}
        if len(order) - 1 != trace.k:
            problems.append("final snapshot is not a thick path on k+1 vertices")
        elif any(pos[e.dst] - pos[e.src] != 1 for e in trace.final_graph.edges):
            problems.append("final snapshot has skipping edges")
        else:
            sizes = [0] * trace.k
            for e in trace.final_graph.edges:
                sizes[pos[e.src]] += 1
            if tuple(sizes) != balanced_profile(expected_edges, trace.k):
                problems.append(f"final profile {sizes} is not the balanced profile")
    except QuiverError as exc:
        problems.append(f"final snapshot rejected: {exc}")
    return problems


def trace_to_obj(trace: ReshapeTrace) -> dict:
    from .io import graph_to_obj

    return {
        "k": trace.k,
        "steps": [
            {"kind": s.kind, "count": str(s.count), "graph": graph_to_obj(s.graph)}
            for s in trace.steps
        ],
    }


# ---------------------------------------------------------------------------
# brute-force oracle


def _count_k_walks(rows: list[list[int]], k: int) -> int:
    m = len(rows)
    vec = [1] * m
    for _ in range(k):
        vec = [sum(rows[i][j] * vec[j] for j in range(m)) for i in range(m)]
    return sum(vec)


def _weakly_connected(rows: list[list[int]], m: int) -> bool:
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(m):
        for j in range(m):
            if rows[i][j]:
                parent[find(i)] = find(j)
    root = find(0)
    return all(find(i) == root for i in range(m))


def _upper_triangular_fills(m: int, total: int):
    """Yield strictly-upper-triangular count matrices with the given entry sum."""
    cells = [(i, j) for i in range(m) for j in range(i + 1, m)]
    rows = [[0] * m for _ in range(m)]

    def fill(idx: int, left: int):
        if idx == len(cells) - 1:
            i, j = cells[idx]
            rows[i][j] = left
            yield rows
            rows[i][j] = 0
            return
        i, j = cells[idx]
        for val in range(left + 1):
            rows[i][j] = val
            yield from fill(idx + 1, left - val)
        rows[i][j] = 0

    if cells:
        yield from fill(0, total)
    elif total == 0:
        yield rows


def _best_connected(n_edges: int, k: int, vertex_cap: int) -> tuple[int, Optional[list[list[int]]]]:
    """Max k-path count over connected loop-free multigraphs with n edges."""
    best = -1
    witness: Optional[list[list[int]]] = None
    for m in range(2, min(n_edges + 1, vertex_cap) + 1):
        for rows in _upper_triangular_fills(m, n_edges):
            if not _weakly_connected(rows, m):
                continue
            value = _count_k_walks(rows, k)
            if value > best:
                best = value
                witness = [row[:] for row in rows]
    return best, witness


def _disjoint_union(parts: Sequence[Graph]) -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str, str]] = []
    for idx, part in enumerate(parts):
        tag = f"c{idx}."
        vertices.extend(tag + v for v in part.vertices)
        edges.extend((tag + e.id, tag + e.src, tag + e.dst) for e in part.edges)
    return build_graph(vertices, edges)


def brute_force_max(
    n_edges: int,
    k: int,
    vertex_cap: Optional[int] = None,
    budget: int = 20_000_000,
) -> tuple[int, Graph]:
    """Exhaustive maximum of the k-path count over loop-free graphs with N edges.

    Every loop-free multigraph is a disjoint union of connected ones, and
    path counts add over components, so the scan enumerates connected
    graphs (as strictly-upper-triangular count matrices over every useful
    vertex count) and then maximizes over edge partitions.  Returns the
    maximum and one witness graph.
    """
    if not 1 <= k <= n_edges:
        raise InvalidRange(f"need 1 <= k <= N, got k={k}, N={n_edges}")
    cap = vertex_cap if vertex_cap is not None else 2 * n_edges
    if cap < 2:
        raise InvalidRange("vertex_cap must be at least 2")

    est = 0
    for n in range(1, n_edges + 1):
        for m in range(2, min(n + 1, cap) + 1):
            cells = m * (m - 1) // 2
            est += math.comb(n + cells - 1, cells - 1)
    if est > budget:
        raise SearchBudgetExceeded(f"{est} candidate matrices exceed the budget {budget}")

    conn_value: dict[int, int] = {}
    conn_witness: dict[int, Optional[list[list[int]]]] = {}
    for n in range(1, n_edges + 1):
        conn_value[n], conn_witness[n] = _best_connected(n, k, cap)

    best_value = {0: 0}
    best_split: dict[int, list[int]] = {0: []}
    for n in range(1, n_edges + 1):
        best_value[n] = conn_value[n]
        best_split[n] = [n]
        for j in range(1, n // 2 + 1):
            cand = best_value[j] + best_value[n - j]
            if cand > best_value[n]:
                best_value[n] = cand
                best_split[n] = best_split[j] + best_split[n - j]

    parts = [graph_from_matrix(matrix_from_rows(conn_witness[n])) for n in sorted(best_split[n_edges])]
    witness = parts[0] if len(parts) == 1 else _disjoint_union(parts)
    return best_value[n_edges], witness


# ---------------------------------------------------------------------------
# real relaxation of the bound


@dataclass(frozen=True)
class ExploreConfig:
    """Knobs for the nonnegative-real relaxation explorer."""

    dim_cap: int = 6
    restarts: int = 8
    iterations: int = 200
    step_size: float = 1.0
    seed: int = 0
    include_thick_path: bool = True

    def validate(self) -> None:
        if self.dim_cap < 2 or self.restarts < 1 or self.iterations < 1:
            raise ConfigInvalid("dim_cap >= 2, restarts >= 1, iterations >= 1 required")
        if not 0 < self.step_size <= 4:
            raise ConfigInvalid("step_size must lie in (0, 4]")


def _walk_sum(a: np.ndarray, k: int) -> float:
    vec = np.ones(a.shape[0])
    for _ in range(k):
        vec = a @ vec
    return float(vec.sum())


def _walk_sum_gradient(a: np.ndarray, k: int) -> np.ndarray:
    m = a.shape[0]
    lefts = [np.ones(m)]
    rights = [np.ones(m)]
    for _ in range(k - 1):
        lefts.append(lefts[-1] @ a)
        rights.append(a @ rights[-1])
    grad = np.zeros_like(a)
    for i in range(k):
        grad += np.outer(lefts[i], rights[k - 1 - i])
    return grad


def _ascend(mask: np.ndarray, x0: np.ndarray, total: float, k: int, iterations: int, step: float) -> tuple[float, np.ndarray]:
    # multiplicative ascent: x <- x * grad^step, re-projected onto sum = total;
    # with step 1 this is the classic growth transform for polynomials with
    # nonnegative coefficients, so the objective never decreases.
    x = x0 * mask
    s = x.sum()
    if s <= 0:
        return 0.0, x
    x *= total / s
    best_val = _walk_sum(x, k)
    best_x = x.copy()
    for _ in range(iterations):
        grad = _walk_sum_gradient(x, k) * mask
        top = grad.max()
        if top <= 0:
            break
        x = x * (grad / top) ** step
        s = x.sum()
        if s <= 0:
            break
        x *= total / s
        val = _walk_sum(x, k)
        if val > best_val:
            best_val = val
            best_x = x.copy()
    return best_val, best_x


def _random_support(rng: np.random.Generator, dim: int) -> np.ndarray:
    mask = np.triu(rng.random((dim, dim)) < 0.6, 1).astype(float)
    if mask.sum() == 0:
        i = int(rng.integers(0, dim - 1))
        mask[i, i + 1] = 1.0
    return mask


def explore_real_relaxation(
    total: float,
    k: int,
    config: ExploreConfig = ExploreConfig(),
) -> tuple[float, np.ndarray]:
    """Numerically maximize the k-walk sum over nilpotent nonnegative matrices.

    Matrices have a fixed strictly-upper-triangular support (hence nilpotent)
    and entry sum ``total``; multiple restarts of a multiplicative projected
    ascent explore random supports.  The equal thick path, included by
    default, attains (total/k)^k exactly, which is the conjectured supremum;
    runs are reported as evidence, not proof.
    """
    config.validate()
    if total <= 0 or not 1 <= k <= math.floor(total):
        raise ConfigInvalid(f"need 1 <= k <= floor(total), got k={k}, total={total}")

    rng = np.random.default_rng(config.seed)
    runs: list[tuple[np.ndarray, np.ndarray]] = []
    if config.include_thick_path:
        mask = np.zeros((k + 1, k + 1))
        for i in range(k):
            mask[i, i + 1] = 1.0
        runs.append((mask, mask.copy()))
    for _ in range(config.restarts):
        dim = int(rng.integers(2, config.dim_cap + 1))
        mask = _random_support(rng, dim)
        init = mask * rng.random((dim, dim))
        runs.append((mask, init))

    best_val = -1.0
    best_x: Optional[np.ndarray] = None
    for mask, init in runs:
        val, x = _ascend(mask, init, float(total), k, config.iterations, config.step_size)
        if val > best_val:
            best_val = val
            best_x = x
    assert best_x is not None
    return best_val, best_x
