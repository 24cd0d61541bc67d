"""Adjacency matrices over exact integers.

The (v, w) entry of the adjacency matrix counts edges v -> w, so the k-th
power counts k-paths between vertex pairs.  Everything here is exact big
integer arithmetic; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import DimensionMismatch, QuiverError
from .graph import Graph, _require_no_bundles, build_graph


@dataclass(frozen=True)
class CountMatrix:
    """A square nonnegative-integer matrix indexed by vertex ids."""

    index: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.index)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise DimensionMismatch("matrix must be square over its vertex index")
        if any(x < 0 for r in self.rows for x in r):
            raise QuiverError("count matrices have nonnegative entries")

    @property
    def dim(self) -> int:
        return len(self.index)

    def entry(self, v: str, w: str) -> int:
        i = self.index.index(v)
        j = self.index.index(w)
        return self.rows[i][j]

    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)


def matrix_from_rows(rows: Sequence[Sequence[int]], index: Sequence[str] | None = None) -> CountMatrix:
    """Build a CountMatrix from raw rows; the default index is "1".."n"."""
    n = len(rows)
    idx = tuple(index) if index is not None else tuple(str(i + 1) for i in range(n))
    return CountMatrix(index=idx, rows=tuple(tuple(int(x) for x in r) for r in rows))


def identity(index: Sequence[str]) -> CountMatrix:
    n = len(index)
    return CountMatrix(
        index=tuple(index),
        rows=tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)),
    )


def adjacency_matrix(graph: Graph) -> CountMatrix:
    """Adjacency matrix in the graph's vertex insertion order."""
    _require_no_bundles(graph)
    pos = {v: i for i, v in enumerate(graph.vertices)}
    n = len(graph.vertices)
    rows = [[0] * n for _ in range(n)]
    for e in graph.edges:
        rows[pos[e.src]][pos[e.dst]] += 1
    return CountMatrix(index=graph.vertices, rows=tuple(tuple(r) for r in rows))


def mat_mul(a: CountMatrix, b: CountMatrix) -> CountMatrix:
    """Exact integer matrix product."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    n = a.dim
    bt = list(zip(*b.rows))
    rows = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.rows
    )
    return CountMatrix(index=a.index, rows=rows)


def mat_pow(a: CountMatrix, k: int) -> CountMatrix:
    """k-th power by repeated squaring (k >= 1; k = 0 gives the identity)."""
    if k < 0:
        raise QuiverError("matrix power requires k >= 0")
    result = identity(a.index)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if k > 1 else base
        k >>= 1
    return result


def count_paths_matrix(graph: Graph, k: int) -> int:
    """Number of k-paths as the entry sum of the k-th adjacency power."""
    _require_no_bundles(graph)
    if k < 1:
        raise QuiverError("matrix counting requires k >= 1")
    return mat_pow(adjacency_matrix(graph), k).total()


def is_nilpotent(matrix: CountMatrix) -> Optional[int]:
    """Smallest n with A^n = 0, or None if A is not nilpotent.

    For a nonnegative integer matrix of dimension m it suffices to check
    powers up to m: a nonzero A^m forces a walk of length m, which must
    revisit a vertex, so every higher power stays nonzero as well.
    """
    if matrix.dim == 0:
        return 1
    power = matrix
    for n in range(1, matrix.dim + 1):
        if power.is_zero():
            return n
        power = mat_mul(power, matrix)
    return None


def graph_from_matrix(matrix: Union[CountMatrix, Sequence[Sequence[int]]]) -> Graph:
    """The graph E(A) whose adjacency matrix is A.

    Vertices are named "1".."n" (or the CountMatrix index); entry A_ij adds
    parallel edges "i:j:t" for t = 1..A_ij.
    """
    m = matrix if isinstance(matrix, CountMatrix) else matrix_from_rows(matrix)
    edges = []
    for i, row in enumerate(m.rows):
        for j, count in enumerate(row):
            for t in range(1, count + 1):
                edges.append((f"{m.index[i]}:{m.index[j]}:{t}", m.index[i], m.index[j]))
    return build_graph(m.index, edges)
