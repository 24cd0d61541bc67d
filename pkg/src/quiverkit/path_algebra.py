"""The path algebra of a graph over exact rationals.

Basis vectors are finite paths (vertices included); the product of two
basis paths is their concatenation when the endpoints match and zero
otherwise.  Coefficients default to ``fractions.Fraction`` so every
comparison is exact; a small prime field is available for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .errors import BudgetExceeded, GraphMismatch, QuiverError
from .extremal import canonical_key
from .graph import Graph, Path, has_loop, is_connected_undirected, is_path
from .matrices import adjacency_matrix, graph_from_matrix, mat_mul, matrix_from_rows

Coefficient = Union[Fraction, "GFElement"]

_ENUM_DIM_CAP = 8


# ---------------------------------------------------------------------------
# optional prime-field coefficients


@dataclass(frozen=True)
class GFElement:
    """An element of GF(p); arithmetic stays in the field."""

    p: int
    value: int

    def _lift(self, other) -> "GFElement":
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise QuiverError("mixed prime fields")
            return other
        if isinstance(other, int):
            return GFElement(self.p, other % self.p)
        raise TypeError(f"cannot coerce {other!r} into GF({self.p})")

    def __add__(self, other):
        o = self._lift(other)
        return GFElement(self.p, (self.value + o.value) % self.p)

    __radd__ = __add__

    def __neg__(self):
        return GFElement(self.p, -self.value % self.p)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        o = self._lift(other)
        return GFElement(self.p, (self.value * o.value) % self.p)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value % self.p == other % self.p
        return isinstance(other, GFElement) and other.p == self.p and other.value == self.value

    def __hash__(self):
        return hash((self.p, self.value))


class PrimeField:
    """GF(p) for a prime p < 2**31."""

    def __init__(self, p: int):
        if not 2 <= p < 2**31:
            raise QuiverError("prime field modulus must satisfy 2 <= p < 2**31")
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise QuiverError(f"{p} is not prime")
        self.p = p

    def __call__(self, n: int) -> GFElement:
        return GFElement(self.p, n % self.p)

    @property
    def one(self) -> GFElement:
        return GFElement(self.p, 1)


# ---------------------------------------------------------------------------
# elements


def _path_key(p: Path) -> tuple:
    return (p.length, p.edges, p.base)


@dataclass(frozen=True)
class AlgebraElement:
    """A finite linear combination of basis paths of one graph."""

    graph: Graph
    terms: tuple[tuple[Path, Coefficient], ...]

    @classmethod
    def from_terms(
        cls, graph: Graph, terms: Mapping[Path, Coefficient] | Iterable[tuple[Path, Coefficient]]
    ) -> "AlgebraElement":
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Path, Coefficient] = {}
        for path, coeff in pairs:
            acc[path] = acc[path] + coeff if path in acc else coeff
        kept = {p: c for p, c in acc.items() if not c == 0}
        return cls(graph, tuple(sorted(kept.items(), key=lambda t: _path_key(t[0]))))

    def coefficient(self, path: Path) -> Coefficient:
        for p, c in self.terms:
            if p == path:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.graph != self.graph:
            raise GraphMismatch("elements live over different graphs")
        return AlgebraElement.from_terms(self.graph, list(self.terms) + list(other.terms))

    def scale(self, coeff: Coefficient) -> "AlgebraElement":
        return AlgebraElement.from_terms(self.graph, [(p, coeff * c) for p, c in self.terms])

    def __neg__(self) -> "AlgebraElement":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return multiply(self, other)


def zero(graph: Graph) -> AlgebraElement:
    return AlgebraElement(graph, ())


def basis(graph: Graph, path: Path, coeff: Coefficient = Fraction(1)) -> AlgebraElement:
    """The scaled basis vector for one path."""
    if path.base:
        if path.base not in graph.vertex_set:
            raise QuiverError(f"unknown vertex {path.base!r}")
    elif not all(e in graph.edge_map for e in path.edges) or not is_path(graph, path.edges):
        raise QuiverError(f"{path!r} is not a path of the graph")
    return AlgebraElement.from_terms(graph, [(path, coeff)])


def concat(graph: Graph, p: Path, q: Path) -> Optional[Path]:
    """pq when t(p) = s(q); None otherwise (the zero branch of the product)."""
    if graph.path_target(p) != graph.path_source(q):
        return None
    if p.base:
        return q
    if q.base:
        return p
    return Path.from_edges(p.edges + q.edges)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of path concatenation."""
    if x.graph != y.graph:
        raise GraphMismatch("elements live over different graphs")
    out: list[tuple[Path, Coefficient]] = []
    for p, a in x.terms:
        for q, b in y.terms:
            pq = concat(x.graph, p, q)
            if pq is not None:
                out.append((pq, a * b))
    return AlgebraElement.from_terms(x.graph, out)


def unit(graph: Graph) -> AlgebraElement:
    """The sum of vertex idempotents (the zero element on the empty graph)."""
    return AlgebraElement.from_terms(graph, [(Path.vertex(v), Fraction(1)) for v in graph.vertices])


def is_idempotent(x: AlgebraElement) -> bool:
    return multiply(x, x) == x


def dimension(graph: Graph) -> Optional[int]:
    """|FP(E)| for loop-free graphs; None means infinite-dimensional."""
    if has_loop(graph):
        return None
    total = len(graph.vertices)
    if not graph.edges:
        return total
    a = adjacency_matrix(graph)
    power = a
    while not power.is_zero():
        total += power.total()
        power = mat_mul(power, a)
    return total


def is_commutative(graph: Graph) -> bool:
    """True iff there are no edges, or all edges are self-loops at distinct vertices."""
    if not graph.edges:
        return True
    looped: set[str] = set()
    for e in graph.edges:
        if e.src != e.dst or e.src in looped:
            return False
        looped.add(e.src)
    return True


def enumerate_graphs_with_dim(dim: int, connected_only: bool = False) -> list[Graph]:
    """All loop-free graphs (up to isomorphism) whose path algebra has this dimension.

    Isolated vertices are allowed; ``connected_only`` keeps undirected-connected
    graphs.  Supported up to dimension 8.
    """
    if dim < 1:
        raise QuiverError("dimension must be >= 1")
    if dim > _ENUM_DIM_CAP:
        raise BudgetExceeded(f"enumeration supports dimensions up to {_ENUM_DIM_CAP}")

    from .extremal import _upper_triangular_fills

    found: dict[tuple, Graph] = {}
    for m in range(1, dim + 1):
        for n_edges in range(0, dim - m + 1):
            for rows in _upper_triangular_fills(m, n_edges):
                graph = graph_from_matrix(matrix_from_rows(rows))
                if dimension(graph) != dim:
                    continue
                if connected_only and not is_connected_undirected(graph):
                    continue
                key = canonical_key(graph)
                if key not in found:
                    found[key] = graph
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# JSON


def element_to_obj(x: AlgebraElement, graph_name: str = "E") -> dict:
    terms = []
    for p, c in x.terms:
        entry: dict = {"coeff": str(c if not isinstance(c, GFElement) else c.value)}
        if p.base:
            entry["vertex"] = p.base
        else:
            entry["path"] = list(p.edges)
        terms.append(entry)
    return {"graph": graph_name, "terms": terms}
