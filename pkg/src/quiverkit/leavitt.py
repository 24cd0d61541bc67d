"""Leavitt path algebras via rewriting on the extended graph.

Elements live in the path algebra of the extended graph (one ghost edge e*
per edge e) modulo two relation families:

* (CK1)  e* f = delta_ef * t(e)
* (CK2)  sum over e emitted by v of e e* = v, at every regular vertex
  (finite nonzero emitter).

Orienting CK1 left-to-right and CK2 at one *distinguished* edge g(v) per
regular vertex (g(v) g(v)* rewrites to v minus the other e e* terms) gives
a terminating rewriting system whose normal forms are the monomials p q*
with t(p) = t(q), excluding those where p and q both end with the same
distinguished edge.  Equality of elements is equality of normal forms.

The distinguished edge is the last out-edge in the graph's edge order; any
fixed choice yields an isomorphic normal-form basis, determinism is what
matters here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    BudgetExceeded,
    GraphMismatch,
    InvalidWord,
    NotAdmissible,
    NotAdmissibleIntersection,
    NotRowFinite,
    QuiverError,
    UnknownEdge,
)
from .graph import Graph, Path, has_loop, is_path
from .matrices import adjacency_matrix, mat_mul
from .path_algebra import _path_key
from .structure import (
    extended_graph,
    identity_hom,
    intersection,
    is_admissible_inclusion,
    is_admissible_intersection,
    union,
)

DEFAULT_STEP_BUDGET = 10**6

Redex = tuple[str, int]
Chooser = Callable[[list[Redex]], Redex]
WordLike = Union[Path, Sequence[str]]


def _require_row_finite(graph: Graph) -> None:
    if graph.infinite_bundles:
        raise NotRowFinite("graph has an infinite emitter")


class _Rewriter:
    """Rewriting context for one base graph."""

    def __init__(self, graph: Graph):
        _require_row_finite(graph)
        self.graph = graph
        self.ext = extended_graph(graph)
        # distinguished edge per emitting vertex: last out-edge in edge order
        self.distinguished: dict[str, str] = {}
        for e in graph.edges:
            self.distinguished[e.src] = e.id
        self.out_order: dict[str, tuple[str, ...]] = {
            v: tuple(e.id for e in graph.out_edges(v)) for v in graph.vertices
        }

    # -- words -------------------------------------------------------------

    def check_word(self, word: WordLike) -> Path:
        if isinstance(word, Path):
            if word.base:
                if word.base not in self.graph.vertex_set:
                    raise InvalidWord(f"unknown vertex {word.base!r}")
                return word
            symbols: Sequence[str] = word.edges
        else:
            symbols = tuple(word)
            if len(symbols) == 1 and symbols[0] in self.graph.vertex_set:
                return Path.vertex(symbols[0])
        if not symbols:
            raise InvalidWord("empty word needs an anchor vertex")
        try:
            if not is_path(self.ext, symbols):
                raise InvalidWord(f"{'.'.join(symbols)} is not a path in the extended graph")
        except UnknownEdge as exc:
            raise InvalidWord(str(exc)) from exc
        return Path.from_edges(symbols)

    @staticmethod
    def _is_ghost(symbol: str) -> bool:
        return symbol.endswith("*")

    def redexes(self, symbols: tuple[str, ...]) -> list[Redex]:
        """CK1 positions first (left to right), then CK2 positions."""
        ck1: list[Redex] = []
        ck2: list[Redex] = []
        for i in range(len(symbols) - 1):
            a, b = symbols[i], symbols[i + 1]
            if self._is_ghost(a) and not self._is_ghost(b):
                ck1.append(("ck1", i))
            elif not self._is_ghost(a) and b == a + "*":
                if self.distinguished[self.graph.edge(a).src] == a:
                    ck2.append(("ck2", i))
        return ck1 + ck2

    def _pack(self, symbols: tuple[str, ...], anchor: str) -> Path:
        return Path.from_edges(symbols) if symbols else Path.vertex(anchor)

    def apply(self, word: Path, coeff: Fraction, redex: Redex) -> list[tuple[Path, Fraction]]:
        w = word.edges
        kind, i = redex
        if kind == "ck1":
            ghost, real = w[i], w[i + 1]
            base = ghost[:-1]
            if base != real:
                return []
            rest = w[:i] + w[i + 2 :]
            return [(self._pack(rest, self.graph.edge(base).dst), coeff)]
        g = w[i]
        v = self.graph.edge(g).src
        rest = w[:i] + w[i + 2 :]
        out = [(self._pack(rest, v), coeff)]
        for e in self.out_order[v]:
            if e != g:
                out.append((Path.from_edges(w[:i] + (e, e + "*") + w[i + 2 :]), -coeff))
        return out

    def to_monomial(self, word: Path) -> "LeavittMonomial":
        if word.base:
            v = Path.vertex(word.base)
            return LeavittMonomial(v, v)
        w = word.edges
        split = next((i for i, s in enumerate(w) if self._is_ghost(s)), len(w))
        reals, ghosts = w[:split], w[split:]
        q_edges = tuple(s[:-1] for s in reversed(ghosts))
        if reals:
            p = Path.from_edges(reals)
            target = self.graph.edge(reals[-1]).dst
        else:
            target = self.graph.edge(q_edges[-1]).dst
            p = Path.vertex(target)
        q = Path.from_edges(q_edges) if q_edges else Path.vertex(target)
        return LeavittMonomial(p, q)

    def monomial_word(self, mon: "LeavittMonomial") -> Path:
        if mon.p.base and mon.q.base:
            return Path.vertex(mon.p.base)
        symbols = mon.p.edges + tuple(e + "*" for e in reversed(mon.q.edges))
        return Path.from_edges(symbols)


@dataclass(frozen=True)
class LeavittMonomial:
    """A reduced monomial p q* with t(p) = t(q)."""

    p: Path
    q: Path

    def sort_key(self) -> tuple:
        return (_path_key(self.p), _path_key(self.q))

    def degree(self) -> int:
        return self.p.length + self.q.length


@dataclass(frozen=True)
class LeavittElement:
    """A linear combination of reduced monomials over one graph."""

    graph: Graph
    terms: tuple[tuple[LeavittMonomial, Fraction], ...]

    @classmethod
    def from_terms(
        cls,
        graph: Graph,
        terms: Mapping[LeavittMonomial, Fraction] | Iterable[tuple[LeavittMonomial, Fraction]],
    ) -> "LeavittElement":
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LeavittMonomial, Fraction] = {}
        for mon, coeff in pairs:
            acc[mon] = acc.get(mon, Fraction(0)) + coeff
        kept = {m: c for m, c in acc.items() if c != 0}
        return cls(graph, tuple(sorted(kept.items(), key=lambda t: t[0].sort_key())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mon: LeavittMonomial) -> Fraction:
        for m, c in self.terms:
            if m == mon:
                return c
        return Fraction(0)

    def as_vector(self) -> dict:
        return {m: c for m, c in self.terms}

    def __add__(self, other: "LeavittElement") -> "LeavittElement":
        if other.graph != self.graph:
            raise GraphMismatch("elements live over different graphs")
        return LeavittElement.from_terms(self.graph, list(self.terms) + list(other.terms))

    def scale(self, coeff: Fraction) -> "LeavittElement":
        return LeavittElement.from_terms(self.graph, [(m, coeff * c) for m, c in self.terms])

    def __neg__(self) -> "LeavittElement":
        return self.scale(Fraction(-1))

    def __sub__(self, other: "LeavittElement") -> "LeavittElement":
        return self + (-other)

    def __mul__(self, other: "LeavittElement") -> "LeavittElement":
        return multiply(self, other)


_REWRITERS: dict[Graph, _Rewriter] = {}


def _rewriter(graph: Graph) -> _Rewriter:
    rw = _REWRITERS.get(graph)
    if rw is None:
        rw = _Rewriter(graph)
        _REWRITERS[graph] = rw
    return rw


def _reduce_items(
    graph: Graph,
    items: Iterable[tuple[Path, Fraction]],
    chooser: Optional[Chooser] = None,
    budget: int = DEFAULT_STEP_BUDGET,
) -> LeavittElement:
    rw = _rewriter(graph)
    stack = [(word, Fraction(coeff)) for word, coeff in items]
    acc: dict[LeavittMonomial, Fraction] = {}
    steps = 0
    while stack:
        steps += 1
        if steps > budget:
            raise BudgetExceeded(f"rewriting exceeded {budget} steps")
        word, coeff = stack.pop()
        if coeff == 0:
            continue
        if word.base:
            mon = rw.to_monomial(word)
            acc[mon] = acc.get(mon, Fraction(0)) + coeff
            continue
        redexes = rw.redexes(word.edges)
        if not redexes:
            mon = rw.to_monomial(word)
            acc[mon] = acc.get(mon, Fraction(0)) + coeff
            continue
        choice = redexes[0] if chooser is None else chooser(redexes)
        stack.extend(rw.apply(word, coeff, choice))
    return LeavittElement.from_terms(graph, acc)


def _as_word(w: WordLike) -> Path | tuple[str, ...]:
    if isinstance(w, Path):
        return w
    if isinstance(w, str):
        return (w,)
    return tuple(w)


def reduce(
    graph: Graph,
    words: WordLike | Mapping[WordLike, Fraction] | Iterable[tuple[WordLike, Fraction]],
    chooser: Optional[Chooser] = None,
    budget: int = DEFAULT_STEP_BUDGET,
) -> LeavittElement:
    """Normal form of a word (or linear combination of words) in the algebra.

    A word is a sequence of extended-graph edge ids (ghosts carry a ``*``
    suffix) or a single vertex id; it must be a path in the extended graph.
    """
    rw = _rewriter(graph)
    if isinstance(words, (Path, str)) or (
        isinstance(words, Sequence) and all(isinstance(s, str) for s in words)
    ):
        items = [(rw.check_word(_as_word(words)), Fraction(1))]
    elif isinstance(words, Mapping):
        items = [(rw.check_word(_as_word(w)), Fraction(c)) for w, c in words.items()]
    else:
        items = [(rw.check_word(_as_word(w)), Fraction(c)) for w, c in words]
    return _reduce_items(graph, items, chooser=chooser, budget=budget)


def monomial(graph: Graph, p: Sequence[str] | Path, q: Sequence[str] | Path | None = None) -> LeavittElement:
    """The class of p q* (q defaults to the target vertex of p)."""
    rw = _rewriter(graph)
    p_path = p if isinstance(p, Path) else (Path.from_edges(p) if p else None)
    q_path = q if isinstance(q, Path) or q is None else (Path.from_edges(q) if q else None)
    if p_path is None and q_path is None:
        raise InvalidWord("monomial needs at least one of p, q")
    if p_path is None:
        p_path = Path.vertex(graph.path_target(q_path))
    if q_path is None:
        q_path = Path.vertex(graph.path_target(p_path))
    symbols = p_path.edges + tuple(e + "*" for e in reversed(q_path.edges))
    word = rw.check_word(Path.from_edges(symbols) if symbols else (p_path.base,))
    return _reduce_items(graph, [(word, Fraction(1))])


def vertex_element(graph: Graph, v: str) -> LeavittElement:
    rw = _rewriter(graph)
    return _reduce_items(graph, [(rw.check_word((v,)), Fraction(1))])


def unit(graph: Graph) -> LeavittElement:
    """The sum of vertex classes (zero on the empty graph)."""
    rw = _rewriter(graph)
    return _reduce_items(graph, [(rw.check_word((v,)), Fraction(1)) for v in graph.vertices])


def multiply(x: LeavittElement, y: LeavittElement) -> LeavittElement:
    """Concatenate monomial words pairwise and reduce."""
    if x.graph != y.graph:
        raise GraphMismatch("elements live over different graphs")
    rw = _rewriter(x.graph)
    ext = rw.ext
    items: list[tuple[Path, Fraction]] = []
    for m1, c1 in x.terms:
        w1 = rw.monomial_word(m1)
        for m2, c2 in y.terms:
            w2 = rw.monomial_word(m2)
            if ext.path_target(w1) != ext.path_source(w2):
                continue
            symbols = w1.edges + w2.edges
            word = Path.from_edges(symbols) if symbols else Path.vertex(w1.base)
            items.append((word, c1 * c2))
    return _reduce_items(x.graph, items)


# ---------------------------------------------------------------------------
# bases and dimensions


def _paths_by_target(graph: Graph) -> dict[str, list[Path]]:
    """All finite paths grouped by target (graph must be loop-free)."""
    groups: dict[str, list[Path]] = {v: [Path.vertex(v)] for v in graph.vertices}
    frontier = [Path.vertex(v) for v in graph.vertices]
    while frontier:
        new: list[Path] = []
        for path in frontier:
            tail = graph.path_target(path)
            for e in graph.out_edges(tail):
                longer = Path.from_edges(path.edges + (e.id,))
                groups[e.dst].append(longer)
                new.append(longer)
        frontier = new
    return groups


def reduced_basis(graph: Graph) -> list[LeavittMonomial]:
    """The normal-form monomial basis (finite iff the graph is loop-free)."""
    if has_loop(graph):
        raise QuiverError("the reduced basis is infinite for graphs with loops")
    rw = _rewriter(graph)
    groups = _paths_by_target(graph)
    basis: list[LeavittMonomial] = []
    for v in graph.vertices:
        for p in groups[v]:
            for q in groups[v]:
                if (
                    p.edges
                    and q.edges
                    and p.edges[-1] == q.edges[-1]
                    and rw.distinguished[graph.edge(p.edges[-1]).src] == p.edges[-1]
                ):
                    continue
                basis.append(LeavittMonomial(p, q))
    basis.sort(key=lambda m: m.sort_key())
    return basis


def dimension_if_finite(graph: Graph) -> Optional[int]:
    """Dimension of the algebra, or None when a loop makes it infinite.

    Loop-free graphs give a direct sum of matrix algebras; the count equals
    sum over targets u of n_u^2 minus one n_v^2 per emitting vertex v,
    where n_u is the number of paths ending at u.
    """
    _require_row_finite(graph)
    if has_loop(graph):
        return None
    ends = {v: 1 for v in graph.vertices}
    if graph.edges:
        a = adjacency_matrix(graph)
        power = a
        while not power.is_zero():
            for j, v in enumerate(graph.vertices):
                ends[v] += sum(power.rows[i][j] for i in range(len(graph.vertices)))
            power = mat_mul(power, a)
    total = sum(n * n for n in ends.values())
    for v in graph.vertices:
        if graph.out_edges(v):
            total -= ends[v] * ends[v]
    return total


# ---------------------------------------------------------------------------
# quotient maps and the pullback check


def _check_admissible_subgraph(full: Graph, sub: Graph) -> None:
    _require_row_finite(full)
    _require_row_finite(sub)
    for v in sub.vertices:
        if v not in full.vertex_set:
            raise NotAdmissible(f"subgraph vertex {v!r} is not in the ambient graph")
    for e in sub.edges:
        if e.id not in full.edge_map:
            raise NotAdmissible(f"subgraph edge {e.id!r} is not in the ambient graph")
        amb = full.edge_map[e.id]
        if (amb.src, amb.dst) != (e.src, e.dst):
            raise NotAdmissible(f"subgraph edge {e.id!r} changed endpoints")
    if not is_admissible_inclusion(sub, full, identity_hom(sub)):
        raise NotAdmissible("inclusion is not admissible")


def quotient_map(full: Graph, sub: Graph, x: LeavittElement) -> LeavittElement:
    """The canonical surjection onto the subalgebra of an admissible subgraph.

    Generators outside the subgraph go to zero; the rest re-reduce with the
    subgraph's own rewriting system.
    """
    if x.graph != full:
        raise GraphMismatch("element does not live over the ambient graph")
    _check_admissible_subgraph(full, sub)
    sub_edges = set(sub.edge_map)
    sub_vertices = sub.vertex_set
    items: list[tuple[Path, Fraction]] = []
    rw_sub = _rewriter(sub)
    for mon, coeff in x.terms:
        if mon.p.base and mon.p.base not in sub_vertices:
            continue
        if any(e not in sub_edges for e in mon.p.edges + mon.q.edges):
            continue
        items.append((rw_sub.check_word(rw_sub.monomial_word(mon)), coeff))
    return _reduce_items(sub, items)


def in_vertex_ideal(full: Graph, sub: Graph, x: LeavittElement) -> bool:
    """Membership in the ideal generated by the removed vertices."""
    return quotient_map(full, sub, x).is_zero()


def _rank(vectors: list[dict]) -> int:
    pivots: list[tuple[object, dict]] = []
    for vec in vectors:
        v = {k: c for k, c in vec.items() if c != 0}
        for key, row in pivots:
            c = v.get(key)
            if c:
                for k2, c2 in row.items():
                    v[k2] = v.get(k2, Fraction(0)) - c * c2
                v = {k: c2 for k, c2 in v.items() if c2 != 0}
        if v:
            key = min(v, key=repr)
            inv = 1 / v[key]
            pivots.append((key, {k: c * inv for k, c in v.items()}))
    return len(pivots)


@dataclass(frozen=True)
class PullbackReport:
    """Outcome of checking L(F1 u F2) against the pullback of the quotients."""

    compatible: bool
    dims: Optional[dict[str, int]]
    injective: Optional[bool]
    surjective: Optional[bool]
    filtration_degree: Optional[int]
    witnesses: tuple[str, ...]

    @property
    def passed(self) -> bool:
        checks = [self.compatible, self.injective]
        if self.surjective is not None:
            checks.append(self.surjective)
        return all(bool(c) for c in checks) and not self.witnesses

    def to_obj(self) -> dict:
        return {
            "compatible": self.compatible,
            "dims": self.dims,
            "injective": self.injective,
            "surjective": self.surjective,
            "filtration_degree": self.filtration_degree,
            "witnesses": list(self.witnesses),
        }


def _generator_words(graph: Graph) -> list[tuple[str, Path]]:
    gens: list[tuple[str, Path]] = [(v, Path.vertex(v)) for v in graph.vertices]
    for e in graph.edges:
        gens.append((e.id, Path.from_edges((e.id,))))
        gens.append((e.id + "*", Path.from_edges((e.id + "*",))))
    return gens


def _bounded_monomials(graph: Graph, degree: int) -> list[LeavittMonomial]:
    rw = _rewriter(graph)
    by_target: dict[str, list[Path]] = {v: [Path.vertex(v)] for v in graph.vertices}
    frontier = [Path.vertex(v) for v in graph.vertices]
    for _ in range(degree):
        new: list[Path] = []
        for path in frontier:
            tail = graph.path_target(path)
            for e in graph.out_edges(tail):
                longer = Path.from_edges(path.edges + (e.id,))
                by_target[e.dst].append(longer)
                new.append(longer)
        frontier = new
    mons: list[LeavittMonomial] = []
    for v in graph.vertices:
        for p in by_target[v]:
            for q in by_target[v]:
                if p.length + q.length > degree:
                    continue
                if (
                    p.edges
                    and q.edges
                    and p.edges[-1] == q.edges[-1]
                    and rw.distinguished[graph.edge(p.edges[-1]).src] == p.edges[-1]
                ):
                    continue
                mons.append(LeavittMonomial(p, q))
    mons.sort(key=lambda m: m.sort_key())
    return mons


def pullback_check(f1: Graph, f2: Graph, filtration_degree: int = 4) -> PullbackReport:
    """Verify that the union algebra matches the pullback of the two quotients.

    With every algebra finite-dimensional the check is exact linear algebra
    over the rationals; otherwise it restricts to monomials of bounded
    degree and reports evidence rather than proof.
    """
    _require_row_finite(f1)
    _require_row_finite(f2)
    inter = intersection(f1, f2)
    uni = union(f1, f2)
    _require_row_finite(uni)
    if not is_admissible_intersection(f1, f2):
        raise NotAdmissibleIntersection("the intersection graph is not admissible")

    witnesses: list[str] = []

    def pair_vector(a: LeavittElement, b: LeavittElement) -> dict:
        vec: dict = {}
        for m, c in a.terms:
            vec[("L", m.sort_key())] = c
        for m, c in b.terms:
            vec[("R", m.sort_key())] = c
        return vec

    # compatibility of the two routes into L(intersection) on all generators
    compatible = True
    for name, word in _generator_words(uni):
        g = reduce(uni, word)
        left = quotient_map(uni, f1, g)
        right = quotient_map(uni, f2, g)
        if quotient_map(f1, inter, left) != quotient_map(f2, inter, right):
            compatible = False
            witnesses.append(f"generator {name!r}: routes through the two quotients disagree")

    all_finite = not (has_loop(f1) or has_loop(f2) or has_loop(uni) or has_loop(inter))
    if all_finite:
        d1 = dimension_if_finite(f1)
        d2 = dimension_if_finite(f2)
        d0 = dimension_if_finite(inter)
        du = dimension_if_finite(uni)
        assert None not in (d1, d2, d0, du)
        phi_rows = []
        for mon in reduced_basis(f1):
            img = quotient_map(f1, inter, LeavittElement.from_terms(f1, {mon: Fraction(1)}))
            phi_rows.append({m.sort_key(): c for m, c in img.terms})
        for mon in reduced_basis(f2):
            img = quotient_map(f2, inter, LeavittElement.from_terms(f2, {mon: Fraction(1)}))
            phi_rows.append({m.sort_key(): -c for m, c in img.terms})
        dim_pullback = d1 + d2 - _rank(phi_rows)

        psi_rows = []
        for mon in reduced_basis(uni):
            x = LeavittElement.from_terms(uni, {mon: Fraction(1)})
            psi_rows.append(pair_vector(quotient_map(uni, f1, x), quotient_map(uni, f2, x)))
        injective = _rank(psi_rows) == du
        surjective = injective and du == dim_pullback
        if du != dim_pullback:
            witnesses.append(f"dim L(union) = {du} but dim pullback = {dim_pullback}")
        return PullbackReport(
            compatible=compatible,
            dims={
                "intersection": d0,
                "left": d1,
                "right": d2,
                "union": du,
                "pullback": dim_pullback,
            },
            injective=injective,
            surjective=surjective,
            filtration_degree=None,
            witnesses=tuple(witnesses),
        )

    # infinite-dimensional route: bounded-degree evidence only
    mons = _bounded_monomials(uni, filtration_degree)
    psi_rows = []
    for mon in mons:
        x = LeavittElement.from_terms(uni, {mon: Fraction(1)})
        psi_rows.append(pair_vector(quotient_map(uni, f1, x), quotient_map(uni, f2, x)))
    injective = _rank(psi_rows) == len(mons)
    if not injective:
        witnesses.append("bounded-degree monomials map to linearly dependent pairs")
    for graph, tag in ((f1, "left"), (f2, "right")):
        for name, word in _generator_words(graph):
            target = reduce(graph, word)
            lifted = reduce(uni, word)
            image = quotient_map(uni, graph, lifted)
            if image != target:
                witnesses.append(f"{tag} generator {name!r} is not hit by its canonical lift")
    return PullbackReport(
        compatible=compatible,
        dims=None,
        injective=injective,
        surjective=None,
        filtration_degree=filtration_degree,
        witnesses=tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# JSON


def element_to_obj(x: LeavittElement, graph_name: str = "E") -> dict:
    terms = []
    for mon, coeff in x.terms:
        entry: dict = {"p": list(mon.p.edges), "q": list(mon.q.edges), "coeff": str(coeff)}
        if mon.p.base and mon.q.base:
            entry["vertex"] = mon.p.base
        terms.append(entry)
    return {"graph": graph_name, "terms": terms}
