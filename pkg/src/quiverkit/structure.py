"""Hereditary and saturated vertex subsets, homomorphisms, and admissibility.

A subset H of vertices is *hereditary* when edges starting in H end in H
(equivalently: paths starting in H end in H), and *saturated* when no
vertex outside H is a finite nonzero emitter sending every edge into H.
Infinite bundles participate exactly as countably many parallel edges: a
bundle leaving H forces its target into H for hereditariness, and its
source counts as an infinite emitter, so it can never witness a saturation
failure.

An injective homomorphism E -> F is an *admissible inclusion* when the
missing vertices F0 \\ f0(E0) form a hereditary and saturated subset and
the image captures exactly the edges of F ending in the image.  Admissible
intersections of two graphs yield admissible unions, but not conversely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    IncompatibleOverlap,
    InfiniteBundlePresent,
    NotHereditary,
    NotHomomorphism,
    NotInjective,
    PartialMap,
    QuiverError,
    StarIdCollision,
    TooManyVertices,
)
from .graph import Edge, Graph, build_graph

_SUBSET_VERTEX_CAP = 20


def _check_subset(graph: Graph, subset: Iterable[str]) -> frozenset[str]:
    members = frozenset(subset)
    unknown = members - graph.vertex_set
    if unknown:
        raise QuiverError(f"subset references unknown vertices {sorted(unknown)}")
    return members


def is_hereditary(graph: Graph, subset: Iterable[str]) -> bool:
    """True iff every edge (and bundle) starting in the subset ends in it."""
    members = _check_subset(graph, subset)
    for e in graph.edges:
        if e.src in members and e.dst not in members:
            return False
    return all(d in members for s, d in graph.infinite_bundles if s in members)


def is_saturated(graph: Graph, subset: Iterable[str]) -> bool:
    """True iff no outside vertex is a regular emitter aiming entirely into it.

    A vertex carrying an outgoing infinite bundle is an infinite emitter and
    therefore never a counterexample.
    """
    members = _check_subset(graph, subset)
    for v in graph.vertices:
        if v in members or graph.bundle_out[v]:
            continue
        out = graph.out_edges(v)
        if out and all(e.dst in members for e in out):
            return False
    return True


def _all_subsets(graph: Graph) -> Iterable[frozenset[str]]:
    if len(graph.vertices) > _SUBSET_VERTEX_CAP:
        raise TooManyVertices(
            f"subset enumeration supports at most {_SUBSET_VERTEX_CAP} vertices"
        )
    for size in range(len(graph.vertices) + 1):
        for combo in itertools.combinations(sorted(graph.vertices), size):
            yield frozenset(combo)


def hereditary_subsets(graph: Graph) -> list[frozenset[str]]:
    """All hereditary subsets, ordered by size then members."""
    return [h for h in _all_subsets(graph) if is_hereditary(graph, h)]


def saturated_subsets(graph: Graph) -> list[frozenset[str]]:
    """All saturated subsets, ordered by size then members."""
    return [h for h in _all_subsets(graph) if is_saturated(graph, h)]


def subgraph_from_hereditary(graph: Graph, subset: Iterable[str]) -> Graph:
    """Remove a hereditary subset H: keep E0 \\ H and the edges ending outside H."""
    members = _check_subset(graph, subset)
    if not is_hereditary(graph, members):
        raise NotHereditary(f"{sorted(members)} is not hereditary")
    vertices = tuple(v for v in graph.vertices if v not in members)
    edges = [(e.id, e.src, e.dst) for e in graph.edges if e.dst not in members]
    bundles = [(s, d) for s, d in graph.infinite_bundles if d not in members]
    return build_graph(vertices, edges, bundles)


@dataclass(frozen=True)
class GraphHom:
    """A pair of maps (vertices, edges); bundles map implicitly by endpoints."""

    f0: Mapping[str, str]
    f1: Mapping[str, str]


def identity_hom(graph: Graph) -> GraphHom:
    return GraphHom(
        f0={v: v for v in graph.vertices},
        f1={e.id: e.id for e in graph.edges},
    )


def _check_total(source: Graph, target: Graph, hom: GraphHom) -> None:
    missing_v = source.vertex_set - set(hom.f0)
    missing_e = set(source.edge_map) - set(hom.f1)
    if missing_v or missing_e:
        raise PartialMap(
            f"homomorphism undefined on vertices {sorted(missing_v)} / edges {sorted(missing_e)}"
        )
    bad_v = {hom.f0[v] for v in source.vertices} - target.vertex_set
    bad_e = {hom.f1[e] for e in source.edge_map} - set(target.edge_map)
    if bad_v or bad_e:
        raise QuiverError(
            f"homomorphism lands outside the target: vertices {sorted(bad_v)}, edges {sorted(bad_e)}"
        )


def is_graph_homomorphism(source: Graph, target: Graph, hom: GraphHom) -> bool:
    """Check both commuting squares s∘f1 = f0∘s and t∘f1 = f0∘t."""
    _check_total(source, target, hom)
    for e in source.edges:
        image = target.edge(hom.f1[e.id])
        if image.src != hom.f0[e.src] or image.dst != hom.f0[e.dst]:
            return False
    target_bundles = set(target.infinite_bundles)
    return all(
        (hom.f0[s], hom.f0[d]) in target_bundles for s, d in source.infinite_bundles
    )


def is_admissible_inclusion(source: Graph, target: Graph, hom: GraphHom) -> bool:
    """Check the two admissibility conditions for an injective homomorphism."""
    _check_total(source, target, hom)
    if len(set(hom.f0.values())) != len(hom.f0) or len(set(hom.f1.values())) != len(hom.f1):
        raise NotInjective("admissible inclusions must be injective")
    if not is_graph_homomorphism(source, target, hom):
        raise NotHomomorphism("map does not commute with source/target maps")

    image_vertices = {hom.f0[v] for v in source.vertices}
    missing = [v for v in target.vertices if v not in image_vertices]
    if not is_hereditary(target, missing) or not is_saturated(target, missing):
        return False

    image_edges = {hom.f1[e] for e in source.edge_map}
    captured_edges = {e.id for e in target.edges if e.dst in image_vertices}
    if image_edges != captured_edges:
        return False
    image_bundles = {(hom.f0[s], hom.f0[d]) for s, d in source.infinite_bundles}
    captured_bundles = {(s, d) for s, d in target.infinite_bundles if d in image_vertices}
    return image_bundles == captured_bundles


def admissible_subgraphs(graph: Graph) -> list[Graph]:
    """One admissible subgraph per hereditary-and-saturated subset.

    Includes the full graph (H empty) and the empty graph (H everything).
    """
    result = []
    for h in _all_subsets(graph):
        if is_hereditary(graph, h) and is_saturated(graph, h):
            result.append(subgraph_from_hereditary(graph, h))
    return result


def _check_overlap(f: Graph, g: Graph) -> None:
    for eid in set(f.edge_map) & set(g.edge_map):
        ef, eg = f.edge_map[eid], g.edge_map[eid]
        if (ef.src, ef.dst) != (eg.src, eg.dst):
            raise IncompatibleOverlap(f"edge {eid!r} has different endpoints in the two graphs")


def intersection(f: Graph, g: Graph) -> Graph:
    """Componentwise intersection; endpoint maps must agree on shared edges."""
    _check_overlap(f, g)
    g_vertices = g.vertex_set
    vertices = tuple(v for v in f.vertices if v in g_vertices)
    shared = set(g.edge_map)
    edges = [(e.id, e.src, e.dst) for e in f.edges if e.id in shared]
    bundles = sorted(set(f.infinite_bundles) & set(g.infinite_bundles))
    return build_graph(vertices, edges, bundles)


def union(f: Graph, g: Graph) -> Graph:
    """Componentwise union; endpoint maps must agree on shared edges."""
    _check_overlap(f, g)
    f_vertices = f.vertex_set
    vertices = f.vertices + tuple(v for v in g.vertices if v not in f_vertices)
    f_edges = set(f.edge_map)
    edges = [(e.id, e.src, e.dst) for e in f.edges]
    edges += [(e.id, e.src, e.dst) for e in g.edges if e.id not in f_edges]
    bundles = sorted(set(f.infinite_bundles) | set(g.infinite_bundles))
    return build_graph(vertices, edges, bundles)


def is_admissible_intersection(f: Graph, g: Graph) -> bool:
    """True iff both inclusions of the intersection graph are admissible."""
    inter = intersection(f, g)
    return is_admissible_inclusion(inter, f, identity_hom(inter)) and is_admissible_inclusion(
        inter, g, identity_hom(inter)
    )


def is_admissible_union(f: Graph, g: Graph) -> bool:
    """True iff both inclusions into the union graph are admissible."""
    return is_admissible_inclusion(f, union(f, g), identity_hom(f)) and is_admissible_inclusion(
        g, union(f, g), identity_hom(g)
    )


def extended_graph(graph: Graph) -> Graph:
    """Double the graph with one reversed ghost edge e* per edge e."""
    if graph.infinite_bundles:
        raise InfiniteBundlePresent("extended graphs are defined for bundle-free graphs")
    existing = set(graph.edge_map)
    edges = [(e.id, e.src, e.dst) for e in graph.edges]
    for e in graph.edges:
        ghost = e.id + "*"
        if ghost in existing:
            raise StarIdCollision(f"ghost id {ghost!r} collides with an existing edge")
        edges.append((ghost, e.dst, e.src))
    return Graph(
        vertices=graph.vertices,
        edges=tuple(Edge(*t) for t in edges),
        infinite_bundles=(),
    )
