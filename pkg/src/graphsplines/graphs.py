"""Edge-labeled graphs with a fixed vertex order, plus trail machinery.

A graph document fixes the vertex order; indices in this module are
0-based positions in that order.  Edges keep their document order, which
drives every deterministic enumeration below.

A trail is a walk that repeats no edge; vertices may repeat.  The zero
trails of vertex i are the trails from i to any earlier vertex, reduced
so that no returned trail's edge set strictly contains another's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .rings import DOMAINS, Domain, RingParseError

DEFAULT_TRAIL_LIMIT = 1_000_000


class GraphDocumentError(ValueError):
    """A graph document that violates the input contract."""


class TrailLimitError(RuntimeError):
    """Trail enumeration exceeded the configured cap."""


@dataclass(frozen=True)
class Edge:
    index: int
    u: int
    v: int
    label: object

    def other(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Trail:
    """Edge-simple walk; ``edges`` holds edge indices in traversal order."""

    start: int
    end: int
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    gcd: object


class LabeledGraph:
    """Simple graph with ordered vertices and nonzero edge labels."""

    def __init__(self, domain: Domain, vertex_names: Sequence[str], edges: Sequence[Edge]):
        self.domain = domain
        self.vertex_names = tuple(vertex_names)
        self.edges = tuple(edges)
        adjacency: dict[int, list[tuple[int, int]]] = {k: [] for k in range(len(self.vertex_names))}
        pair_index: dict[tuple[int, int], int] = {}
        for e in self.edges:
            adjacency[e.u].append((e.index, e.v))
            adjacency[e.v].append((e.index, e.u))
            pair_index[(e.u, e.v)] = e.index
        for lst in adjacency.values():
            lst.sort()
        self._adjacency = adjacency
        self._pair_index = pair_index

    @property
    def n(self) -> int:
        return len(self.vertex_names)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """(edge index, other endpoint) pairs in edge-index order."""
        return self._adjacency[v]

    def edge_index_between(self, u: int, v: int):
        if u > v:
            u, v = v, u
        return self._pair_index.get((u, v))

    @property
    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.domain is other.domain
            and self.vertex_names == other.vertex_names
            and self.edges == other.edges
        )

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, m={self.m}, domain={self.domain.name})"


def load_graph(document) -> LabeledGraph:
    """Build a graph from a parsed JSON document.

    Expected shape::

        {"domain": "int" | "intpoly",
         "vertices": ["v1", ...],
         "edges": [{"u": "v1", "v": "v2", "label": "5"}, ...]}
    """
    if not isinstance(document, dict):
        raise GraphDocumentError("graph document must be a JSON object")
    try:
        domain_name = document["domain"]
        vertices = document["vertices"]
        edge_docs = document["edges"]
    except KeyError as exc:
        raise GraphDocumentError(f"graph document is missing key {exc}") from None
    domain = DOMAINS.get(domain_name)
    if domain is None:
        raise GraphDocumentError(f"unknown domain {domain_name!r}")
    if not isinstance(vertices, list) or not vertices:
        raise GraphDocumentError("graph document needs a nonempty vertex list")
    if len(set(vertices)) != len(vertices):
        raise GraphDocumentError("vertex names must be distinct")
    index = {name: k for k, name in enumerate(vertices)}
    edges = []
    seen = set()
    for pos, doc in enumerate(edge_docs):
        try:
            uname, vname, text = doc["u"], doc["v"], doc["label"]
        except (TypeError, KeyError):
            raise GraphDocumentError(f"edge #{pos} must have keys u, v, label") from None
        if uname not in index or vname not in index:
            raise GraphDocumentError(f"edge #{pos} references an unknown vertex")
        u, v = index[uname], index[vname]
        if u == v:
            raise GraphDocumentError(f"edge #{pos} is a self-loop at {uname}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphDocumentError(f"duplicate edge {uname}-{vname}")
        seen.add((u, v))
        try:
            label = domain.parse(text)
        except RingParseError as exc:
            raise GraphDocumentError(f"edge #{pos}: {exc}") from None
        if domain.is_zero(label):
            raise GraphDocumentError(f"edge #{pos} has a zero label")
        edges.append(Edge(pos, u, v, label))
    return LabeledGraph(domain, vertices, edges)


def completion(g: LabeledGraph) -> LabeledGraph:
    """Complete graph on the same vertex order; missing edges get label one.

    Existing edges keep their labels and document positions, so the added
    unit edges sort after them in every enumeration.
    """
    edges = list(g.edges)
    next_index = len(edges)
    for u, v in itertools.combinations(range(g.n), 2):
        if g.edge_index_between(u, v) is None:
            edges.append(Edge(next_index, u, v, g.domain.one))
            next_index += 1
    return LabeledGraph(g.domain, g.vertex_names, edges)


def permute_vertices(g: LabeledGraph, perm: Sequence[int]) -> LabeledGraph:
    """Reindex vertices; ``perm[old]`` is the new position of vertex ``old``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("permutation must be a bijection on the vertex indices")
    names = [""] * g.n
    for old, new in enumerate(perm):
        names[new] = g.vertex_names[old]
    edges = []
    for e in g.edges:
        u, v = perm[e.u], perm[e.v]
        if u > v:
            u, v = v, u
        edges.append(Edge(e.index, u, v, e.label))
    return LabeledGraph(g.domain, names, edges)


def _trail(g: LabeledGraph, vertices: list[int], edges: list[int]) -> Trail:
    labels = [g.edges[k].label for k in edges]
    return Trail(
        start=vertices[0],
        end=vertices[-1],
        edges=tuple(edges),
        vertices=tuple(vertices),
        gcd=g.domain.gcd_all(labels),
    )


def enumerate_trails(g: LabeledGraph, start: int, end: int,
                     max_trails: int = DEFAULT_TRAIL_LIMIT) -> list[Trail]:
    """Every trail from ``start`` to ``end``, lexicographic by edge indices.

    A walk that reaches ``end`` is recorded and then extended further,
    since trails may pass through their endpoint and return to it.
    """
    if start == end:
        raise ValueError("trail endpoints must differ")
    results: list[Trail] = []
    used = [False] * g.m
    path_vertices = [start]
    path_edges: list[int] = []

    def visit(v: int) -> None:
        for edge_index, w in g.neighbors(v):
            if used[edge_index]:
                continue
            used[edge_index] = True
            path_edges.append(edge_index)
            path_vertices.append(w)
            if w == end:
                if len(results) >= max_trails:
                    raise TrailLimitError(
                        f"more than {max_trails} trails; raise the cap to continue"
                    )
                results.append(_trail(g, path_vertices, path_edges))
            visit(w)
            path_vertices.pop()
            path_edges.pop()
            used[edge_index] = False

    visit(start)
    return results


def zero_trails(g: LabeledGraph, i: int,
                max_trails: int = DEFAULT_TRAIL_LIMIT) -> list[Trail]:
    """Containment-reduced zero trails of vertex ``i`` (0-based, ``i >= 1``).

    Conceptually this enumerates every trail from vertex i to any earlier
    vertex and drops each trail whose edge set strictly contains another's
    (keeping one representative per surviving edge set).  The survivors
    are exactly the vertex-simple paths that stop at the first earlier
    vertex reached:

    * a candidate that revisits a vertex, or passes through an earlier
      vertex, edge-set-contains the shorter candidate obtained by cutting
      the detour, so it is dropped;
    * two distinct such paths cannot contain one another, because a path
      inside a path's edge set starting at the same endpoint is a prefix,
      and a proper prefix would end at an interior (hence non-earlier)
      vertex.

    So the reduced family is enumerated here directly as simple paths.
    """
    if i < 1:
        raise ValueError("the first vertex has no zero trails")
    if i >= g.n:
        raise ValueError(f"vertex index {i} out of range")
    results: list[Trail] = []
    on_path = [False] * g.n
    on_path[i] = True
    path_vertices = [i]
    path_edges: list[int] = []

    def visit(v: int) -> None:
        for edge_index, w in g.neighbors(v):
            if on_path[w]:
                continue
            path_edges.append(edge_index)
            path_vertices.append(w)
            if w < i:
                if len(results) >= max_trails:
                    raise TrailLimitError(
                        f"more than {max_trails} zero trails; raise the cap to continue"
                    )
                results.append(_trail(g, path_vertices, path_edges))
            else:
                on_path[w] = True
                visit(w)
                on_path[w] = False
            path_vertices.pop()
            path_edges.pop()

    visit(i)
    results.sort(key=lambda t: t.edges)
    return results
