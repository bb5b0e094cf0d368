"""Spline verification, vertex invariants, selections, and constructions.

A spline on an edge-labeled graph is a vertex vector whose difference
across every edge is divisible by that edge's label.  For vertex i the
leading value is the lcm of the gcds of its zero trails; the product of
all leading values is the determinant target used by the basis check.

A selection at vertex i picks one edge from every zero trail of length
greater than one.  Each pick contributes the quotient of its label by the
trail gcd; the product of those quotients times the leading value is the
nonzero value used by the spline constructions at the end of the module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graphs import DEFAULT_TRAIL_LIMIT, Edge, LabeledGraph, Trail, zero_trails


class DisconnectedGraphError(ValueError):
    """A vertex with no trail to any earlier vertex; leading values need a
    connected graph."""


class SplineConstructionError(RuntimeError):
    """A constructed vector failed its own spline check."""


def first_violation(g: LabeledGraph, values: Sequence) -> Optional[Edge]:
    """First edge (document order) whose divisibility condition fails."""
    if len(values) != g.n:
        raise ValueError(f"expected {g.n} values, got {len(values)}")
    d = g.domain
    vals = [d.coerce(v) for v in values]
    for e in g.edges:
        if not d.divides(e.label, d.sub(vals[e.u], vals[e.v])):
            return e
    return None


def is_spline(g: LabeledGraph, values: Sequence) -> bool:
    return first_violation(g, values) is None


def leading_value(g: LabeledGraph, i: int):
    """lcm of the zero-trail gcds of vertex ``i``; one for the first vertex."""
    if not 0 <= i < g.n:
        raise ValueError(f"vertex index {i} out of range")
    if i == 0:
        return g.domain.one
    trails = zero_trails(g, i)
    if not trails:
        raise DisconnectedGraphError(
            f"vertex {g.vertex_names[i]} has no trail to any earlier vertex"
        )
    return g.domain.lcm_all(t.gcd for t in trails)


def leading_values(g: LabeledGraph) -> list:
    return [leading_value(g, i) for i in range(g.n)]


def determinant_target(g: LabeledGraph):
    """Product of all leading values, canonical; the determinant of any
    basis equals this up to a unit."""
    d = g.domain
    return d.canonical(d.product(leading_values(g)))


@dataclass(frozen=True)
class TrailFactors:
    """Quotients label/trail-gcd for one zero trail of length > 1."""

    trail: Trail
    factors: tuple


def trail_factor_sets(g: LabeledGraph, i: int) -> list[TrailFactors]:
    """Factor sets of the long zero trails of vertex ``i``.

    The factors of one trail always have unit gcd, since the trail gcd has
    been divided out of every label.
    """
    if not 1 <= i < g.n:
        raise ValueError(f"vertex index {i} out of range")
    d = g.domain
    out = []
    for t in zero_trails(g, i):
        if len(t.edges) <= 1:
            continue
        factors = tuple(d.exact_div(g.edges[k].label, t.gcd) for k in t.edges)
        out.append(TrailFactors(t, factors))
    return out


@dataclass(frozen=True, eq=False)
class Selection:
    """One chosen edge per long zero trail of a vertex.

    ``labels`` is the set of chosen labels (canonical associates, ordered
    by the smallest edge index carrying each label), ``product`` the
    product of the per-trail quotient factors, and ``value`` the canonical
    product of ``product`` with the vertex's leading value.  ``h_edges``
    are the indices of every edge in the graph whose canonical label is
    among the chosen labels.
    """

    graph: LabeledGraph = field(repr=False)
    vertex: int
    trails: tuple[Trail, ...] = field(repr=False)
    chosen: tuple[int, ...]
    factors: tuple
    labels: tuple
    product: object
    value: object
    h_edges: frozenset = field(repr=False)


def _label_keys(g: LabeledGraph) -> dict:
    """Map each canonical label to the smallest edge index carrying it."""
    keys: dict = {}
    for e in g.edges:
        c = g.domain.canonical(e.label)
        keys.setdefault(c, e.index)
    return keys


def _minimal_hitting_sets(trail_keysets: list[tuple[int, ...]]) -> list[frozenset[int]]:
    """All inclusion-minimal key sets meeting every listed key set.

    Branches on the first unhit set; a branch whose partial set already
    contains a recorded hitting set cannot lead to a new minimal one.
    """
    found: list[frozenset[int]] = []

    def extend(chosen: frozenset[int]) -> None:
        target = None
        for ks in trail_keysets:
            if not any(k in chosen for k in ks):
                target = ks
                break
        if target is None:
            found.append(chosen)
            return
        for k in target:
            nxt = chosen | {k}
            if any(f <= nxt for f in found):
                continue
            extend(nxt)

    extend(frozenset())
    unique = set(found)
    minimal = [s for s in unique if not any(o < s for o in unique)]
    return sorted(minimal, key=lambda s: tuple(sorted(s)))


def _assign_edges(g: LabeledGraph, trails: Sequence[Trail],
                  keyset: frozenset[int], key_of_edge) -> list[int]:
    """One edge per trail with label key in ``keyset``, realizing every key.

    Each trail starts on its lowest-indexed qualifying edge.  Keys that no
    trail ended up choosing are repaired by reassigning trails along an
    augmenting chain; for minimal selections the repair never fires, since
    every key has a trail on which it is the only qualifying one.
    """
    qualifying: list[list[int]] = []
    for t in trails:
        q = sorted(k for k in t.edges if key_of_edge[k] in keyset)
        if not q:
            raise ValueError(
                "label set misses the trail through "
                + "-".join(g.vertex_names[v] for v in t.vertices)
            )
        qualifying.append(q)
    choice = [q[0] for q in qualifying]
    counts: dict[int, int] = {}
    for e in choice:
        k = key_of_edge[e]
        counts[k] = counts.get(k, 0) + 1

    def trail_keys(ti: int) -> set[int]:
        return {key_of_edge[e] for e in qualifying[ti]}

    def realize(key: int, banned: set[int]) -> bool:
        for ti in range(len(trails)):
            if ti in banned or key not in trail_keys(ti):
                continue
            old = key_of_edge[choice[ti]]
            if old == key:
                continue
            banned.add(ti)
            if counts[old] > 1 or realize(old, banned):
                choice[ti] = min(e for e in qualifying[ti] if key_of_edge[e] == key)
                counts[old] -= 1
                counts[key] = counts.get(key, 0) + 1
                return True
        return False

    for key in sorted(keyset):
        if counts.get(key, 0) == 0 and not realize(key, set()):
            raise ValueError("label set is not realizable as a selection")
    return choice


def _build_selection(g: LabeledGraph, i: int, trails: Sequence[Trail],
                     choice: Sequence[int]) -> Selection:
    d = g.domain
    factors = tuple(
        d.exact_div(g.edges[e].label, t.gcd) for t, e in zip(trails, choice)
    )
    key_of = _label_keys(g)
    label_set = {d.canonical(g.edges[e].label) for e in choice}
    labels = tuple(sorted(label_set, key=lambda c: key_of[c]))
    product = d.canonical(d.product(factors))
    value = d.canonical(d.mul(product, leading_value(g, i)))
    h_edges = frozenset(
        e.index for e in g.edges if d.canonical(e.label) in label_set
    )
    return Selection(
        graph=g,
        vertex=i,
        trails=tuple(trails),
        chosen=tuple(choice),
        factors=factors,
        labels=labels,
        product=product,
        value=value,
        h_edges=h_edges,
    )


def _long_trails(g: LabeledGraph, i: int,
                 max_trails: int = DEFAULT_TRAIL_LIMIT) -> tuple[Trail, ...]:
    return tuple(t for t in zero_trails(g, i, max_trails) if len(t.edges) > 1)


def minimal_selections(g: LabeledGraph, i: int,
                       max_trails: int = DEFAULT_TRAIL_LIMIT) -> list[Selection]:
    """Selections whose label sets are minimal under inclusion.

    These are exactly the minimal hitting sets of the long zero trails,
    viewed as sets of labels: every selection's label set meets every long
    trail, and a minimal such set is realized by picking, per trail, the
    lowest-indexed edge whose label it contains.
    """
    if not 1 <= i <= g.n - 2:
        raise ValueError(
            f"selections exist for vertex indices 1..{g.n - 2}, got {i}"
        )
    trails = _long_trails(g, i, max_trails)
    if not trails:
        return [_build_selection(g, i, (), ())]
    key_of = _label_keys(g)
    key_of_edge = {e.index: key_of[g.domain.canonical(e.label)] for e in g.edges}
    keysets = [tuple(sorted({key_of_edge[k] for k in t.edges})) for t in trails]
    out = []
    for s in _minimal_hitting_sets(keysets):
        choice = _assign_edges(g, trails, s, key_of_edge)
        out.append(_build_selection(g, i, trails, choice))
    return out


def selection_from_labels(g: LabeledGraph, i: int, labels,
                          max_trails: int = DEFAULT_TRAIL_LIMIT) -> Selection:
    """Selection with the given label set, canonical assignment.

    Raises ValueError when some long trail carries none of the labels or
    some label cannot be realized by any assignment.
    """
    if not 1 <= i <= g.n - 2:
        raise ValueError(
            f"selections exist for vertex indices 1..{g.n - 2}, got {i}"
        )
    d = g.domain
    key_of = _label_keys(g)
    keyset = set()
    for lab in labels:
        c = d.canonical(d.coerce(lab))
        if c not in key_of:
            raise ValueError(f"no edge carries the label {d.format(c)}")
        keyset.add(key_of[c])
    trails = _long_trails(g, i, max_trails)
    if not trails:
        if keyset:
            raise ValueError("vertex has no long zero trail; only the empty "
                             "label set is realizable")
        return _build_selection(g, i, (), ())
    key_of_edge = {e.index: key_of[d.canonical(e.label)] for e in g.edges}
    choice = _assign_edges(g, trails, frozenset(keyset), key_of_edge)
    return _build_selection(g, i, trails, choice)


def _check_output(g: LabeledGraph, values: list, what: str) -> list:
    e = first_violation(g, values)
    if e is not None:
        raise SplineConstructionError(
            f"{what} failed the spline check on edge "
            f"{g.vertex_names[e.u]}-{g.vertex_names[e.v]} "
            f"(label {g.domain.format(e.label)})"
        )
    return values


def single_vertex_spline(g: LabeledGraph, a: Selection) -> list:
    """Spline supported on one vertex, when every incident label is chosen.

    Requires each edge at the selection's vertex to carry a label from the
    selection's label set; the value there is the selection value, zero
    elsewhere.
    """
    if a.graph != g:
        raise ValueError("selection was computed on a different graph")
    d = g.domain
    i = a.vertex
    for k, w in g.neighbors(i):
        if k not in a.h_edges:
            raise ValueError(
                f"label of edge {g.vertex_names[i]}-{g.vertex_names[w]} "
                "is not in the selection"
            )
    values = [d.zero] * g.n
    values[i] = a.value
    return _check_output(g, values, "single-vertex construction")


def selection_spline(k: LabeledGraph, a: Selection) -> list:
    """Two-valued spline on a complete graph built from a selection.

    With i the selection's vertex and X its value: vertex i gets X; every
    later vertex whose edge to i is outside the selection subgraph gets X;
    a later vertex whose edge to i is inside gets zero when its edges to
    all of the X-forced vertices are inside, else X; earlier vertices get
    zero.  The output is checked and a violation raises, which happens
    only outside the construction's guarantees (equal labels on distinct
    edges, or a label set that is not inclusion-minimal).
    """
    if not k.is_complete:
        raise ValueError("the selection construction needs a complete graph")
    if a.graph != k:
        raise ValueError("selection was computed on a different graph")
    i = a.vertex
    if not 1 <= i <= k.n - 2:
        raise ValueError(f"construction applies to vertex indices 1..{k.n - 2}")
    d = k.domain
    x = a.value
    values = [d.zero] * k.n
    values[i] = x
    outside = [
        s for s in range(i + 1, k.n)
        if k.edge_index_between(i, s) not in a.h_edges
    ]
    for s in outside:
        values[s] = x
    for s in range(i + 1, k.n):
        if s in outside:
            continue
        if all(k.edge_index_between(s, t) in a.h_edges for t in outside):
            values[s] = d.zero
        else:
            values[s] = x
    return _check_output(k, values, "selection construction")


def induced_spline(f: Sequence, a: Selection, a_star: Selection) -> list:
    """Transport a two-valued spline of ``a`` to a superset selection.

    Values equal to ``a.value`` become ``a_star.value``; zeros stay zero;
    anything else is rejected.
    """
    if a.graph != a_star.graph or a.vertex != a_star.vertex:
        raise ValueError("selections must target the same vertex of the same graph")
    if not set(a.labels) <= set(a_star.labels):
        raise ValueError("the first selection's labels must be contained "
                         "in the second's")
    g = a.graph
    d = g.domain
    if len(f) != g.n:
        raise ValueError(f"expected {g.n} values, got {len(f)}")
    out = []
    for v in f:
        v = d.coerce(v)
        if v == a.value:
            out.append(a_star.value)
        elif d.is_zero(v):
            out.append(d.zero)
        else:
            raise ValueError(
                f"value {d.format(v)} is neither zero nor the selection value"
            )
    return _check_output(g, out, "induced spline")


def top_spline(g: LabeledGraph) -> list:
    """Flow-up spline of the last vertex: zeros below, leading value on top."""
    d = g.domain
    values = [d.zero] * g.n
    values[g.n - 1] = leading_value(g, g.n - 1)
    return _check_output(g, values, "top spline")
