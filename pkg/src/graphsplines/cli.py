"""Command line driver.

Subcommands operate on graph documents and spline documents (JSON, see
the module docstrings of ``graphs`` and the README).  Exit codes: 0 for
success or an affirmative verdict, 1 for a negative verdict, 2 for any
input or usage problem.  Output is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import basis as basis_mod
from . import graphs, splines
from .graphs import DEFAULT_TRAIL_LIMIT


def _read_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_graph(path: str) -> graphs.LabeledGraph:
    return graphs.load_graph(_read_json(path))


def _load_spline(path: str, g: graphs.LabeledGraph) -> list:
    doc = _read_json(path)
    if not isinstance(doc, dict) or "values" not in doc:
        raise ValueError(f"{path}: spline document needs a 'values' key")
    values = doc["values"]
    if not isinstance(values, list) or len(values) != g.n:
        raise ValueError(f"{path}: expected {g.n} values")
    return [g.domain.parse(v) for v in values]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _vertex_index(g: graphs.LabeledGraph, vertex: int, top: int) -> int:
    # Command line indices are 1-based positions in the vertex order.
    if vertex is None:
        raise ValueError("this command needs --vertex")
    if not 2 <= vertex <= top:
        raise ValueError(f"--vertex must be between 2 and {top}")
    return vertex - 1


def _edge_obj(g: graphs.LabeledGraph, e: graphs.Edge) -> dict:
    return {
        "index": e.index,
        "u": g.vertex_names[e.u],
        "v": g.vertex_names[e.v],
        "label": g.domain.format(e.label),
    }


def _edge_name(g: graphs.LabeledGraph, e: graphs.Edge) -> str:
    return f"{g.vertex_names[e.u]}-{g.vertex_names[e.v]}"


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    values = _load_spline(args.spline, g)
    d = g.domain
    checked = []
    violation = None
    for e in g.edges:
        diff = d.sub(values[e.u], values[e.v])
        ok = d.divides(e.label, diff)
        checked.append((e, diff, ok))
        if not ok:
            violation = e
            break
    if args.format == "json":
        _emit_json({
            "is_spline": violation is None,
            "edges": [
                {**_edge_obj(g, e), "difference": d.format(diff), "ok": ok}
                for e, diff, ok in checked
            ],
        })
    else:
        for e, diff, ok in checked:
            status = "ok" if ok else "FAIL"
            print(f"edge {_edge_name(g, e)} label {d.format(e.label)}: "
                  f"{status} (difference {d.format(diff)})")
        print("spline" if violation is None else
              f"not a spline: edge {_edge_name(g, violation)} fails")
    return 0 if violation is None else 1


def _cmd_invariants(args) -> int:
    g = _load_graph(args.graph)
    d = g.domain
    leads = splines.leading_values(g)
    q = splines.determinant_target(g)
    if args.format == "json":
        _emit_json({
            "leading_values": [d.format(v) for v in leads],
            "q_g": d.format(q),
        })
    else:
        for name, v in zip(g.vertex_names, leads):
            print(f"lead[{name}] = {d.format(v)}")
        print(f"q_g = {d.format(q)}")
    return 0


def _cmd_trails(args) -> int:
    g = _load_graph(args.graph)
    i = _vertex_index(g, args.vertex, g.n)
    d = g.domain
    trails = graphs.zero_trails(g, i, args.max_trails)
    if args.format == "json":
        _emit_json({
            "vertex": g.vertex_names[i],
            "trails": [
                {
                    "path": [g.vertex_names[v] for v in t.vertices],
                    "edges": [_edge_obj(g, g.edges[k]) for k in t.edges],
                    "gcd": d.format(t.gcd),
                }
                for t in trails
            ],
        })
    else:
        for t in trails:
            path = "-".join(g.vertex_names[v] for v in t.vertices)
            labels = ", ".join(d.format(g.edges[k].label) for k in t.edges)
            print(f"trail {path}: labels [{labels}] gcd {d.format(t.gcd)}")
        print(f"{len(trails)} zero trails of {g.vertex_names[i]}")
    return 0


def _selection_obj(g: graphs.LabeledGraph, sel_id: int,
                   sel: splines.Selection) -> dict:
    d = g.domain
    return {
        "id": sel_id,
        "vertex": g.vertex_names[sel.vertex],
        "vertex_index": sel.vertex + 1,
        "labels": [d.format(lab) for lab in sel.labels],
        "choices": [
            {
                "path": [g.vertex_names[v] for v in t.vertices],
                "chosen_edge": _edge_obj(g, g.edges[e]),
                "factor": d.format(f),
            }
            for t, e, f in zip(sel.trails, sel.chosen, sel.factors)
        ],
        "product": d.format(sel.product),
        "value": d.format(sel.value),
    }


def _cmd_selections(args) -> int:
    g = _load_graph(args.graph)
    i = _vertex_index(g, args.vertex, g.n - 1)
    d = g.domain
    sels = splines.minimal_selections(g, i, args.max_trails)
    if args.format == "json":
        _emit_json({
            "vertex": g.vertex_names[i],
            "count": len(sels),
            "selections": [_selection_obj(g, k, s) for k, s in enumerate(sels)],
        })
    else:
        for k, s in enumerate(sels):
            labels = ", ".join(d.format(lab) for lab in s.labels)
            print(f"selection {k}: labels {{{labels}}} "
                  f"product {d.format(s.product)} value {d.format(s.value)}")
        print(f"{len(sels)} minimal selections at {g.vertex_names[i]}")
    return 0


def _cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    if g.is_complete:
        k = g
    else:
        k = graphs.completion(g)
        added = k.m - g.m
        print(f"note: completed the graph with {added} unit-labeled edges; "
              "selection ids refer to the completion", file=sys.stderr)
    i = _vertex_index(k, args.vertex, k.n - 1)
    sels = splines.minimal_selections(k, i, args.max_trails)
    if not 0 <= args.selection < len(sels):
        raise ValueError(
            f"selection id {args.selection} out of range; "
            f"{len(sels)} minimal selections exist"
        )
    sel = sels[args.selection]
    values = splines.selection_spline(k, sel)
    d = k.domain
    labels = ", ".join(d.format(lab) for lab in sel.labels)
    print(f"note: selection {args.selection} uses labels {{{labels}}}, "
          f"value {d.format(sel.value)}", file=sys.stderr)
    if args.format == "json":
        _emit_json({"values": [d.format(v) for v in values]})
    else:
        for name, v in zip(k.vertex_names, values):
            print(f"{name}: {d.format(v)}")
    return 0


def _cmd_check_basis(args) -> int:
    g = _load_graph(args.graph)
    if not args.spline or len(args.spline) != g.n:
        raise ValueError(f"check-basis needs exactly {g.n} --spline documents")
    candidates = [_load_spline(p, g) for p in args.spline]
    verdict = basis_mod.check_basis(g, candidates)
    d = g.domain
    payload = {
        "determinant": d.format(verdict.determinant),
        "q_g": d.format(verdict.q),
        "quotient": None if verdict.quotient is None else d.format(verdict.quotient),
        "is_basis": verdict.is_basis,
    }
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"determinant = {payload['determinant']}")
        print(f"q_g = {payload['q_g']}")
        print(f"quotient = {payload['quotient']}")
        print("basis" if verdict.is_basis else "not a basis")
    return 0 if verdict.is_basis else 1


def _cmd_flowup(args) -> int:
    g = _load_graph(args.graph)
    rows = basis_mod.flowup_basis(g)
    d = g.domain
    if args.format == "json":
        _emit_json({
            "diagonal": [d.format(rows[k][k]) for k in range(g.n)],
            "splines": [{"values": [d.format(v) for v in row]} for row in rows],
        })
    else:
        print("diagonal: " + " ".join(d.format(rows[k][k]) for k in range(g.n)))
        for k, row in enumerate(rows, start=1):
            print(f"F{k}: " + " ".join(d.format(v) for v in row))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphsplines",
        description="exact spline invariants and basis tests on edge-labeled graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, vertex=False, selection=False, spline=None):
        p.add_argument("--graph", required=True, help="graph document (JSON)")
        if vertex:
            p.add_argument("--vertex", type=int,
                           help="1-based position in the vertex order")
        if selection:
            p.add_argument("--selection", type=int, default=0,
                           help="selection id from the selections command (default 0)")
        if spline == "one":
            p.add_argument("--spline", required=True, help="spline document (JSON)")
        elif spline == "many":
            p.add_argument("--spline", action="append", default=[],
                           help="spline document (JSON); repeat once per candidate")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--max-trails", type=int, default=DEFAULT_TRAIL_LIMIT,
                       help="abort trail enumeration beyond this many trails")

    common(sub.add_parser("verify", help="check a vector against the edge conditions"),
           spline="one")
    common(sub.add_parser("invariants", help="leading values and their product"))
    common(sub.add_parser("trails", help="reduced zero trails of a vertex"),
           vertex=True)
    common(sub.add_parser("selections", help="minimal selections at a vertex"),
           vertex=True)
    common(sub.add_parser("construct",
                          help="two-valued spline from a minimal selection "
                               "(completes the graph when needed)"),
           vertex=True, selection=True)
    common(sub.add_parser("check-basis", help="determinant basis criterion"),
           spline="many")
    common(sub.add_parser("flowup", help="integer flow-up basis"))
    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "invariants": _cmd_invariants,
    "trails": _cmd_trails,
    "selections": _cmd_selections,
    "construct": _cmd_construct,
    "check-basis": _cmd_check_basis,
    "flowup": _cmd_flowup,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, ArithmeticError, RuntimeError, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
