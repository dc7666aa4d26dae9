"""Command-line front end: ``bqgraph <subcommand> ...``.

Exit codes: 0 success, 1 negative answer, 2 usage or input error,
3 internal error. Diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import admissible, classify, harness, index, io, iso, quotient
from .errors import (
    GraphError,
    GraphSyntaxError,
    InternalMismatch,
    NotConnected,
    NotCTDecomposable,
    NotSimplicial,
)

OK, NO, USAGE, INTERNAL = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.prog}: {message}")


def _names(text: str) -> list[str]:
    if text.strip() == "":
        return []
    return [t.strip() for t in text.split(",")]


def _load(path: str):
    try:
        return io.load_graph(path)
    except GraphError as exc:
        sep = ":" if isinstance(exc, GraphSyntaxError) and exc.line is not None else ": "
        exc.args = (f"{path}{sep}{exc}",)
        raise


def _emit_graph(g, out: Optional[str], fmt: str):
    if out:
        io.save_graph(out, g)
    else:
        sys.stdout.buffer.write(io.dump_graph(g, fmt))


def _json_out(obj: dict):
    """Top-level keys one per line; lists of objects one object per line."""
    lines = []
    for key, value in obj.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            body = ",\n".join("    " + json.dumps(v) for v in value)
            text = "[\n" + body + "\n  ]"
        else:
            text = json.dumps(value)
        lines.append(f"  {json.dumps(key)}: {text}")
    sys.stdout.write("{\n" + ",\n".join(lines) + "\n}\n")


# -- subcommands ---------------------------------------------------------------

def cmd_quotient(a):
    g = _load(a.graph)
    boundary = set(g.vertices) if a.total else set(_names(a.boundary))
    _emit_graph(quotient.boundary_quotient(g, boundary).graph, a.output, a.format)
    return OK


def cmd_subquotient(a):
    g = _load(a.graph)
    _emit_graph(quotient.subgraph_boundary_quotient(g, set(_names(a.subgraph))).graph, a.output, a.format)
    return OK


def cmd_glue(a):
    left, right = _load(a.left), _load(a.right)
    if "=" not in a.at:
        raise _Usage("--at expects LEFT_VERTEX=RIGHT_VERTEX")
    vl, vr = a.at.split("=", 1)
    g = quotient.glue(left, right, quotient.GlueSpec(vl, vr, a.name), strict=a.strict)
    _emit_graph(g, a.output, a.format)
    return OK


def cmd_decompose(a):
    g = _load(a.graph)
    try:
        d = classify.ct_decompose(g)
    except NotCTDecomposable as exc:
        print(f"{a.graph}: not CT-decomposable: block on {', '.join(exc.block_vertices)}", file=sys.stderr)
        return NO
    except (NotSimplicial, NotConnected) as exc:
        print(f"{a.graph}: {exc}", file=sys.stderr)
        return NO
    _json_out({
        "type": str(d),
        "components": [{"type": str(c.tag), "vertices": list(c.vertices), "edges": list(c.edges)}
                       for c in d.components],
        "cut_vertices": sorted(d.cut_vertices),
    })
    return OK


def cmd_admissible(a):
    g = _load(a.graph)
    b = admissible.admissible_boundary(g)
    print(",".join(b.sorted()))
    if a.quotient:
        io.save_graph(a.quotient, quotient.boundary_quotient(g, b.vertex_set).graph)
    return OK


def cmd_index(a):
    g = _load(a.graph)
    print(index.ind_subgraph(g, set(_names(a.subgraph))))
    return OK


def cmd_index_between(a):
    value = index.ind_between(_load(a.g1), _load(a.g2), force=a.force)
    print(value)
    return NO if value.is_zero else OK


def cmd_iso(a):
    g1, g2 = _load(a.first), _load(a.second)
    m = iso.are_isomorphic(g1, g2, force=a.force)
    if m is None:
        print("not isomorphic")
        return NO
    _json_out({"vertex_map": dict(sorted(m.vertex_map.items())), "edge_map": dict(sorted(m.edge_map.items()))})
    return OK


def cmd_chain(a):
    g = _load(a.graph)
    with open(a.chain, "rb") as fh:
        try:
            levels = io.parse_chain(fh.read())
        except GraphError as exc:
            exc.args = (f"{a.chain}: {exc}",)
            raise
    chain = index.Chain(levels)
    rep = index.verify_chain(g, chain)
    out = {"chain": rep.to_json()}
    ok = rep.passed
    if a.dual:
        steps = index.verify_dual_chain(g, chain, force=a.force)
        out["dual"] = [s.to_json() for s in steps]
        ok = ok and all(s.embedded and s.duality_holds for s in steps)
    _json_out(out)
    return OK if ok else NO


def cmd_verify(a):
    if a.trials < 1:
        raise _Usage("--trials must be at least 1")
    report = harness.run_suite(seed=a.seed, trials=a.trials, max_vertices=a.max_vertices, timings=a.timings)
    text = report.dumps(timings=a.timings)
    if a.report:
        with open(a.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if report.failure_count:
        failing = [c.id for c in report.claims if c.asserted and c.failures]
        print(f"verify: {report.failure_count} failures in {', '.join(failing)}", file=sys.stderr)
        return NO
    return OK


# -- parser --------------------------------------------------------------------

def _out_args(p):
    p.add_argument("-o", "--output", help="write here; format from the extension")
    p.add_argument("--format", default="json", choices=["json", "dot"], help="stdout format (default json)")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bqgraph", description="Boundary quotients, decompositions and indices of directed multigraphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("quotient", help="collapse a vertex set to one base point")
    q.add_argument("--graph", required=True)
    grp = q.add_mutually_exclusive_group(required=True)
    grp.add_argument("--boundary", help='comma-separated vertices; "" for the empty boundary')
    grp.add_argument("--total", action="store_true", help="collapse every vertex")
    _out_args(q)
    q.set_defaults(func=cmd_quotient)

    s = sub.add_parser("subquotient", help="drop a full subgraph's edges, then collapse its vertices")
    s.add_argument("--graph", required=True)
    s.add_argument("--subgraph", required=True)
    _out_args(s)
    s.set_defaults(func=cmd_subquotient)

    gl = sub.add_parser("glue", help="identify one vertex of each graph")
    gl.add_argument("--left", required=True)
    gl.add_argument("--right", required=True)
    gl.add_argument("--at", required=True, metavar="vL=vR")
    gl.add_argument("--name", help="name of the glued vertex (default: the left vertex)")
    gl.add_argument("--strict", action="store_true", help="fail on name clashes instead of renaming")
    _out_args(gl)
    gl.set_defaults(func=cmd_glue)

    d = sub.add_parser("decompose", help="maximal CT-decomposition")
    d.add_argument("--graph", required=True)
    d.set_defaults(func=cmd_decompose)

    ad = sub.add_parser("admissible", help="admissible boundary and quotient")
    ad.add_argument("--graph", required=True)
    ad.add_argument("--quotient", help="also write the admissible quotient here")
    ad.set_defaults(func=cmd_admissible)

    ix = sub.add_parser("index", help="index of a full subgraph")
    ix.add_argument("--graph", required=True)
    ix.add_argument("--subgraph", required=True)
    ix.set_defaults(func=cmd_index)

    ib = sub.add_parser("index-between", help="index of one graph inside another")
    ib.add_argument("--g1", required=True)
    ib.add_argument("--g2", required=True)
    ib.add_argument("--force", action="store_true", help="ignore size limits")
    ib.set_defaults(func=cmd_index_between)

    i = sub.add_parser("iso", help="isomorphism test")
    i.add_argument("first")
    i.add_argument("second")
    i.add_argument("--force", action="store_true", help="ignore size limits")
    i.set_defaults(func=cmd_iso)

    c = sub.add_parser("chain", help="chain rule and dual chain checks")
    c.add_argument("--graph", required=True)
    c.add_argument("--chain", required=True)
    c.add_argument("--dual", action="store_true")
    c.add_argument("--force", action="store_true", help="ignore size limits in the dual embedding search")
    c.set_defaults(func=cmd_chain)

    v = sub.add_parser("verify", help="run the claim suite")
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--trials", type=int, default=10)
    v.add_argument("--max-vertices", type=int, default=6)
    v.add_argument("--report", help="write the JSON report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="include wall times (makes output run-dependent)")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return USAGE
    except InternalMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL
    except GraphError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"{exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
