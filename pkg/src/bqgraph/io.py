"""Reading and writing graphs, boundaries and chains.

Two graph formats are supported: a fixed-layout JSON document and a small
DOT subset. Both emitters are canonical, so ``parse(emit(g)) == g`` and
``emit(parse(text)) == text`` for canonical text.
"""

from __future__ import annotations

import json
import os
import re

from .errors import DuplicateEdgeId, GraphError, GraphSyntaxError, SchemaError
from .graph import DirectedMultigraph, build_graph, check_token


def _q(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def _as_text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphSyntaxError(f"invalid UTF-8: {exc.reason}", pos=exc.start) from None
    return data


# -- JSON --------------------------------------------------------------------

def emit_json_graph(g: DirectedMultigraph) -> bytes:
    lines = ["{", '  "vertices": [' + ", ".join(_q(v) for v in g.vertices) + "],"]
    if g.edges:
        lines.append('  "edges": [')
        body = [
            '    {"id": %s, "src": %s, "dst": %s}' % (_q(e.id), _q(e.src), _q(e.dst))
            for e in g.edges
        ]
        lines.append(",\n".join(body))
        lines.append("  ]")
    else:
        lines.append('  "edges": []')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _load_json(text):
    text = _as_text(text)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(exc.msg, line=exc.lineno, col=exc.colno, pos=exc.pos) from None


def _str_list(value, what):
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError(f"{what} must be an array of strings")
    return value


def parse_json_graph(text) -> DirectedMultigraph:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise SchemaError("graph document must be an object")
    for key in ("vertices", "edges"):
        if key not in doc:
            raise SchemaError(f"missing field {key!r}")
    vertices = _str_list(doc["vertices"], "'vertices'")
    if not isinstance(doc["edges"], list):
        raise SchemaError("'edges' must be an array")
    edges = []
    for i, rec in enumerate(doc["edges"]):
        if not isinstance(rec, dict):
            raise SchemaError(f"edge #{i} must be an object")
        for key in ("id", "src", "dst"):
            if key not in rec:
                raise SchemaError(f"edge #{i}: missing field {key!r}")
            if not isinstance(rec[key], str):
                raise SchemaError(f"edge #{i}: field {key!r} must be a string")
        edges.append((rec["id"], rec["src"], rec["dst"]))
    return build_graph(vertices, edges)


def parse_boundary(text) -> list[str]:
    doc = _load_json(text)
    if not isinstance(doc, dict) or "boundary" not in doc:
        raise SchemaError("boundary document must be an object with field 'boundary'")
    return [check_token(v, "vertex name") for v in _str_list(doc["boundary"], "'boundary'")]


def emit_boundary(vertices) -> bytes:
    return ('{"boundary": [' + ", ".join(_q(v) for v in vertices) + "]}\n").encode("utf-8")


def parse_chain(text) -> list[list[str]]:
    doc = _load_json(text)
    if not isinstance(doc, dict) or "chain" not in doc:
        raise SchemaError("chain document must be an object with field 'chain'")
    if not isinstance(doc["chain"], list):
        raise SchemaError("'chain' must be an array of arrays")
    return [_str_list(level, f"chain level {i}") for i, level in enumerate(doc["chain"])]


def emit_chain(levels) -> bytes:
    inner = ", ".join("[" + ", ".join(_q(v) for v in level) + "]" for level in levels)
    return ('{"chain": [' + inner + "]}\n").encode("utf-8")


# -- DOT subset ----------------------------------------------------------------
#
#   graph  := 'digraph' ID? '{' stmt* '}'
#   stmt   := ID ';' | ID '->' ID attr? ';'
#   attr   := '[' 'id' '=' STRING ']'

_PUNCT = {"{": "LBRACE", "}": "RBRACE", "[": "LBRACK", "]": "RBRACK", ";": "SEMI", "=": "EQ"}
_BARE_STOP = set('{}[];="')
_BARE_OK = re.compile(r'^(?!.*->)[^\s{}\[\];="]+$')


def _tokenize(text: str):
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            i, line, col = i + 1, line + 1, 1
            continue
        if c.isspace():
            i, col = i + 1, col + 1
            continue
        start = (line, col)
        if c in _PUNCT:
            tokens.append((_PUNCT[c], c, *start))
            i, col = i + 1, col + 1
        elif text.startswith("->", i):
            tokens.append(("ARROW", "->", *start))
            i, col = i + 2, col + 2
        elif c == '"':
            j = i + 1
            buf = []
            while j < n and text[j] != '"':
                if text[j] == "\\" and j + 1 < n:
                    j += 1
                if text[j] == "\n":
                    raise GraphSyntaxError("newline in quoted string", *start)
                buf.append(text[j])
                j += 1
            if j >= n:
                raise GraphSyntaxError("unterminated string", *start)
            tokens.append(("STRING", "".join(buf), *start))
            col += j + 1 - i
            i = j + 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in _BARE_STOP and not text.startswith("->", j):
                j += 1
            tokens.append(("ID", text[i:j], *start))
            col += j - i
            i = j
    tokens.append(("EOF", "", line, col))
    return tokens


class _DotParser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.k = 0

    def peek(self, offset=0):
        return self.toks[min(self.k + offset, len(self.toks) - 1)]

    def take(self, *kinds, what=None):
        tok = self.peek()
        if tok[0] not in kinds:
            found = "end of input" if tok[0] == "EOF" else repr(tok[1])
            raise GraphSyntaxError(f"expected {what or ' or '.join(kinds)}, found {found}", tok[2], tok[3])
        self.k += 1
        return tok

    def ident(self):
        tok = self.take("ID", "STRING", what="identifier")
        try:
            return check_token(tok[1])
        except GraphError as exc:
            raise GraphSyntaxError(str(exc), tok[2], tok[3]) from None

    def parse(self):
        head = self.take("ID", what="'digraph'")
        if head[1] != "digraph":
            raise GraphSyntaxError(f"expected 'digraph', found {head[1]!r}", head[2], head[3])
        if self.peek()[0] in ("ID", "STRING"):
            self.k += 1
        self.take("LBRACE", what="'{'")
        vertices: dict[str, None] = {}
        stmts = []
        while self.peek()[0] != "RBRACE":
            src_tok = self.peek()
            src = self.ident()
            vertices.setdefault(src, None)
            if self.peek()[0] == "ARROW":
                self.k += 1
                dst = self.ident()
                vertices.setdefault(dst, None)
                eid = None
                if self.peek()[0] == "LBRACK":
                    self.k += 1
                    key = self.take("ID", what="'id'")
                    if key[1] != "id":
                        raise GraphSyntaxError(f"unsupported attribute {key[1]!r}", key[2], key[3])
                    self.take("EQ", what="'='")
                    val = self.take("STRING", what="quoted edge id")
                    try:
                        eid = check_token(val[1], "edge id")
                    except GraphError as exc:
                        raise GraphSyntaxError(str(exc), val[2], val[3]) from None
                    self.take("RBRACK", what="']'")
                stmts.append((eid, src, dst, src_tok))
            self.take("SEMI", what="';'")
        self.take("RBRACE", what="'}'")
        self.take("EOF", what="end of input")
        return list(vertices), stmts


def parse_dot_subset(text) -> DirectedMultigraph:
    vertices, stmts = _DotParser(_as_text(text)).parse()
    explicit = set()
    for eid, _, _, tok in stmts:
        if eid is not None:
            if eid in explicit:
                raise DuplicateEdgeId(f"{tok[2]}:{tok[3]}: duplicate edge id {eid!r}")
            explicit.add(eid)
    edges = []
    counter = 0
    for eid, src, dst, _ in stmts:
        if eid is None:
            counter += 1
            while f"e{counter}" in explicit:
                counter += 1
            eid = f"e{counter}"
        edges.append((eid, src, dst))
    return build_graph(vertices, edges)


def _dot_id(name: str) -> str:
    if _BARE_OK.match(name) and name != "digraph":
        return name
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: DirectedMultigraph) -> bytes:
    lines = ["digraph {"]
    lines += [f"  {_dot_id(v)};" for v in g.vertices]
    lines += [
        f"  {_dot_id(e.src)} -> {_dot_id(e.dst)} [id=\"{_escape(e.id)}\"];" for e in g.edges
    ]
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


# -- files -------------------------------------------------------------------

FORMATS = {".json": (parse_json_graph, emit_json_graph), ".dot": (parse_dot_subset, emit_dot)}


def format_of(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext not in FORMATS:
        raise SchemaError(f"{path}: unsupported extension {ext!r} (expected .json or .dot)")
    return ext


def load_graph(path: str) -> DirectedMultigraph:
    parse = FORMATS[format_of(path)][0]
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump_graph(g: DirectedMultigraph, fmt: str = ".json") -> bytes:
    if not fmt.startswith("."):
        fmt = "." + fmt
    return FORMATS[fmt][1](g)


def save_graph(path: str, g: DirectedMultigraph) -> None:
    data = dump_graph(g, format_of(path))
    with open(path, "wb") as fh:
        fh.write(data)
