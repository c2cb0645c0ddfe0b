"""Line-oriented text formats for graphs, colorings, edge sets, formulas and traces.

Graph::

    p edge <n> <m>
    e <u> <v>        (m lines, 0-based ids)
    l <v> <role>     (optional)
    c ...            (comments, anywhere)

Coloring: ``<id> B|W`` per line, ascending ids. Edge set: ``<u> <v>`` per line,
u < v, ascending. Formula: DIMACS-style ``p cnf <vars> <clauses>`` followed by
one ``a b c 0`` line per clause. Trace: ``VAR``/``CLAUSE``/``CHAIN`` lines.
"""

from __future__ import annotations

from typing import Iterable

from .dim import Color, canonical_edges
from .errors import EdgeDomError, FormatError
from .graph import Graph, build_graph
from .reduction import ChainRecord, ReductionTrace
from .sat import Formula3


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c ") or line == "c":
            continue
        yield no, line.split()


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no) from None


# -- graphs ------------------------------------------------------------------


def dump_graph(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out += [f"e {u} {v}" for u, v in g.edges()]
    out += [f"l {v} {role}" for v, role in enumerate(g.labels) if role]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    header = None
    edges, labels = [], {}
    for no, tok in _lines(text):
        kind = tok[0]
        if kind == "p":
            if header is not None:
                raise FormatError("second problem line", no)
            if len(tok) != 4 or tok[1] != "edge":
                raise FormatError("expected 'p edge <n> <m>'", no)
            header = tuple(_ints(tok[2:], no))
        elif header is None:
            raise FormatError("content before the 'p edge' line", no)
        elif kind == "e":
            if len(tok) != 3:
                raise FormatError("expected 'e <u> <v>'", no)
            u, v = _ints(tok[1:], no)
            for x in (u, v):
                if not 0 <= x < header[0]:
                    raise FormatError(f"vertex {x} out of range", no)
            if u == v:
                raise FormatError(f"self-loop at vertex {u}", no)
            edges.append((u, v))
        elif kind == "l":
            if len(tok) != 3:
                raise FormatError("expected 'l <v> <role>'", no)
            (v,) = _ints(tok[1:2], no)
            if not 0 <= v < header[0]:
                raise FormatError(f"vertex {v} out of range", no)
            labels[v] = tok[2]
        else:
            raise FormatError(f"unknown line type {kind!r}", no)
    if header is None:
        raise FormatError("missing 'p edge' line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    g = build_graph(n, edges, [labels.get(v) for v in range(n)] if labels else None)
    if g.m != m:
        raise FormatError("duplicate edges")
    return g


# -- colorings and edge sets ---------------------------------------------------


def dump_coloring(c) -> str:
    return "".join(f"{v} {c[v].value}\n" for v in sorted(c))


def parse_coloring(text: str, n: int = None) -> dict:
    c = {}
    for no, tok in _lines(text):
        if len(tok) != 2 or tok[1] not in ("B", "W"):
            raise FormatError("expected '<id> B|W'", no)
        (v,) = _ints(tok[:1], no)
        if v < 0 or (n is not None and v >= n):
            raise FormatError(f"vertex {v} out of range", no)
        if v in c:
            raise FormatError(f"vertex {v} colored twice", no)
        c[v] = Color(tok[1])
    return dict(sorted(c.items()))


def dump_edges(edges: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{u} {v}\n" for u, v in canonical_edges(edges))


def parse_edges(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for no, tok in _lines(text):
        if len(tok) != 2:
            raise FormatError("expected '<u> <v>'", no)
        u, v = _ints(tok, no)
        if u == v or u < 0 or v < 0:
            raise FormatError(f"bad edge ({u}, {v})", no)
        out.append((u, v))
    return canonical_edges(out)


# -- formulas -----------------------------------------------------------------


def dump_formula(f: Formula3) -> str:
    out = [f"p cnf {f.num_vars} {f.num_clauses}"]
    out += [" ".join(map(str, cl)) + " 0" for cl in f.clauses]
    return "\n".join(out) + "\n"


def parse_formula(text: str) -> Formula3:
    header = None
    clauses = []
    for no, tok in _lines(text):
        if tok[0] == "p":
            if header is not None or len(tok) != 4 or tok[1] != "cnf":
                raise FormatError("expected a single 'p cnf <vars> <clauses>' line", no)
            header = tuple(_ints(tok[2:], no))
            continue
        if header is None:
            raise FormatError("clause before the 'p cnf' line", no)
        lits = _ints(tok, no)
        if len(lits) != 4 or lits[3] != 0:
            raise FormatError("a clause is three nonzero literals followed by 0", no)
        if any(abs(x) > header[0] or x == 0 for x in lits[:3]):
            raise FormatError("literal out of range", no)
        if len({abs(x) for x in lits[:3]}) != 3:
            raise FormatError("clause repeats a variable", no)
        clauses.append(tuple(lits[:3]))
    if header is None:
        raise FormatError("missing 'p cnf' line")
    if len(clauses) != header[1]:
        raise FormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    f = Formula3(header[0], clauses)
    bad = f.sign_conflict()
    if bad is not None:
        raise FormatError(f"variable {bad} occurs with both signs")
    return f


# -- reduction traces -------------------------------------------------------------


def dump_trace(t: ReductionTrace) -> str:
    out = [f"c vars {t.num_vars} clauses {t.num_clauses}"]
    for v in sorted(t.var_to_circle):
        a, b = t.vertex_triangle_partners[v]
        out.append(f"VAR {v} CIRCLE {t.var_to_circle[v]} PARTNERS {a} {b}")
    for j in sorted(t.clause_to_triangle):
        x, y, z = t.clause_to_triangle[j]
        i, k, l = t.clause_owners[j]
        out.append(f"CLAUSE {j} TRI {x} {y} {z} OWNERS {i} {k} {l}")
    for r in t.chain_records:
        u, v = r.edge
        out.append(f"CHAIN {u} {v} : {' '.join(map(str, r.path))} GADGET {r.gadget}")
    return "\n".join(out) + "\n"


def parse_trace(text: str) -> ReductionTrace:
    circles, partners, tris, owners, chains = {}, {}, {}, {}, []
    for no, tok in _lines(text):
        try:
            if tok[0] == "VAR" and tok[2] == "CIRCLE" and tok[4] == "PARTNERS" and len(tok) == 7:
                v, c, a, b = _ints([tok[1], tok[3], tok[5], tok[6]], no)
                circles[v], partners[v] = c, (a, b)
            elif tok[0] == "CLAUSE" and tok[2] == "TRI" and tok[6] == "OWNERS" and len(tok) == 10:
                j, x, y, z, i, k, l = _ints([tok[1], *tok[3:6], *tok[7:10]], no)
                tris[j], owners[j] = (x, y, z), (i, k, l)
            elif tok[0] == "CHAIN" and tok[3] == ":" and tok[-2] == "GADGET":
                u, v = _ints(tok[1:3], no)
                chains.append(ChainRecord((u, v), tuple(_ints(tok[4:-2], no)), tok[-1]))
            else:
                raise FormatError(f"unrecognized trace line starting {tok[0]!r}", no)
        except IndexError:
            raise FormatError("truncated trace line", no) from None
    return ReductionTrace(len(circles), len(tris), circles, partners, tris, owners, tuple(chains))


def read_file(path: str, parser, *args):
    """Parse ``path`` with ``parser``; I/O problems surface as FormatError."""
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parser(text, *args)
    except FormatError:
        raise
    except EdgeDomError as exc:
        raise FormatError(str(exc)) from None
