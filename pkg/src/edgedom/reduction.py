"""Graph constructions from positive 1-in-3 SAT formulas and DIM-preserving edge rewrites."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace

from .dim import B, W, Coloring, validate_total
from .errors import InvalidColoring, NotAnEdge, NotMainTransformOutput, NotPositive
from .graph import Edge, Graph, build_graph, edge_key
from .sat import Assignment, Formula3

GADGETS = ("butterfly", "pendant", "diamond")


@dataclass(frozen=True)
class ChainRecord:
    edge: Edge  # the replaced variable-clause edge, (circle, clause vertex)
    path: tuple[int, ...]  # circle, chain vertices..., clause vertex
    gadget: str  # "none" for type-1 chains


@dataclass(frozen=True)
class ReductionTrace:
    num_vars: int
    num_clauses: int
    var_to_circle: dict[int, int]
    vertex_triangle_partners: dict[int, tuple[int, int]]  # keyed by variable
    clause_to_triangle: dict[int, tuple[int, int, int]]  # keyed by 1-based clause id
    clause_owners: dict[int, tuple[int, int, int]]
    chain_records: tuple[ChainRecord, ...] = field(default=())

    def variable_clause_edges(self) -> list[Edge]:
        out = []
        for j, tri in self.clause_to_triangle.items():
            for t, var in zip(tri, self.clause_owners[j]):
                out.append(edge_key(self.var_to_circle[var], t))
        return sorted(out)


@dataclass(frozen=True)
class ChainScheme:
    kind: str  # "type1" or "type2"
    k: int
    gadget: str = "none"

    @classmethod
    def parse(cls, text: str) -> "ChainScheme":
        """``type1:<k1>`` or ``type2:<k2>:<gadget>``."""
        m = re.fullmatch(r"type1:(\d+)", text)
        if m:
            return cls("type1", int(m.group(1)))
        m = re.fullmatch(r"type2:(\d+):(\w+)", text)
        if m and m.group(2) in GADGETS:
            return cls("type2", int(m.group(1)), m.group(2))
        raise ValueError(f"bad chain scheme {text!r}")

    def __str__(self):
        return f"type1:{self.k}" if self.kind == "type1" else f"type2:{self.k}:{self.gadget}"


def main_transformation(f: Formula3) -> tuple[Graph, ReductionTrace]:
    """Build S(G(F)).

    Variable ``v`` gets circle ``3(v-1)`` and vertex-triangle partners
    ``3(v-1)+1``, ``3(v-1)+2``. Clause ``j`` (1-based) gets the clause triangle
    ``3n+3(j-1) .. 3n+3(j-1)+2``, owned by its variables in ascending order.
    """
    if not f.is_positive():
        raise NotPositive("main transformation needs a positive formula")
    n, m = f.num_vars, f.num_clauses
    edges: list[Edge] = []
    labels = []
    var_to_circle, partners = {}, {}
    for v in range(1, n + 1):
        c = 3 * (v - 1)
        var_to_circle[v] = c
        partners[v] = (c + 1, c + 2)
        edges += [(c, c + 1), (c, c + 2), (c + 1, c + 2)]
        labels += ["circle", "vertex-triangle", "vertex-triangle"]
    tri, owners = {}, {}
    for j, cl in enumerate(f.clauses, start=1):
        t = 3 * n + 3 * (j - 1)
        tri[j] = (t, t + 1, t + 2)
        owners[j] = tuple(sorted(cl))
        edges += [(t, t + 1), (t, t + 2), (t + 1, t + 2)]
        edges += [(var_to_circle[var], t + k) for k, var in enumerate(owners[j])]
        labels += ["clause-triangle"] * 3
    g = build_graph(3 * n + 3 * m, edges, labels)
    return g, ReductionTrace(n, m, var_to_circle, partners, tri, owners)


def assignment_to_coloring(trace: ReductionTrace, a: Assignment) -> Coloring:
    """Color S(G(F)) from an assignment.

    A true variable gets a black circle, its lower partner black and every other
    neighbor white; a false variable gets a white circle and black neighbors.
    """
    if len(a) != trace.num_vars:
        raise ValueError("assignment length does not match the formula")
    c: Coloring = {}
    for v, circle in trace.var_to_circle.items():
        lo, hi = trace.vertex_triangle_partners[v]
        if a[v - 1]:
            c[circle], c[lo], c[hi] = B, B, W
        else:
            c[circle], c[lo], c[hi] = W, B, B
    for j, tri in trace.clause_to_triangle.items():
        for t, var in zip(tri, trace.clause_owners[j]):
            c[t] = W if a[var - 1] else B
    return dict(sorted(c.items()))


def coloring_to_assignment(trace: ReductionTrace, c: Coloring, g: Graph = None) -> Assignment:
    """Read variable values off the circle colors (black = true).

    ``g`` defaults to S(G(F)) rebuilt from the trace; pass the chain-replaced
    graph when the coloring belongs to one.
    """
    if g is None:
        g = trace_graph(trace)
    verdict = validate_total(g, c)
    if not verdict:
        raise InvalidColoring(str(verdict.violation))
    return tuple(c[trace.var_to_circle[v]] is B for v in range(1, trace.num_vars + 1))


def trace_graph(trace: ReductionTrace) -> Graph:
    """Rebuild S(G(F)) from a (chain-free) trace."""
    f = Formula3(trace.num_vars, [trace.clause_owners[j] for j in sorted(trace.clause_owners)])
    return main_transformation(f)[0]


def _check_main_output(g: Graph, trace: ReductionTrace):
    n, m = trace.num_vars, trace.num_clauses
    if trace.chain_records:
        raise NotMainTransformOutput("edges were already replaced by chains")
    if g.n != 3 * n + 3 * m or g.m != 3 * n + 6 * m:
        raise NotMainTransformOutput(
            f"graph has {g.n} vertices and {g.m} edges, expected {3 * n + 3 * m} and {3 * n + 6 * m}"
        )
    for u, v in trace.variable_clause_edges():
        if not g.has_edge(u, v):
            raise NotMainTransformOutput(f"variable-clause edge ({u}, {v}) is missing")


def replace_edges_with_chains(g: Graph, trace: ReductionTrace, scheme: ChainScheme):
    """Replace every variable-clause edge by a chain of link triangles.

    Chains are built per replaced edge in ascending edge order, new ids appended
    after the existing ones. Type 1 uses 2k vertex-link triangles; type 2
    alternates edge-link and vertex-link triangles (2k of each, edge-link first
    from the circle side), each edge-link apex hanging off a gadget's contact
    vertex.
    """
    _check_main_output(g, trace)
    if scheme.k < 1:
        raise ValueError("chain parameter must be at least 1")
    if scheme.kind == "type2" and scheme.gadget not in GADGETS:
        raise ValueError(f"unknown gadget {scheme.gadget!r}")

    replaced = trace.variable_clause_edges()
    gone = set(replaced)
    edges = [e for e in g.edges() if e not in gone]
    labels = list(g.labels)
    records = []

    def new(role):
        labels.append(role)
        return len(labels) - 1

    def vertex_link(chain):
        x, a, b = new("chain"), new("chain"), new("chain")
        edges.extend([(x, a), (x, b), (a, b)])
        chain.append(x)

    def gadget_at(apex):
        contact = new("gadget")
        edges.append((apex, contact))
        if scheme.gadget == "butterfly":
            p, q, r, s = (new("gadget") for _ in range(4))
            edges.extend([(contact, p), (contact, q), (p, q), (contact, r), (contact, s), (r, s)])
        elif scheme.gadget == "diamond":
            p, q, r = (new("gadget") for _ in range(3))
            edges.extend([(contact, p), (contact, q), (p, q), (p, r), (q, r)])

    def edge_link(chain):
        y1, y2, z = new("chain"), new("chain"), new("chain")
        edges.extend([(y1, z), (y2, z)])
        chain.extend([y1, y2])
        gadget_at(z)

    for circle, t in replaced:
        chain = [circle]
        for _ in range(2 * scheme.k):
            if scheme.kind == "type1":
                vertex_link(chain)
            else:
                edge_link(chain)
                vertex_link(chain)
        chain.append(t)
        edges.extend(zip(chain, chain[1:]))
        records.append(ChainRecord((circle, t), tuple(chain), scheme.gadget))

    out = build_graph(len(labels), edges, labels)
    return out, replace(trace, chain_records=tuple(records))


def expected_chain_counts(n: int, m: int, scheme: ChainScheme) -> tuple[int, int]:
    """Vertex and edge counts of the chain-replaced graph, n and m being those of S(G(F))."""
    k = scheme.k
    if scheme.kind == "type1":
        return 6 * k * m - (6 * k - 1) * n, (8 * k + 1) * m - 8 * k * n
    per_v = {"butterfly": 22, "pendant": 14, "diamond": 20}[scheme.gadget] * k
    per_e = {"butterfly": 30, "pendant": 18, "diamond": 28}[scheme.gadget] * k
    return per_v * m - (per_v - 1) * n, (per_e + 1) * m - per_e * n


def subdivide_edge_3x(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge (u, v) by the path u - n - n+1 - n+2 - v."""
    u, v = edge_key(*e)
    if not g.has_edge(u, v):
        raise NotAnEdge(u, v)
    a, b, c = g.n, g.n + 1, g.n + 2
    edges = [x for x in g.edges() if x != (u, v)] + [(u, a), (a, b), (b, c), (c, v)]
    return build_graph(g.n + 3, edges, list(g.labels) + ["plain"] * 3)
