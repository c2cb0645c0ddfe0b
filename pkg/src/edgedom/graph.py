"""Simple undirected graphs over dense integer vertex ids."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .errors import OutOfRange, SelfLoop

Edge = tuple[int, int]

ROLES = ("circle", "clause-triangle", "vertex-triangle", "chain", "gadget", "plain")


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``labels`` holds an optional role tag per vertex. Roles are bookkeeping for
    reduction outputs only; no algorithm looks at them.
    """

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[Optional[str], ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", (None,) * self.n)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adj), reverse=True)

    def with_labels(self, labels: Iterable[Optional[str]]) -> "Graph":
        labels = tuple(labels)
        if len(labels) != self.n:
            raise ValueError("need exactly one label per vertex")
        return Graph(self.n, self.adj, labels)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    """Build a simple graph, collapsing duplicate edges.

    >>> build_graph(3, [(0, 1), (1, 2), (2, 0)]).m
    3
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise SelfLoop(u)
        for x in (u, v):
            if not 0 <= x < n:
                raise OutOfRange(x, n)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), tuple(labels) if labels else ())


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``s``, relabeled densely.

    Returns the graph and the remap table: ``remap[i]`` is the original id of new
    vertex ``i``. Vertices keep their relative order.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise OutOfRange(v, g.n)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[w]) for u in verts for w in g.adj[u] if w in index and u < w]
    labels = [g.labels[v] for v in verts]
    return build_graph(len(verts), edges, labels), verts


def enumerate_triangles(g: Graph) -> list[tuple[int, int, int]]:
    """Every triangle as a sorted triple, in lexicographic order."""
    out = []
    for u in range(g.n):
        higher = sorted(w for w in g.adj[u] if w > u)
        for v, w in combinations(higher, 2):
            if w in g.adj[v]:
                out.append((u, v, w))
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    edges, labels, offset = [], [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        labels.extend(h.labels)
        offset += h.n
    return build_graph(offset, edges, labels)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            for y in g.adj[stack.pop()]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(sorted(comp))
    return out
