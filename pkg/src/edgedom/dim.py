"""Bi-colorings, DIM/PED predicates and exhaustive oracles."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import InvalidColoring, NotADim, NotAnEdge, NotAPed, NotTotal, TooLarge
from .graph import Edge, Graph, edge_key

DEFAULT_EDGE_LIMIT = 24


class Color(str, enum.Enum):
    W = "W"
    B = "B"

    @property
    def other(self) -> "Color":
        return Color.B if self is Color.W else Color.W

    def __str__(self):
        return self.value


B, W = Color.B, Color.W

# partial map vertex -> Color; absent vertices are uncolored
Coloring = dict


class PedClass(enum.Enum):
    TRIVIAL = "Trivial"
    EED = "Eed"
    PROPER = "Proper"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple[int, ...]

    def __str__(self):
        return " ".join([self.kind, *map(str, self.witness)])


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violation: Optional[Violation] = None

    def __bool__(self):
        return self.ok


OK = Verdict(True)


def _fail(kind, *witness) -> Verdict:
    return Verdict(False, Violation(kind, tuple(witness)))


def canonical_edges(edges: Iterable[tuple[int, int]]) -> tuple[Edge, ...]:
    return tuple(sorted({edge_key(u, v) for u, v in edges}))


def _checked_edges(g: Graph, d) -> tuple[Edge, ...]:
    d = canonical_edges(d)
    for u, v in d:
        if not g.has_edge(u, v):
            raise NotAnEdge(u, v)
    return d


def _domination_counts(g: Graph, d: tuple[Edge, ...]) -> dict[Edge, int]:
    """How many members of ``d`` dominate each edge (equal or sharing an endpoint)."""
    count = {e: 0 for e in g.edges()}
    for a, b in d:
        touched = {edge_key(a, x) for x in g.adj[a]} | {edge_key(b, x) for x in g.adj[b]}
        for e in touched:
            count[e] += 1
    return count


def check_dim(g: Graph, d) -> Verdict:
    d = _checked_edges(g, d)
    count = _domination_counts(g, d)
    for e in g.edges():
        if count[e] == 0:
            return _fail("UNDOMINATED", *e)
        if count[e] > 1:
            return _fail("MULTI-DOMINATED", *e)
    return OK


def is_dim(g: Graph, d) -> bool:
    """True iff every edge of ``g`` is dominated by exactly one member of ``d``."""
    return check_dim(g, d).ok


def check_ped(g: Graph, d) -> Verdict:
    d = _checked_edges(g, d)
    inside = set(d)
    count = _domination_counts(g, d)
    for e in g.edges():
        if e in inside:
            continue
        if count[e] == 0:
            return _fail("UNDOMINATED", *e)
        if count[e] > 1:
            return _fail("MULTI-DOMINATED", *e)
    return OK


def is_ped(g: Graph, d) -> bool:
    """True iff every edge outside ``d`` is dominated by exactly one member of ``d``."""
    return check_ped(g, d).ok


def classify_ped(g: Graph, d) -> PedClass:
    d = _checked_edges(g, d)
    if not is_ped(g, d):
        raise NotAPed("edge set is not a perfect edge dominating set")
    if set(d) == set(g.edges()):
        return PedClass.TRIVIAL
    if is_dim(g, d):
        return PedClass.EED
    return PedClass.PROPER


def coloring_from_dim(g: Graph, d) -> Coloring:
    d = _checked_edges(g, d)
    if not is_dim(g, d):
        raise NotADim("edge set is not a dominating induced matching")
    black = {v for e in d for v in e}
    return {v: (B if v in black else W) for v in range(g.n)}


def dim_from_coloring(g: Graph, c: Mapping[int, Color]) -> tuple[Edge, ...]:
    verdict = validate_total(g, c)
    if not verdict:
        raise InvalidColoring(str(verdict.violation))
    return black_edges(g, c)


def black_edges(g: Graph, c: Mapping[int, Color]) -> tuple[Edge, ...]:
    """Edges with both endpoints black, no validity check."""
    return tuple(e for e in g.edges() if c.get(e[0]) is B and c.get(e[1]) is B)


def _white_adjacent(g: Graph, c) -> Optional[Edge]:
    for u, v in g.edges():
        if c.get(u) is W and c.get(v) is W:
            return (u, v)
    return None


def validate_total(g: Graph, c: Mapping[int, Color]) -> Verdict:
    """Valid total bi-coloring: black vertices induce a 1-regular graph, whites are independent."""
    for v in range(g.n):
        if v not in c:
            raise NotTotal(v)
    for v in range(g.n):
        if c[v] is B:
            k = sum(1 for w in g.adj[v] if c[w] is B)
            if k == 0:
                return _fail("BLACK-NO-BLACK-NEIGHBOR", v)
            if k > 1:
                return _fail("BLACK-MULTI-BLACK", v)
    e = _white_adjacent(g, c)
    if e is not None:
        return _fail("WHITE-ADJACENT", *e)
    return OK


def validate_partial(g: Graph, c: Mapping[int, Color]) -> Verdict:
    e = _white_adjacent(g, c)
    if e is not None:
        return _fail("WHITE-ADJACENT", *e)
    for v in range(g.n):
        if c.get(v) is not B:
            continue
        k = sum(1 for w in g.adj[v] if c.get(w) is B)
        if k > 1:
            return _fail("BLACK-MULTI-BLACK", v)
        if k == 0 and all(w in c for w in g.adj[v]):
            return _fail("BLACK-ISOLATED", v)
    return OK


def _check_limit(g: Graph, limit: Optional[int]):
    if limit is not None and g.m > limit:
        raise TooLarge(f"graph has {g.m} edges; oracle bound is {limit}")


def _bfs_edge_order(g: Graph) -> list[Edge]:
    """Edges ordered so that neighborhoods close early during branching."""
    order: list[Edge] = []
    seen_v = [False] * g.n
    taken: set[Edge] = set()
    for root in range(g.n):
        if seen_v[root]:
            continue
        seen_v[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.adj[u]):
                e = edge_key(u, w)
                if e not in taken:
                    taken.add(e)
                    order.append(e)
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return order


def _enumerate(g: Graph, perfect_only: bool):
    """Branch over edges in/out, tracking how often each edge is dominated.

    With ``perfect_only`` False every edge must end up dominated exactly once
    (DIM); otherwise only edges left out of the set are constrained (PED).
    """
    order = _bfs_edge_order(g)
    idx = {e: i for i, e in enumerate(order)}
    dominators = []
    for u, v in order:
        dom = {edge_key(u, x) for x in g.adj[u]} | {edge_key(v, x) for x in g.adj[v]}
        dominators.append(sorted(idx[e] for e in dom))
    closes_at: list[list[int]] = [[] for _ in order]
    for i, dom in enumerate(dominators):
        closes_at[max(dom)].append(i)
    dominated_by = [[] for _ in order]  # edges that choosing edge i dominates
    for i, dom in enumerate(dominators):
        for j in dom:
            dominated_by[j].append(i)

    count = [0] * len(order)
    chosen = [False] * len(order)
    picked: list[int] = []

    def over(j, i):
        # edge j is dominated too often and can no longer be excused by joining the set
        if count[j] <= 1:
            return False
        return not perfect_only or (j <= i and not chosen[j])

    def rec(i):
        if i == len(order):
            yield tuple(sorted(order[j] for j in picked))
            return
        for take in (False, True):
            chosen[i] = take
            if take:
                picked.append(i)
                for j in dominated_by[i]:
                    count[j] += 1
                ok = not any(over(j, i) for j in dominated_by[i])
            else:
                ok = not over(i, i)
            if ok:
                for j in closes_at[i]:
                    if count[j] != 1 and not (perfect_only and chosen[j]):
                        ok = False
                        break
            if ok:
                yield from rec(i + 1)
            if take:
                picked.pop()
                for j in dominated_by[i]:
                    count[j] -= 1
            chosen[i] = False

    yield from rec(0)


def brute_force_dims(g: Graph, limit: Optional[int] = DEFAULT_EDGE_LIMIT) -> list[tuple[Edge, ...]]:
    """Every DIM of ``g``, canonically sorted. ``limit=None`` lifts the edge bound."""
    _check_limit(g, limit)
    found = sorted(_enumerate(g, perfect_only=False))
    assert all(is_dim(g, d) for d in found)
    return found


def has_dim(g: Graph, limit: Optional[int] = DEFAULT_EDGE_LIMIT) -> bool:
    _check_limit(g, limit)
    return next(_enumerate(g, perfect_only=False), None) is not None


def brute_force_peds(g: Graph, limit: Optional[int] = DEFAULT_EDGE_LIMIT):
    """Every PED of ``g`` paired with its class, canonically sorted."""
    _check_limit(g, limit)
    out = []
    for d in sorted(_enumerate(g, perfect_only=True)):
        assert is_ped(g, d)
        out.append((d, classify_ped(g, d)))
    return out
