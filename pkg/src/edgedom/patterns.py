"""Small named graphs, induced-pattern search and class recognizers."""

from __future__ import annotations

import re
from collections import Counter
from itertools import combinations
from typing import Optional, Union

from .errors import UnknownPattern
from .graph import Graph, build_graph, enumerate_triangles


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("a path needs at least 1 vertex")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> Graph:
    return build_graph(k, combinations(range(k), 2))


def star(k: int) -> Graph:
    """K_{1,k}, center 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def wheel(k: int) -> Graph:
    """C_k plus a universal vertex; the hub is vertex 0 and the rim is 1..k."""
    if k < 3:
        raise ValueError("a wheel needs a rim of at least 3 vertices")
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return build_graph(k + 1, rim + [(0, i) for i in range(1, k + 1)])


def h_graph(k: int = 1) -> Graph:
    """Two P3's whose middle vertices 1 and 4 are joined by a path with k edges."""
    if k < 1:
        raise ValueError("H_k needs k >= 1")
    edges = [(0, 1), (1, 2), (3, 4), (4, 5)]
    inner = list(range(6, 6 + k - 1))
    chain = [1] + inner + [4]
    edges += list(zip(chain, chain[1:]))
    return build_graph(6 + k - 1, edges)


_FIXED = {
    "K3": lambda: complete(3),
    "K4": lambda: complete(4),
    "W4": lambda: wheel(4),
    "W5": lambda: wheel(5),
    # P4 0-1-2-3 plus universal vertex 4
    "gem": lambda: build_graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    # 0 and 1 have degree 3
    "diamond": lambda: build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
    # central vertex 0
    "butterfly": lambda: build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
    # triangle 0 1 2, pendant 3 on 0
    "paw": lambda: build_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)]),
    "claw": lambda: star(3),
    # triangle 0 1 2, pendants 3 and 4 on 0
    "cricket": lambda: build_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)]),
    "K15": lambda: star(5),
    "H": lambda: h_graph(1),
    "H2": lambda: h_graph(2),
    # triangle 0 1 2, pendants 3 and 4 on 0, pendant 5 on 1
    "snail": lambda: build_graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4), (1, 5)]),
    # paw (0 1 3 + pendant 2) joined to paw (4 5 6 + pendant 7) by edge 3-4
    "press": lambda: build_graph(
        8, [(2, 1), (1, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3), (4, 6)]
    ),
}

_ALIASES = {
    "triangle": "K3",
    "C3": "K3",
    "W3": "K4",
    "K13": "claw",
    "K1,3": "claw",
    "K1,5": "K15",
    "H1": "H",
}

_FAMILIES = {
    "cycle": cycle,
    "C": cycle,
    "path": path,
    "P": path,
    "complete": complete,
    "K": complete,
    "star": star,
    "wheel": wheel,
    "W": wheel,
    "H": h_graph,
}

PATTERN_NAMES = tuple(_FIXED)

PatternId = Union[str, Graph]


def named_graph(name: str) -> Graph:
    """Canonical graph for a pattern name.

    Accepts the fixed library names (``butterfly``, ``gem``, ``W4``, ...) and
    parameterized families written either ``C9``/``P7`` or ``cycle:9``/``path:7``.
    """
    key = _ALIASES.get(name, name)
    if key in _FIXED:
        return _FIXED[key]()
    m = re.fullmatch(r"([A-Za-z]+):(\d+)", key) or re.fullmatch(r"([CPKWH])(\d+)", key)
    if m and m.group(1) in _FAMILIES:
        try:
            return _FAMILIES[m.group(1)](int(m.group(2)))
        except ValueError as exc:
            raise UnknownPattern(name) from exc
    raise UnknownPattern(name)


def _as_graph(p: PatternId) -> Graph:
    return named_graph(p) if isinstance(p, str) else p


def _search_order(p: Graph) -> list[int]:
    """Pattern vertices so that each one, where possible, has an earlier neighbor."""
    order: list[int] = []
    seen: set[int] = set()
    for root in sorted(range(p.n), key=lambda v: (-p.degree(v), v)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sorted(p.adj[v], key=lambda x: (-p.degree(x), x)):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def _iter_induced(g: Graph, p: Graph):
    """Yield the vertex set of each induced copy of ``p`` in ``g`` exactly once."""
    k = p.n
    if k == 0 or k > g.n:
        return
    order = _search_order(p)
    pos = {v: i for i, v in enumerate(order)}
    anchor = []
    adjacent_to = []
    for i, pv in enumerate(order):
        earlier = [pos[w] for w in p.adj[pv] if pos[w] < i]
        anchor.append(min(earlier) if earlier else None)
        adjacent_to.append([order[j] in p.adj[pv] for j in range(i)])
    pdeg = [p.degree(v) for v in order]

    found: set[frozenset[int]] = set()
    image: list[int] = []
    used: set[int] = set()

    def extend(i):
        if i == k:
            s = frozenset(image)
            if s not in found:
                found.add(s)
                yield s
            return
        a = anchor[i]
        candidates = g.adj[image[a]] if a is not None else range(g.n)
        need = adjacent_to[i]
        for x in candidates:
            if x in used or g.degree(x) < pdeg[i]:
                continue
            ax = g.adj[x]
            if all((image[j] in ax) == need[j] for j in range(i)):
                image.append(x)
                used.add(x)
                yield from extend(i + 1)
                image.pop()
                used.discard(x)

    yield from extend(0)


def find_induced(g: Graph, p: PatternId) -> list[tuple[int, ...]]:
    """All vertex sets inducing a copy of ``p``, as sorted tuples in lexicographic order."""
    return sorted(tuple(sorted(s)) for s in _iter_induced(g, _as_graph(p)))


def first_induced(g: Graph, p: PatternId) -> Optional[tuple[int, ...]]:
    """Lexicographically least occurrence of ``p``, or None."""
    found = find_induced(g, p)
    return found[0] if found else None


def is_nsf(g: Graph) -> tuple[bool, Optional[int]]:
    """Neighborhood-star-free test: every vertex of degree >= 2 lies in a triangle.

    Returns ``(True, None)`` or ``(False, v)`` with the least violating vertex.
    """
    for v in range(g.n):
        nb = g.adj[v]
        if len(nb) < 2:
            continue
        if not any(w in g.adj[u] for u, w in combinations(sorted(nb), 2)):
            return False, v
    return True, None


def is_cricket_free(g: Graph) -> tuple[bool, Optional[tuple[int, ...]]]:
    witness = first_induced(g, "cricket")
    return witness is None, witness


def induced_cycles_up_to(g: Graph, max_len: int) -> Counter:
    """Lengths of all chordless cycles with 4 <= length <= max_len.

    Each cycle is rooted at its least vertex and walked in the direction whose
    second vertex is smaller than its last, so every cycle is counted once.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    lengths: Counter = Counter()

    def grow(chain, blocked):
        s, last = chain[0], chain[-1]
        for w in g.adj[last]:
            if w <= s or w in blocked:
                continue
            # w may touch only `last` among the interior; touching s closes a cycle
            interior_hit = any(w in g.adj[x] for x in chain[1:-1])
            if interior_hit:
                continue
            if w in g.adj[s]:
                if len(chain) >= 3 and chain[1] < w:
                    lengths[len(chain) + 1] += 1
                continue
            if len(chain) + 1 < max_len:
                chain.append(w)
                blocked.add(w)
                grow(chain, blocked)
                blocked.discard(w)
                chain.pop()

    for s in range(g.n):
        for v in g.adj[s]:
            if v > s:
                grow([s, v], {s, v})
    return lengths


def triangle_membership(g: Graph) -> list[int]:
    counts = [0] * g.n
    for t in enumerate_triangles(g):
        for v in t:
            counts[v] += 1
    return counts
