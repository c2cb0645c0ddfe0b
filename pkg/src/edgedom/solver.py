"""Polynomial-time DIM algorithm for NSF cricket-free graphs.

Phases run in order: discharge forbidden patterns, pre-color from butterflies,
diamonds, leaves and isolated vertices, propagate to a fixpoint, and finally
complete the residual triangles that are still (partly) uncolored.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .dim import B, W, Color, Coloring, black_edges, validate_partial, validate_total
from .errors import NoCompletion, NotCricketFree, NotNsf, StructureViolation
from .graph import Edge, Graph, enumerate_triangles, induced_subgraph
from .patterns import find_induced, first_induced, is_cricket_free, is_nsf

DISCHARGE_PATTERNS = ("K4", "W4", "gem")

# reasons reported by solve() when no DIM exists
DISCHARGED = "discharged-pattern"
PRECOLOR_CONFLICT = "pre-color-conflict"
PROPAGATION_CONFLICT = "propagation-conflict"
INVALID_PARTIAL = "invalid-partial"
# the residual search is exhaustive, so an empty result means no DIM (the prism is the smallest case)
RESIDUAL_NO_COMPLETION = "residual-no-completion"


@dataclass(frozen=True)
class Discharged:
    pattern: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Conflict:
    """A vertex forced to both colors, or a partial coloring that became invalid."""

    vertex: int
    rule: str
    kind: str = "double-assignment"


@dataclass(frozen=True)
class ResidualSpec:
    residual: Graph
    vertices: tuple[int, ...]  # residual vertex i is host vertex vertices[i]
    fixed_black: frozenset[int]
    triangle_classes: dict[tuple[int, int, int], str]


@dataclass(frozen=True)
class SolveResult:
    dim: Optional[tuple[Edge, ...]]
    reason: Optional[str] = None
    detail: tuple = ()
    coloring: Optional[dict] = field(default=None, compare=False)
    # "propagation" when the fixpoint alone was total, "residual" otherwise
    stage: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.dim is not None


def discharge(g: Graph) -> Optional[Discharged]:
    """Return the first induced K4, W4 or gem, or None when there is none."""
    for name in DISCHARGE_PATTERNS:
        occ = first_induced(g, name)
        if occ is not None:
            return Discharged(name, occ)
    return None


def _odd_pair(g: Graph, occ) -> tuple[int, int]:
    # in an induced paw the pendant has degree 1 and its neighbor degree 3
    deg = {v: sum(1 for w in occ if w in g.adj[v]) for v in occ}
    odd = [v for v in occ if deg[v] % 2 == 1]
    return odd[0], odd[1]


def precolor(g: Graph) -> Union[Coloring, Conflict]:
    """Apply rules (a)-(d) once each over the whole graph."""
    c: Coloring = {}

    def put(v, color, rule):
        have = c.get(v)
        if have is None:
            c[v] = color
        elif have is not color:
            return Conflict(v, rule)
        return None

    for occ in find_induced(g, "butterfly"):
        for v in occ:
            inner = sum(1 for w in occ if w in g.adj[v])
            bad = put(v, W if inner == 4 else B, "a")
            if bad:
                return bad
    for occ in find_induced(g, "diamond"):
        for v in occ:
            inner = sum(1 for w in occ if w in g.adj[v])
            bad = put(v, B if inner == 3 else W, "b")
            if bad:
                return bad
    for v in range(g.n):
        if g.degree(v) == 1:
            (u,) = g.adj[v]
            bad = put(u, B, "c")
            if bad:
                return bad
    for v in range(g.n):
        if g.degree(v) == 0:
            bad = put(v, W, "d")
            if bad:
                return bad
    return c


def _paw_partners(g: Graph) -> dict[int, list[int]]:
    partners: dict[int, list[int]] = {}
    for occ in find_induced(g, "paw"):
        a, b = _odd_pair(g, occ)
        partners.setdefault(a, []).append(b)
        partners.setdefault(b, []).append(a)
    return partners


def _fixpoint(g, c, paws, rng=None, rules="efgh"):
    """Worklist fixpoint of the propagation rules.

    Returns the extended coloring, or a Conflict on a double assignment. With
    ``rng`` the worklist and the implications of each step are visited in a
    random order.
    """
    c = dict(c)
    work = sorted(c)

    def implications(x):
        out = []
        cx = c[x]
        if "e" in rules:
            out += [(y, cx.other, "e") for y in paws.get(x, ())]
        if cx is W:
            if "g" in rules:
                out += [(y, B, "g") for y in g.adj[x]]
        else:
            blacks = [y for y in g.adj[x] if c.get(y) is B]
            if "f" in rules:
                if blacks:
                    out += [(y, W, "f") for y in g.adj[x] if y != blacks[0]]
                for y in blacks:
                    out += [(z, W, "f") for z in g.adj[y] if z != x]
            if "h" in rules:
                for z in g.adj[x]:
                    if sum(1 for y in g.adj[z] if c.get(y) is B) >= 2:
                        out.append((z, W, "h"))
        return out

    while work:
        if rng is None:
            x = work.pop()
        else:
            x = work.pop(rng.randrange(len(work)))
        todo = implications(x)
        if rng is not None:
            rng.shuffle(todo)
        for y, color, rule in todo:
            have = c.get(y)
            if have is None:
                c[y] = color
                work.append(y)
            elif have is not color:
                return Conflict(y, rule)
    return c


def propagate(g: Graph, c: Coloring, rng: Optional[random.Random] = None, paws=None):
    """Extend a valid partial coloring with rules (e)-(h) until nothing changes.

    Returns the fixpoint coloring, or a Conflict when a vertex is forced both
    ways or the fixpoint fails the partial-validity check.
    """
    if paws is None:
        paws = _paw_partners(g)
    out = _fixpoint(g, c, paws, rng)
    if isinstance(out, Conflict):
        return out
    verdict = validate_partial(g, out)
    if not verdict:
        return Conflict(verdict.violation.witness[0], "validity", kind="invalid-partial")
    return out


def build_residual(g: Graph, c: Coloring) -> ResidualSpec:
    """Classify the triangles that still hold uncolored vertices and induce G'.

    Raises StructureViolation when any structural guarantee for NSF
    cricket-free inputs fails.
    """
    uncolored = {v for v in range(g.n) if v not in c}
    classes: dict[tuple[int, int, int], str] = {}
    fixed: set[int] = set()
    for t in enumerate_triangles(g):
        free = [v for v in t if v not in c]
        if not free:
            continue
        if len(free) == 3:
            classes[t] = "Type1"
        elif len(free) == 2:
            (v,) = [v for v in t if v in c]
            if c[v] is not B or any(c.get(w) is B for w in g.adj[v]):
                raise StructureViolation(f"triangle {t}: colored vertex {v} is not an isolated black")
            classes[t] = "Type2"
            fixed.add(v)
        else:
            raise StructureViolation(f"triangle {t} has a single uncolored vertex")

    covered: dict[int, tuple] = {}
    for t in classes:
        for v in t:
            if v in covered:
                raise StructureViolation(f"triangles {covered[v]} and {t} share vertex {v}")
            covered[v] = t
    missing = uncolored - covered.keys()
    if missing:
        raise StructureViolation(f"uncolored vertex {min(missing)} lies in no residual triangle")

    residual, verts = induced_subgraph(g, covered)
    if residual.max_degree() > 3:
        raise StructureViolation("residual graph is not subcubic")
    for i in range(residual.n):
        nb = sorted(residual.adj[i])
        if len(nb) == 3 and not any(residual.has_edge(a, b) for a, b in combinations(nb, 2)):
            raise StructureViolation(f"residual graph has a claw centered at {verts[i]}")
        if verts[i] in uncolored:
            joined = sum(1 for a, b in combinations(nb, 2) if residual.has_edge(a, b))
            if not ((len(nb) == 2 and joined == 1) or (len(nb) == 3 and joined == 1)):
                raise StructureViolation(
                    f"uncolored vertex {verts[i]} has residual degree {len(nb)} "
                    f"with {joined} adjacent neighbor pairs"
                )
    return ResidualSpec(residual, tuple(verts), frozenset(fixed), classes)


def complete_residual(spec: ResidualSpec) -> Coloring:
    """Lexicographically least total valid coloring of G' extending the fixed blacks.

    Depth-first over uncolored vertices in ascending order, trying white first,
    with rules (f)-(h) and the partial-validity check pruning each branch.
    Keys of the result are host vertex ids.
    """
    r = spec.residual
    local = {v: i for i, v in enumerate(spec.vertices)}
    start = {local[v]: B for v in spec.fixed_black}

    def search(c):
        c = _fixpoint(r, c, {}, rules="fgh")
        if isinstance(c, Conflict) or not validate_partial(r, c):
            return None
        free = [v for v in range(r.n) if v not in c]
        if not free:
            return c if validate_total(r, c) else None
        v = free[0]
        for color in (W, B):
            got = search({**c, v: color})
            if got is not None:
                return got
        return None

    found = search(start)
    if found is None:
        raise NoCompletion("residual graph admits no valid completion")
    return {spec.vertices[i]: col for i, col in found.items()}


def solve(g: Graph, rng: Optional[random.Random] = None) -> SolveResult:
    """Decide DIM existence for an NSF cricket-free graph and build one if it exists.

    Raises NotNsf / NotCricketFree for inputs outside the class.
    """
    ok, v = is_nsf(g)
    if not ok:
        raise NotNsf(v)
    ok, witness = is_cricket_free(g)
    if not ok:
        raise NotCricketFree(witness)

    hit = discharge(g)
    if hit is not None:
        return SolveResult(None, DISCHARGED, (hit.pattern, *hit.witness))

    c = precolor(g)
    if isinstance(c, Conflict):
        return SolveResult(None, PRECOLOR_CONFLICT, (c.vertex,))
    verdict = validate_partial(g, c)
    if not verdict:
        return SolveResult(None, INVALID_PARTIAL, verdict.violation.witness)

    c = propagate(g, c, rng)
    if isinstance(c, Conflict):
        reason = INVALID_PARTIAL if c.kind == "invalid-partial" else PROPAGATION_CONFLICT
        return SolveResult(None, reason, (c.vertex,))

    stage = "propagation"
    if len(c) < g.n:
        stage = "residual"
        spec = build_residual(g, c)
        try:
            c = {**c, **complete_residual(spec)}
        except NoCompletion:
            return SolveResult(None, RESIDUAL_NO_COMPLETION, spec.vertices)
    verdict = validate_total(g, c)
    if not verdict:
        raise StructureViolation(f"merged coloring is invalid: {verdict.violation}")
    return SolveResult(black_edges(g, c), coloring=c, stage=stage)
