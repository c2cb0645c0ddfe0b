"""Seeded random instance generators for tests, the CLI and the acceptance suite."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, build_graph
from .patterns import PATTERN_NAMES, is_cricket_free, is_nsf, named_graph
from .sat import Formula3


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_triangle_graph(n: int, rng: random.Random, max_edges: int = 24) -> Graph:
    """Random graph assembled mostly from triangles, plus a few pendants and stray edges.

    Built this way so that a large share of outputs are NSF.
    """
    edges: set[tuple[int, int]] = set()
    n_tri = rng.randint(1, max(1, n // 2 + 1))
    for _ in range(n_tri):
        a, b, c = sorted(rng.sample(range(n), 3))
        edges |= {(a, b), (a, c), (b, c)}
    for _ in range(rng.randint(0, 2)):
        u, v = sorted(rng.sample(range(n), 2))
        edges.add((u, v))
    edges = set(sorted(edges)[: max_edges]) if len(edges) > max_edges else edges
    return build_graph(n, sorted(edges))


def random_nsf_cricket_free(n: int, rng: random.Random, max_edges: int = 24,
                            attempts: int = 1000) -> Graph:
    for _ in range(attempts):
        g = random_triangle_graph(n, rng, max_edges)
        if g.m <= max_edges and is_nsf(g)[0] and is_cricket_free(g)[0]:
            return g
    raise RuntimeError(f"no NSF cricket-free graph on {n} vertices after {attempts} attempts")


def nsf_cricket_free_corpus(count: int, seed: int = 0, n_range=(3, 12), max_edges: int = 24):
    rng = random.Random(seed)
    return [random_nsf_cricket_free(rng.randint(*n_range), rng, max_edges) for _ in range(count)]


def curated_graphs(max_edges: int = 24) -> dict[str, Graph]:
    """Named library graphs plus small members of each family."""
    out = {name: named_graph(name) for name in PATTERN_NAMES}
    for k in range(3, 10):
        out[f"C{k}"] = named_graph(f"C{k}")
    for k in range(1, 9):
        out[f"P{k}"] = named_graph(f"P{k}")
    for k in range(1, 6):
        out[f"star:{k}"] = named_graph(f"star:{k}")
    for k in range(3, 7):
        out[f"W{k}"] = named_graph(f"W{k}")
    for k in range(1, 6):
        out[f"K{k}"] = named_graph(f"K{k}")
    out["H3"] = named_graph("H:3")
    # triangular prism: in the solver's class, has no DIM, survives discharge and pre-coloring
    out["prism"] = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
    return {k: g for k, g in out.items() if g.m <= max_edges}


def random_positive_formula(num_vars: int, num_clauses: int, rng: random.Random) -> Formula3:
    clauses = [tuple(sorted(rng.sample(range(1, num_vars + 1), 3))) for _ in range(num_clauses)]
    return Formula3(num_vars, clauses)


def random_c4_free_formula(num_vars: int, num_clauses: int, rng: random.Random,
                           max_occurrences: int = 3, attempts: int = 2000) -> Formula3:
    """Positive formula whose associated graph is C4-free with variable degree bounded.

    Clauses share at most one variable and each variable occurs at most
    ``max_occurrences`` times.
    """
    for _ in range(attempts):
        clauses: list[tuple[int, ...]] = []
        occ = [0] * (num_vars + 1)
        for _ in range(num_clauses):
            for _ in range(50):
                avail = [v for v in range(1, num_vars + 1) if occ[v] < max_occurrences]
                if len(avail) < 3:
                    break
                cl = tuple(sorted(rng.sample(avail, 3)))
                if all(len(set(cl) & set(o)) <= 1 for o in clauses):
                    clauses.append(cl)
                    for v in cl:
                        occ[v] += 1
                    break
        if len(clauses) == num_clauses:
            return Formula3(num_vars, clauses)
    raise RuntimeError("could not build a C4-free formula with these parameters")


def random_cubic_formula(num_vars: int, rng: random.Random, attempts: int = 1000) -> Formula3:
    """Positive formula in which every variable occurs in exactly 3 clauses."""
    if num_vars < 3:
        raise ValueError("need at least 3 variables")
    for _ in range(attempts):
        stubs = [v for v in range(1, num_vars + 1) for _ in range(3)]
        rng.shuffle(stubs)
        clauses = [tuple(sorted(stubs[i:i + 3])) for i in range(0, len(stubs), 3)]
        if all(len(set(c)) == 3 for c in clauses):
            return Formula3(num_vars, clauses)
    raise RuntimeError("could not build a cubic formula")


def cubic_fixtures() -> list[Formula3]:
    """The cubic positive formulas on at most 4 variables, up to renaming."""
    return [
        Formula3(3, [(1, 2, 3)] * 3),
        Formula3(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]),
    ]
