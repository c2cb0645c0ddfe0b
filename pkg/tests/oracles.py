"""Deliberately naive reference implementations, kept independent of the package internals."""

from itertools import combinations, permutations, product


def edge_list(g):
    return [(u, v) for u in range(g.n) for v in g.adj[u] if u < v]


def shares_vertex(e, f):
    return bool(set(e) & set(f))


def naive_dominations(edges, d):
    return {e: sum(1 for f in d if shares_vertex(e, f)) for e in edges}


def naive_dims(g):
    """Every edge subset D such that each edge meets exactly one member of D."""
    edges = edge_list(g)
    out = []
    for r in range(len(edges) + 1):
        for d in combinations(edges, r):
            if all(c == 1 for c in naive_dominations(edges, d).values()):
                out.append(tuple(sorted(d)))
    return sorted(out)


def naive_peds(g):
    edges = edge_list(g)
    out = []
    for r in range(len(edges) + 1):
        for d in combinations(edges, r):
            dom = naive_dominations(edges, d)
            if all(dom[e] == 1 for e in edges if e not in d):
                out.append(tuple(sorted(d)))
    return sorted(out)


def naive_1in3(f):
    sols = []
    for bits in product((False, True), repeat=f.num_vars):
        ok = True
        for cl in f.clauses:
            vals = [bits[abs(x) - 1] if x > 0 else not bits[abs(x) - 1] for x in cl]
            if sum(vals) != 1:
                ok = False
                break
        if ok:
            sols.append(bits)
    return sols


def naive_induced_count(g, p):
    """Count vertex subsets of g that induce a copy of p, via all injective maps."""
    pe = {frozenset(e) for e in edge_list(p)}
    count = 0
    for s in combinations(range(g.n), p.n):
        for perm in permutations(s):
            if all((frozenset((a, b)) in pe) == (perm[b] in g.adj[perm[a]])
                   for a, b in combinations(range(p.n), 2)):
                count += 1
                break
    return count


def naive_induced_cycle_lengths(g, max_len):
    """Lengths of chordless cycles found by testing every vertex subset for being a 2-regular connected induced graph."""
    from collections import Counter

    out = Counter()
    for k in range(4, min(max_len, g.n) + 1):
        for s in combinations(range(g.n), k):
            ss = set(s)
            if any(len(g.adj[v] & ss) != 2 for v in s):
                continue
            seen, stack = {s[0]}, [s[0]]
            while stack:
                x = stack.pop()
                for y in g.adj[x] & ss:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == k:
                out[k] += 1
    return out


def are_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    he = {frozenset(e) for e in edge_list(h)}
    return any(all(frozenset((p[u], p[v])) in he for u, v in edge_list(g))
               for p in permutations(range(h.n)))
