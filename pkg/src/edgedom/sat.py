"""1-in-3 SAT formulas: validation, brute-force solving, positivizing, variable splitting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import FormulaError, NotCubic, NotPositive, NotVariableMonotone, TooLarge
from .graph import Graph, build_graph

DEFAULT_VAR_LIMIT = 24

# values[i] is the truth value of variable i + 1
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class Formula3:
    """CNF with exactly three distinct variables per clause.

    Literals are DIMACS-style nonzero ints: ``v`` or ``-v`` for variable ``v``
    in ``1..num_vars``.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]]):
        clauses = tuple(tuple(int(x) for x in cl) for cl in clauses)
        for i, cl in enumerate(clauses):
            if len(cl) != 3:
                raise FormulaError(f"clause {i + 1} has {len(cl)} literals, expected 3")
            if any(x == 0 or abs(x) > num_vars for x in cl):
                raise FormulaError(f"clause {i + 1} has a literal outside 1..{num_vars}")
            if len({abs(x) for x in cl}) != 3:
                raise FormulaError(f"clause {i + 1} repeats a variable")
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "clauses", clauses)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_positive(self) -> bool:
        return all(x > 0 for cl in self.clauses for x in cl)

    def sign_conflict(self) -> Optional[int]:
        """Least variable occurring with both signs, or None if variable-monotone."""
        signs: dict[int, set[bool]] = {}
        for cl in self.clauses:
            for x in cl:
                signs.setdefault(abs(x), set()).add(x > 0)
        bad = [v for v, s in signs.items() if len(s) == 2]
        return min(bad) if bad else None

    def is_variable_monotone(self) -> bool:
        return self.sign_conflict() is None

    def is_monotone(self) -> bool:
        lits = [x for cl in self.clauses for x in cl]
        return all(x > 0 for x in lits) or all(x < 0 for x in lits)

    def occurrences(self) -> list[int]:
        """occurrences()[v] is the number of clauses containing variable v (index 0 unused)."""
        occ = [0] * (self.num_vars + 1)
        for cl in self.clauses:
            for x in cl:
                occ[abs(x)] += 1
        return occ

    def negated_variables(self) -> frozenset[int]:
        return frozenset(abs(x) for cl in self.clauses for x in cl if x < 0)


def is_valid_assignment(f: Formula3, a: Sequence[bool]) -> bool:
    return all(sum(1 for x in cl if a[abs(x) - 1] == (x > 0)) == 1 for cl in f.clauses)


def brute_force_1in3(f: Formula3, limit: Optional[int] = DEFAULT_VAR_LIMIT) -> list[Assignment]:
    """All assignments with exactly one true literal per clause, sorted (False < True).

    Exhaustive search with exactly-one propagation; ``limit=None`` lifts the bound.
    """
    if limit is not None and f.num_vars > limit:
        raise TooLarge(f"formula has {f.num_vars} variables; oracle bound is {limit}")
    by_var: list[list[int]] = [[] for _ in range(f.num_vars + 1)]
    for i, cl in enumerate(f.clauses):
        for x in cl:
            by_var[abs(x)].append(i)

    def lit_value(x, vals):
        v = vals[abs(x)]
        return None if v is None else v == (x > 0)

    def settle(vals, queue):
        while queue:
            ci = queue.pop()
            cl = f.clauses[ci]
            states = [lit_value(x, vals) for x in cl]
            trues = states.count(True)
            if trues > 1:
                return False
            unknown = [x for x, s in zip(cl, states) if s is None]
            if trues == 1:
                forced = [(x, False) for x in unknown]
            elif len(unknown) == 1:
                forced = [(unknown[0], True)]
            elif not unknown:
                return False
            else:
                forced = []
            for x, lit_true in forced:
                vals[abs(x)] = lit_true == (x > 0)
                queue.extend(by_var[abs(x)])
        return True

    out: list[Assignment] = []

    def rec(vals):
        free = next((v for v in range(1, f.num_vars + 1) if vals[v] is None), None)
        if free is None:
            out.append(tuple(vals[1:]))
            return
        for value in (False, True):
            nv = list(vals)
            nv[free] = value
            if settle(nv, list(by_var[free])):
                rec(nv)

    start: list[Optional[bool]] = [None] * (f.num_vars + 1)
    if settle(start, list(range(f.num_clauses))):
        rec(start)
    out.sort()
    assert all(is_valid_assignment(f, a) for a in out)
    return out


def positivize(f: Formula3) -> Formula3:
    """Complement every uniformly negative variable."""
    bad = f.sign_conflict()
    if bad is not None:
        raise NotVariableMonotone(bad)
    return Formula3(f.num_vars, [tuple(abs(x) for x in cl) for cl in f.clauses])


def flip_assignment(a: Sequence[bool], variables: Iterable[int]) -> Assignment:
    flipped = set(variables)
    return tuple((not val) if i + 1 in flipped else val for i, val in enumerate(a))


def _require_positive(f: Formula3):
    if not f.is_positive():
        raise NotPositive("formula has negative literals")


def split_variables(f: Formula3) -> tuple[Formula3, dict[int, tuple[int, int, int]]]:
    """Replace each variable of a cubic positive formula by three forced-equal copies.

    Variable ``v`` owns the block ``13(v-1)+1 .. 13v``: its copies x^1..x^3 first,
    then w^1..w^5 of the first gadget and w^1..w^5 of the second. The j-th
    occurrence of ``v`` (in clause order) becomes x^j. Original clauses come
    first, followed by eight gadget clauses per variable.
    """
    _require_positive(f)
    occ = f.occurrences()
    for v in range(1, f.num_vars + 1):
        if occ[v] != 3:
            raise NotCubic(v, occ[v])

    base = {v: 13 * (v - 1) for v in range(1, f.num_vars + 1)}
    copies = {v: (base[v] + 1, base[v] + 2, base[v] + 3) for v in base}
    seen = {v: 0 for v in base}
    clauses = []
    for cl in f.clauses:
        new = []
        for x in cl:
            new.append(copies[x][seen[x]])
            seen[x] += 1
        clauses.append(tuple(new))
    for v in range(1, f.num_vars + 1):
        x = copies[v]
        for j in (0, 1):
            w = [None] + [base[v] + 4 + 5 * j + k for k in range(5)]
            clauses += [
                (x[j], w[1], w[2]),
                (w[1], w[3], w[4]),
                (x[j + 1], w[4], w[5]),
                (w[2], w[3], w[5]),
            ]
    return Formula3(13 * f.num_vars, clauses), copies


@dataclass(frozen=True)
class AssociatedGraph:
    """Variable/clause incidence graph.

    Circle vertex ``v - 1`` stands for variable ``v``; rectangle vertex
    ``num_vars + j`` stands for clause ``j`` (0-based).
    """

    graph: Graph
    num_vars: int

    def circle(self, var: int) -> int:
        return var - 1

    def rectangle(self, clause: int) -> int:
        return self.num_vars + clause


def associated_graph(f: Formula3) -> AssociatedGraph:
    edges = [(abs(x) - 1, f.num_vars + j) for j, cl in enumerate(f.clauses) for x in cl]
    labels = ["circle"] * f.num_vars + ["rectangle"] * f.num_clauses
    g = build_graph(f.num_vars + f.num_clauses, edges, labels)
    return AssociatedGraph(g, f.num_vars)
