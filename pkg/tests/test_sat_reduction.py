import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from edgedom.corpus import cubic_fixtures, random_c4_free_formula, random_cubic_formula, random_positive_formula
from edgedom.dim import B, W, brute_force_dims, coloring_from_dim, validate_total
from edgedom.errors import (
    FormulaError,
    InvalidColoring,
    NotAnEdge,
    NotCubic,
    NotMainTransformOutput,
    NotPositive,
    NotVariableMonotone,
    TooLarge,
)
from edgedom.graph import enumerate_triangles
from edgedom.patterns import find_induced, induced_cycles_up_to, is_nsf, named_graph
from edgedom.reduction import (
    ChainScheme,
    assignment_to_coloring,
    coloring_to_assignment,
    expected_chain_counts,
    main_transformation,
    replace_edges_with_chains,
    subdivide_edge_3x,
)
from edgedom.sat import (
    Formula3,
    associated_graph,
    brute_force_1in3,
    flip_assignment,
    is_valid_assignment,
    positivize,
    split_variables,
)
from oracles import naive_1in3

SINGLE = Formula3(3, [(1, 2, 3)])


def naive_1in3_chain(f):
    # brute force is hopeless at 26 variables; check candidates clause by clause instead
    sols = [()]
    for v in range(1, f.num_vars + 1):
        grown = []
        for a in sols:
            for val in (False, True):
                b = a + (val,)
                if all(sum(b[x - 1] for x in cl) == 1 for cl in f.clauses if max(cl) <= v) and \
                        all(sum(b[x - 1] for x in cl if x <= v) <= 1 for cl in f.clauses):
                    grown.append(b)
        sols = grown
    return sols


@st.composite
def positive_formulas(draw, max_vars=6, max_clauses=4):
    n = draw(st.integers(3, max_vars))
    m = draw(st.integers(1, max_clauses))
    clause = st.lists(st.integers(1, n), min_size=3, max_size=3, unique=True).map(lambda c: tuple(sorted(c)))
    return Formula3(n, draw(st.lists(clause, min_size=m, max_size=m)))


def test_formula_invariants():
    with pytest.raises(FormulaError):
        Formula3(2, [(1, -1, 2)])
    with pytest.raises(FormulaError):
        Formula3(3, [(1, 2)])
    with pytest.raises(FormulaError):
        Formula3(3, [(1, 2, 4)])


def test_1in3_examples():
    assert brute_force_1in3(SINGLE) == [(False, False, True), (False, True, False), (True, False, False)]
    f = Formula3(4, [(1, 2, 3), (1, 2, 4)])
    assert brute_force_1in3(f) == sorted(naive_1in3(f))
    assert len(brute_force_1in3(f)) == 3


def test_1in3_bound():
    big = Formula3(30, [(1, 2, 3)])
    with pytest.raises(TooLarge):
        brute_force_1in3(big)
    # a chain of clauses pins every variable, so lifting the bound stays cheap
    chained = Formula3(26, [(1, 2, 3)] + [(i, i + 1, i + 2) for i in range(3, 25)] + [(1, 25, 26)])
    assert brute_force_1in3(chained, limit=None) == sorted(naive_1in3_chain(chained))


@settings(max_examples=80, deadline=None)
@given(positive_formulas())
def test_1in3_matches_naive(f):
    assert brute_force_1in3(f) == sorted(naive_1in3(f))
    for a in brute_force_1in3(f):
        assert is_valid_assignment(f, a)


def test_positivize_examples():
    f = Formula3(3, [(-1, 2, 3)])
    assert positivize(f).clauses == ((1, 2, 3),)
    assert positivize(SINGLE) == SINGLE
    with pytest.raises(NotVariableMonotone):
        positivize(Formula3(4, [(-1, 2, 3), (1, 2, 4)]))


@settings(max_examples=50, deadline=None)
@given(positive_formulas(max_vars=5, max_clauses=3), st.data())
def test_positivize_flips_solutions(f, data):
    neg = data.draw(st.sets(st.integers(1, f.num_vars)))
    signed = Formula3(f.num_vars, [tuple(-x if x in neg else x for x in cl) for cl in f.clauses])
    assert positivize(signed) == f
    got = sorted(flip_assignment(a, signed.negated_variables()) for a in naive_1in3(signed))
    assert got == brute_force_1in3(f)


def test_split_variables_counts_and_rejections():
    f3, f4 = cubic_fixtures()
    for f in (f3, f4):
        g, copies = split_variables(f)
        assert g.num_vars == 13 * f.num_vars
        assert g.num_clauses == f.num_clauses + 8 * f.num_vars
        assert len(copies) == f.num_vars
    with pytest.raises(NotCubic):
        split_variables(SINGLE)
    with pytest.raises(NotPositive):
        split_variables(Formula3(3, [(-1, 2, 3)] * 3))


def test_split_variables_preserves_satisfiability_on_fixtures():
    for f in cubic_fixtures():
        g, copies = split_variables(f)
        sols = brute_force_1in3(g, limit=None)
        assert bool(sols) == bool(naive_1in3(f))
        for a in sols:
            for v, cs in copies.items():
                assert len({a[c - 1] for c in cs}) == 1
        assert sorted({tuple(a[copies[v][0] - 1] for v in sorted(copies)) for a in sols}) == sorted(naive_1in3(f))


def test_split_random_cubic_counts():
    rng = random.Random(1)
    for n in (3, 5, 6, 9):
        f = random_cubic_formula(n, rng)
        g, _ = split_variables(f)
        assert (g.num_vars, g.num_clauses) == (13 * n, f.num_clauses + 8 * n)
        ag = associated_graph(g).graph
        assert ag.max_degree() <= 3


def test_associated_graph_examples():
    ag = associated_graph(SINGLE)
    g = ag.graph
    assert (g.n, g.m) == (4, 3) and g.degree(ag.rectangle(0)) == 3
    two = associated_graph(Formula3(4, [(1, 2, 3), (1, 2, 4)])).graph
    assert find_induced(two, "C4")
    for f in cubic_fixtures():
        ag = associated_graph(split_variables(f)[0]).graph
        assert not find_induced(ag, "C4") and ag.max_degree() == 3


def test_main_transformation_single_clause():
    g, t = main_transformation(SINGLE)
    assert (g.n, g.m) == (12, 15)
    assert is_nsf(g)[0]
    assert t.var_to_circle == {1: 0, 2: 3, 3: 6}
    assert t.clause_to_triangle == {1: (9, 10, 11)} and t.clause_owners == {1: (1, 2, 3)}
    with pytest.raises(NotPositive):
        main_transformation(Formula3(3, [(-1, 2, 3)]))


@settings(max_examples=40, deadline=None)
@given(positive_formulas(max_vars=8, max_clauses=6))
def test_main_transformation_structure(f):
    g, _ = main_transformation(f)
    n, m = f.num_vars, f.num_clauses
    assert (g.n, g.m) == (3 * n + 3 * m, 3 * n + 6 * m)
    per_vertex = [0] * g.n
    for t in enumerate_triangles(g):
        for v in t:
            per_vertex[v] += 1
    assert per_vertex == [1] * g.n
    assert min(g.degree(v) for v in range(g.n)) >= 2


def test_main_transformation_pattern_free_on_c4_free_formulas():
    rng = random.Random(11)
    for _ in range(5):
        f = random_c4_free_formula(9, 6, rng)
        g, _ = main_transformation(f)
        for p in ("K4", "diamond", "butterfly", "K15", "H", "snail", "press"):
            assert find_induced(g, p) == []
        assert set(induced_cycles_up_to(g, 12)) <= {9, 12}


def test_assignment_to_coloring_examples():
    g, t = main_transformation(SINGLE)
    c = assignment_to_coloring(t, (True, False, False))
    assert validate_total(g, c)
    assert [c[v] for v in t.clause_to_triangle[1]] == [W, B, B]
    assert not validate_total(g, assignment_to_coloring(t, (True, True, False)))
    bad = assignment_to_coloring(t, (False, False, False))
    assert all(bad[v] is B for v in t.clause_to_triangle[1])
    assert not validate_total(g, bad)


def test_dims_map_two_to_one_on_single_clause():
    g, t = main_transformation(SINGLE)
    dims = brute_force_dims(g)
    assert len(dims) == 6
    images = [coloring_to_assignment(t, coloring_from_dim(g, d)) for d in dims]
    assert sorted(set(images)) == brute_force_1in3(SINGLE)
    assert all(images.count(a) == 2 for a in set(images))


def test_coloring_to_assignment_rejects_invalid():
    g, t = main_transformation(SINGLE)
    with pytest.raises(InvalidColoring):
        coloring_to_assignment(t, {v: W for v in range(g.n)})


@settings(max_examples=40, deadline=None)
@given(positive_formulas(max_vars=5, max_clauses=3))
def test_reduction_equivalence_and_round_trip(f):
    g, t = main_transformation(f)
    sols = brute_force_1in3(f)
    dims = brute_force_dims(g, limit=None)
    assert bool(sols) == bool(dims)
    for a in sols:
        c = assignment_to_coloring(t, a)
        assert validate_total(g, c)
        assert coloring_to_assignment(t, c) == a
    for d in dims:
        assert is_valid_assignment(f, coloring_to_assignment(t, coloring_from_dim(g, d)))


def test_chain_scheme_parse():
    assert ChainScheme.parse("type1:2") == ChainScheme("type1", 2)
    assert str(ChainScheme.parse("type2:1:diamond")) == "type2:1:diamond"
    for bad in ("type3:1", "type2:1", "type2:1:kite", "type1:x"):
        with pytest.raises(ValueError):
            ChainScheme.parse(bad)


@pytest.mark.parametrize("scheme", ["type1:1", "type1:2", "type2:1:butterfly", "type2:1:pendant",
                                    "type2:1:diamond", "type2:2:pendant"])
def test_chain_counts(scheme):
    g, t = main_transformation(SINGLE)
    sc = ChainScheme.parse(scheme)
    q, qt = replace_edges_with_chains(g, t, sc)
    assert (q.n, q.m) == expected_chain_counts(g.n, g.m, sc)
    assert len(qt.chain_records) == 3
    for r in qt.chain_records:
        assert r.path[0] == r.edge[0] and r.path[-1] == r.edge[1]
        assert all(q.has_edge(a, b) for a, b in zip(r.path, r.path[1:]))
    assert (min(q.degree(v) for v in range(q.n)) == 1) == (sc.gadget == "pendant")


def test_type1_counts_follow_link_arithmetic():
    g, t = main_transformation(SINGLE)
    q, _ = replace_edges_with_chains(g, t, ChainScheme("type1", 1))
    edges_replaced = g.m - g.n
    assert q.n == g.n + edges_replaced * 3 * 2
    assert (q.n, q.m) == (30, 39)


def test_chain_endpoints_get_opposite_colors():
    g, t = main_transformation(SINGLE)
    for scheme in ("type1:1", "type2:1:pendant"):
        q, qt = replace_edges_with_chains(g, t, ChainScheme.parse(scheme))
        dims = brute_force_dims(q, limit=None)
        assert dims
        for d in dims:
            c = coloring_from_dim(q, d)
            for r in qt.chain_records:
                assert c[r.edge[0]] is not c[r.edge[1]]


def test_chains_need_main_output():
    g, t = main_transformation(SINGLE)
    q, qt = replace_edges_with_chains(g, t, ChainScheme("type1", 1))
    with pytest.raises(NotMainTransformOutput):
        replace_edges_with_chains(q, qt, ChainScheme("type1", 1))
    with pytest.raises(ValueError):
        replace_edges_with_chains(g, t, ChainScheme("type1", 0))


def test_subdivide_examples():
    p4 = named_graph("P4")
    p7 = subdivide_edge_3x(p4, (1, 2))
    assert (p7.n, p7.m) == (7, 6) and sorted(p7.degree_sequence()) == [1, 1, 2, 2, 2, 2, 2]
    c6 = subdivide_edge_3x(named_graph("C3"), (0, 1))
    assert (c6.n, c6.m) == (6, 6) and dict(induced_cycles_up_to(c6, 6)) == {6: 1}
    assert bool(brute_force_dims(c6)) == bool(brute_force_dims(named_graph("C3")))
    with pytest.raises(NotAnEdge):
        subdivide_edge_3x(p4, (0, 3))
