import random

import pytest
from hypothesis import given, settings, strategies as st

from edgedom.corpus import curated_graphs, nsf_cricket_free_corpus, random_nsf_cricket_free
from edgedom.dim import B, W, brute_force_dims, is_dim, validate_partial, validate_total
from edgedom.errors import NotCricketFree, NotNsf, NoCompletion, StructureViolation
from edgedom.graph import build_graph, disjoint_union
from edgedom.patterns import is_cricket_free, is_nsf, named_graph
from edgedom.solver import (
    RESIDUAL_NO_COMPLETION,
    Conflict,
    _fixpoint,
    _paw_partners,
    build_residual,
    complete_residual,
    discharge,
    precolor,
    propagate,
    solve,
)

PRISM = build_graph(6, [(0, 2), (0, 3), (0, 5), (1, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)])


def in_class(g):
    return is_nsf(g)[0] and is_cricket_free(g)[0]


def test_discharge_examples():
    hit = discharge(named_graph("K4"))
    assert hit.pattern == "K4" and hit.witness == (0, 1, 2, 3)
    hit = discharge(named_graph("gem"))
    assert hit.pattern == "gem" and len(hit.witness) == 5
    assert discharge(named_graph("butterfly")) is None


def test_precolor_examples():
    b = named_graph("butterfly")
    assert precolor(b) == {0: W, 1: B, 2: B, 3: B, 4: B}
    d = named_graph("diamond")
    c = precolor(d)
    assert all(c[v] is (B if d.degree(v) == 3 else W) for v in range(4))
    assert precolor(named_graph("P2")) == {0: B, 1: B}
    assert precolor(build_graph(2, [])) == {0: W, 1: W}


def test_w5_is_discharged_through_a_gem():
    w5 = named_graph("W5")
    # four consecutive rim vertices plus the hub induce a gem
    assert discharge(w5).pattern == "gem"
    # the diamond rule alone would also reject it
    assert isinstance(precolor(w5), Conflict)
    assert brute_force_dims(w5) == []


def test_paw_rule_whitens_pendant():
    paw = named_graph("paw")
    c = propagate(paw, precolor(paw))
    assert c[0] is B and c[3] is W


def test_rule_f_whitens_third_neighbor():
    g = build_graph(3, [(0, 1), (1, 2)])
    c = _fixpoint(g, {0: B, 1: B}, {}, rules="f")
    assert c[2] is W


def test_propagation_keeps_partial_validity_on_p3():
    p3 = named_graph("P3")
    out = propagate(p3, {0: W})
    assert out[1] is B and validate_partial(p3, out)


def test_build_residual_examples():
    two = disjoint_union(named_graph("K3"), named_graph("K3"))
    spec = build_residual(two, {})
    assert set(spec.triangle_classes.values()) == {"Type1"} and len(spec.triangle_classes) == 2
    assert spec.residual.m == 6
    k3 = named_graph("K3")
    spec = build_residual(k3, {0: B})
    assert spec.triangle_classes == {(0, 1, 2): "Type2"} and spec.fixed_black == {0}
    with pytest.raises(StructureViolation):
        build_residual(k3, {0: B, 1: B})


def test_complete_residual_examples():
    k3 = named_graph("K3")
    assert complete_residual(build_residual(k3, {})) == {0: W, 1: B, 2: B}
    got = complete_residual(build_residual(k3, {0: B}))
    assert got[0] is B and sorted(c.value for c in got.values()) == ["B", "B", "W"]
    joined = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
    got = complete_residual(build_residual(joined, {}))
    assert validate_total(joined, got)


def test_complete_residual_reports_prism():
    with pytest.raises(NoCompletion):
        complete_residual(build_residual(PRISM, {}))


def test_solve_examples():
    res = solve(named_graph("butterfly"))
    assert res.dim == ((1, 2), (3, 4))
    assert solve(named_graph("K4")).reason == "discharged-pattern"
    res = solve(named_graph("C3"))
    assert len(res.dim) == 1 and is_dim(named_graph("C3"), res.dim)
    # lexicographically least valid coloring: vertex 0 white
    assert res.dim == ((1, 2),)


def test_solve_prism_has_no_dim():
    assert in_class(PRISM)
    assert discharge(PRISM) is None
    res = solve(PRISM)
    assert not res.found and res.reason == RESIDUAL_NO_COMPLETION
    assert brute_force_dims(PRISM) == []


def test_solve_rejects_out_of_class():
    with pytest.raises(NotNsf):
        solve(named_graph("claw"))
    with pytest.raises(NotCricketFree):
        solve(named_graph("cricket"))


@pytest.mark.parametrize("name,g", sorted((k, g) for k, g in curated_graphs(24).items() if in_class(g)))
def test_solver_matches_oracle_curated(name, g):
    res = solve(g)
    assert res.found == bool(brute_force_dims(g))
    if res.found:
        assert is_dim(g, res.dim)


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2**32 - 1))
def test_solver_matches_oracle_random(n, seed):
    g = random_nsf_cricket_free(n, random.Random(seed))
    res = solve(g)
    dims = brute_force_dims(g)
    assert res.found == bool(dims)
    if res.found:
        assert res.dim in dims
        assert validate_total(g, res.coloring)


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2**32 - 1))
def test_propagation_is_confluent(n, seed):
    g = random_nsf_cricket_free(n, random.Random(seed))
    if discharge(g) is not None:
        return
    c = precolor(g)
    if isinstance(c, Conflict) or not validate_partial(g, c):
        return
    paws = _paw_partners(g)
    base = propagate(g, c, paws=paws)
    rng = random.Random(seed)
    for _ in range(5):
        other = propagate(g, c, rng=rng, paws=paws)
        if isinstance(base, Conflict):
            assert isinstance(other, Conflict)
        else:
            assert other == base


def test_solver_is_deterministic():
    for g in nsf_cricket_free_corpus(30, seed=5):
        assert solve(g) == solve(g)


def test_randomized_order_gives_same_answer():
    for i, g in enumerate(nsf_cricket_free_corpus(40, seed=9)):
        assert solve(g, rng=random.Random(i)).dim == solve(g).dim
