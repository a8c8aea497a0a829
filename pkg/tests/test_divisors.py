"""Divisor arithmetic, the Laplacian, and q-reduction."""

import random

import pytest
from hypothesis import given, settings, strategies as st

import chipfire as cf
from chipfire import MissingVertexError, UnboundVertexError

from oracles import equivalent_oracle


def random_divisor(g, rng, low=-3, high=3):
    return cf.Divisor(
        g, {v: rng.randint(low, high) for v in g.vertices if rng.random() < 0.7}
    )


def random_function(g, rng, low=-2, high=2):
    return {v: rng.randint(low, high) for v in g.vertices}


def test_divisor_basics():
    g = cf.banana_graph(3)
    d = cf.Divisor(g, {"Q1": 2, "Q2": -1})
    assert d.degree == 1
    assert d["Q1"] == 2
    assert not d.is_effective()
    assert (d + d).degree == 2
    assert (d - d) == cf.zero_divisor(g)
    assert (2 * d)["Q2"] == -2


def test_divisor_rejects_unknown_vertex():
    g = cf.banana_graph(3)
    with pytest.raises(UnboundVertexError):
        cf.Divisor(g, {"nope": 1})


def test_laplacian_banana_indicator():
    g = cf.banana_graph(3)
    d = cf.laplacian_apply(g, {"Q1": 1, "Q2": 0})
    assert d == cf.Divisor(g, {"Q1": 3, "Q2": -3})


def test_laplacian_kills_constants():
    g = cf.complete_graph(4)
    assert cf.laplacian_apply(g, {v: 7 for v in g.vertices}) == cf.zero_divisor(g)


def test_laplacian_path_indicator():
    g = cf.parse_graph("a b\nb c")
    d = cf.laplacian_apply(g, {"a": 1, "b": 0, "c": 0})
    assert d == cf.Divisor(g, {"a": 1, "b": -1})


def test_laplacian_requires_total_function():
    g = cf.banana_graph(3)
    with pytest.raises(MissingVertexError):
        cf.laplacian_apply(g, {"Q1": 1})


@settings(max_examples=50, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_laplacian_degree_zero(seed):
    rng = random.Random(seed)
    g = cf.random_multigraph(2 + seed % 5, seed % 6, seed=seed)
    assert cf.laplacian_apply(g, random_function(g, rng)).degree == 0


def test_q_reduce_idempotent():
    g = cf.banana_graph(3)
    d = cf.Divisor(g, {"Q1": -2, "Q2": 5})
    once = cf.q_reduce(g, d, "Q1")
    assert cf.q_reduce(g, once, "Q1") == once
    assert cf.is_q_reduced(g, once, "Q1")


def test_q_reduce_banana_principal_pair():
    g = cf.banana_graph(3)
    a = cf.q_reduce(g, cf.Divisor(g, {"Q1": 3}), "Q1")
    b = cf.q_reduce(g, cf.Divisor(g, {"Q2": 3}), "Q1")
    assert a == b  # 3(Q1) - 3(Q2) is the Laplacian of the Q1 indicator


@settings(max_examples=50, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_q_reduce_constant_on_classes(seed):
    rng = random.Random(seed)
    g = cf.random_multigraph(2 + seed % 5, seed % 6, seed=seed)
    d = random_divisor(g, rng)
    shifted = d + cf.laplacian_apply(g, random_function(g, rng))
    q = g.vertices[0]
    assert cf.q_reduce(g, d, q) == cf.q_reduce(g, shifted, q)


@settings(max_examples=50, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_q_reduce_output_is_equivalent_and_reduced(seed):
    rng = random.Random(seed)
    g = cf.random_multigraph(2 + seed % 5, seed % 6, seed=seed)
    d = random_divisor(g, rng)
    q = g.vertices[rng.randrange(len(g.vertices))]
    red = cf.q_reduce(g, d, q)
    assert cf.is_q_reduced(g, red, q)
    assert equivalent_oracle(g, d.to_vector(), red.to_vector())
    assert all(red[v] >= 0 for v in g.vertices if v != q)


def test_is_equivalent_reflexive():
    g = cf.banana_graph(3)
    d = cf.Divisor(g, {"Q1": 2})
    assert cf.is_equivalent(g, d, d)


def test_is_equivalent_banana_singletons_differ():
    g = cf.banana_graph(3)
    assert not cf.is_equivalent(
        g, cf.Divisor(g, {"Q1": 1}), cf.Divisor(g, {"Q2": 1})
    )


def test_is_equivalent_quartic_paper_pair():
    g = cf.load_fixture().graph
    assert cf.is_equivalent(
        g, cf.Divisor(g, {"Q1": 3}), cf.Divisor(g, {"P": 2, "P'": 1})
    )
    assert cf.is_equivalent(g, cf.Divisor(g, {"Q1": 3}), cf.Divisor(g, {"Q2": 3}))


@settings(max_examples=30, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_is_equivalent_matches_oracle(seed):
    rng = random.Random(seed)
    g = cf.random_multigraph(2 + seed % 3, seed % 4, seed=seed)
    d1 = random_divisor(g, rng, -2, 2)
    d2 = random_divisor(g, rng, -2, 2)
    assert cf.is_equivalent(g, d1, d2) == equivalent_oracle(
        g, d1.to_vector(), d2.to_vector()
    )


@settings(max_examples=25, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_equivalence_relation_on_degree_stratum(seed):
    rng = random.Random(seed)
    g = cf.random_multigraph(2 + seed % 4, seed % 5, seed=seed)
    base = random_divisor(g, rng, -2, 2)
    shift1 = cf.laplacian_apply(g, random_function(g, rng))
    shift2 = cf.laplacian_apply(g, random_function(g, rng))
    a, b, c = base, base + shift1, base + shift1 + shift2
    assert cf.is_equivalent(g, a, a)
    assert cf.is_equivalent(g, a, b) == cf.is_equivalent(g, b, a)
    assert cf.is_equivalent(g, a, b) and cf.is_equivalent(g, b, c)
    assert cf.is_equivalent(g, a, c)


def test_reduce_multifire_matches_single_fire():
    """The accelerated reduction (maximal legal firing multiples) must land
    on the same divisor as the one-firing-per-round textbook loop."""
    from chipfire.divisors import _dhar_unburnt, _settle_debts, reduce_vector

    def single_fire(g, vec):
        n = len(g.vertices)
        _settle_debts(g, vec, 0)
        adj = g.adjacency()
        while True:
            unburnt, _ = _dhar_unburnt(adj, vec, 0, n)
            if not unburnt:
                return vec
            inside = [False] * n
            for v in unburnt:
                inside[v] = True
            for v in unburnt:
                for j, mult in adj[v]:
                    if not inside[j]:
                        vec[v] -= mult
                        vec[j] += mult

    for trial in range(150):
        rng = random.Random(trial)
        n = rng.randint(2, 7)
        g = cf.random_multigraph(n, rng.randint(0, 6), seed=trial)
        vec = [rng.randint(-25, 25) for _ in range(n)]
        fast = list(vec)
        reduce_vector(g, fast, 0)
        assert fast == single_fire(g, list(vec))


def test_canonical_divisor_quartic():
    g = cf.load_fixture().graph
    assert cf.canonical_divisor(g) == cf.Divisor(g, {"P": 2, "Q1": 1, "Q2": 1})


def test_canonical_divisor_cycle_is_zero():
    g = cf.cycle_graph(5)
    assert cf.canonical_divisor(g) == cf.zero_divisor(g)


@pytest.mark.parametrize("n", range(3, 9))
def test_canonical_divisor_banana(n):
    g = cf.banana_graph(n)
    k = cf.canonical_divisor(g)
    assert k == cf.Divisor(g, {"Q1": n - 2, "Q2": n - 2})
    assert k.degree == 2 * cf.genus(g) - 2


@settings(max_examples=40, derandomize=True, deadline=None)
@given(st.integers(0, 10**6))
def test_canonical_degree_formula(seed):
    g = cf.random_multigraph(2 + seed % 6, seed % 7, seed=seed)
    assert cf.canonical_divisor(g).degree == 2 * cf.genus(g) - 2
