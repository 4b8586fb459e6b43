import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_aut_order, brute_isomorphic, brute_orbits, brute_automorphisms, wh_adjacency
from test_core import valid_tuples
from woollyhat.aut import (ColoredGraph, are_isomorphic, automorphism_group, automorphism_search,
                           canonical_form, is_equitable, isomorphism, refine, relabeled)
from woollyhat.automorphisms import is_automorphism
from woollyhat.core import graph
from woollyhat.perm import Permutation, orbits

# |Aut| frozen from the backtracking oracle in tests/oracles.py
AUT_ORDERS = {
    (4, 1, 0, 1, 3): 48, (4, 1, 1, 2, 3): 48, (5, 1, 0, 1, 2): 10, (6, 1, 0, 1, 3): 36,
    (6, 1, 0, 1, 5): 72, (7, 1, 0, 1, 3): 14, (8, 1, 2, 3, 5): 48, (8, 2, 0, 1, 5): 384,
    (8, 2, 1, 4, 5): 384, (8, 1, 0, 1, 7): 96, (8, 1, 1, 4, 7): 96, (9, 1, 0, 1, 3): 18,
    (10, 1, 0, 2, 5): 20,
}


@pytest.mark.parametrize("t, order", sorted(AUT_ORDERS.items()))
def test_aut_order_frozen(t, order):
    res = automorphism_search(graph(*t))
    assert res.order == order
    assert all(is_automorphism(graph(*t), g) for g in res.generators)


@given(valid_tuples(n_max=7))
@settings(max_examples=40, deadline=None)
def test_aut_order_vs_brute(t):
    g = graph(*t)
    G = automorphism_group(g)
    assert G.order() == automorphism_search(g).order == brute_aut_order(wh_adjacency(*t))


@given(valid_tuples(n_max=6))
@settings(max_examples=25, deadline=None)
def test_edge_orbits_vs_brute(t):
    g = graph(*t)
    gens = automorphism_search(g).generators
    allp = brute_automorphisms(wh_adjacency(*t))
    act = lambda p, e: tuple(sorted((p[e[0]], p[e[1]])))
    assert orbits(gens, "edges", g.adj) == brute_orbits(allp, list(g.edges), act)
    assert orbits(gens, "vertices", g.adj) == brute_orbits(allp, range(g.order), lambda p, x: p[x])


def _shuffle(g, seed):
    rng = random.Random(seed)
    perm = list(range(len(g.adj)))
    rng.shuffle(perm)
    return relabeled(ColoredGraph(g.adj), perm), perm


@given(valid_tuples(n_max=12), st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_canonical_form_invariant(t, seed):
    g = graph(*t)
    h, perm = _shuffle(g, seed)
    c1, c2 = canonical_form(g), canonical_form(h)
    assert c1.edges == c2.edges and c1.digest == c2.digest
    iso = isomorphism(g, h)
    assert iso is not None
    assert {frozenset((iso(u), iso(v))) for u, v in g.edges} == {
        frozenset((u, v)) for u in range(h.order) for v in h.adj[u]}


def test_canonical_form_is_a_relabeling():
    g = graph(8, 1, 2, 3, 5)
    cf = canonical_form(g)
    assert sorted(cf.labeling) == list(range(24))
    assert sorted(cf.edges) == sorted(tuple(sorted((cf.labeling[u], cf.labeling[v])))
                                      for u, v in g.edges)
    assert len(cf.digest) == 64 and cf.graph6


def test_non_isomorphic_pair():
    g1, g2 = graph(8, 2, 1, 0, 5), graph(8, 2, 1, 4, 5)
    assert not are_isomorphic(g1, g2)
    assert isomorphism(g1, g2) is None
    assert not brute_isomorphic(wh_adjacency(8, 2, 1, 0, 5), wh_adjacency(8, 2, 1, 4, 5))


def test_colours_respected():
    # 6-cycle: colouring one vertex leaves the reflection through it
    adj = tuple(((v - 1) % 6, (v + 1) % 6) for v in range(6))
    assert automorphism_search(ColoredGraph(adj)).order == 12
    assert automorphism_search(ColoredGraph(adj, (1, 0, 0, 0, 0, 0))).order == 2
    a = ColoredGraph(adj, (1, 0, 0, 0, 0, 0))
    b = ColoredGraph(adj, (0, 0, 0, 1, 0, 0))
    c = ColoredGraph(adj, (0, 0, 0, 0, 0, 0))
    assert are_isomorphic(a, b) and not are_isomorphic(a, c)
    assert canonical_form(a).digest != canonical_form(c).digest


def test_refine_equitable():
    g = graph(5, 1, 0, 1, 2)
    cols = refine(g)
    assert is_equitable(g, cols)
    assert not is_equitable(g, (0,) + (1,) * (g.order - 1))
    assert len(set(refine(graph(8, 2, 1, 0, 5)))) == 1


def test_other_graphs():
    # Petersen graph: |Aut| = 120
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    nb = [set() for _ in range(10)]
    for u, v in outer + inner + spokes:
        nb[u].add(v)
        nb[v].add(u)
    adj = tuple(tuple(sorted(x)) for x in nb)
    assert automorphism_search(ColoredGraph(adj)).order == 120 == brute_aut_order(nb)
    # disconnected: two triangles
    adj = ((1, 2), (0, 2), (0, 1), (4, 5), (3, 5), (3, 4))
    assert automorphism_search(ColoredGraph(adj)).order == 72
