import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import (contract, cycles_exhaustive, girth_brute, valid_brute,
                     wh_adjacency)
from woollyhat.core import (
    EdgeKind,
    VertexId,
    WhParams,
    all_cycles,
    build_graph,
    canonical_six_cycles,
    count_cycles_through_edge,
    cycles_through_path,
    girth,
    graph,
    is_valid,
    multiplier_image,
    multiplier_map,
    param_symmetries,
    quotient_by_rho_power,
    six_cycles_through_two_arc,
    validate_params,
    vertex,
    vertex_label,
)
from woollyhat.errors import (
    DegenerateA,
    Disconnected,
    InvalidParams,
    KNotDivisor,
    NotATwoPath,
    NTooSmall,
    QNotCoprime,
    RepeatedBCD,
)


@st.composite
def valid_tuples(draw, n_min=3, n_max=14):
    n = draw(st.integers(n_min, n_max))
    t = draw(st.tuples(*[st.integers(0, n - 1)] * 4).filter(lambda x: is_valid(n, *x)))
    return (n,) + t


# -- validation ----------------------------------------------------------------

@pytest.mark.parametrize("args, err", [
    ((2, 1, 0, 1, 0), NTooSmall),
    ((4, 2, 0, 1, 3), DegenerateA),
    ((4, 0, 0, 1, 3), DegenerateA),
    ((5, 1, 1, 1, 3), RepeatedBCD),
    ((6, 2, 0, 2, 4), Disconnected),
])
def test_validation_errors(args, err):
    with pytest.raises(err):
        validate_params(*args)


def test_validation_order_and_clause():
    # several constraints fail; the first in n, a, bcd, gcd order is reported
    with pytest.raises(DegenerateA) as e:
        WhParams(4, 2, 1, 1, 1)
    assert e.value.clause == "2a != 0 (mod n)"
    with pytest.raises(RepeatedBCD):
        WhParams(6, 2, 2, 2, 4)
    assert issubclass(Disconnected, InvalidParams) and issubclass(InvalidParams, ValueError)


def test_residues_reduced():
    p = WhParams(4, 5, 7, -4, 9)
    assert p.as_tuple() == (4, 1, 3, 0, 1)
    assert str(p) == "WH_4(1,3,0,1)"


@pytest.mark.parametrize("n, count", [(3, 12), (4, 48), (5, 240), (6, 468), (7, 1260)])
def test_valid_count_matches_brute_force(n, count):
    tuples = list(itertools.product(range(n), repeat=4))
    assert sum(is_valid(n, *t) for t in tuples) == count
    assert all(is_valid(n, *t) == valid_brute(n, *t) for t in tuples)


def test_small_graph():
    g = graph(4, 1, 0, 1, 3)
    assert g.order == 12 and len(g.edges) == 24
    assert sorted(g.label(v) for v in g.neighbors(g.vertex("B", 0))) == ["A0", "C0", "C1", "C3"]
    assert g.edge_kind(g.vertex("B", 0), g.vertex("C", 3)) is EdgeKind.D_EDGE
    assert g.edge_kind(1, 0) is EdgeKind.A_EDGE


@given(valid_tuples())
@settings(max_examples=60, deadline=None)
def test_graph_matches_definition(t):
    g = graph(*t)
    nb = wh_adjacency(*t)
    assert [set(x) for x in g.adj] == nb
    assert all(len(x) == 4 for x in g.adj)
    assert len(g.edges) == 6 * t[0]
    kinds = {}
    for k in g.kinds.values():
        kinds[k] = kinds.get(k, 0) + 1
    assert set(kinds.values()) == {t[0]} and len(kinds) == 6


def test_vertex_ids():
    assert vertex("C", -1, 5) == 14
    assert vertex_label(14, 5) == "C4"
    v = VertexId.from_linear(7, 5)
    assert (v.cls, v.index) == ("B", 2) and v.linear(5) == 7 and str(v) == "B2"


# -- cycles --------------------------------------------------------------------

@pytest.mark.parametrize("t, g", [
    ((4, 1, 0, 1, 3), 3), ((4, 1, 1, 2, 3), 4), ((8, 1, 2, 3, 5), 5),
    ((8, 2, 1, 4, 5), 4), ((10, 1, 0, 2, 5), 3),
])
def test_girth_frozen(t, g):
    assert girth(graph(*t)) == g == girth_brute(wh_adjacency(*t))


@given(valid_tuples(n_max=9))
@settings(max_examples=40, deadline=None)
def test_girth_property(t):
    assert girth(graph(*t)) == girth_brute(wh_adjacency(*t))


@given(valid_tuples(n_max=8), st.sampled_from([3, 4, 5, 6]))
@settings(max_examples=40, deadline=None)
def test_all_cycles_match_exhaustive(t, k):
    g = graph(*t)
    ours = all_cycles(g.adj, k)
    as_edges = {frozenset(frozenset((c[i], c[(i + 1) % k])) for i in range(k)) for c in ours}
    assert len(as_edges) == len(ours)
    assert as_edges == cycles_exhaustive(wh_adjacency(*t), k)


def test_canonical_six_cycles_are_cycles():
    for t in [(8, 1, 2, 3, 5), (12, 2, 1, 0, 5), (7, 1, 0, 1, 3)]:
        g = graph(*t)
        for cyc in canonical_six_cycles(g):
            assert len(set(cyc)) == 6
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % 6]) for i in range(6))


def test_cycles_through_path():
    g = graph(8, 1, 2, 3, 5)
    path = (g.vertex("A", 0), g.vertex("B", 0), g.vertex("C", 2))
    cycles = six_cycles_through_two_arc(g, path)
    assert all(c[:3] == path for c in cycles)
    brute = [c for c in cycles_exhaustive(wh_adjacency(8, 1, 2, 3, 5), 6)
             if frozenset(path[:2]) in c and frozenset(path[1:]) in c]
    assert len(cycles) == len(brute)
    with pytest.raises(NotATwoPath):
        six_cycles_through_two_arc(g, (0, 1, 5))
    u, v = 0, 8
    assert count_cycles_through_edge(g.adj, u, v, 6) == len(cycles_through_path(g.adj, (u, v), 6))


# -- multipliers and quotients ---------------------------------------------------

@given(valid_tuples(n_max=12), st.integers(1, 50))
@settings(max_examples=60, deadline=None)
def test_multiplier_is_isomorphism(t, q):
    p = WhParams(*t)
    import math
    if math.gcd(q, p.n) != 1:
        with pytest.raises(QNotCoprime):
            multiplier_image(p, q)
        return
    g, h = build_graph(p), build_graph(multiplier_image(p, q))
    img = multiplier_map(p, q)
    assert {frozenset((img[u], img[v])) for u, v in g.edges} == {frozenset(e) for e in h.edges}


def test_param_symmetries_same_graph():
    p = WhParams(8, 1, 2, 3, 5)
    syms = param_symmetries(p)
    assert len(syms) == 12
    assert all(build_graph(s).adj == build_graph(p).adj for s in syms)


@given(valid_tuples(n_max=12))
@settings(max_examples=50, deadline=None)
def test_quotient_matches_contraction(t):
    g = graph(*t)
    n = t[0]
    for k in range(1, n + 1):
        if n % k:
            continue
        q = quotient_by_rho_power(g, k)
        ref = contract(wh_adjacency(*t), lambda v: (v // n) * k + (v % n) % k)
        assert {v: set(x) for v, x in enumerate(q.adj) if x} == ref
        if q.as_params() is not None:
            assert q.as_params().as_tuple() == q.reduced_params()


def test_quotient_is_wh_graph():
    q = quotient_by_rho_power(graph(8, 1, 2, 3, 5), 4)
    assert q.as_params() == WhParams(4, 1, 2, 3, 1)
    q = quotient_by_rho_power(graph(12, 1, 0, 1, 3), 6)
    assert q.as_params() == WhParams(6, 1, 0, 1, 3)
    with pytest.raises(KNotDivisor):
        quotient_by_rho_power(graph(8, 1, 2, 3, 5), 3)
