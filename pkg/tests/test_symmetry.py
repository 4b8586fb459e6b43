import pytest
from hypothesis import given, settings

from oracles import brute_automorphisms, brute_orbits, wh_adjacency
from test_core import valid_tuples
from woollyhat.core import WhParams, build_graph, graph
from woollyhat.errors import NoNormalization, NotNormalized, NotVertexTransitive, PathNotRed
from woollyhat.symmetry import (
    BLUE,
    RED,
    Analysis,
    alternating_four_cycles,
    basic_six_cycles_through,
    color_edges,
    has_neighbor_swap,
    is_basic,
    is_normalized,
    lr_candidate_check,
    normalize_for_coloring,
    normalized_coloring,
    orbit_coloring_matches,
    q_witness,
    red_two_paths,
    transitivity_report,
)


def test_report_sporadic():
    r = transitivity_report(graph(8, 2, 1, 0, 5))
    assert (r.aut_order, r.vertex_orbits, r.edge_orbits) == (384, 1, 2)
    assert r.is_vertex_transitive and not r.is_edge_transitive and not r.is_two_arc_transitive
    d = r.to_dict()
    assert d["params"] == [8, 2, 1, 0, 5] and d["is_vertex_transitive"] is True


def test_report_non_vt():
    r = transitivity_report(graph(5, 1, 0, 1, 2))
    assert r.vertex_orbits > 1 and not r.is_arc_transitive


@given(valid_tuples(n_max=5))
@settings(max_examples=15, deadline=None)
def test_arc_orbits_vs_brute(t):
    g = graph(*t)
    an = Analysis(g)
    allp = brute_automorphisms(wh_adjacency(*t))
    arcs = [(u, v) for u in range(g.order) for v in g.adj[u]]
    assert an.orbits("arcs") == brute_orbits(allp, arcs, lambda p, a: (p[a[0]], p[a[1]]))
    assert an.report().two_arc_orbits > 1


def test_normalization():
    p = normalize_for_coloring(WhParams(4, 1, 0, 1, 3))
    assert p.as_tuple() == (4, 1, 1, 0, 3) and is_normalized(p)
    assert normalize_for_coloring(WhParams(8, 1, 0, 1, 7)).as_tuple() == (8, 7, 1, 0, 7)
    with pytest.raises(NoNormalization):
        normalize_for_coloring(WhParams(9, 1, 0, 1, 5))
    with pytest.raises(NotNormalized):
        color_edges(graph(4, 1, 0, 1, 3))


def test_coloring_and_basic_cycles():
    g, col = normalized_coloring(graph(8, 1, 3, 2, 5))
    assert len(col.red) == len(col.blue) == 24
    assert orbit_coloring_matches(Analysis(g), col)
    paths = list(red_two_paths(g, col))
    assert len(paths) == 24 * 2  # two red edges at every vertex
    for path in paths[:12]:
        cyc = basic_six_cycles_through(g, col, path)
        assert len(cyc) == 2 and all(is_basic(c, col) for c in cyc)
    blue = col.blue[0]
    with pytest.raises(PathNotRed):
        basic_six_cycles_through(g, col, (blue[0], blue[1], [w for w in g.adj[blue[1]] if w != blue[0]][0]))
    with pytest.raises(PathNotRed):
        basic_six_cycles_through(g, col, (0, 12, 5))  # not a path


def test_alternating_cycles():
    g, col = normalized_coloring(graph(8, 1, 0, 1, 7))
    alt = alternating_four_cycles(g, col)
    assert alt and all(len(c) == 4 for c in alt)
    g, col = normalized_coloring(graph(8, 1, 3, 2, 5))
    assert alternating_four_cycles(g, col) == []


def test_lr_check():
    r = lr_candidate_check(graph(8, 2, 1, 0, 5))
    assert r.no_alt_4cycles and r.swap_automorphism_exists and r.q_witness is None
    r = lr_candidate_check(graph(4, 1, 0, 1, 3))
    assert r.normalized == (4, 1, 1, 0, 3) and r.q_witness == 3
    with pytest.raises(NotVertexTransitive):
        lr_candidate_check(graph(5, 1, 0, 1, 2))


def test_q_witness_and_swap():
    assert q_witness(WhParams(6, 5, 1, 0, 5)) == 5
    assert q_witness(WhParams(8, 1, 3, 2, 5)) is None
    assert has_neighbor_swap([(0, 1, 2, 3), (1, 0, 2, 3)])
    assert not has_neighbor_swap([(0, 1, 2, 3), (1, 0, 3, 2)])
