"""Transitivity verdicts, the red/blue edge colouring and LR-structure checks."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass

from .aut import automorphism_search
from .core import EdgeKind, WhGraph, WhParams, all_cycles, build_graph, cycles_through_path
from .errors import NoNormalization, NotNormalized, NotVertexTransitive, PathNotRed
from .perm import PermGroup, orbits

RED, BLUE = "red", "blue"
BLUE_KINDS = frozenset({EdgeKind.LEFT, EdgeKind.RIGHT, EdgeKind.C_EDGE})


@dataclass(frozen=True)
class TransitivityReport:
    params: tuple
    aut_order: int
    vertex_orbits: int
    edge_orbits: int
    arc_orbits: int
    two_arc_orbits: int

    @property
    def is_vertex_transitive(self):
        return self.vertex_orbits == 1

    @property
    def is_edge_transitive(self):
        return self.edge_orbits == 1

    @property
    def is_arc_transitive(self):
        return self.arc_orbits == 1

    @property
    def is_two_arc_transitive(self):
        return self.two_arc_orbits == 1

    def to_dict(self):
        d = asdict(self)
        d["params"] = list(self.params)
        d.update(
            is_vertex_transitive=self.is_vertex_transitive,
            is_edge_transitive=self.is_edge_transitive,
            is_arc_transitive=self.is_arc_transitive,
            is_two_arc_transitive=self.is_two_arc_transitive,
        )
        return d


class Analysis:
    """Automorphism data for one graph, computed once and shared by the checks."""

    def __init__(self, g: WhGraph):
        self.graph = g
        res = automorphism_search(g)
        self.generators = res.generators
        self.base = res.base
        self.aut_order = res.order
        self._group = None
        self._orbits = {}

    @property
    def group(self) -> PermGroup:
        if self._group is None:
            self._group = PermGroup(self.generators, self.graph.order, base=self.base)
        return self._group

    def orbits(self, action):
        if action not in self._orbits:
            self._orbits[action] = orbits(self.generators, action, self.graph.adj)
        return self._orbits[action]

    @property
    def is_vertex_transitive(self):
        return len(self.orbits("vertices")) == 1

    def report(self) -> TransitivityReport:
        return TransitivityReport(
            self.graph.params.as_tuple(),
            self.aut_order,
            len(self.orbits("vertices")),
            len(self.orbits("edges")),
            len(self.orbits("arcs")),
            len(self.orbits("two_arcs")),
        )


def transitivity_report(g: WhGraph) -> TransitivityReport:
    return Analysis(g).report()


def normalize_for_coloring(p: WhParams) -> WhParams:
    """First reordering of (b, c, d) (lexicographic over positions) and sign
    of a (+ before -) with 2a = d - b; the labelled graph is unchanged."""
    n = p.n
    for b, c, d in itertools.permutations((p.b, p.c, p.d)):
        for sign in (1, -1):
            a = sign * p.a
            if (2 * a - d + b) % n == 0:
                return WhParams(n, a, b, c, d)
    raise NoNormalization(f"{p}: no role assignment gives 2a = d - b")


def is_normalized(p: WhParams) -> bool:
    return (2 * p.a - p.d + p.b) % p.n == 0


@dataclass(frozen=True)
class EdgeColoring:
    params: WhParams
    colors: dict  # (u, v), u < v -> RED or BLUE
    syntactic: bool = True  # True unless checked against the Aut edge orbits

    def color(self, u, v):
        return self.colors[(u, v) if u < v else (v, u)]

    def edges(self, color):
        return sorted(e for e, c in self.colors.items() if c == color)

    @property
    def red(self):
        return self.edges(RED)

    @property
    def blue(self):
        return self.edges(BLUE)


def color_edges(g: WhGraph) -> EdgeColoring:
    """Blue = left, right and c-edges; red = a-, b- and d-edges."""
    if not is_normalized(g.params):
        raise NotNormalized(f"{g.params} does not satisfy 2a = d - b")
    colors = {e: BLUE if k in BLUE_KINDS else RED for e, k in g.kinds.items()}
    return EdgeColoring(g.params, colors)


def normalized_coloring(g: WhGraph):
    """(normalised graph, colouring) for a graph with any parameter order."""
    h = build_graph(normalize_for_coloring(g.params))
    return h, color_edges(h)


def orbit_coloring_matches(analysis: Analysis, coloring: EdgeColoring) -> bool:
    """True iff Aut has exactly two edge orbits and they are the red and blue sets."""
    orbs = analysis.orbits("edges")
    return len(orbs) == 2 and sorted(orbs) == sorted([coloring.red, coloring.blue])


def _cycle_edge_colors(cycle, coloring):
    k = len(cycle)
    return [coloring.color(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def is_basic(cycle, coloring) -> bool:
    cols = _cycle_edge_colors(cycle, coloring)
    blue = [i for i, c in enumerate(cols) if c == BLUE]
    return len(cycle) == 6 and len(blue) == 2 and blue[1] - blue[0] == 3


def basic_six_cycles_through(g: WhGraph, coloring: EdgeColoring, path) -> list:
    u, v, w = path
    if not (g.has_edge(u, v) and g.has_edge(v, w)) or u == w:
        raise PathNotRed(f"({g.label(u)}, {g.label(v)}, {g.label(w)}) is not a 2-path")
    if coloring.color(u, v) != RED or coloring.color(v, w) != RED:
        raise PathNotRed(f"({g.label(u)}, {g.label(v)}, {g.label(w)}) is not red")
    return [c for c in cycles_through_path(g.adj, path, 6) if is_basic(c, coloring)]


def red_two_paths(g: WhGraph, coloring: EdgeColoring):
    for v in range(g.order):
        reds = [u for u in g.adj[v] if coloring.color(u, v) == RED]
        for u, w in itertools.permutations(reds, 2):
            yield (u, v, w)


def alternating_four_cycles(g: WhGraph, coloring: EdgeColoring) -> list:
    out = []
    for cyc in all_cycles(g.adj, 4):
        cols = _cycle_edge_colors(cyc, coloring)
        if all(cols[i] != cols[(i + 1) % 4] for i in range(4)):
            out.append(cyc)
    return out


@dataclass(frozen=True)
class LrCheck:
    params: tuple
    normalized: tuple
    no_alt_4cycles: bool
    swap_automorphism_exists: bool
    q_witness: int = None

    def to_dict(self):
        d = asdict(self)
        d["params"] = list(self.params)
        d["normalized"] = list(self.normalized)
        return d


def q_witness(p: WhParams):
    """Least q coprime to n with qa = -a, qc = c and qb = d, or None."""
    n, a, b, c, d = p.as_tuple()
    for q in range(1, n):
        if (math.gcd(q, n) == 1 and (q * a + a) % n == 0 and (q * c - c) % n == 0
                and (q * b - d) % n == 0):
            return q
    return None


def neighbor_action(group: PermGroup, v, adj):
    """The permutation group induced by ``group`` on the neighbours of ``v``
    (assumed fixed by it), as tuples of positions in ``adj[v]``."""
    nbrs = list(adj[v])
    index = {x: i for i, x in enumerate(nbrs)}
    gens = {tuple(index[g(x)] for x in nbrs) for g in group.generators}
    ident = tuple(range(len(nbrs)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        new = []
        for p in frontier:
            for s in gens:
                q = tuple(s[i] for i in p)
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return sorted(seen)


def has_neighbor_swap(induced) -> bool:
    """True iff some element fixes two neighbours and swaps the other two."""
    for p in induced:
        moved = [i for i in range(len(p)) if p[i] != i]
        if len(moved) == 2:
            return True
    return False


def lr_candidate_check(g: WhGraph, analysis: Analysis = None) -> LrCheck:
    analysis = analysis or Analysis(g)
    if not analysis.is_vertex_transitive:
        raise NotVertexTransitive(f"{g.params} is not vertex-transitive")
    h, coloring = normalized_coloring(g)
    stab = analysis.group.stabilizer(0)
    swap = has_neighbor_swap(neighbor_action(stab, 0, g.adj))
    return LrCheck(
        g.params.as_tuple(),
        h.params.as_tuple(),
        not alternating_four_cycles(h, coloring),
        swap,
        q_witness(h.params),
    )
