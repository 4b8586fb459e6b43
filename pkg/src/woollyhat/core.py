"""Woolly Hat graphs: parameters, construction and structural queries.

Vertices are linearised as ``rank(class) * n + index`` with A, B, C ranked
0, 1, 2, so ``A_i`` is ``i``, ``B_i`` is ``n + i`` and ``C_i`` is ``2n + i``.
All subscript arithmetic is modulo ``n``.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import (
    DegenerateA,
    Disconnected,
    KNotDivisor,
    NotATwoPath,
    NTooSmall,
    QNotCoprime,
    RepeatedBCD,
)

CLASSES = "ABC"


@dataclass(frozen=True, order=True)
class WhParams:
    """The tuple (n, a, b, c, d); residues are reduced into ``[0, n)``.

    Construction validates eagerly, checking the constraints in a fixed order
    (n, then a, then b/c/d distinctness, then connectivity).
    """

    n: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise NTooSmall(f"got n = {n}")
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % n)
        if (2 * self.a) % n == 0:
            raise DegenerateA(f"a = {self.a} has 2a = 0 in Z_{n}")
        if len({self.b, self.c, self.d}) != 3:
            raise RepeatedBCD(f"(b, c, d) = ({self.b}, {self.c}, {self.d})")
        if math.gcd(n, self.a, self.b, self.c, self.d) != 1:
            raise Disconnected(f"n, a, b, c, d share the factor "
                               f"{math.gcd(n, self.a, self.b, self.c, self.d)}")

    def as_tuple(self):
        return (self.n, self.a, self.b, self.c, self.d)

    def __str__(self):
        return "WH_%d(%d,%d,%d,%d)" % self.as_tuple()


def validate_params(n, a, b, c, d) -> WhParams:
    return WhParams(n, a, b, c, d)


def is_valid(n, a, b, c, d) -> bool:
    """Cheap validity predicate, equivalent to ``validate_params`` not raising."""
    if n < 3:
        return False
    a, b, c, d = a % n, b % n, c % n, d % n
    return ((2 * a) % n != 0 and b != c and b != d and c != d
            and math.gcd(n, a, b, c, d) == 1)


class VertexId(NamedTuple):
    cls: str
    index: int

    def linear(self, n: int) -> int:
        return CLASSES.index(self.cls) * n + self.index % n

    @classmethod
    def from_linear(cls, v: int, n: int) -> "VertexId":
        return cls(CLASSES[v // n], v % n)

    def __str__(self):
        return f"{self.cls}{self.index}"


def vertex(cls: str, i: int, n: int) -> int:
    """Linear id of vertex ``cls``\\ :sub:`i`, e.g. ``vertex("B", -1, 4) == 7``."""
    return CLASSES.index(cls) * n + i % n


def vertex_label(v: int, n: int) -> str:
    return f"{CLASSES[v // n]}{v % n}"


class EdgeKind(enum.Enum):
    A_EDGE = "a"
    LEFT = "left"
    RIGHT = "right"
    B_EDGE = "b"
    C_EDGE = "c"
    D_EDGE = "d"


def _edge_key(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class WhGraph:
    params: WhParams
    adj: tuple  # adj[v] is the sorted tuple of neighbours of v
    kinds: dict = field(compare=False, repr=False)  # (u, v) with u < v -> EdgeKind

    @property
    def n(self):
        return self.params.n

    @property
    def order(self):
        return len(self.adj)

    @property
    def edges(self):
        return tuple(sorted(self.kinds))

    def neighbors(self, v):
        return self.adj[v]

    def has_edge(self, u, v):
        return _edge_key(u, v) in self.kinds

    def edge_kind(self, u, v) -> EdgeKind:
        return self.kinds[_edge_key(u, v)]

    def vertex(self, cls, i):
        return vertex(cls, i, self.params.n)

    def label(self, v):
        return vertex_label(v, self.params.n)


def build_graph(p: WhParams) -> WhGraph:
    n, a = p.n, p.a
    kinds = {}
    for i in range(n):
        kinds[_edge_key(i, (i + a) % n)] = EdgeKind.A_EDGE
        kinds[(i, n + i)] = EdgeKind.LEFT
        kinds[(i, 2 * n + i)] = EdgeKind.RIGHT
        for x, kind in ((p.b, EdgeKind.B_EDGE), (p.c, EdgeKind.C_EDGE), (p.d, EdgeKind.D_EDGE)):
            kinds[(n + i, 2 * n + (i + x) % n)] = kind
    nbrs = [[] for _ in range(3 * n)]
    for u, v in kinds:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adj = tuple(tuple(sorted(x)) for x in nbrs)
    return WhGraph(p, adj, kinds)


def graph(n, a, b, c, d) -> WhGraph:
    """Shorthand for ``build_graph(validate_params(n, a, b, c, d))``."""
    return build_graph(WhParams(n, a, b, c, d))


def girth_of(adj) -> int:
    """Shortest cycle length of a simple graph given by adjacency lists.

    Returns 0 for a forest.
    """
    best = math.inf
    for root in range(len(adj)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return 0 if best is math.inf else best


def girth(g: WhGraph) -> int:
    return girth_of(g.adj)


def canonical_six_cycles(g: WhGraph) -> list:
    n, b, c, d = g.params.n, g.params.b, g.params.c, g.params.d
    out = []
    for i in range(n):
        out.append((
            n + i % n,
            2 * n + (i + b) % n,
            n + (i + b - c) % n,
            2 * n + (i + b - c + d) % n,
            n + (i - c + d) % n,
            2 * n + (i + d) % n,
        ))
    return out


def cycles_through_path(adj, path, length) -> list:
    """All cycles of the given length that contain ``path`` as consecutive vertices.

    Each cycle is returned once, as a vertex tuple starting with ``path``.
    """
    path = tuple(path)
    start, k = path[0], len(path)
    if k > length:
        return []
    out = []
    used = set(path)

    def extend(seq):
        if len(seq) == length:
            if start in adj[seq[-1]]:
                out.append(tuple(seq))
            return
        for w in adj[seq[-1]]:
            if w not in used:
                used.add(w)
                seq.append(w)
                extend(seq)
                seq.pop()
                used.discard(w)

    if k == length:
        return [path] if start in adj[path[-1]] else []
    extend(list(path))
    return out


def six_cycles_through_two_arc(g: WhGraph, arc2) -> list:
    u, v, w = arc2
    if u == w or u not in g.adj[v] or w not in g.adj[v]:
        raise NotATwoPath(f"({g.label(u)}, {g.label(v)}, {g.label(w)}) is not a 2-path")
    return cycles_through_path(g.adj, (u, v, w), 6)


def all_cycles(adj, length) -> list:
    """Every cycle of the given length, each once, as a canonical vertex tuple.

    The tuple starts at the cycle's smallest vertex and goes towards the
    smaller of its two neighbours on the cycle.
    """
    out = []
    for s in range(len(adj)):
        for cyc in cycles_through_path(adj, (s,), length):
            if min(cyc) == s and cyc[1] < cyc[-1]:
                out.append(cyc)
    return out


def count_cycles_through_edge(adj, u, v, length) -> int:
    """Number of cycles of the given length containing the edge uv."""
    return len(cycles_through_path(adj, (u, v), length))


def multiplier_map(p: WhParams, q: int) -> list:
    """Images of the relabelling X_i -> X_{qi} on linear vertex ids."""
    n = p.n
    if math.gcd(q, n) != 1:
        raise QNotCoprime(f"q = {q} is not coprime to n = {n}")
    return [(v // n) * n + (q * (v % n)) % n for v in range(3 * n)]


def multiplier_image(p: WhParams, q: int) -> WhParams:
    n = p.n
    if math.gcd(q, n) != 1:
        raise QNotCoprime(f"q = {q} is not coprime to n = {n}")
    return WhParams(n, q * p.a, q * p.b, q * p.c, q * p.d)


def param_symmetries(p: WhParams) -> set:
    """All tuples describing the identical labelled graph: a -> -a and any
    reordering of (b, c, d)."""
    out = set()
    for sign in (1, -1):
        for b, c, d in itertools.permutations((p.b, p.c, p.d)):
            out.add(WhParams(p.n, sign * p.a, b, c, d))
    return out


def units(n: int) -> list:
    return [q for q in range(1, n) if math.gcd(q, n) == 1]


@dataclass(frozen=True)
class QuotientGraph:
    """Simple quotient of a WH-graph by the orbits of ``<rho^k>``.

    Orbit ``{X_i, X_{i+k}, ...}`` gets id ``rank(X) * k + (i mod k)``.
    """

    k: int
    adj: tuple
    source: WhParams

    def reduced_params(self):
        p = self.source
        return (self.k, p.a % self.k, p.b % self.k, p.c % self.k, p.d % self.k)

    def as_params(self):
        """The WhParams this quotient is equal to, or None if it is not a WH-graph."""
        tup = self.reduced_params()
        if not is_valid(*tup):
            return None
        p = WhParams(*tup)
        if build_graph(p).adj != self.adj:
            return None
        return p


def quotient_by_rho_power(g: WhGraph, k: int) -> QuotientGraph:
    n = g.params.n
    if k < 1 or n % k != 0:
        raise KNotDivisor(f"k = {k} does not divide n = {n}")

    def orbit(v):
        return (v // n) * k + (v % n) % k

    nbrs = [set() for _ in range(3 * k)]
    for u, v in g.kinds:
        ou, ov = orbit(u), orbit(v)
        if ou != ov:
            nbrs[ou].add(ov)
            nbrs[ov].add(ou)
    return QuotientGraph(k, tuple(tuple(sorted(s)) for s in nbrs), g.params)
