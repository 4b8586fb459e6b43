"""Automorphism groups, canonical forms and isomorphism testing.

The engine is a plain individualisation-refinement search:

* a partition is an ordered sequence of cells kept in a ``lab`` array, with
  each cell identified by its start position;
* refinement splits cells by neighbour counts into a cell (Hopcroft style
  queue), fragments ordered by count, so every decision depends only on
  positions and counts and is therefore isomorphism invariant;
* the target cell is the first smallest non-singleton cell, and its
  vertices are individualised in ascending id order.

Automorphism generators come from the first path of the search tree: for
each level, vertices of the target cell outside the orbit found so far are
tried, looking for a leaf equivalent to the first leaf. The canonical form
is the least leaf under (node invariants, relabelled edge set), with the
computed group used to skip equivalent children.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .formats import to_graph6
from .perm import Permutation, PermGroup, orbit_of


@dataclass(frozen=True)
class ColoredGraph:
    adj: tuple
    colors: tuple = None  # None means monochromatic

    def __post_init__(self):
        object.__setattr__(self, "adj", tuple(tuple(x) for x in self.adj))
        if self.colors is None:
            object.__setattr__(self, "colors", (0,) * len(self.adj))
        else:
            object.__setattr__(self, "colors", tuple(self.colors))

    @property
    def order(self):
        return len(self.adj)


def as_colored(g) -> ColoredGraph:
    if isinstance(g, ColoredGraph):
        return g
    return ColoredGraph(g.adj)


def relabeled(g, perm) -> ColoredGraph:
    """The graph obtained by renaming vertex v to ``perm[v]``."""
    g = as_colored(g)
    img = perm.images if isinstance(perm, Permutation) else perm
    n = g.order
    adj = [None] * n
    colors = [None] * n
    for v in range(n):
        adj[img[v]] = sorted(img[w] for w in g.adj[v])
        colors[img[v]] = g.colors[v]
    return ColoredGraph(tuple(tuple(x) for x in adj), tuple(colors))


class _Node:
    __slots__ = ("lab", "start", "clen", "inv")

    def __init__(self, lab, start, clen, inv=None):
        self.lab = lab
        self.start = start
        self.clen = clen
        self.inv = inv

    def cells(self):
        out = []
        s = 0
        while s < len(self.lab):
            out.append(self.lab[s:s + self.clen[s]])
            s += self.clen[s]
        return out

    def target(self):
        """Start of the first smallest non-singleton cell, or None if discrete."""
        best, best_len = None, None
        s, n = 0, len(self.lab)
        clen = self.clen
        while s < n:
            length = clen[s]
            if length > 1 and (best_len is None or length < best_len):
                best, best_len = s, length
                if length == 2:
                    break
            s += length
        return best


def _refine(adj, node, splitters):
    """Refine ``node`` in place to the coarsest equitable refinement.

    Returns the trace: one entry per split, listing splitter start, split
    cell start and the (count, size) pairs of the fragments.
    """
    lab, start, clen = node.lab, node.start, node.clen
    queue = deque(sorted(splitters))
    inq = set(queue)
    trace = []
    while queue:
        s = queue.popleft()
        inq.discard(s)
        counts = {}
        for x in lab[s:s + clen[s]]:
            for w in adj[x]:
                counts[w] = counts.get(w, 0) + 1
        touched = set()
        for w in counts:
            if clen[start[w]] > 1:
                touched.add(start[w])
        for t in sorted(touched):
            length = clen[t]
            groups = {}
            for v in lab[t:t + length]:
                groups.setdefault(counts.get(v, 0), []).append(v)
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            pos = t
            frags = []
            for k in keys:
                frag = groups[k]
                fs = pos
                for v in frag:
                    lab[pos] = v
                    start[v] = fs
                    pos += 1
                clen[fs] = len(frag)
                frags.append(fs)
            trace.append((s, t, tuple((k, len(groups[k])) for k in keys)))
            if t in inq:
                for fs in frags[1:]:
                    queue.append(fs)
                    inq.add(fs)
            else:
                big = max(frags, key=lambda f: clen[f])
                for fs in frags:
                    if fs != big:
                        queue.append(fs)
                        inq.add(fs)
    return trace


def _quotient(adj, node):
    lab, start, clen = node.lab, node.start, node.clen
    rows = []
    s = 0
    while s < len(lab):
        counts = {}
        for w in adj[lab[s]]:
            counts[start[w]] = counts.get(start[w], 0) + 1
        rows.append(tuple(sorted(counts.items())))
        s += clen[s]
    return tuple(rows)


class _Engine:
    def __init__(self, g: ColoredGraph):
        self.g = g
        self.adj = g.adj
        self.n = g.order
        self.adj_sets = [frozenset(x) for x in self.adj]
        self.root = self._root()

    def _root(self):
        n = self.n
        colors = self.g.colors
        lab = sorted(range(n), key=lambda v: (colors[v], v))
        start = [0] * n
        clen = [0] * n
        s = 0
        splitters = []
        for i in range(n):
            if i > 0 and colors[lab[i]] != colors[lab[i - 1]]:
                clen[s] = i - s
                splitters.append(s)
                s = i
            start[lab[i]] = s
        if n:
            clen[s] = n - s
            splitters.append(s)
        node = _Node(lab, start, clen)
        trace = _refine(self.adj, node, splitters)
        node.inv = (tuple(trace), _quotient(self.adj, node))
        return node

    def child(self, node, t, v):
        lab = node.lab[:]
        start = node.start[:]
        clen = node.clen[:]
        length = clen[t]
        p = lab.index(v, t, t + length)
        lab[p], lab[t] = lab[t], v
        clen[t] = 1
        clen[t + 1] = length - 1
        for i in range(t + 1, t + length):
            start[lab[i]] = t + 1
        new = _Node(lab, start, clen)
        trace = _refine(self.adj, new, [t])
        new.inv = (t, tuple(trace), _quotient(self.adj, new))
        return new

    def is_automorphism(self, img):
        adj, sets = self.adj, self.adj_sets
        for u in range(self.n):
            target = sets[img[u]]
            for w in adj[u]:
                if img[w] not in target:
                    return False
        return True

    # -- automorphism group ------------------------------------------------

    def automorphisms(self):
        """Return (generators, base, order) of the colour-preserving group."""
        path = [self.root]
        chosen = []
        node = self.root
        while True:
            t = node.target()
            if t is None:
                break
            v = min(node.lab[t:t + node.clen[t]])
            chosen.append((t, v))
            node = self.child(node, t, v)
            path.append(node)
        self.first_leaf = node.lab
        self.first_path = path
        gens = []
        order = 1
        for j in range(len(chosen) - 1, -1, -1):
            t, v = chosen[j]
            parent = path[j]
            orbit = set(orbit_of(gens, v))
            for w in sorted(parent.lab[t:t + parent.clen[t]]):
                if w in orbit:
                    continue
                found = self._find_equivalent(self.child(parent, t, w), j + 1)
                if found is not None:
                    gens.append(found)
                    orbit = set(orbit_of(gens, v))
            order *= len(orbit)
        return [Permutation._raw(g) for g in gens], [v for _, v in chosen], order

    def _find_equivalent(self, node, depth):
        if node.inv != self.first_path[depth].inv:
            return None
        t = node.target()
        if t is None:
            img = [0] * self.n
            for a, b in zip(self.first_leaf, node.lab):
                img[a] = b
            img = tuple(img)
            return img if self.is_automorphism(img) else None
        for w in sorted(node.lab[t:t + node.clen[t]]):
            found = self._find_equivalent(self.child(node, t, w), depth + 1)
            if found is not None:
                return found
        return None

    # -- canonical labelling ---------------------------------------------------

    def canonical(self, group: PermGroup):
        self.best_key = None
        self.best_lab = None
        self._canon(self.root, [(0, self.root.inv)], group)
        return self.best_lab, self.best_key

    def _leaf_edges(self, lab):
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        return tuple(sorted((min(pos[u], pos[w]), max(pos[u], pos[w]))
                            for u in range(self.n) for w in self.adj[u] if u < w))

    def _canon(self, node, key, group):
        t = node.target()
        if t is None:
            full = key + [(1, self._leaf_edges(node.lab))]
            if self.best_key is None or full < self.best_key:
                self.best_key = full
                self.best_lab = node.lab
            return
        cell = sorted(node.lab[t:t + node.clen[t]])
        done = set()
        for v in cell:
            if v in done:
                continue
            if group is not None and not group.is_trivial():
                done.update(orbit_of(group.generators, v))
            child = self.child(node, t, v)
            ckey = key + [(0, child.inv)]
            if self.best_key is not None and ckey > self.best_key[:len(ckey)]:
                continue
            sub = None
            if group is not None and not group.is_trivial():
                sub = group.stabilizer(v)
            self._canon(child, ckey, sub)


@dataclass(frozen=True)
class AutResult:
    generators: list
    base: list
    order: int

    def group(self, degree) -> PermGroup:
        return PermGroup(self.generators, degree, base=self.base)


def refine(g) -> tuple:
    """Coarsest equitable refinement of the colouring; returns a colour id
    (index of the vertex's cell in the ordered partition) per vertex."""
    g = as_colored(g)
    root = _Engine(g).root
    colors = [0] * g.order
    for k, cell in enumerate(root.cells()):
        for v in cell:
            colors[v] = k
    return tuple(colors)


def is_equitable(g, colors) -> bool:
    g = as_colored(g)
    sig = {}
    for v in range(g.order):
        key = tuple(sorted(colors[w] for w in g.adj[v]))
        if sig.setdefault(colors[v], key) != key:
            return False
    return True


def automorphism_search(g) -> AutResult:
    gens, base, order = _Engine(as_colored(g)).automorphisms()
    return AutResult(gens, base, order)


def automorphism_generators(g) -> list:
    return automorphism_search(g).generators


def automorphism_group(g) -> PermGroup:
    g = as_colored(g)
    res = automorphism_search(g)
    return PermGroup(res.generators, g.order, base=res.base)


@dataclass(frozen=True)
class CanonicalForm:
    labeling: tuple  # labeling[v] is the canonical index of vertex v
    edges: tuple  # sorted (i, j), i < j, in canonical indices
    colors: tuple  # colour of each canonical index
    digest: str

    @property
    def order(self):
        return len(self.labeling)

    @property
    def graph6(self):
        return to_graph6(len(self.labeling), self.edges)


def canonical_form(g, group: PermGroup = None) -> CanonicalForm:
    g = as_colored(g)
    eng = _Engine(g)
    if group is None:
        gens, base, _ = eng.automorphisms()
        group = PermGroup(gens, g.order, base=base)
    lab, key = eng.canonical(group)
    labeling = [0] * g.order
    for i, v in enumerate(lab):
        labeling[v] = i
    edges = key[-1][1]
    colors = tuple(g.colors[v] for v in lab)
    payload = to_graph6(g.order, edges)
    if len(set(colors)) > 1:
        payload += "|" + ",".join(map(repr, colors))
    digest = hashlib.sha256(payload.encode()).hexdigest()
    return CanonicalForm(tuple(labeling), edges, colors, digest)


def are_isomorphic(g1, g2) -> bool:
    g1, g2 = as_colored(g1), as_colored(g2)
    if g1.order != g2.order or sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    c1, c2 = canonical_form(g1), canonical_form(g2)
    return c1.edges == c2.edges and c1.colors == c2.colors


def isomorphism(g1, g2):
    """An isomorphism g1 -> g2 as a Permutation, or None."""
    g1, g2 = as_colored(g1), as_colored(g2)
    if g1.order != g2.order:
        return None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.edges != c2.edges or c1.colors != c2.colors:
        return None
    inv2 = [0] * g2.order
    for v, i in enumerate(c2.labeling):
        inv2[i] = v
    return Permutation([inv2[c1.labeling[v]] for v in range(g1.order)])
