"""Permutations of vertex ids and permutation groups via Schreier-Sims.

A permutation is stored as its image array: ``p.images[x]`` is the image of
``x``. Products compose left to right, ``(p * q)(x) == q(p(x))``, matching
the right-action notation ``x(pq) = (xp)q``.

Group internals work on raw tuples; :class:`Permutation` is the public face.
"""

from __future__ import annotations

import json

from .errors import DomainMismatch, LengthMismatch


def _mul(p, q):
    return tuple(map(q.__getitem__, p))


def _inv(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def _first_moved(p):
    for i, x in enumerate(p):
        if i != x:
            return i
    return None


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        self.images = tuple(images)
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError("not a permutation")

    @classmethod
    def _raw(cls, images):
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_mapping(cls, mapping, degree):
        """Identity outside ``mapping``; the mapping must itself be a bijection."""
        img = list(range(degree))
        for k, v in mapping.items():
            img[k] = v
        return cls(img)

    def __len__(self):
        return len(self.images)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        if len(self) != len(other):
            raise LengthMismatch("degrees differ")
        return Permutation._raw(_mul(self.images, other.images))

    def __pow__(self, k):
        result = Permutation.identity(len(self))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self):
        return Permutation._raw(_inv(self.images))

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def order(self):
        seen = [False] * len(self)
        result = 1
        for s in range(len(self)):
            if seen[s]:
                continue
            length = 0
            x = s
            while not seen[x]:
                seen[x] = True
                x = self.images[x]
                length += 1
            result = result * length // _gcd(result, length)
        return result

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def to_json(self):
        return json.dumps(list(self.images), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        return cls(json.loads(text))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class _Level:
    __slots__ = ("point", "gens", "trans", "trans_inv", "checked")

    def __init__(self, point):
        self.point = point
        self.gens = []
        self.trans = {}
        self.trans_inv = {}
        self.checked = set()

    def rebuild(self, degree):
        # extend only: existing coset representatives never change
        trans = self.trans
        if not trans:
            trans[self.point] = tuple(range(degree))
        queue = list(trans)
        for beta in queue:
            u = trans[beta]
            for s in self.gens:
                img = s[beta]
                if img not in trans:
                    trans[img] = _mul(u, s)
                    queue.append(img)

    def uinv(self, x):
        r = self.trans_inv.get(x)
        if r is None:
            r = self.trans_inv[x] = _inv(self.trans[x])
        return r


class PermGroup:
    """Permutation group on ``range(degree)`` with a stabiliser chain.

    The chain is built by deterministic Schreier-Sims. An optional ``base``
    prefix forces the first base points; further base points are the
    smallest point moved by the element that needs them.
    """

    def __init__(self, generators=(), degree=None, base=()):
        gens = []
        for g in generators:
            img = g.images if isinstance(g, Permutation) else tuple(g)
            if degree is None:
                degree = len(img)
            elif len(img) != degree:
                raise LengthMismatch(f"generator of degree {len(img)} in a group of degree {degree}")
            gens.append(img)
        if degree is None:
            raise ValueError("degree required for an empty generator list")
        self.degree = degree
        self.generators = [Permutation._raw(g) for g in gens]
        self._levels = []
        self._schreier_sims([g for g in gens if _first_moved(g) is not None], list(base))

    @classmethod
    def _from_levels(cls, levels, degree):
        grp = cls.__new__(cls)
        grp.degree = degree
        grp._levels = levels
        gens = levels[0].gens if levels else []
        grp.generators = [Permutation._raw(g) for g in gens]
        return grp

    # -- chain construction -------------------------------------------------

    def _strip(self, h, start):
        levels = self._levels
        for i in range(start, len(levels)):
            lev = levels[i]
            x = h[lev.point]
            if x not in lev.trans:
                return h, i
            if x != lev.point:
                h = _mul(h, lev.uinv(x))
        return h, len(levels)

    def _schreier_sims(self, gens, base):
        degree = self.degree
        for g in gens:
            if all(g[b] == b for b in base):
                base.append(_first_moved(g))
        self._levels = levels = [_Level(b) for b in base]
        for i, lev in enumerate(levels):
            fixed = base[:i]
            lev.gens = [g for g in gens if all(g[b] == b for b in fixed)]
            lev.rebuild(degree)
        i = len(levels) - 1
        while i >= 0:
            lev = levels[i]
            jumped = False
            for beta in list(lev.trans):
                u = lev.trans[beta]
                for gi, s in enumerate(lev.gens):
                    if (beta, gi) in lev.checked:
                        continue
                    lev.checked.add((beta, gi))
                    img = s[beta]
                    h = _mul(_mul(u, s), lev.uinv(img))
                    if _first_moved(h) is None:
                        continue
                    y, j = self._strip(h, i + 1)
                    if j == len(levels) and _first_moved(y) is None:
                        continue
                    if j == len(levels):
                        levels.append(_Level(_first_moved(y)))
                    for lvl in range(i + 1, j + 1):
                        levels[lvl].gens.append(y)
                        levels[lvl].rebuild(degree)
                    i = j
                    jumped = True
                    break
                if jumped:
                    break
            if not jumped:
                i -= 1

    # -- queries ----------------------------------------------------------------

    @property
    def base(self):
        return [lev.point for lev in self._levels]

    @property
    def strong_generators(self):
        seen = {}
        for lev in self._levels:
            for g in lev.gens:
                seen.setdefault(g, None)
        return [Permutation._raw(g) for g in seen]

    def order(self):
        result = 1
        for lev in self._levels:
            result *= len(lev.trans)
        return result

    def basic_orbit_lengths(self):
        return [len(lev.trans) for lev in self._levels]

    def contains(self, g):
        img = g.images if isinstance(g, Permutation) else tuple(g)
        if len(img) != self.degree:
            return False
        h, j = self._strip(img, 0)
        return j == len(self._levels) and _first_moved(h) is None

    __contains__ = contains

    def is_trivial(self):
        return self.order() == 1

    def orbit(self, point):
        return orbit_of(self.generators, point)

    def stabilizer(self, point):
        """Point stabiliser, read off a chain whose base starts at ``point``."""
        if not 0 <= point < self.degree:
            raise DomainMismatch(f"point {point} outside range({self.degree})")
        if self._levels and self._levels[0].point == point:
            return PermGroup._from_levels(self._levels[1:], self.degree)
        if not self._levels:
            return self
        rebased = PermGroup(self.strong_generators, self.degree, base=(point,))
        return PermGroup._from_levels(rebased._levels[1:], self.degree)

    def pointwise_stabilizer(self, points):
        grp = self
        for p in points:
            grp = grp.stabilizer(p)
        return grp

    def elements(self):
        """Iterate over all elements (only sensible for small groups)."""
        def rec(i, acc):
            if i < 0:
                yield Permutation._raw(acc)
                return
            for u in self._levels[i].trans.values():
                yield from rec(i - 1, _mul(acc, u))
        yield from rec(len(self._levels) - 1, tuple(range(self.degree)))

    def to_json(self):
        return json.dumps([list(g.images) for g in self.generators], separators=(",", ":"))


def group_from_generators(gens, degree=None) -> PermGroup:
    return PermGroup(gens, degree)


def orbit_of(generators, point):
    imgs = [g.images if isinstance(g, Permutation) else g for g in generators]
    seen = {point}
    queue = [point]
    for x in queue:
        for g in imgs:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


# -- induced actions ------------------------------------------------------------

ACTIONS = ("vertices", "edges", "arcs", "two_arcs")


def action_domain(adj, action):
    """Elements of the given action domain for a graph with adjacency lists ``adj``."""
    if action == "vertices":
        return list(range(len(adj)))
    if action == "edges":
        return [(u, v) for u in range(len(adj)) for v in adj[u] if u < v]
    if action == "arcs":
        return [(u, v) for u in range(len(adj)) for v in adj[u]]
    if action == "two_arcs":
        return [(u, v, w) for v in range(len(adj)) for u in adj[v] for w in adj[v] if u != w]
    raise ValueError(f"unknown action {action!r}")


def _act(img, x, action):
    if action == "vertices":
        return img[x]
    if action == "edges":
        u, v = img[x[0]], img[x[1]]
        return (u, v) if u < v else (v, u)
    return tuple(img[y] for y in x)


def orbits(group, action, adj) -> list:
    """Orbit partition of ``group`` (a PermGroup or generator list) on the
    given action domain of the graph ``adj``, sorted for determinism."""
    gens = group.generators if isinstance(group, PermGroup) else list(group)
    imgs = [g.images if isinstance(g, Permutation) else g for g in gens]
    for img in imgs:
        if len(img) != len(adj):
            raise DomainMismatch(f"group of degree {len(img)} on a graph of order {len(adj)}")
    if isinstance(group, PermGroup) and group.degree != len(adj):
        raise DomainMismatch(f"group of degree {group.degree} on a graph of order {len(adj)}")
    domain = action_domain(adj, action)
    index = {x: i for i, x in enumerate(domain)}
    parent = list(range(len(domain)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for img in imgs:
        for i, x in enumerate(domain):
            j = index[_act(img, x, action)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    classes = {}
    for i, x in enumerate(domain):
        classes.setdefault(find(i), []).append(x)
    return sorted(sorted(c) for c in classes.values())
