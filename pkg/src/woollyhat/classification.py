"""Decide which vertex-transitive family (if any) a parameter tuple belongs to.

A tuple is vertex-transitive iff n is even and some combination of a
multiplier q, a sign for a and a reordering of (b, c, d) produces a tuple
with d = 2a + b that is one of the two sporadic graphs on 24 vertices, lies
in the two-parity family, or is WH_{4m}(2, m-2, 0, m+2) with m > 1 odd.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import WhParams, build_graph, units

SPORADIC8 = "Sporadic8"
FAMILY2 = "Family2"
FAMILY3 = "Family3"
NOT_VT = "NotVT"
CLAUSES = (SPORADIC8, FAMILY2, FAMILY3)

SPORADIC_TUPLES = frozenset({(8, 2, 1, 0, 5), (8, 2, 1, 4, 5)})
ROLE_PERMUTATIONS = tuple(itertools.permutations(range(3)))


def _tuple(p):
    return p.as_tuple() if isinstance(p, WhParams) else tuple(p)


def family2_check(p) -> bool:
    """Literal test: a, b, d odd, c even, d = 2a + b and 2c = 3a + 3b (n even)."""
    n, a, b, c, d = _tuple(p)
    return (n % 2 == 0 and a % 2 == 1 and b % 2 == 1 and d % 2 == 1 and c % 2 == 0
            and (d - 2 * a - b) % n == 0 and (2 * c - 3 * a - 3 * b) % n == 0)


def family3_check(p):
    """m if the tuple is literally WH_{4m}(2, m-2, 0, m+2) with m > 1 odd, else None."""
    n, a, b, c, d = _tuple(p)
    if n % 4:
        return None
    m = n // 4
    if m <= 1 or m % 2 == 0:
        return None
    if (a, b, c, d) == (2, (m - 2) % n, 0, (m + 2) % n):
        return m
    return None


def sporadic_check(p) -> bool:
    return _tuple(p) in SPORADIC_TUPLES


@dataclass(frozen=True)
class Witness:
    clause: str
    q: int
    sign: int
    roles: tuple  # new (b, c, d) = q * old (b, c, d) taken at these positions
    params: tuple
    m: int = None

    def to_dict(self):
        d = {"clause": self.clause, "q": self.q, "sign": self.sign,
             "roles": list(self.roles), "params": list(self.params)}
        if self.m is not None:
            d["m"] = self.m
        return d


@dataclass(frozen=True)
class VtClassification:
    params: tuple
    verdict: tuple
    witnesses: tuple = field(default=(), repr=False)

    @property
    def is_vt(self):
        return self.verdict != (NOT_VT,)

    @property
    def m(self):
        for w in self.witnesses:
            if w.m is not None:
                return w.m
        return None

    def to_dict(self):
        n, a, b, c, d = self.params
        out = {"n": n, "a": a, "b": b, "c": c, "d": d,
               "verdict": list(self.verdict),
               "witnesses": [w.to_dict() for w in self.witnesses]}
        if self.m is not None:
            out["m"] = self.m
        return out


def transformed(p, q, sign, roles):
    """The tuple (n, sign*q*a, q*x[roles[0]], q*x[roles[1]], q*x[roles[2]])
    with x = (b, c, d); it describes a graph isomorphic to ``p``."""
    n, a, b, c, d = _tuple(p)
    x = (b, c, d)
    return (n, (sign * q * a) % n, (q * x[roles[0]]) % n, (q * x[roles[1]]) % n,
            (q * x[roles[2]]) % n)


def classify(p, verify=False) -> VtClassification:
    """Search every multiplier, sign and role permutation; report all clauses hit.

    With ``verify`` a sporadic match is double-checked by canonical form.
    """
    tup = _tuple(p)
    n = tup[0]
    witnesses = []
    if n % 2 == 0:
        for q in units(n):
            for sign in (1, -1):
                for roles in ROLE_PERMUTATIONS:
                    t = transformed(tup, q, sign, roles)
                    if (t[4] - 2 * t[1] - t[2]) % n:
                        continue
                    if t in SPORADIC_TUPLES:
                        witnesses.append(Witness(SPORADIC8, q, sign, roles, t))
                    if family2_check(t):
                        witnesses.append(Witness(FAMILY2, q, sign, roles, t))
                    m = family3_check(t)
                    if m is not None:
                        witnesses.append(Witness(FAMILY3, q, sign, roles, t, m))
    verdict = tuple(c for c in CLAUSES if any(w.clause == c for w in witnesses)) or (NOT_VT,)
    if verify and SPORADIC8 in verdict:
        from .aut import are_isomorphic
        assert any(are_isomorphic(build_graph(WhParams(*tup)), build_graph(WhParams(*s)))
                   for s in SPORADIC_TUPLES), "tuple match without isomorphism"
    return VtClassification(tup, verdict, tuple(witnesses))


def vt_ground_truth(p) -> bool:
    from .symmetry import Analysis
    return Analysis(build_graph(p if isinstance(p, WhParams) else WhParams(*p))).is_vertex_transitive
