"""The explicitly constructed automorphisms rho, tau, sigma and theta."""

from __future__ import annotations

from .core import WhParams
from .errors import HypothesesNotMet, LengthMismatch, MNotOddOrTooSmall
from .perm import Permutation


def _from_rule(n, rule):
    """Build a permutation from ``rule(cls, i) -> (cls', j)`` on classes 0, 1, 2."""
    img = [0] * (3 * n)
    for cls in range(3):
        for i in range(n):
            c2, j = rule(cls, i)
            img[cls * n + i] = c2 * n + j % n
    return Permutation(img)


def rho(p: WhParams) -> Permutation:
    return _from_rule(p.n, lambda cls, i: (cls, i + 1))


def tau(p: WhParams) -> Permutation:
    return _from_rule(p.n, lambda cls, i: ((0, 2, 1)[cls], -i))


def sigma_hypotheses(p: WhParams):
    """Name of the first failing hypothesis for sigma, or None if all hold."""
    n, a, b, c, d = p.as_tuple()
    checks = [
        ("n even", n % 2 == 0),
        ("a odd", a % 2 == 1),
        ("b odd", b % 2 == 1),
        ("d odd", d % 2 == 1),
        ("c even", c % 2 == 0),
        ("d = 2a + b", (d - 2 * a - b) % n == 0),
        ("2c = 3a + 3b", (2 * c - 3 * a - 3 * b) % n == 0),
    ]
    for name, ok in checks:
        if not ok:
            return name
    return None


def sigma(p: WhParams) -> Permutation:
    """Automorphism sending A_0 to B_0 for the two-parity family.

    Even i: A_i -> B_i, B_i -> C_{i+c}, C_i -> A_i.
    Odd i:  A_i -> C_{i-a+d}, B_i -> A_{i+a+b}, C_i -> B_{i-b+c-d}.
    """
    failed = sigma_hypotheses(p)
    if failed:
        raise HypothesesNotMet(f"{p}: hypothesis '{failed}' fails")
    a, b, c, d = p.a, p.b, p.c, p.d

    def rule(cls, i):
        if i % 2 == 0:
            return [(1, i), (2, i + c), (0, i)][cls]
        return [(2, i - a + d), (0, i + a + b), (1, i - b + c - d)][cls]

    return _from_rule(p.n, rule)


def theta_params(m: int) -> WhParams:
    return WhParams(4 * m, 2, m - 2, 0, m + 2)


def theta(m: int) -> Permutation:
    """Automorphism of WH_{4m}(2, m-2, 0, m+2) sending A_0 to B_0 (m odd, m >= 3).

    With delta = m mod 4 the rows by i mod 4 are
      0:         A_i -> B_i,      B_i -> A_i,      C_i -> C_i
      delta:     A_i -> C_i,      B_i -> B_i,      C_i -> A_i
      2:         A_i -> C_{i+m},  B_i -> A_{i+m},  C_i -> B_{i+m}
      4 - delta: A_i -> B_{i-m},  B_i -> C_{i-m},  C_i -> A_{i-m}
    """
    if m < 3 or m % 2 == 0:
        raise MNotOddOrTooSmall(f"m = {m} must be odd and at least 3")
    delta = m % 4
    rows = {
        0: ([1, 0, 2], 0),
        delta: ([2, 1, 0], 0),
        2: ([2, 0, 1], m),
        4 - delta: ([1, 2, 0], -m),
    }

    def rule(cls, i):
        targets, shift = rows[i % 4]
        return targets[cls], i + shift

    return _from_rule(4 * m, rule)


def is_automorphism(g, perm) -> bool:
    """True iff ``perm`` maps every edge of ``g`` to an edge.

    ``g`` is anything with ``adj`` adjacency lists; for a bijection on a
    finite graph, edges to edges already implies non-edges to non-edges.
    """
    img = perm.images if isinstance(perm, Permutation) else tuple(perm)
    adj = g.adj
    if len(img) != len(adj):
        raise LengthMismatch(f"permutation of length {len(img)} on {len(adj)} vertices")
    if sorted(img) != list(range(len(img))):
        return False
    adj_sets = [set(x) for x in adj]
    for u, nbrs in enumerate(adj):
        iu = adj_sets[img[u]]
        for v in nbrs:
            if img[v] not in iu:
                return False
    return True
