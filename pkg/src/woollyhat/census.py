"""Parameter enumeration, the edge-transitivity search and the VT census."""

from __future__ import annotations

import itertools
import json
import math
import multiprocessing
import time
from dataclasses import dataclass, field
from pathlib import Path

from .core import WhParams, build_graph, is_valid, units

LEVELS = ("none", "iso", "et")


def divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def _stabilizing_multipliers(n, a):
    """Units q != 1 with q*a = +-a; these fix the first coordinate of a tuple."""
    return [q for q in units(n) if q != 1 and ((q * a - a) % n == 0 or (q * a + a) % n == 0)]


def enumerate_params(n, level="none"):
    """Yield WhParams for one n in lexicographic order.

    ``none``: every valid tuple. ``iso``: the lexicographically least tuple
    of each class under multipliers, sign of a and reordering of (b, c, d);
    such a tuple has a = gcd(a, n) dividing n and b < c < d. ``et``: the
    ``iso`` representatives with b, c, d all nonzero.
    """
    if level not in LEVELS:
        raise ValueError(f"unknown reduction level {level!r}")
    if n < 3:
        return
    if level == "none":
        for a, b, c, d in itertools.product(range(n), repeat=4):
            if is_valid(n, a, b, c, d):
                yield WhParams(n, a, b, c, d)
        return
    for a in divisors(n):
        if a == n or (2 * a) % n == 0:
            continue
        qs = _stabilizing_multipliers(n, a)
        g_a = math.gcd(n, a)
        for x in itertools.combinations(range(1 if level == "et" else 0, n), 3):
            if math.gcd(g_a, *x) != 1:
                continue
            if any(tuple(sorted((q * y) % n for y in x)) < x for q in qs):
                continue
            yield WhParams(n, a, *x)


def iso_class(p: WhParams):
    """All tuples reachable from ``p`` by multipliers, sign of a and
    reordering of (b, c, d), sorted."""
    from .classification import ROLE_PERMUTATIONS, transformed
    out = set()
    for q in units(p.n):
        for sign in (1, -1):
            for roles in ROLE_PERMUTATIONS:
                out.add(transformed(p, q, sign, roles))
    return sorted(out)


def _adjacency(n, a, b, c, d):
    adj = []
    for i in range(n):
        adj.append(((i + a) % n, (i - a) % n, n + i, 2 * n + i))
    for i in range(n):
        adj.append((i, 2 * n + (i + b) % n, 2 * n + (i + c) % n, 2 * n + (i + d) % n))
    for i in range(n):
        adj.append((i, n + (i - b) % n, n + (i - c) % n, n + (i - d) % n))
    return adj


def _count_closed(adj, u, v, length):
    """Number of cycles of the given length through the edge uv."""
    count = 0
    stack = [(v, 1, (u, v))]
    target_depth = length - 1
    while stack:
        x, depth, seen = stack.pop()
        if depth == target_depth:
            if u in adj[x]:
                count += 1
            continue
        for w in adj[x]:
            if w not in seen:
                stack.append((w, depth + 1, seen + (w,)))
    return count


def edge_class_representatives(p: WhParams):
    """One edge from each of the six <rho>-orbits: a, left, right, b, c, d."""
    n = p.n
    return [(0, p.a), (0, n), (0, 2 * n), (n, 2 * n + p.b), (n, 2 * n + p.c), (n, 2 * n + p.d)]


def cycle_count_profile(p: WhParams, lengths=(4, 6)):
    adj = _adjacency(*p.as_tuple())
    reps = edge_class_representatives(p)
    return {k: [_count_closed(adj, u, v, k) for u, v in reps] for k in lengths}


def passes_et_filter(p: WhParams) -> bool:
    """Necessary condition for edge-transitivity: for each of 4- and 6-cycles,
    the number through an edge is the same for all six <rho> edge classes."""
    adj = _adjacency(*p.as_tuple())
    reps = edge_class_representatives(p)
    for k in (4, 6):
        first = None
        for u, v in reps:
            cnt = _count_closed(adj, u, v, k)
            if first is None:
                first = cnt
            elif cnt != first:
                return False
    return True


def _map(func, items, workers, chunksize=64):
    """Ordered map, in a process pool when ``workers`` > 1."""
    if workers and workers > 1:
        with multiprocessing.Pool(workers) as pool:
            yield from pool.imap(func, items, chunksize)
    else:
        yield from map(func, items)


# -- edge-transitivity search ------------------------------------------------------

def is_edge_transitive(p: WhParams) -> bool:
    from .symmetry import Analysis
    return len(Analysis(build_graph(p)).orbits("edges")) == 1


def _et_task(t):
    p = WhParams(*t)
    return t, passes_et_filter(p) and is_edge_transitive(p)


def _load_json(path):
    path = Path(path)
    if path.exists():
        return json.loads(path.read_text())
    return None


def _dump_json(path, obj):
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    tmp.replace(path)


def search_edge_transitive(n_max, workers=1, checkpoint=None, every=1000, progress=None):
    """Edge-transitive tuples (as WhParams) with 3 <= n <= n_max.

    Tuples come from the ``et`` reduction; each one must have the same number
    of 4-cycles and of 6-cycles through a representative of every <rho> edge
    class before its full automorphism group is computed. With ``checkpoint``
    the state (last finished tuple per n and hits so far) is saved every
    ``every`` tuples and a rerun resumes after it.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    state = (_load_json(checkpoint) if checkpoint else None) or {"last": {}, "found": []}
    found = [tuple(t) for t in state["found"]]
    for n in range(3, n_max + 1):
        last = state["last"].get(str(n))
        if last == "done":
            continue
        tuples = [p.as_tuple() for p in enumerate_params(n, "et")]
        if last is not None:
            tuples = [t for t in tuples if t > tuple(last)]
        done = 0
        for t, hit in _map(_et_task, tuples, workers):
            if hit:
                found.append(t)
            done += 1
            if checkpoint and done % every == 0:
                state["last"][str(n)] = list(t)
                state["found"] = [list(x) for x in found]
                _dump_json(checkpoint, state)
        state["last"][str(n)] = "done"
        state["found"] = [list(x) for x in found]
        if checkpoint:
            _dump_json(checkpoint, state)
        if progress:
            progress(n, len(found))
    return [WhParams(*t) for t in sorted(set(found))]


# -- vertex-transitivity census -----------------------------------------------------

@dataclass
class CensusRecord:
    """One iso-class representative. ``timing`` is kept in memory only so
    that the persisted census does not depend on the machine."""
    params: tuple
    digest: str
    aut_order: int
    vertex_transitive: bool
    edge_transitive: bool
    arc_transitive: bool
    two_arc_transitive: bool
    verdict: tuple
    lr: dict = None
    class_size: int = 1
    discrepancies: tuple = ()
    graph6: str = field(default=None, repr=False)
    timing: float = field(default=0.0, compare=False)

    def to_dict(self):
        n, a, b, c, d = self.params
        return {
            "params": [n, a, b, c, d],
            "digest": self.digest,
            "aut_order": self.aut_order,
            "vertex_transitive": self.vertex_transitive,
            "edge_transitive": self.edge_transitive,
            "arc_transitive": self.arc_transitive,
            "two_arc_transitive": self.two_arc_transitive,
            "verdict": list(self.verdict),
            "lr": self.lr,
            "class_size": self.class_size,
            "discrepancies": [list(t) for t in self.discrepancies],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(d["params"]), d["digest"], d["aut_order"], d["vertex_transitive"],
                   d["edge_transitive"], d["arc_transitive"], d["two_arc_transitive"],
                   tuple(d["verdict"]), d["lr"], d["class_size"],
                   tuple(tuple(t) for t in d["discrepancies"]))


CENSUS_FIELDS = ("params", "digest", "aut_order", "vertex_transitive", "edge_transitive",
                 "arc_transitive", "two_arc_transitive", "verdict", "lr", "class_size",
                 "discrepancies")


def census_record(p: WhParams) -> CensusRecord:
    """Full record for a representative; every tuple in its class is
    classified and compared with the representative's ground truth."""
    from .aut import canonical_form
    from .classification import classify
    from .symmetry import Analysis, lr_candidate_check

    t0 = time.perf_counter()
    g = build_graph(p)
    an = Analysis(g)
    rep = an.report()
    cf = canonical_form(g, an.group)
    vt = rep.is_vertex_transitive
    members = iso_class(p)
    bad = tuple(t for t in members if classify(t).is_vt != vt)
    lr = lr_candidate_check(g, an).to_dict() if vt else None
    if lr is not None:
        del lr["params"]
    return CensusRecord(p.as_tuple(), cf.digest, an.aut_order, vt, rep.is_edge_transitive,
                        rep.is_arc_transitive, rep.is_two_arc_transitive,
                        classify(p).verdict, lr, len(members), bad, cf.graph6,
                        time.perf_counter() - t0)


def _census_task(t):
    return census_record(WhParams(*t))


@dataclass
class CensusResult:
    records: list
    discrepancies: list
    family2_collisions: list

    def summary(self):
        vt = [r for r in self.records if r.vertex_transitive]
        return {
            "representatives": len(self.records),
            "vertex_transitive": len(vt),
            "discrepancies": [list(t) for t in self.discrepancies],
            "family2_collisions": self.family2_collisions,
        }


def family2_collisions(records):
    """Digests shared by two or more family-(2) representatives."""
    from .classification import FAMILY2
    by_digest = {}
    for r in records:
        if FAMILY2 in r.verdict:
            by_digest.setdefault(r.digest, []).append(list(r.params))
    return [{"digest": k, "params": sorted(v)} for k, v in sorted(by_digest.items()) if len(v) > 1]


def vt_census(n_max, workers=1, out_dir=None, checkpoint=None, progress=None) -> CensusResult:
    """Census of iso-class representatives for 3 <= n <= n_max.

    With ``out_dir`` the records go to ``census.jsonl`` (one JSON object per
    line, keys sorted, ordered by params), graph6 strings to ``graphs.g6``
    (``digest graph6`` per line, sorted by digest) and the discrepancy list
    and collision table to ``summary.json``. With ``checkpoint`` (a JSON-lines
    file of finished records) a rerun skips representatives already there.
    """
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    done = {}
    graphs = {}
    if checkpoint and Path(checkpoint).exists():
        for line in Path(checkpoint).read_text().splitlines():
            if line.strip():
                rec = CensusRecord.from_dict(json.loads(line))
                done[rec.params] = rec
    records = []
    for n in range(3, n_max + 1):
        todo = [p.as_tuple() for p in enumerate_params(n, "iso")]
        fresh = [t for t in todo if t not in done]
        sink = open(checkpoint, "a") if checkpoint else None
        try:
            for rec in _map(_census_task, fresh, workers, chunksize=8):
                done[rec.params] = rec
                graphs[rec.digest] = rec.graph6
                if sink:
                    sink.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
        finally:
            if sink:
                sink.close()
        records.extend(done[t] for t in todo)
        if progress:
            progress(n, len(records))
    discrepancies = sorted(t for r in records for t in r.discrepancies)
    result = CensusResult(records, discrepancies, family2_collisions(records))
    if out_dir:
        write_census(result, out_dir, graphs)
    return result


def write_census(result: CensusResult, out_dir, graphs=None):
    from .core import WhParams as _P
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "census.jsonl", "w") as f:
        for r in sorted(result.records, key=lambda r: r.params):
            f.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
    graphs = dict(graphs or {})
    for r in result.records:
        if r.digest not in graphs or graphs[r.digest] is None:
            graphs[r.digest] = r.graph6 or _graph6_for(_P(*r.params))
    with open(out / "graphs.g6", "w") as f:
        for k in sorted(graphs):
            f.write(f"{k} {graphs[k]}\n")
    _dump_json(out / "summary.json", result.summary())


def _graph6_for(p):
    from .aut import canonical_form
    return canonical_form(build_graph(p)).graph6
