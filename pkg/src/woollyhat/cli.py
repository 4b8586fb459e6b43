"""Command-line interface: ``woollyhat <subcommand> ...``.

Machine-readable output (JSON with sorted keys, graph6 or DOT) goes to
stdout, human-readable summaries to stderr. Exit status is 0 on success,
1 on a usage or validation error and 2 when the census finds a tuple whose
classification disagrees with its automorphism group.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import WhParams, build_graph, girth, units
from .errors import InvalidParams, WoollyHatError

EXIT_OK, EXIT_USAGE, EXIT_DISCREPANCY = 0, 1, 2
SHORT_RUN_LIMIT = 40
LONG_RUN_LIMIT = 71


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _say(msg):
    sys.stderr.write(msg + "\n")


def _params(ns, names=("n", "a", "b", "c", "d")):
    return WhParams(*(getattr(ns, k) for k in names))


def _add_tuple(p, suffix=""):
    for k in "nabcd":
        p.add_argument(k + suffix, type=int, metavar=k)


def cmd_build(ns):
    from .formats import to_graph6, wh_dot, wh_graph6
    g = build_graph(_params(ns))
    if ns.format == "graph6":
        sys.stdout.write(wh_graph6(g) + "\n")
    elif ns.format == "dot":
        sys.stdout.write(wh_dot(g))
    else:
        _emit({
            "params": list(g.params.as_tuple()),
            "order": g.order,
            "edges": [[u, v, g.kinds[(u, v)].value] for u, v in g.edges],
            "graph6": to_graph6(g.order, g.edges),
        })
    _say(f"{g.params}: {g.order} vertices, {len(g.edges)} edges")
    return EXIT_OK


def cmd_analyze(ns):
    from .symmetry import Analysis
    g = build_graph(_params(ns))
    rep = Analysis(g).report()
    out = rep.to_dict()
    out["girth"] = girth(g)
    _emit(out)
    _say(f"{g.params}: |Aut| = {rep.aut_order}, vertex orbits {rep.vertex_orbits}, "
         f"edge orbits {rep.edge_orbits}")
    return EXIT_OK


def cmd_classify(ns):
    from .classification import classify
    res = classify(_params(ns))
    _emit(res.to_dict())
    extra = f", m = {res.m}" if res.m is not None else ""
    _say(f"{WhParams(*res.params)}: {' '.join(res.verdict)}{extra}")
    return EXIT_OK


def _check_limit(ns):
    if ns.n_max < 3:
        raise UsageError("--n-max must be at least 3")
    limit = LONG_RUN_LIMIT if ns.long_run else SHORT_RUN_LIMIT
    if ns.n_max > limit:
        hint = "" if ns.long_run else " without --long-run"
        raise UsageError(f"--n-max {ns.n_max} exceeds {limit}{hint}")


def cmd_search_et(ns):
    from .census import search_edge_transitive
    _check_limit(ns)
    progress = (lambda n, k: _say(f"n = {n} done, {k} found")) if ns.verbose else None
    found = search_edge_transitive(ns.n_max, ns.workers, ns.checkpoint, progress=progress)
    _emit({"n_max": ns.n_max, "edge_transitive": [list(p.as_tuple()) for p in found]})
    if found:
        _say(f"{len(found)} edge-transitive WH-graphs found")
    else:
        _say("no edge-transitive WH-graphs found")
    return EXIT_OK


def cmd_census_vt(ns):
    from .census import vt_census
    _check_limit(ns)
    progress = (lambda n, k: _say(f"n = {n} done, {k} records")) if ns.verbose else None
    res = vt_census(ns.n_max, ns.workers, ns.out, ns.checkpoint, progress=progress)
    summary = res.summary()
    summary["n_max"] = ns.n_max
    _emit(summary)
    _say(f"{summary['representatives']} representatives, "
         f"{summary['vertex_transitive']} vertex-transitive, "
         f"{len(res.discrepancies)} discrepancies")
    return EXIT_DISCREPANCY if res.discrepancies else EXIT_OK


def cmd_lr_check(ns):
    from .symmetry import lr_candidate_check
    g = build_graph(_params(ns))
    res = lr_candidate_check(g)
    _emit(res.to_dict())
    candidate = res.no_alt_4cycles and res.swap_automorphism_exists
    _say(f"{g.params}: {'LR-structure candidate' if candidate else 'not a candidate'}")
    return EXIT_OK


def parameter_witness(p1: WhParams, p2: WhParams):
    """(q, sign, roles) with the parameter transform taking p1 to p2, or None.

    Plain multipliers are tried before sign changes and role permutations.
    """
    from .classification import ROLE_PERMUTATIONS, transformed
    if p1.n != p2.n:
        return None
    target = p2.as_tuple()
    for roles in ROLE_PERMUTATIONS:
        for sign in (1, -1):
            for q in units(p1.n):
                if transformed(p1, q, sign, roles) == target:
                    return q, sign, roles
    return None


def cmd_iso(ns):
    from .aut import canonical_form
    p1 = _params(ns, ("n1", "a1", "b1", "c1", "d1"))
    p2 = _params(ns, ("n2", "a2", "b2", "c2", "d2"))
    out = {"params": [list(p1.as_tuple()), list(p2.as_tuple())], "witness": None}
    w = parameter_witness(p1, p2)
    if w is not None:
        q, sign, roles = w
        out["witness"] = {"q": q, "sign": sign, "roles": list(roles)}
    if p1.n != p2.n:
        out.update(isomorphic=False, digests=None)
    else:
        d1 = canonical_form(build_graph(p1)).digest
        d2 = canonical_form(build_graph(p2)).digest
        out.update(isomorphic=d1 == d2, digests=[d1, d2])
    _emit(out)
    how = f" (q = {w[0]} witness)" if w else ""
    _say(f"{p1} and {p2}: {'isomorphic' if out['isomorphic'] else 'not isomorphic'}{how}")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="woollyhat", description="Woolly Hat graph toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="emit the graph")
    _add_tuple(p)
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    p.set_defaults(func=cmd_build)

    for name, func, text in (("analyze", cmd_analyze, "transitivity report"),
                             ("classify", cmd_classify, "vertex-transitivity verdict"),
                             ("lr-check", cmd_lr_check, "LR-structure candidate check")):
        p = sub.add_parser(name, help=text)
        _add_tuple(p)
        p.set_defaults(func=func)

    for name, func, text in (("search-et", cmd_search_et, "search for edge-transitive graphs"),
                             ("census-vt", cmd_census_vt, "vertex-transitivity census")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--n-max", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--checkpoint", default=None)
        p.add_argument("--long-run", action="store_true",
                       help=f"allow --n-max up to {LONG_RUN_LIMIT}")
        if name == "census-vt":
            p.add_argument("--out", default=None, help="directory for census files")
        p.set_defaults(func=func)

    p = sub.add_parser("iso", help="isomorphism test for two tuples")
    _add_tuple(p, "1")
    _add_tuple(p, "2")
    p.set_defaults(func=cmd_iso)
    return parser


def run(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        return ns.func(ns)
    except UsageError as e:
        _say(f"usage error: {e}")
        return EXIT_USAGE
    except InvalidParams as e:
        _say(f"invalid parameters, violated constraint {e}")
        return EXIT_USAGE
    except WoollyHatError as e:
        _say(f"error: {e}")
        return EXIT_USAGE


def main():
    sys.exit(run())
