"""Command-line front end.

Exit codes: 0 for a positive answer or success, 1 for a negative answer,
2 for usage, parse and invariant errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from typing import Callable, Optional, Sequence

from .gadget import planarize_with_gadgets, sparse_crossing_reach
from .generators import KINDS, GeneratorSpec, generate
from .graph import BLUE, RED, DrawnGraph, GraphError, PlanarGraph
from .matching import even_perfect_matching, hall_obstacle, is_perfect, mn_construction, mn_decision
from .meter import SpaceMeter
from .oracles import (
    oracle_epm,
    oracle_even_path,
    oracle_matching,
    oracle_negative_cycle,
    oracle_odd_cycle,
    oracle_reach,
    oracle_redblue,
    oracle_shortest_path,
)
from .parity import directed_odd_cycle, even_path
from .plgr import dumps, read_graph
from .redblue import red_blue_path
from .report import RunReport
from .separator import build_separator_family
from .shortest_path import (
    DEFAULT_EPS,
    INF,
    NegativeCycleError,
    NoPathError,
    detect_negative_cycle,
    planar_dist,
    planar_reach,
    planar_short_path,
)

_COLOR_ARG = {"R": RED, "B": BLUE}
GLOBAL_DEFAULTS = {"input": None, "eps": DEFAULT_EPS, "stats": False, "json": False, "seed": 0}


class Outcome:
    __slots__ = ("answer", "code", "text", "detail")

    def __init__(self, answer, code: int, text: str, detail: Optional[dict] = None) -> None:
        self.answer = answer
        self.code = code
        self.text = text
        self.detail = detail or {}


def _bool(answer: bool) -> Outcome:
    return Outcome(answer, 0 if answer else 1, "true" if answer else "false")


def _load(args, drawn: bool = False):
    if args.input in (None, "-"):
        g = read_graph(sys.stdin)
    else:
        with open(args.input, encoding="utf-8") as fh:
            g = read_graph(fh)
    if drawn and not isinstance(g, DrawnGraph):
        raise GraphError("expected a drawn graph (no rot lines, optional cross lines)")
    if not drawn and not isinstance(g, PlanarGraph):
        raise GraphError("expected an embedded graph with rot lines")
    return g


# -- handlers ----------------------------------------------------------------------


def cmd_dist(args, meter) -> Outcome:
    g = _load(args)
    d = planar_dist(g, args.source, args.target, eps=args.eps, meter=meter)
    if d == INF:
        return Outcome(INF, 1, "inf")
    return Outcome(d, 0, str(d))


def cmd_path(args, meter) -> Outcome:
    g = _load(args)
    try:
        p = planar_short_path(g, args.source, args.target, eps=args.eps, meter=meter)
    except NoPathError:
        return Outcome(None, 1, "no path")
    verts = list(p.forward())
    answer = {"vertices": verts, "arcs": list(reversed(p.arcs)), "weight": p.weight}
    return Outcome(answer, 0, " ".join(map(str, verts)) + f"\nweight {p.weight}")


def cmd_negcycle(args, meter) -> Outcome:
    g = _load(args)
    c = detect_negative_cycle(g, eps=args.eps, meter=meter)
    if c is None:
        return Outcome(None, 1, "no negative cycle")
    answer = {"vertices": list(c.vertices), "arcs": list(c.arcs), "weight": c.weight}
    return Outcome(answer, 0, " ".join(map(str, c.vertices)) + f"\nweight {c.weight}")


def cmd_reach(args, meter) -> Outcome:
    g = _load(args)
    return _bool(planar_reach(g, args.source, args.target, eps=args.eps, meter=meter))


def cmd_redblue(args, meter) -> Outcome:
    g = _load(args)
    return _bool(red_blue_path(
        g, args.source, args.target, init=_COLOR_ARG[args.init], final=_COLOR_ARG[args.final],
        eps=args.eps, meter=meter,
    ))


def cmd_planarize(args, meter) -> Outcome:
    d = _load(args, drawn=True)
    gm = planarize_with_gadgets(d)
    text = dumps(gm.planarized)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.map:
        with open(args.map, "w", encoding="utf-8") as fh:
            fh.write("vertex\tkind\tinfo\n")
            for v, tag in enumerate(gm.provenance):
                fh.write(f"{v}\t{tag[0]}\t{' '.join(map(str, tag[1:]))}\n")
    answer = {"vertices": gm.planarized.n, "arcs": gm.planarized.m, "crossings": gm.crossing_count}
    shown = text if not args.output else f"{gm.planarized.n} vertices, {gm.planarized.m} arcs"
    return Outcome(answer, 0, shown.rstrip("\n"))


def cmd_sparsereach(args, meter) -> Outcome:
    d = _load(args, drawn=True)
    return _bool(sparse_crossing_reach(d, args.source, args.target, eps=args.eps, meter=meter))


def cmd_oddcycle(args, meter) -> Outcome:
    return _bool(directed_odd_cycle(_load(args), eps=args.eps, meter=meter))


def cmd_evenpath(args, meter) -> Outcome:
    g = _load(args)
    return _bool(even_path(g, args.source, args.target, eps=args.eps, meter=meter))


def cmd_match(args, meter) -> Outcome:
    g = _load(args)
    ok = mn_decision(g, eps=args.eps, meter=meter)
    if not ok or not args.construct:
        return _bool(ok)
    m = mn_construction(g, eps=args.eps, meter=meter)
    pairs = sorted(m.pairs)
    text = "\n".join(f"{a} {b}" for a, b in pairs)
    return Outcome({"perfect": True, "pairs": [list(p) for p in pairs]}, 0, text)


def cmd_hall(args, meter) -> Outcome:
    g = _load(args)
    h = hall_obstacle(g, eps=args.eps, meter=meter)
    if h is None:
        return Outcome(None, 1, "perfect matching exists")
    answer = {"S": sorted(h.S), "N": sorted(h.neighborhood), "side": "AB"[h.side]}
    text = "S " + " ".join(map(str, sorted(h.S))) + "\nN " + " ".join(map(str, sorted(h.neighborhood)))
    return Outcome(answer, 0, text)


def cmd_epm(args, meter) -> Outcome:
    return _bool(even_perfect_matching(_load(args), eps=args.eps, meter=meter))


def cmd_separator(args, meter) -> Outcome:
    g = _load(args)
    fam = build_separator_family(g, args.r)
    members = sorted(fam.members)
    return Outcome(members, 0, " ".join(map(str, members)), {"component_bound": fam.component_bound})


def cmd_gen(args, meter) -> Outcome:
    spec = GeneratorSpec(
        args.kind, args.n, seed=args.seed, wmin=args.wmin, wmax=args.wmax, colors=args.colors,
        bipartite=args.bipartite, dag=args.dag, keep=args.keep, both_ways=args.both_ways,
    )
    g = generate(spec)
    text = dumps(g)
    answer = {"n": g.n, "m": g.m}
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return Outcome(answer, 0, f"wrote {args.output}: {g.n} vertices, {g.m} arcs")
    return Outcome(answer, 0, text.rstrip("\n"), {"plgr": text})


# -- verification sweeps -------------------------------------------------------------


def _verify_dist(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    g = generate(GeneratorSpec("triangulation-thinned", rng.randint(8, 80), seed=seed,
                               wmin=-5, wmax=20, keep=0.5, both_ways=0.1))
    if oracle_negative_cycle(g):
        c = detect_negative_cycle(g, eps)
        return c is not None and c.weight < 0
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    return planar_dist(g, s, t, eps=eps) == oracle_shortest_path(g, s, t).distance


def _verify_redblue(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    kind = rng.choice(["grid-dag", "triangulation-thinned"])
    g = generate(GeneratorSpec(kind, rng.randint(8, 80), seed=seed, dag=True, colors=1.0))
    s, t = rng.randrange(g.n), rng.randrange(g.n)
    init, final = rng.choice((RED, BLUE)), rng.choice((RED, BLUE))
    return red_blue_path(g, s, t, init=init, final=final, eps=eps) == oracle_redblue(g, s, t, init, final)


def _verify_oddcycle(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    g = generate(GeneratorSpec("triangulation-thinned", rng.randint(8, 80), seed=seed,
                               keep=rng.choice([0.5, 0.75]), both_ways=rng.choice([0.1, 0.3])))
    return directed_odd_cycle(g, eps) == oracle_odd_cycle(g)


def _verify_evenpath(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    g = generate(GeneratorSpec("triangulation-thinned", rng.randint(8, 80), seed=seed, dag=True))
    s = rng.randrange(g.n)
    reachable = [t for t in range(g.n) if oracle_reach(g, s, t)]
    t = rng.choice(reachable) if reachable and rng.random() < 0.8 else rng.randrange(g.n)
    return even_path(g, s, t, eps) == oracle_even_path(g, s, t)


def _verify_match(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    g = generate(GeneratorSpec(rng.choice(["grid", "triangulation-thinned"]), rng.randint(4, 60),
                               seed=seed, bipartite=True, keep=rng.choice([0.7, 0.9, 1.0])))
    ok = mn_decision(g, eps)
    if ok != oracle_matching(g).perfect:
        return False
    if ok:
        return is_perfect(g, mn_construction(g, eps))
    h = hall_obstacle(g, eps)
    return h is not None and len(h.neighborhood) < len(h.S)


def _verify_epm(seed: int, eps: float) -> bool:
    rng = random.Random(seed)
    g = generate(GeneratorSpec(rng.choice(["grid", "triangulation-thinned"]), rng.randint(4, 16),
                               seed=seed, bipartite=True, colors=1.0, keep=rng.choice([0.8, 1.0])))
    return even_perfect_matching(g, eps) == oracle_epm(g)


VERIFIERS: dict[str, Callable[[int, float], bool]] = {
    "dist": _verify_dist,
    "redblue": _verify_redblue,
    "oddcycle": _verify_oddcycle,
    "evenpath": _verify_evenpath,
    "match": _verify_match,
    "epm": _verify_epm,
}


def cmd_verify(args, meter) -> Outcome:
    check = VERIFIERS[args.problem]
    failed = [args.seed + i for i in range(args.seeds) if not check(args.seed + i, args.eps)]
    agree = args.seeds - len(failed)
    answer = {"agree": agree, "total": args.seeds, "failed_seeds": failed}
    text = f"{args.problem}: {agree}/{args.seeds} oracle agreements"
    if failed:
        text += "\nfailed seeds: " + " ".join(map(str, failed))
    return Outcome(answer, 0 if not failed else 1, text)


# -- parser and driver ----------------------------------------------------------------


def _vertex_pair(p: argparse.ArgumentParser) -> None:
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--input", help="plgr file (default: stdin)")
    common.add_argument("--eps", type=float, help="recursion parameter in (0, 1/2), default 0.25")
    common.add_argument("--stats", action="store_true", default=argparse.SUPPRESS, help="report peak working cells")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print a JSON run report")
    common.add_argument("--seed", type=int, help="seed for all randomness (default 0)")

    parser = argparse.ArgumentParser(prog="planarspace", parents=[common],
                                     description="Space-metered planar graph algorithms.")
    # parents share action objects, so defaults are filled in after parsing
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(handler=handler)
        return p

    _vertex_pair(add("dist", cmd_dist, "shortest-path distance"))
    _vertex_pair(add("path", cmd_path, "shortest path and its weight"))
    add("negcycle", cmd_negcycle, "find a negative-weight cycle")
    _vertex_pair(add("reach", cmd_reach, "directed reachability"))
    p = add("redblue", cmd_redblue, "alternating Red-Blue path in a DAG")
    _vertex_pair(p)
    p.add_argument("--init", choices=("R", "B"), default="R")
    p.add_argument("--final", choices=("R", "B"), default="B")
    p = add("planarize", cmd_planarize, "replace crossings of a drawn DAG by gadgets")
    p.add_argument("--output", help="write the planarised plgr here (default: stdout)")
    p.add_argument("--map", help="write the vertex provenance table (TSV) here")
    _vertex_pair(add("sparsereach", cmd_sparsereach, "reachability in a drawn DAG"))
    add("oddcycle", cmd_oddcycle, "odd-length directed cycle")
    _vertex_pair(add("evenpath", cmd_evenpath, "even-length path in a DAG"))
    p = add("match", cmd_match, "perfect matching of a bipartite graph")
    p.add_argument("--construct", action="store_true", help="print the matched pairs")
    add("hall", cmd_hall, "Hall obstacle when no perfect matching exists")
    add("epm", cmd_epm, "perfect matching with an even number of Red edges")
    p = add("separator", cmd_separator, "separator family with components of size <= r")
    p.add_argument("--r", type=int, required=True)
    p = add("gen", cmd_gen, "generate a random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--dag", action="store_true")
    p.add_argument("--colors", type=float, default=0.0, help="probability an arc gets a color")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--keep", type=float, default=0.75, help="edge keep probability")
    p.add_argument("--both-ways", type=float, default=0.3, help="probability of an antiparallel pair")
    p.add_argument("--output", help="write the plgr here (default: stdout)")
    p = add("verify", cmd_verify, "algorithm/oracle agreement sweep")
    p.add_argument("--problem", choices=sorted(VERIFIERS), required=True)
    p.add_argument("--seeds", type=int, default=20)
    return parser


def _params(args) -> dict:
    out = {"eps": args.eps, "seed": args.seed}
    if getattr(args, "r", None) is not None:
        out["r"] = args.r
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return 0 if exc.code == 0 else 2
    for name, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    meter = SpaceMeter() if args.stats else None
    start = time.perf_counter()
    error = None
    try:
        if not 0 < args.eps < 0.5:
            raise ValueError(f"--eps must lie strictly between 0 and 1/2, got {args.eps}")
        outcome = args.handler(args, meter)
    except NegativeCycleError as exc:
        error = f"negative cycle reachable: {exc}"
    except (GraphError, ValueError, OverflowError, RuntimeError, OSError) as exc:
        error = str(exc)
    if error is not None:
        outcome = Outcome(None, 2, "")
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        report = RunReport(args.command, outcome.answer, outcome.code, elapsed, _params(args),
                           meter.peak_cells if meter else None, outcome.detail, error)
        print(report.to_json())
    else:
        if outcome.text:
            print(outcome.text)
        if meter is not None:
            print(f"peak_cells {meter.peak_cells}")
    if error is not None:
        print(f"error: {error}", file=sys.stderr)
    return outcome.code


if __name__ == "__main__":
    sys.exit(main())
