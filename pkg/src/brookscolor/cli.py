"""Command-line front end.

File formats (plain text, diff-friendly):

* graph file:    "graph <n> <m>" header, then m lines "u v" (0 <= u < v < n)
* coloring file: "colors <palette>" header, then one "vertex color" per line
* gadget spec:   lines "f <ints...>", "g <ints...>", "horizon <N>"
* trace file:    one JSON record per stage: {"stage", "rule", "w", "s",
  "evidence"}

Exit codes: 0 success, 1 parse/verification failure, 2 hypothesis
violation (witness printed), 3 exploration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .core import (BudgetError, Coloring, EXHAUSTED, FiniteGraph,
                   HypothesisError, IncompleteColoringError, is_proper,
                   max_degree)
from .basic import brute_chromatic, color_degree_two, NoColoringError
from .descent import brooks_color
from .tverberg import run_trace
from .gadgets import (InjectionPair, build_h2, build_hd, build_ladder,
                      extract_separator)
from .schmerl import (build_apexed_ladder, check_lemma7_conditions,
                      compose_CG, has_property_A)
from . import generate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_HYPOTHESIS = 2
EXIT_BUDGET = 3


class ParseError(Exception):
    pass


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def parse_graph(text: str) -> FiniteGraph:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty graph file")
    lno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "graph":
        raise ParseError(f"line {lno}: expected 'graph <n> <m>'")
    try:
        n, m = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"line {lno}: bad counts in header")
    edges = []
    for lno, ln in lines[1:]:
        try:
            u, v = map(int, ln.split())
        except ValueError:
            raise ParseError(f"line {lno}: expected 'u v'")
        if not 0 <= u < v < n:
            raise ParseError(f"line {lno}: edge ({u},{v}) out of range or unordered")
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header says {m} edges, found {len(edges)}")
    try:
        return FiniteGraph.from_edges(n, edges)
    except ValueError as e:
        raise ParseError(str(e))


def serialize_graph(g: FiniteGraph) -> str:
    edges = sorted(g.edges())
    out = [f"graph {g.n} {len(edges)}"]
    out += [f"{u} {v}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_coloring(text: str) -> Coloring:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("colors "):
        raise ParseError("expected 'colors <palette>' header")
    try:
        palette = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("bad palette size")
    assignment = {}
    for i, ln in enumerate(lines[1:], start=2):
        try:
            v, c = map(int, ln.split())
        except ValueError:
            raise ParseError(f"line {i}: expected 'vertex color'")
        assignment[v] = c
    try:
        return Coloring(assignment, palette)
    except ValueError as e:
        raise ParseError(str(e))


def serialize_coloring(c: Coloring) -> str:
    out = [f"colors {c.palette}"]
    out += [f"{v} {c.assignment[v]}" for v in sorted(c.assignment)]
    return "\n".join(out) + "\n"


def parse_pair(text: str) -> InjectionPair:
    f, g, horizon = (), (), None
    for i, ln in enumerate(text.splitlines(), start=1):
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        try:
            if parts[0] == "f":
                f = tuple(map(int, parts[1:]))
            elif parts[0] == "g":
                g = tuple(map(int, parts[1:]))
            elif parts[0] == "horizon":
                horizon = int(parts[1])
            else:
                raise ParseError(f"line {i}: unknown key {parts[0]!r}")
        except (IndexError, ValueError):
            raise ParseError(f"line {i}: malformed")
    if horizon is None:
        horizon = 1 + max([-1] + list(f) + list(g))
    try:
        return InjectionPair(f, g, horizon)
    except ValueError as e:
        raise ParseError(str(e))


def serialize_pair(p: InjectionPair) -> str:
    return (f"f {' '.join(map(str, p.f))}\n"
            f"g {' '.join(map(str, p.g))}\n"
            f"horizon {p.horizon}\n")


def serialize_trace(stages) -> str:
    out = []
    for st in stages:
        ev = st.evidence
        if isinstance(ev, tuple) and len(ev) == 2 and isinstance(ev[1], frozenset):
            ev = {"germ": list(ev[0]), "component": sorted(ev[1])}
        elif isinstance(ev, frozenset):
            ev = sorted(ev)
        elif ev is not None:
            ev = list(ev)
        out.append(json.dumps({"stage": st.index, "rule": st.rule,
                               "w": st.w, "s": st.s, "evidence": ev}))
    return "\n".join(out) + "\n"


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}")


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_color(args) -> int:
    g = parse_graph(_read(args.graph))
    d = args.degree
    if d is None:
        d = max_degree(g) if g.n else 0
    try:
        if d <= 2:
            result = color_degree_two(g)
        elif d == 3:
            trace = run_trace(g)
            if args.trace:
                _write(args.trace, serialize_trace(trace.stages))
            result = trace.source_coloring()
        else:
            if args.trace:
                print("warning: --trace only applies to degree <= 3 inputs",
                      file=sys.stderr)
            result = brooks_color(g, d)
    except HypothesisError as e:
        print(f"hypothesis violation ({e.kind}): {e.witness}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    if result is EXHAUSTED:
        print("budget exhausted", file=sys.stderr)
        return EXIT_BUDGET
    _write(args.output, serialize_coloring(result))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = parse_graph(_read(args.graph))
    c = parse_coloring(_read(args.coloring))
    try:
        ok = is_proper(g, c)
    except IncompleteColoringError as e:
        print(f"incomplete coloring: {e}", file=sys.stderr)
        return EXIT_FAIL
    if not ok:
        for u, v in g.edges():
            if c[u] == c[v]:
                print(f"edge ({u},{v}) is monochromatic (color {c[u]})",
                      file=sys.stderr)
                break
        return EXIT_FAIL
    return EXIT_OK


def cmd_chi(args) -> int:
    g = parse_graph(_read(args.graph))
    try:
        print(brute_chromatic(g, args.cap))
    except NoColoringError:
        print(f"no coloring with <= {args.cap} colors", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_gadget(args) -> int:
    p = parse_pair(_read(args.spec))
    if args.horizon is not None:
        p = InjectionPair(p.f, p.g, args.horizon)
    if args.kind == "h2":
        gg = build_h2(p)
    elif args.kind == "hd":
        gg = build_hd(p, args.d)
    else:
        gg = build_ladder(p)
    if args.output or not (args.color or args.extract):
        _write(args.output, serialize_graph(gg.graph))
    if not (args.color or args.extract):
        return EXIT_OK
    if gg.kind == "hd":
        coloring = brooks_color(gg.graph, args.d)
    else:
        coloring = color_degree_two(gg.graph)
    if args.extract:
        x = extract_separator(gg, coloring)
        missing = [n for n in p.f if n not in x]
        leaked = [n for n in p.g if n in x]
        verdict = "OK" if not missing and not leaked else "FAIL"
        print(f"X = {x}")
        print(f"ran(f) subset of X, ran(g) disjoint from X: {verdict}")
        if verdict == "FAIL":
            return EXIT_FAIL
    else:
        sys.stdout.write(serialize_coloring(coloring))
    return EXIT_OK


def cmd_schmerl(args) -> int:
    lg = compose_CG(build_apexed_ladder(args.levels))
    checks = check_lemma7_conditions(lg)
    for name, ok in checks.items():
        print(f"condition {name}: {'holds' if ok else 'FAILS'}")
    has_a, witness = has_property_A(lg.graph)
    if has_a:
        print("property A: TRUE")
    else:
        pretty = {lg.name_of(v): c for v, c in sorted(witness.items())}
        print(f"property A: FALSE, non-extendable precoloring {pretty}")
    return EXIT_OK


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "cubic":
        g = generate.random_cubic_k4_free(args.n, rng)
        _write(args.output, serialize_graph(g))
    elif args.kind == "regular":
        g = generate.random_regular_clique_free(args.n, args.d, rng)
        _write(args.output, serialize_graph(g))
    elif args.kind == "circle-tree":
        g, _ = generate.random_circle_tree(args.k, rng)
        _write(args.output, serialize_graph(g))
    else:
        p = generate.random_injection_pair(rng, horizon=args.n)
        _write(args.output, serialize_pair(p))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="brookscolor",
        description="Color bounded-degree graphs within their max degree.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph with <= d colors")
    p.add_argument("graph")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--trace", default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("chi", help="exact chromatic number (small graphs)")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=8)
    p.set_defaults(fn=cmd_chi)

    p = sub.add_parser("gadget", help="build a range-separation gadget")
    p.add_argument("kind", choices=["h2", "hd", "ladder"])
    p.add_argument("spec")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--color", action="store_true")
    p.add_argument("--extract", action="store_true")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=cmd_gadget)

    p = sub.add_parser("schmerl",
                       help="leveled-extension counterexample report")
    p.add_argument("--levels", type=int, default=6)
    p.set_defaults(fn=cmd_schmerl)

    p = sub.add_parser("gen", help="generate random test instances")
    p.add_argument("kind", choices=["cubic", "regular", "circle-tree", "pair"])
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--d", type=int, default=4)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(fn=cmd_gen)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    except HypothesisError as e:
        print(f"hypothesis violation ({e.kind}): {e.witness}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
