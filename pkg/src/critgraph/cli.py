"""Command line front end: graph6 in on stdin, one result line per input graph."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator, Optional, TextIO

from . import c5, catalog, coloring, criticality, enumeration, patterns
from .graph import Graph, members
from .graph6 import Graph6Error, from_graph6, to_graph6

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _graphs(stream: TextIO) -> Iterator[Graph]:
    # first token of each line; blank lines and '#' comments are skipped
    for number, line in enumerate(stream, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            yield from_graph6(text.split()[0])
        except Graph6Error as exc:
            raise InputError(f"line {number}: malformed graph6: {exc}") from None


def _patterns(text: str) -> list:
    try:
        return patterns.parse_pattern_list(text)
    except (ValueError, Graph6Error) as exc:
        raise UsageError(f"bad pattern list {text!r}: {exc}") from None


def _ints(xs) -> str:
    return " ".join(str(x) for x in xs)


def _cycles(g: Graph, every: bool):
    if every:
        return list(c5.iter_induced_c5(g))
    c = c5.find_induced_c5(g)
    return [] if c is None else [c]


# ------------------------------------------------------------ subcommands


def cmd_check(args, inp, out, err) -> int:
    forbidden = _patterns(args.free)
    code = EXIT_OK
    for g in _graphs(inp):
        hit = patterns.find_forbidden(g, forbidden)
        if hit is None:
            out.write("true\n")
            continue
        code = EXIT_FALSE
        if args.witness:
            out.write(f"false {hit[0]} {_ints(hit[1])}\n")
        else:
            out.write("false\n")
    return code


def cmd_chi(args, inp, out, err) -> int:
    for g in _graphs(inp):
        out.write(f"{coloring.chromatic_number(g)}\n")
    return EXIT_OK


def cmd_color(args, inp, out, err) -> int:
    code = EXIT_OK
    for g in _graphs(inp):
        if args.k is None:
            cols = coloring.is_k_colorable(g, coloring.chromatic_number(g))
        else:
            cols = coloring.is_k_colorable(g, args.k)
        if cols is None:
            code = EXIT_FALSE
            out.write("none\n")
        else:
            out.write(_ints(cols) + "\n")
    return code


def cmd_critical(args, inp, out, err) -> int:
    test = criticality.is_k_critical if args.edge else criticality.is_k_vertex_critical
    code = EXIT_OK
    for g in _graphs(inp):
        ok = test(g, args.k)
        code = code if ok else EXIT_FALSE
        out.write("true\n" if ok else "false\n")
    return code


def _partition_line(part: c5.C5Partition) -> str:
    fields = [f"cycle {_ints(part.cycle)}"]
    if part.S0:
        fields.append(f"S0: {_ints(members(part.S0))}")
    for name, table in (("S2", part.S2), ("S3", part.S3), ("S4", part.S4)):
        for i in range(1, 6):
            if table[i]:
                fields.append(f"{name}({i}): {_ints(members(table[i]))}")
    if part.S5:
        fields.append(f"S5: {_ints(members(part.S5))}")
    for name, s in part.excluded().items():
        if s:
            fields.append(f"{name}: {_ints(members(s))}")
    return " | ".join(fields)


def cmd_decompose(args, inp, out, err) -> int:
    code = EXIT_OK
    for g in _graphs(inp):
        cycles = _cycles(g, args.all_c5)
        if not cycles:
            code = EXIT_FALSE
            out.write(json.dumps({"graph": to_graph6(g), "cycle": None}) + "\n" if args.json else "no induced C5\n")
            continue
        for cyc in cycles:
            part = c5.partition_around_c5(g, cyc)
            if args.json:
                out.write(json.dumps({"graph": to_graph6(g), **part.to_dict()}) + "\n")
            else:
                out.write(_partition_line(part) + "\n")
    return code


def cmd_verify_claims(args, inp, out, err) -> int:
    ids = args.claim or None
    if ids:
        unknown = [c for c in ids if c not in c5.CLAIMS]
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    assumptions = c5.Assumptions(args.assume_free, args.assume_critical, args.f_free)
    code = EXIT_OK
    for number, g in enumerate(_graphs(inp), start=1):
        cycles = _cycles(g, args.all_c5)
        if not cycles:
            err.write(f"graph {number}: no induced C5, no claims to check\n")
            continue
        for cyc in cycles:
            part = c5.partition_around_c5(g, cyc)
            reports = c5.check_claims(g, part, ids, assumptions)
            if any(r.violated for r in reports):
                code = EXIT_FALSE
            if args.json:
                out.write(json.dumps(c5.claim_report_json(g, part, reports)) + "\n")
                continue
            out.write(f"cycle {_ints(cyc)}\n")
            for r in reports:
                where = "" if r.index is None else f" i={r.index}"
                tail = f" [{_ints(r.witness)}]" if r.witness else ""
                why = f" {r.reason}" if r.reason and not r.holds else ""
                out.write(f"  {r.id}{where} {r.status}{tail}{why}\n")
    return code


def cmd_catalog(args, inp, out, err) -> int:
    names = [args.name] if args.name else list(catalog.CATALOG)
    for name in names:
        try:
            g = catalog.catalog_graph(name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        out.write(f"{to_graph6(g)} {name}\n" if args.names else f"{to_graph6(g)}\n")
    return EXIT_OK


def _split(text: str) -> tuple[int, int]:
    try:
        r, m = (int(x) for x in text.split("/"))
    except ValueError:
        raise UsageError(f"--mod wants r/m, got {text!r}") from None
    if m < 1 or not 0 <= r < m:
        raise UsageError(f"--mod needs 0 <= r < m, got {text!r}")
    return r, m


def cmd_enumerate(args, inp, out, err) -> int:
    split = _split(args.mod) if args.mod else (0, 1)
    try:
        spec = enumeration.EnumSpec(
            k=args.k,
            forbidden=tuple(_patterns(args.free)) if args.free else (),
            n_max=args.max_n,
            split=split,
            split_order=args.split_order,
            time_limit=args.time_limit,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = enumeration.enumerate_critical(spec)
    if args.out:
        with open(args.out, "w") as fh:
            enumeration.write_graph6(result.graphs, fh)
    else:
        enumeration.write_graph6(result.graphs, out)
    counts = " ".join(f"n={n}:{c}" for n, c in result.counts.items()) or "none"
    err.write(
        f"enumerate k={spec.k} free={args.free or '-'} n<={spec.n_max} mod {split[0]}/{split[1]}: "
        f"{len(result.graphs)} graphs ({counts}), {result.nodes_explored} nodes, {result.wall_time:.2f}s"
        f"{'' if result.complete else ', INCOMPLETE'}\n"
    )
    return EXIT_OK if result.complete else EXIT_FALSE


def cmd_selftest(args, inp, out, err) -> int:
    from .selftest import run_selftest

    failures = 0
    for name, ok, detail in run_selftest():
        failures += not ok
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}{': ' + detail if detail else ''}\n")
    return EXIT_OK if failures == 0 else EXIT_FALSE


# ------------------------------------------------------------------ wiring


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="critgraph", description="Workbench for vertex-critical (P5, bull)-free graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    common = _Parser(add_help=False)
    common.add_argument("--strict", action="store_true", help="exit 1 if any verdict is false or Violated")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("check", parents=[common], help="test freeness of induced patterns")
    s.add_argument("--free", required=True, help="comma separated patterns, e.g. P5,bull")
    s.add_argument("--witness", action="store_true", help="print the pattern and embedding on false")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("chi", parents=[common], help="chromatic number")
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("color", parents=[common], help="print a colouring (optimal, or with exactly -k colours)")
    s.add_argument("-k", type=int)
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("critical", parents=[common], help="k-vertex-criticality verdict")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--edge", action="store_true", help="test k-criticality (edges too)")
    s.set_defaults(func=cmd_critical)

    s = sub.add_parser("decompose", parents=[common], help="partition around an induced C5")
    s.add_argument("--all-c5", action="store_true", help="every induced C5, not just the first")
    s.add_argument("--json", action="store_true", help="one JSON object per line")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("verify-claims", parents=[common], help="run the claim checks around an induced C5")
    s.add_argument("--all-c5", action="store_true", help="every induced C5, not just the first")
    s.add_argument("--json", action="store_true", help="one JSON object per line")
    s.add_argument("--claim", action="append", metavar="ID", help="restrict to this id (repeatable)")
    s.add_argument("--assume-critical", action="store_true",
                   help="trust 5-vertex-criticality (and, unless --verify-f-free, absence of F subgraphs)")
    s.add_argument("--assume-free", action="store_true", help="trust (P5, bull)-freeness")
    f = s.add_mutually_exclusive_group()
    f.add_argument("--assume-f-free", dest="f_free", action="store_const", const=True,
                   help="trust absence of forbidden-family subgraphs")
    f.add_argument("--verify-f-free", dest="f_free", action="store_const", const=False,
                   help="always check for forbidden-family subgraphs")
    s.set_defaults(func=cmd_verify_claims)

    s = sub.add_parser("catalog", parents=[common], help="print fixture graphs as graph6")
    s.add_argument("name", nargs="?")
    s.add_argument("--names", action="store_true", help="append the entry name after each record")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("enumerate", parents=[common], help="generate k-vertex-critical forbidden-free graphs")
    s.add_argument("-k", type=int, required=True)
    s.add_argument("--free", default="", help="forbidden induced patterns")
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--mod", help="shard r/m")
    s.add_argument("--out", help="write graph6 here instead of standard output")
    s.add_argument("--split-order", type=int, default=5, help="order at which shards branch")
    s.add_argument("--time-limit", type=float, help="seconds before stopping with a partial result")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("selftest", parents=[common], help="run the built-in oracle checks")
    s.set_defaults(func=cmd_selftest, always_strict=True)
    return p


def run(argv, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.verbose:
        logging.basicConfig(stream=stderr, level=logging.INFO, format="%(name)s: %(message)s")
    try:
        code = args.func(args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"critgraph: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        stderr.write(f"critgraph: {exc}\n")
        return EXIT_INPUT
    if code == EXIT_FALSE and not (args.strict or getattr(args, "always_strict", False)):
        return EXIT_OK
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
