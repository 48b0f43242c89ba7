"""Command-line front end.

Exit codes: 0 success/feasible, 1 infeasible or verification mismatch,
2 usage or input error.

Arc-list files hold one ``u v`` arc per line (0-based), ``#`` starts a
comment, and the first non-comment line may be ``n <count>`` to declare
isolated vertices. ``realize`` and ``tournament`` print in this format, so
their output can be fed back to ``imbalance``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Sequence, TextIO

from .digraph import DigraphError, MultiDigraph, OrientedDigraph, imbalance_sequence, transitive_tournament
from .oracle import (
    ENUMERATE_CAP,
    ORACLE_CAP,
    brute_force_realizable,
    enumerate_feasible,
    enumerate_zero_sum,
    realizable_sequences,
)
from .realization import dominance_realize, greedy_realize, multigraph_realize
from .sequences import FeasibilityReport, hat_reduce, is_feasible, normalize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class InputError(Exception):
    pass


def parse_ints(tokens: Iterable[str]) -> list[int]:
    out = []
    for tok in tokens:
        try:
            out.append(int(tok))
        except ValueError:
            raise InputError(f"not an integer: {tok!r}") from None
    return out


def _open_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def read_sequence(values: Sequence[str], path: str | None) -> list[int]:
    tokens = list(values)
    if path is not None:
        tokens += _open_text(path).split()
    return parse_ints(tokens)


def parse_arcs(text: str) -> OrientedDigraph:
    """Parse the arc-list format into an oriented digraph."""
    n = None
    arcs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None or arcs or len(fields) != 2:
                raise InputError(f"line {lineno}: misplaced or malformed 'n' declaration")
            n = parse_ints(fields[1:])[0]
            if n < 0:
                raise InputError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = parse_ints(fields)
        if u < 0 or v < 0:
            raise InputError(f"line {lineno}: negative vertex id")
        arcs.append((u, v))
    if n is None:
        n = 1 + max((max(u, v) for u, v in arcs), default=-1)
    try:
        return OrientedDigraph(n, arcs)
    except DigraphError as exc:
        raise InputError(str(exc)) from None


def format_arcs(g: OrientedDigraph | MultiDigraph) -> list[str]:
    lines = [f"n {g.n}"]
    if isinstance(g, MultiDigraph):
        for (u, v), mult in sorted(g.arcs.items()):
            lines.extend([f"{u} {v}"] * mult)
    else:
        lines.extend(f"{u} {v}" for u, v in g.arcs)
    return lines


def to_dot(g: OrientedDigraph | MultiDigraph) -> str:
    """DOT text with each vertex labelled by its imbalance."""
    b = imbalance_sequence(g)
    lines = ["digraph {"]
    lines.extend(f'  {v} [label="{b[v]}"];' for v in range(g.n))
    if isinstance(g, MultiDigraph):
        for (u, v), mult in sorted(g.arcs.items()):
            attr = f' [label="x{mult}"]' if mult > 1 else ""
            lines.append(f"  {u} -> {v}{attr};")
    else:
        lines.extend(f"  {u} -> {v};" for u, v in g.arcs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_dot(path: str, g) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(to_dot(g))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _join(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def cmd_check(args, out: TextIO) -> int:
    a = read_sequence(args.values, args.file)
    report = is_feasible(normalize(a))
    print(report, file=out)
    return EXIT_OK if report else EXIT_FAIL


def cmd_realize(args, out: TextIO) -> int:
    a = read_sequence(args.values, args.file)
    seq = normalize(a)
    schedule = None
    if args.method == "multigraph":
        try:
            g = multigraph_realize(a)
        except ValueError as exc:
            print(f"INFEASIBLE: {exc}", file=out)
            return EXIT_FAIL
    else:
        result = greedy_realize(seq) if args.method == "greedy" else dominance_realize(seq)
        if isinstance(result, FeasibilityReport):
            print(result, file=out)
            return EXIT_FAIL
        g, schedule = (result, None) if args.method == "greedy" else result
    if imbalance_sequence(g) != a:
        print("VERIFICATION MISMATCH: realization does not reproduce the input", file=out)
        return EXIT_FAIL
    if args.dot:
        _write_dot(args.dot, g)
    if args.json:
        doc = {
            "method": args.method,
            "n": g.n,
            "input": a,
            "sorted": list(seq.values),
            "sort_perm": list(seq.sort_perm),
            "imbalances": imbalance_sequence(g),
        }
        if isinstance(g, MultiDigraph):
            doc["arcs"] = [[u, v, m] for (u, v), m in sorted(g.arcs.items())]
        else:
            doc["arcs"] = [list(arc) for arc in g.arcs]
        if schedule is not None:
            doc["shifts"] = [
                {"i": s.i, "j": s.j, "z": s.z, "case": s.case.name.lower()} for s in schedule.steps
            ]
        print(json.dumps(doc), file=out)
        return EXIT_OK
    print(f"# method {args.method}", file=out)
    print(f"# imbalances {_join(a)}", file=out)
    print(f"# sorted {_join(seq.values)}", file=out)
    print(f"# sort_perm {_join(seq.sort_perm)}", file=out)
    if schedule is not None:
        print(f"# shifts {len(schedule)}", file=out)
    for line in format_arcs(g):
        print(line, file=out)
    return EXIT_OK


def cmd_reduce(args, out: TextIO) -> int:
    seq = normalize(read_sequence(args.values, args.file))
    report = is_feasible(seq)
    if not report:
        print(report, file=out)
        return EXIT_FAIL
    current = seq
    step = 0
    if not args.trace:
        print(_join(current) or "(empty)", file=out)
    while len(current):
        trace = hat_reduce(current)
        step += 1
        if args.trace:
            print(f"step {step}", file=out)
            print(f"a  {_join(current)}", file=out)
            print(f"+  . {_join(trace.augmented)}".rstrip(), file=out)
            print(f"a' . {_join(trace.result)}".rstrip(), file=out)
        else:
            print(_join(trace.result) or "(empty)", file=out)
        current = trace.result
    return EXIT_OK


def cmd_tournament(args, out: TextIO) -> int:
    if args.n < 0:
        raise InputError("n must be non-negative")
    g = transitive_tournament(args.n)
    if args.dot:
        _write_dot(args.dot, g)
    print(f"# imbalances {_join(imbalance_sequence(g))}", file=out)
    for line in format_arcs(g):
        print(line, file=out)
    return EXIT_OK


def cmd_imbalance(args, out: TextIO) -> int:
    g = parse_arcs(_open_text(args.path))
    print(_join(imbalance_sequence(g)), file=out)
    return EXIT_OK


def cmd_oracle(args, out: TextIO) -> int:
    values = parse_ints(args.values)
    if not values:
        raise InputError("oracle needs n or a sequence")
    try:
        if len(values) == 1 and not args.sequence:
            n = values[0]
            realizable = realizable_sequences(n, cap=args.cap)
            mismatches = [a for a in enumerate_zero_sum(n) if bool(is_feasible(a)) != (a in realizable)]
            for a in mismatches:
                print(f"MISMATCH {_join(a)}", file=out)
            if mismatches:
                return EXIT_FAIL
            print(f"is_feasible agrees with brute force on all {n}-vertex zero-sum sequences", file=out)
            return EXIT_OK
        g = brute_force_realizable(values, cap=args.cap)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    agree = (g is not None) == bool(is_feasible(values))
    if g is None:
        print("NOT REALIZABLE", file=out)
    else:
        print("REALIZABLE", file=out)
        for line in format_arcs(g):
            print(line, file=out)
    if not agree:
        print("MISMATCH with is_feasible", file=out)
        return EXIT_FAIL
    return EXIT_OK if g is not None else EXIT_FAIL


def cmd_enumerate(args, out: TextIO) -> int:
    try:
        seqs = enumerate_feasible(args.n, cap=args.cap)
        if args.count:
            print(sum(1 for _ in seqs), file=out)
        else:
            for a in seqs:
                print(_join(a), file=out)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="imbalance", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_args(p):
        p.add_argument("values", nargs="*", help="integers (any order)")
        p.add_argument("--file", help="read whitespace-separated integers; '-' for stdin")

    p = sub.add_parser("check", help="test feasibility")
    seq_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("realize", help="build a realizing digraph")
    seq_args(p)
    p.add_argument("--method", choices=["greedy", "dominance", "multigraph"], default="greedy")
    p.add_argument("--dot", help="also write DOT to this path")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("reduce", help="print the greedy reduction tower")
    seq_args(p)
    p.add_argument("--trace", action="store_true", help="three-row layout per step")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("tournament", help="transitive tournament on n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--dot")
    p.set_defaults(func=cmd_tournament)

    p = sub.add_parser("imbalance", help="imbalances of an arc-list file")
    p.add_argument("path", help="arc-list file; '-' for stdin")
    p.set_defaults(func=cmd_imbalance)

    p = sub.add_parser("oracle", help="compare feasibility with brute force")
    p.add_argument("values", nargs="+", help="n, or a sequence to test")
    p.add_argument("--sequence", action="store_true", help="treat a single value as a sequence")
    p.add_argument("--cap", type=int, default=ORACLE_CAP)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("enumerate", help="list feasible sequences of length n")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true")
    p.add_argument("--cap", type=int, default=ENUMERATE_CAP)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
