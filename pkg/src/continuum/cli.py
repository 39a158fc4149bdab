"""Command-line interface.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
Output is deterministic: JSON keys are sorted and rationals are ``"p/q"``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import checks, divider, nilpotent, paradoxes, philebian
from ._rational import format_rational, parse_rational
from .divider import BitWord
from .errors import DomainError
from .nilpotent import Dual, GalileanBoost, Polynomial
from .philebian import PhilebianSeq

ORDER_NAMES = {-1: "Less", 0: "Equal", 1: "Greater"}


@dataclass
class Result:
    data: Any
    plain: str | None = None


def _arg_type(parse, what):
    def convert(text):
        try:
            return parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"malformed {what}: {text!r} ({exc})") from None

    convert.__name__ = what
    return convert


rational = _arg_type(parse_rational, "rational")
sequence = _arg_type(PhilebianSeq.parse, "sequence")
dual = _arg_type(Dual.parse, "dual")
word = _arg_type(BitWord.parse, "word")
rational_list = _arg_type(lambda s: [parse_rational(t) for t in s.split(",")], "rational list")
sequence_list = _arg_type(
    lambda s: [PhilebianSeq.parse(t) for t in s.split(";") if t.strip()], "sequence list"
)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Dual):
        return obj.to_json()
    if isinstance(obj, (PhilebianSeq, BitWord)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _cell(value) -> str:
    if isinstance(value, list):
        return ";".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in sorted(value.items()))
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _rows(data) -> list[dict]:
    return data if isinstance(data, list) else [data]


def render(result: Result, fmt: str) -> str:
    data = _jsonable(result.data)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    rows = _rows(data)
    columns = list(dict.fromkeys(k for row in rows for k in row))
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row.get(c, "")) for c in columns])
        return buf.getvalue()
    if result.plain is not None:
        return result.plain + "\n"
    table = [columns] + [[_cell(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    return "".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n" for r in table)


# ---------------------------------------------------------------- handlers


def _tree(args) -> Result:
    if args.action == "expand":
        tree = divider.expand(args.n)
        rows = [{"label": str(w), "lower": iv.lower, "upper": iv.upper} for w, iv in tree.leaf_intervals()]
        return Result(rows)
    if args.action == "counts":
        partitions, parts = divider.counts(args.n)
        return Result({"n": args.n, "partitions": partitions, "parts": parts})
    iv = divider.leaf_interval(args.word)
    return Result(
        {
            "label": str(args.word),
            "lower": iv.lower,
            "upper": iv.upper,
            "division_point": divider.division_point(args.word),
        },
        plain=f"[{iv.lower}, {iv.upper}]",
    )


def _seq(args) -> Result:
    act = args.action
    if act == "compare":
        order = ORDER_NAMES[philebian.lex_compare(args.x, args.y)]
        return Result({"x": args.x, "y": args.y, "order": order}, plain=order)
    if act == "value":
        v = philebian.value(args.seq)
        return Result({"seq": args.seq, "value": v}, plain=str(v))
    if act == "pair":
        pair = philebian.dyadic_pair(args.k, args.n)
        return Result(
            {"lower": pair.lower, "upper": pair.upper, "value": pair.value},
            plain=f"{pair.lower} < {pair.upper}  value {pair.value}",
        )
    if act == "canon":
        c = philebian.canonical_choice(args.seq)
        return Result({"seq": args.seq, "canonical": c}, plain=str(c))
    if act == "classify":
        tag = philebian.classify(args.seq).value
        return Result({"seq": args.seq, "class": tag}, plain=tag)
    if act == "witness":
        m = philebian.density_witness(args.x, args.y)
        return Result({"x": args.x, "y": args.y, "witness": m, "value": philebian.value(m)}, plain=str(m))
    if act == "gap":
        pair = philebian.dyadic_pair(args.k, args.n)
        if args.candidates is not None:
            cands = args.candidates
        else:
            cands = philebian.enumerate_family(args.max_prefix, args.periods.split(","))
        ok = philebian.gap_check(pair, cands)
        return Result(
            {"lower": pair.lower, "upper": pair.upper, "candidates": len(cands), "gap": ok},
            plain="true" if ok else "false",
        )
    rep = philebian.poincare_chain(args.epsilon, args.values)
    data = {
        "epsilon": rep.epsilon,
        "values": list(rep.values),
        "indistinguishable": [list(p) for p in rep.indistinguishable],
        "distinguishable": [list(p) for p in rep.distinguishable],
        "witnesses": [list(w) for w in rep.witnesses],
        "intransitive": rep.intransitive,
    }
    lines = [f"{a} ~ {b}" for a, b in rep.indistinguishable]
    lines += [f"{a} < {b} distinguishable" for a, b in rep.distinguishable]
    lines.append("intransitive" if rep.intransitive else "transitive")
    return Result(data, plain="\n".join(lines))


def _dual(args) -> Result:
    act = args.action
    if act in ("add", "mul", "div"):
        out = {"add": nilpotent.add, "mul": nilpotent.mul, "div": nilpotent.div}[act](args.x, args.y)
    elif act == "eval":
        out = nilpotent.eval_dual(Polynomial.of(args.coeffs), args.x)
    elif act == "boost":
        out = nilpotent.boost(args.x, GalileanBoost(args.w))
    else:
        pos = nilpotent.worldline_position(args.x, args.t)
        return Result({"x": args.x, "t": args.t, "position": pos}, plain=str(pos))
    return Result(out.to_json(), plain=str(out))


def _paradox(args, parser) -> Result:
    which = args.which_opt or args.which
    if which is None:
        parser.error("paradox: choose one of dichotomy, achilles, stadium, arrow")

    def need(*names):
        missing = [n for n in names if getattr(args, n) is None]
        if missing:
            parser.error(f"paradox {which}: missing " + ", ".join("--" + m for m in missing))

    if which == "dichotomy":
        need("n")
        rep = paradoxes.dichotomy(args.n)
        rows = []
        covered = Fraction(0)
        for i, step in enumerate(rep.steps, start=1):
            covered += step
            rows.append({"step": i, "length": step, "cumulative": covered, "remaining": 1 - covered})
        if args.format == "json":
            return Result(
                {
                    "depth": rep.depth,
                    "steps": list(rep.steps),
                    "cumulative": rep.cumulative,
                    "remaining": rep.remaining,
                    "partitions": rep.partitions,
                    "parts": rep.parts,
                }
            )
        return Result(rows)
    if which == "achilles":
        need("r", "s", "k")
        rep = paradoxes.achilles(args.r, args.s, args.k)
        if args.format == "json":
            return Result(
                {"ratio": rep.ratio, "head_start": rep.head_start, "points": list(rep.points), "limit": rep.limit}
            )
        return Result(
            [{"round": i, "point": p, "shortfall": rep.limit - p} for i, p in enumerate(rep.points)]
        )
    if which == "stadium":
        need("N", "k")
        rep = paradoxes.stadium(args.N, args.k)
        return Result(
            {
                "bodies": rep.state.n_bodies,
                "ticks": rep.state.ticks,
                "offsets": rep.state.offsets,
                "passings_bc": rep.passings_bc,
                "passings_ba": rep.passings_ba,
                "ratio": rep.ratio,
            }
        )
    need("n")
    rep = paradoxes.arrow(args.n)
    return Result({"depth": rep.depth, "width": rep.width, "count": rep.count, "product": rep.product})


def _check(args) -> Result:
    results = checks.run_all()
    rows = [{"check": name, "status": "PASS" if err is None else "FAIL", "detail": err or ""} for name, err in results]
    return Result(rows)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="continuum", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    sub = parser.add_subparsers(dest="command", required=True)

    tree = sub.add_parser("tree", help="division tree of the unit rod")
    tsub = tree.add_subparsers(dest="action", required=True)
    for name in ("expand", "counts"):
        p = tsub.add_parser(name, parents=[fmt])
        p.add_argument("--n", type=int, required=True)
    p = tsub.add_parser("interval", parents=[fmt])
    p.add_argument("--word", type=word, required=True, help="leaf label, '' for the whole rod")

    seq = sub.add_parser("seq", help="eventually periodic binary sequences")
    ssub = seq.add_subparsers(dest="action", required=True)
    for name in ("compare", "witness"):
        p = ssub.add_parser(name, parents=[fmt])
        p.add_argument("--x", type=sequence, required=True)
        p.add_argument("--y", type=sequence, required=True)
    for name in ("value", "canon", "classify"):
        p = ssub.add_parser(name, parents=[fmt])
        p.add_argument("--seq", type=sequence, required=True, help="e.g. '10:(1)'")
    for name in ("pair", "gap"):
        p = ssub.add_parser(name, parents=[fmt])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        if name == "gap":
            p.add_argument("--candidates", type=sequence_list, help="';'-separated sequences")
            p.add_argument("--max-prefix", type=int, default=6)
            p.add_argument("--periods", default="0,1,10,01")
    p = ssub.add_parser("poincare", parents=[fmt])
    p.add_argument("--epsilon", type=rational, required=True)
    p.add_argument("--values", type=rational_list, required=True, help="e.g. 10,11,12")

    dl = sub.add_parser("dual", help="nilpotent numbers a + b·h")
    dsub = dl.add_subparsers(dest="action", required=True)
    for name in ("add", "mul", "div"):
        p = dsub.add_parser(name, parents=[fmt])
        p.add_argument("--x", type=dual, required=True, help="'a,b'")
        p.add_argument("--y", type=dual, required=True)
    p = dsub.add_parser("eval", parents=[fmt])
    p.add_argument("--coeffs", type=rational_list, required=True, help="constant term first")
    p.add_argument("--x", type=dual, required=True)
    p = dsub.add_parser("boost", parents=[fmt])
    p.add_argument("--x", type=dual, required=True)
    p.add_argument("--w", type=rational, required=True)
    p = dsub.add_parser("worldline", parents=[fmt])
    p.add_argument("--x", type=dual, required=True)
    p.add_argument("--t", type=rational, required=True)

    kinds = ("dichotomy", "achilles", "stadium", "arrow")
    px = sub.add_parser("paradox", parents=[fmt], help="motion paradox accounting")
    px.add_argument("which", nargs="?", choices=kinds)
    px.add_argument("--which", dest="which_opt", choices=kinds)
    px.add_argument("--n", type=int)
    px.add_argument("--r", type=rational)
    px.add_argument("--s", type=rational)
    px.add_argument("--k", type=int)
    px.add_argument("--N", type=int, help="bodies per row (stadium)")

    sub.add_parser("check", parents=[fmt], help="run the invariant suite")
    return parser


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "tree":
            result = _tree(args)
        elif args.command == "seq":
            result = _seq(args)
        elif args.command == "dual":
            result = _dual(args)
        elif args.command == "paradox":
            result = _paradox(args, parser)
        else:
            result = _check(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DomainError as exc:
        stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}, sort_keys=True) + "\n")
        return 1
    stdout.write(render(result, args.format))
    if args.command == "check":
        return 0 if all(row["status"] == "PASS" for row in result.data) else 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
