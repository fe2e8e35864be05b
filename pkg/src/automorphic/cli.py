"""Command-line entry point: ``automorphic <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
Ranges are written ``a..b`` and include both ends.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .analysis import is_exact_width, leading_digit_stats, summarize, write_stats_csv
from .cryptarithm import LETTERS, solve_atom
from .engine import DEFAULT_ORACLE_CEILING, brute_force_idempotents, enumerate_idempotents, twin_pairs
from .errors import DomainError
from .factorization import factor_base
from .radix import render_digits, to_digits
from .verification import verify_grid


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``"a..b"`` -> ``range(a, b + 1)``; a bare ``"a"`` means ``a..a``."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b range, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _selector_text(t) -> str:
    return "(" + ",".join(str(b) for b in t) + ")"


def _solution_dict(sol) -> dict:
    return {
        "base": sol.base,
        "n": sol.width,
        "residue": str(sol.residue),
        "digits": list(sol.digits),
        "selector": list(sol.selector),
        "exact_width": is_exact_width(sol),
    }


def _text_table(header: list[str], rows: list[list[str]], sep: str = "  ") -> str:
    widths = [max(len(r[i]) for r in [header, *rows]) for i in range(len(header))]
    lines = [sep.join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in [header, *rows]]
    return "\n".join(lines) + "\n"


def cmd_list(args, out) -> int:
    sols = enumerate_idempotents(args.base, args.n, include_trivial=args.include_trivial)
    if args.format == "json":
        out.write(_dump_json([_solution_dict(s) for s in sols]))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["base", "n", "residue", "digits", "selector", "exact_width"])
        for s in sols:
            w.writerow([s.base, s.width, s.residue, s.text, _selector_text(s.selector),
                        str(is_exact_width(s)).lower()])
    else:
        rows = [[str(s.residue), s.text, _selector_text(s.selector), "yes" if is_exact_width(s) else "no"]
                for s in sols]
        out.write(f"# base {args.base}, n = {args.n}: {len(sols)} solution(s)\n")
        if rows:
            out.write(_text_table(["residue", "digits", "selector", "exact"], rows))
    return 0


def _table_columns(base: int, max_n: int):
    """Column labels and per-width cells, twins adjacent (r then s)."""
    if max_n < 1:
        raise DomainError(f"max-n must be >= 1, got {max_n}")
    m = factor_base(base).m
    labels: list[str] = []
    rows = []
    for n in range(1, max_n + 1):
        pairs = twin_pairs(base, n)
        if n == 1:
            for p in pairs:
                if m == 2:
                    labels += ["r_n", "s_n"]
                else:
                    labels += ["t=" + "".join(map(str, p.r.selector)), "t=" + "".join(map(str, p.s.selector))]
        rows.append((n, [sol for p in pairs for sol in (p.r, p.s)]))
    return labels, rows


def cmd_table(args, out) -> int:
    labels, rows = _table_columns(args.base, args.max_n)
    if args.format == "json":
        out.write(_dump_json({
            "base": args.base,
            "columns": labels,
            "rows": [{"n": n, "values": [_solution_dict(s) for s in sols]} for n, sols in rows],
        }))
        return 0
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", *labels])
        for n, sols in rows:
            w.writerow([n, *(s.text for s in sols)])
        return 0
    header = ["n", *labels]
    body = [[str(n), *(s.text for s in sols)] for n, sols in rows]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    def fmt(row):
        return " | ".join(c.rjust(w) for c, w in zip(row, widths))
    out.write(fmt(header) + "\n")
    out.write("-+-".join("-" * w for w in widths) + "\n")
    for row in body:
        out.write(fmt(row) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    report = verify_grid(args.bases, args.n, args.oracle_ceiling)
    print(f"elapsed: {report.elapsed_ms:.1f} ms", file=sys.stderr)
    if args.format == "json":
        out.write(_dump_json(report.to_dict()))
    else:
        out.write(f"verify bases={report.parameters['bases']} n={report.parameters['n']}: "
                  f"{report.outcome} ({report.checks} checks, {len(report.violations)} violations)\n")
        for v in report.violations:
            out.write(f"  FAIL {v}\n")
    return 0 if report.outcome == "pass" else 1


def cmd_oracle(args, out) -> int:
    enumerated = [s.residue for s in enumerate_idempotents(args.base, args.n, include_trivial=True)]
    brute = brute_force_idempotents(args.base, args.n, args.oracle_ceiling)
    only_enum = sorted(set(enumerated) - set(brute))
    only_brute = sorted(set(brute) - set(enumerated))
    agree = not only_enum and not only_brute
    if args.format == "json":
        out.write(_dump_json({
            "base": args.base,
            "n": args.n,
            "enumerated": [str(x) for x in enumerated],
            "brute_force": [str(x) for x in brute],
            "only_enumerated": [str(x) for x in only_enum],
            "only_brute_force": [str(x) for x in only_brute],
            "agree": agree,
        }))
    else:
        out.write(f"enumerated:  {' '.join(map(str, enumerated))}\n")
        out.write(f"brute force: {' '.join(map(str, brute))}\n")
        out.write(f"only enumerated:  {' '.join(map(str, only_enum)) or '-'}\n")
        out.write(f"only brute force: {' '.join(map(str, only_brute)) or '-'}\n")
        out.write("agree\n" if agree else "DISAGREE\n")
    return 0 if agree else 1


def cmd_stats(args, out) -> int:
    records = leading_digit_stats(args.base, args.n.start, args.n.stop - 1)
    buf = io.StringIO()
    write_stats_csv(records, buf)
    summary = io.StringIO()
    for sel, counts in summarize(records).items():
        summary.write(f"class {_selector_text(sel)}: one={counts['one']} two={counts['two']}\n")
    total_one = sum(r.classification == "one" for r in records)
    summary.write(f"total: one={total_one} two={len(records) - total_one}\n")
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                fh.write(buf.getvalue())
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from exc
        out.write(summary.getvalue())
    else:
        out.write(buf.getvalue())
        sys.stderr.write(summary.getvalue())
    return 0


def cmd_cryptarithm(args, out) -> int:
    candidates = solve_atom()
    solutions = [c for c in candidates if c.accepted]
    out.write(f"  {LETTERS}\nx {LETTERS}\n------\n****{LETTERS}\n\n")
    out.write(f"idempotents mod 10^4: {len(candidates)}\n")
    for c in candidates:
        verdict = "accepted" if c.accepted else f"rejected: {c.reason}"
        out.write(f"  {c.text}  {verdict}\n")
    out.write(f"solutions: {len(solutions)}\n")
    for c in solutions:
        out.write(f"{LETTERS} = {c.text}\n")
        out.write(f"{c.text}^2 = {c.residue * c.residue}\n")
    return 0 if len(solutions) == 1 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="automorphic",
        description="Idempotent residues x*x = x (mod B^n). Ranges a..b are inclusive.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list idempotents mod B^n")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--include-trivial", action="store_true")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("table", help="nontrivial solutions for widths 1..max-n, zero padded")
    p.add_argument("--base", type=int, default=10)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check every invariant over a grid of bases and widths")
    p.add_argument("--bases", type=parse_range, required=True, help="inclusive range a..b")
    p.add_argument("--n", type=parse_range, required=True, help="inclusive range a..b")
    p.add_argument("--oracle-ceiling", type=int, default=DEFAULT_ORACLE_CEILING)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="compare the enumerator with an exhaustive scan")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle-ceiling", type=int, default=DEFAULT_ORACLE_CEILING)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("stats", help="leading digits of twin pairs, as CSV")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--n", type=parse_range, required=True, help="inclusive range a..b, a >= 2")
    p.add_argument("--out", help="CSV path; without it the CSV goes to stdout and the summary to stderr")
    p.add_argument("--format", choices=["csv"], default="csv")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("cryptarithm", help="solve ATOM x ATOM = ****ATOM")
    p.set_defaults(func=cmd_cryptarithm)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
