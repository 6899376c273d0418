"""Command-line front end: ``viciouswalk {count,bijection,sample,compare,tw1}``.

Exit codes: 0 success, 1 verification failure, 2 infeasible size, 3 bad input.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import bijection as bj
from . import counting, stats, tw1
from .walks import InvalidWordError, config_class, enumerate_words, parse_word

EXIT_OK, EXIT_FAIL, EXIT_RESOURCE, EXIT_INPUT = 0, 1, 2, 3

# (N, p) feasibility per method, chosen so every call finishes in seconds
_FEASIBLE = {
    counting.Method.BRUTE: lambda N, p: N <= counting.BRUTE_MAX_N,
    counting.Method.WALK_DP: lambda N, p: p <= 6 and N <= 20,
    counting.Method.DETERMINANT: lambda N, p: math.comb(2 * N + p - 1, max(p - 1, 0)) * math.factorial(p) <= 2_000_000,
    counting.Method.SYMMETRIC: lambda N, p: math.comb(2 * N + p - 1, max(p - 1, 0)) * math.factorial(p) ** 2 <= 2_000_000,
    counting.Method.RAINS: lambda N, p: p <= 4 and math.comb(2 * N + p - 1, max(p - 1, 0)) <= 20_000,
}


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        payload = rows[0] if len(rows) == 1 else rows
        out.write(json.dumps(payload) + "\n")
    else:
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def cmd_count(args, out) -> int:
    methods = list(counting.Method) if args.method == "all" else [counting.Method(args.method)]
    rows = []
    status = EXIT_OK
    for N in args.N:
        for p in args.p:
            values = {}
            for m in methods:
                if not _FEASIBLE[m](N, p):
                    if args.method == "all":
                        continue
                    print(f"method {m.value} infeasible for N={N}, p={p}", file=sys.stderr)
                    return EXIT_RESOURCE
                try:
                    values[m] = counting.f_inv(N, p, m).value
                except counting.ResourceLimitError as exc:
                    print(str(exc), file=sys.stderr)
                    return EXIT_RESOURCE
                rows.append({"N": N, "p": p, "method": m.value, "value": str(values[m])})
            if len(set(values.values())) > 1:
                print(f"methods disagree for N={N}, p={p}: "
                      + ", ".join(f"{m.value}={v}" for m, v in values.items()), file=sys.stderr)
                status = EXIT_FAIL
    _emit(rows, args.format, out)
    return status


def _trace_lines(steps, title: str) -> list[str]:
    lines = [title]
    for t, d in enumerate(steps):
        lines.append(f"t={t}:")
        lines.extend("  " + row for row in str(d).splitlines())
    return lines


def cmd_bijection(args, out) -> int:
    if args.verify_all is not None:
        N = args.verify_all
        p = args.p or max(N, 1)
        c = config_class(args.cls, p)
        n_ok = 0
        for w in enumerate_words(N, c):
            if bj.array_to_walk(bj.walk_to_array(w, c), c) != w:
                out.write(f"FAIL {w}\n")
                return EXIT_FAIL
            n_ok += 1
        expected = counting.f_inv(N, p).value
        if n_ok != expected:
            out.write(f"FAIL enumerated {n_ok} words, expected {expected}\n")
            return EXIT_FAIL
        out.write(f"OK {n_ok} cases\n")
        return EXIT_OK

    if args.word is not None:
        letters = parse_word(args.word)
        c = config_class(args.cls, args.p or max(len(letters) // 2, 1))
        a = bj.walk_to_array(letters, c)
        s = bj.array_to_involution(a)
        result = {"class": c.name, "p": c.p, "word": args.word, "top": list(a.top),
                  "bottom": list(a.bottom), "sigma": list(s.sigma)}
        text = [str(a)]
        if args.trace:
            text = _trace_lines(bj.tableau_sequence(letters, c), f"word {args.word}") + [str(a)]
    elif args.array is not None:
        a = bj.TwoLineArray.parse(args.array)
        c = config_class(args.cls, args.p or max(a.N, 1))
        w = bj.array_to_walk(a, c)
        result = {"class": c.name, "p": c.p, "top": list(a.top), "bottom": list(a.bottom), "word": str(w)}
        text = [str(w)]
        if args.trace:
            text = _trace_lines(bj.array_tableaux(a), f"array {a}") + [str(w)]
    else:
        print("give --word, --array or --verify-all", file=sys.stderr)
        return EXIT_INPUT

    if args.format == "json":
        out.write(json.dumps(result) + "\n")
    else:
        out.write("\n".join(text) + "\n")
    return EXIT_OK


def cmd_sample(args, out) -> int:
    batch = stats.sample_batch(args.N, args.n, seed=args.seed, jobs=args.jobs)
    fh = open(args.out, "w") if args.out else out
    try:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["N", "seed", "sample_index", "L", "chi"])
        for k, (L, x) in enumerate(zip(batch.values, batch.chis)):
            writer.writerow([batch.N, batch.seed, k, int(L), repr(float(x))])
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def load_batch(path) -> stats.SampleBatch:
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    if not rows:
        raise ValueError(f"{path} holds no samples")
    Ns = {int(r["N"]) for r in rows}
    if len(Ns) != 1:
        raise ValueError(f"{path} mixes several N values")
    return stats.SampleBatch(Ns.pop(), int(rows[0]["seed"]), np.array([int(r["L"]) for r in rows]))


def cmd_compare(args, out) -> int:
    table_path = Path(args.table)
    if not table_path.exists():
        print(f"F1 table {table_path} not found; run `viciouswalk tw1 --out {table_path}` first",
              file=sys.stderr)
        return EXIT_INPUT
    table = tw1.F1Table.from_csv(table_path)
    batch = load_batch(args.batch)
    ks = stats.ks_distance(stats.EmpiricalCdf(batch.chis), table)
    passed = ks <= args.tol
    _emit([{"N": batch.N, "samples": len(batch), "ks_vs_F1": ks, "tol": args.tol, "pass": passed}],
          args.format, out)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_tw1(args, out) -> int:
    table = tw1.build_f1_table(args.xmin, args.xmax, args.num)
    if args.check:
        cdf = tw1.goe_mc_cdf(args.M, args.samples, np.random.default_rng(args.seed))
        ks = stats.ks_distance(cdf, table)
        passed = ks <= args.tol
        _emit([{"M": args.M, "samples": args.samples, "seed": args.seed, "ks": ks,
                "tol": args.tol, "pass": passed}], args.format, out)
        return EXIT_OK if passed else EXIT_FAIL
    if args.out:
        table.to_csv(args.out)
    else:
        out.write("x,F1\n")
        for x, v in zip(table.grid, table.values):
            out.write(f"{x:.10g},{v:.15g}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="viciouswalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact count of involutions with lds <= 2p")
    p.add_argument("--N", type=int, nargs="+", required=True)
    p.add_argument("--p", type=int, nargs="+", required=True)
    p.add_argument("--method", default="determinant", choices=[m.value for m in counting.Method] + ["all"])
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bijection", help="walker words <-> two-line arrays")
    p.add_argument("--class", dest="cls", default="two", choices=["one", "two"])
    p.add_argument("--p", type=int, default=None, help="class bound (default: N, i.e. unconstrained)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--word")
    g.add_argument("--array", help='two-line array such as "3 4 6 / 2 1 5"')
    g.add_argument("--verify-all", type=int, metavar="N", help="round-trip every word of length 2N")
    p.add_argument("--inverse", action="store_true", help="array -> word (implied by --array)")
    p.add_argument("--trace", action="store_true", help="print the diagram at every step")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("sample", help="sample L and chi for random involutions")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="number of samples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("compare", help="KS distance of a sample batch from F1")
    p.add_argument("--batch", required=True)
    p.add_argument("--table", default="f1_table.csv")
    p.add_argument("--tol", type=float, default=0.10)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("tw1", help="tabulate F1; --check compares with GOE Monte Carlo")
    p.add_argument("--xmin", type=float, default=-6.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p.add_argument("--num", type=int, default=1101)
    p.add_argument("--out")
    p.add_argument("--check", action="store_true")
    p.add_argument("--M", type=int, default=200)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    p.set_defaults(func=cmd_tw1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "bijection" and args.inverse and args.array is None:
        print("--inverse needs --array", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, sys.stdout)
    except (InvalidWordError, bj.InvalidArrayError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except counting.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
