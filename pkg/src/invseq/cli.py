"""Command-line harness.

Exit codes: 0 success, 1 a verified claim failed (or an internal invariant
broke), 2 usage error.  Output is deterministic for fixed arguments; wall-clock
timings are only emitted with ``--timings``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .enumeration import (
    baxter_generating_tree, catalan_triangle, distribution, gen_avoiders, schroder_triangle,
)
from .series import IDENTITIES
from .theorems import DEFAULT_MAX_N, THEOREMS, scan_schroder_pairs
from .words import PatternError, parse_avoid

log = logging.getLogger("invseq")

TRIANGLES = {
    "catalan": catalan_triangle,
    "schroder": schroder_triangle,
    "baxter": lambda n: baxter_generating_tree(n)[1],
}

DEFAULT_ORDERS = {"dist-ogf": 9, "kernel-root": 10, "baxter-fe": 8, "main-identity": 8,
                  "bousquet-side": 7}


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cell(v) -> str:
    return json.dumps(list(v), separators=(",", ":")) if isinstance(v, tuple) else str(v)


def cmd_enumerate(args) -> int:
    try:
        avoid = parse_avoid(args.avoid) if args.avoid else None
    except PatternError as exc:
        raise UsageError(str(exc)) from None
    objects = gen_avoiders(args.n, avoid, args.universe)
    if args.stats:
        names = [s.strip() for s in args.stats.split(",") if s.strip()]
        try:
            dist = distribution(objects, names, args.universe)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if args.format == "json":
            _emit(_dump(dist.to_json()), args.out)
        else:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow([*names, "count"])
            for key, count in dist.items():
                writer.writerow([*(_cell(v) for v in key), count])
            _emit(buf.getvalue(), args.out)
        return 0
    objects = list(objects)
    if args.n == 0:
        _emit("" if args.format == "csv" else _dump([]), args.out)
        return 0
    if args.format == "json":
        _emit(_dump([list(w) for w in objects]), args.out)
    else:
        _emit("".join(",".join(map(str, w)) + "\n" for w in objects), args.out)
    return 0


def cmd_triangle(args) -> int:
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    tri = TRIANGLES[args.family](args.max_n)
    if args.format == "csv":
        text = tri.to_csv()
    elif args.format == "bfile":
        text = tri.to_bfile()
    else:
        text = _dump(tri.to_json())
    _emit(text, args.out)
    return 0


def cmd_check(args) -> int:
    max_n = args.max_n if args.max_n is not None else DEFAULT_MAX_N[args.theorem]
    if max_n > DEFAULT_MAX_N[args.theorem]:
        log.warning("--max-n %d exceeds the default %d for %s; this may take long",
                    max_n, DEFAULT_MAX_N[args.theorem], args.theorem)
    results, status = [], "pass"
    for n in range(1, max_n + 1):
        start = time.perf_counter()
        ok, detail = THEOREMS[args.theorem](n)
        entry = {"n": n, "status": "pass" if ok else "fail", "detail": detail}
        if args.timings:
            entry["seconds"] = round(time.perf_counter() - start, 6)
        results.append(entry)
        if not ok:
            status = "fail"
            break
    _emit(_dump({"theorem": args.theorem, "max_n": max_n, "status": status, "results": results}),
          args.out)
    return 0 if status == "pass" else 1


def cmd_scan(args) -> int:
    if args.max_n > 8:
        log.warning("--max-n %d scans all of S_n for every n up to it; this may take long", args.max_n)
    pairs = scan_schroder_pairs(args.max_n)
    if args.format == "json":
        _emit(_dump({"max_n": args.max_n, "count": len(pairs), "pairs": [list(p) for p in pairs]}),
              args.out)
    else:
        _emit("".join(f"{a},{b}\n" for a, b in pairs), args.out)
    return 0


def cmd_series_check(args) -> int:
    order = args.order if args.order is not None else DEFAULT_ORDERS[args.identity]
    if order < 1:
        raise UsageError("--order must be at least 1")
    if order > DEFAULT_ORDERS[args.identity] + 2:
        log.warning("--order %d is above the tested range for %s", order, args.identity)
    report = IDENTITIES[args.identity](order)
    _emit(_dump(report.to_json()), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invseq", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list avoiders or their statistic distribution")
    p.add_argument("--universe", choices=["perm", "invseq"], default="invseq")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--avoid", help='patterns "021,2_41_3" or a relation triple ">=,-,>"')
    p.add_argument("--stats", help="comma-separated statistic names, e.g. DES,ides")
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("triangle", help="last-entry triangle of a family")
    p.add_argument("--family", choices=sorted(TRIANGLES), required=True)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--format", choices=["csv", "bfile", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("check", help="verify an equidistribution for n = 1..max-n")
    p.add_argument("--theorem", choices=list(THEOREMS), required=True)
    p.add_argument("--max-n", type=int)
    p.add_argument("--timings", action="store_true", help="include per-n wall-clock seconds")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("scan-schroder-pairs", help="pairs of length-4 patterns refining the Schröder rows")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("series-check", help="verify a generating-function identity")
    p.add_argument("--identity", choices=list(IDENTITIES), required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_series_check)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("--n must be non-negative")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"invseq: error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"invseq: invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
