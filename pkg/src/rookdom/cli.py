"""Command-line interface.

    rookdom gamma N M [--require-exact]
    rookdom solve N M [--method margin|brute|backtrack]
    rookdom construct N M [--out FILE]
    rookdom verify FILE [--k K]
    rookdom table MAX_N MAX_M
    rookdom bounds N M [--verbose]

Exit status: 0 success, 1 invalid certificate or undecided value, 2 usage or
domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .cache import CacheError, ResultsCache
from .constructions import best_known_with_provenance
from .core import BoardDims, DomainError, from_json, render_ascii, to_json, verify
from .formulas import closed_gamma
from .bounds import InconsistentBounds, propagate
from .solver import BoardTooLarge, solve

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering --------------------------------------------------------------


def render(fmt: str, text: str, data) -> str:
    """Single output path for every subcommand."""
    if fmt == "json":
        return json.dumps(data, indent=1)
    if fmt == "csv":
        rows = data if isinstance(data, list) else [data]
        buf = io.StringIO()
        fields = list(rows[0].keys()) if rows else []
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    return text


def _dims(n: int, m: int) -> BoardDims:
    try:
        return BoardDims(n, m)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _seeds(cache: ResultsCache | None):
    return cache.exact_results() if cache is not None else []


# -- subcommands ------------------------------------------------------------


def cmd_gamma(args, cache: ResultsCache) -> tuple[int, str, dict]:
    dims = _dims(args.n, args.m).normalized()
    n, m = dims.n, dims.m
    base = {"n": args.n, "m": args.m}
    if not args.require_exact:
        res = closed_gamma(n, m)
        if res:
            d = {**base, "value": res.value, "lower": res.value, "upper": res.value,
                 "source": f"formula:{res.provenance.value}"}
            return EXIT_OK, f"{res.value} (formula: {res.provenance.value})", d
    entry = cache.get(n, m)
    if entry is not None and entry.exact:
        d = {**base, "value": entry.value, "lower": entry.lower, "upper": entry.upper,
             "source": f"cache:{entry.method}"}
        return EXIT_OK, f"{entry.value} (cache: {entry.method})", d
    if args.require_exact:
        res = solve(n, m, "margin", budget_seconds=args.budget_seconds)
        cache.put(res)
        cache.save()
        if res.exact:
            d = {**base, "value": res.value, "lower": res.value, "upper": res.value,
                 "source": f"solver:{res.method.value}"}
            return EXIT_OK, f"{res.value} (solver: {res.method.value})", d
        d = {**base, "value": None, "lower": res.lower, "upper": res.upper, "source": "solver:budget"}
        return EXIT_FAIL, f"[{res.lower}, {res.upper}] (undecided at budget)", d
    rec = propagate(n, m, _seeds(cache))[(n, m)]
    tags = ";".join(r.value for r in rec.provenance)
    if rec.exact:
        d = {**base, "value": rec.lower, "lower": rec.lower, "upper": rec.upper, "source": f"bounds:{tags}"}
        return EXIT_OK, f"{rec.lower} (bounds: {tags})", d
    d = {**base, "value": None, "lower": rec.lower, "upper": rec.upper, "source": f"bounds:{tags}"}
    return EXIT_FAIL, f"[{rec.lower}, {rec.upper}] (bounds: {tags}; use --require-exact to solve)", d


def cmd_solve(args, cache: ResultsCache) -> tuple[int, str, dict]:
    dims = _dims(args.n, args.m).normalized()
    opts = {"budget_seconds": args.budget_seconds} if args.method == "margin" else {}
    try:
        res = solve(dims.n, dims.m, args.method, **opts)
    except BoardTooLarge as exc:
        raise UsageError(str(exc)) from exc
    cache.put(res)
    cache.save()
    cert = res.certificate
    d = {"n": dims.n, "m": dims.m, "value": res.value, "lower": res.lower, "upper": res.upper,
         "method": res.method.value, "cells": [list(c) for c in cert.sorted_cells()]}
    if not res.exact:
        text = f"{dims}: undecided at budget, gamma in [{res.lower}, {res.upper}]"
        return EXIT_FAIL, text, d
    text = f"{dims}: {res.value} ({res.method.value})\n{render_ascii(cert)}"
    return EXIT_OK, text, d


def cmd_construct(args, cache: ResultsCache) -> tuple[int, str, dict]:
    _dims(args.n, args.m)
    built = best_known_with_provenance(args.n, args.m)
    cfg = built.config
    payload = to_json(cfg, 2, provenance=built.provenance)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    d = json.loads(payload)
    text = f"{cfg.dims}: {len(cfg)} rooks ({built.provenance})\n{render_ascii(cfg)}"
    return EXIT_OK, text, d


def cmd_verify(args, cache: ResultsCache) -> tuple[int, str, dict]:
    try:
        with open(args.file) as fh:
            cfg, k = from_json(fh.read())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read certificate {args.file}: {exc}") from exc
    if args.k is not None:
        k = args.k
    if k < 1:
        raise UsageError("k must be at least 1")
    bad = verify(cfg, k)
    d = {"n": cfg.dims.n, "m": cfg.dims.m, "k": k, "rooks": len(cfg), "valid": not bad,
         "violations": [[v.cell[0], v.cell[1], v.degree] for v in bad]}
    if not bad:
        return EXIT_OK, f"valid total {k}-dominating set, {len(cfg)} rooks", d
    lines = [f"invalid: {len(bad)} cells see fewer than {k} rooks"]
    lines += [f"  ({v.cell[0]},{v.cell[1]}) sees {v.degree}" for v in bad]
    return EXIT_FAIL, "\n".join(lines), d


def _table(args, cache):
    if args.max_n < 2 or args.max_m < args.max_n:
        raise UsageError(f"need 2 <= MAX_N <= MAX_M, got {args.max_n} {args.max_m}")
    return propagate(args.max_n, args.max_m, _seeds(cache))


def cmd_table(args, cache: ResultsCache) -> tuple[int, str, list]:
    t = _table(args, cache)
    rows = [{"n": n, "m": m, "lower": r.lower, "upper": r.upper, "exact": r.exact,
             "provenance": ";".join(p.value for p in r.provenance)} for n, m, r in t.rows()]
    if args.format == "csv":
        # booleans lower-cased for stable machine output
        rows = [{**r, "exact": str(r["exact"]).lower()} for r in rows]
    return EXIT_OK, t.to_ascii(), rows


def cmd_bounds(args, cache: ResultsCache) -> tuple[int, str, dict]:
    dims = _dims(args.n, args.m).normalized()
    t = propagate(dims.n, dims.m, _seeds(cache), verbose=args.verbose)
    rec = t[(dims.n, dims.m)]
    d = {"n": dims.n, "m": dims.m, "lower": rec.lower, "upper": rec.upper, "exact": rec.exact,
         "lower_rule": rec.lower_rule.value, "upper_rule": rec.upper_rule.value}
    text = f"{dims}: [{rec.lower}, {rec.upper}]  lower by {rec.lower_rule.value}, upper by {rec.upper_rule.value}"
    if args.verbose:
        d["history"] = [list(h[:3]) + [None if h[3] is None else list(h[3]) if isinstance(h[3], tuple) else h[3]]
                        for h in rec.history]
        text += "\n" + "\n".join(f"  {side} -> {val} by {rule} from {src}" for side, val, rule, src in rec.history)
    return EXIT_OK, text, d


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("ascii", "json", "csv"), default="ascii")
    common.add_argument("--cache", default=None, help="results cache file (default: $ROOKDOM_CACHE or ~/.cache)")
    common.add_argument("--budget-seconds", type=float, default=None, dest="budget_seconds")

    p = argparse.ArgumentParser(prog="rookdom", description="Total 2-domination of rook's graphs K_n x K_m.")
    p.add_argument("-v", "--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", parents=[common], help="value or interval for one board")
    g.add_argument("n", type=int)
    g.add_argument("m", type=int)
    g.add_argument("--require-exact", action="store_true", dest="require_exact")
    g.set_defaults(func=cmd_gamma)

    s = sub.add_parser("solve", parents=[common], help="exact solve with a certificate")
    s.add_argument("n", type=int)
    s.add_argument("m", type=int)
    s.add_argument("--method", choices=("margin", "brute", "backtrack"), default="margin")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("construct", parents=[common], help="best known explicit placement")
    c.add_argument("n", type=int)
    c.add_argument("m", type=int)
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a certificate file")
    v.add_argument("file")
    v.add_argument("--k", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="propagated bounds table")
    t.add_argument("max_n", type=int)
    t.add_argument("max_m", type=int)
    t.set_defaults(func=cmd_table)

    b = sub.add_parser("bounds", parents=[common], help="interval and rules for one board")
    b.add_argument("n", type=int)
    b.add_argument("m", type=int)
    b.add_argument("--verbose", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        cache = ResultsCache(args.cache)
        code, text, data = args.func(args, cache)
    except (UsageError, DomainError, CacheError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistentBounds as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(render(args.format, text, data))
    return code


if __name__ == "__main__":
    sys.exit(main())
