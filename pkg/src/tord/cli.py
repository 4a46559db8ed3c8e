"""Command-line surface: enumeration, single queries, order materialization
with caching, exports, and the claims runbook."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import claims, kl, orders, permutations as perms, spaltenstein, tableaux, vogan


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cache-dir", default=os.environ.get("TORD_CACHE_DIR"))
    parser.add_argument("--threads", type=int, default=os.cpu_count())
    parser.add_argument("--out", default=None)
    parser.add_argument("--format", choices=("json", "csv", "dot"), default="json")


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def main(argv: list[str] | None = None) -> int:
    top = argparse.ArgumentParser(prog="tord")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list the tableaux of a level")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("rs", help="insertion/recording tableaux of a word")
    p.add_argument("--word", required=True)
    _add_common(p)

    p = sub.add_parser("taquin", help="window restriction of a tableau")
    p.add_argument("--tableau", required=True)
    p.add_argument("--window", required=True, metavar="I,J")
    _add_common(p)

    p = sub.add_parser("vogan", help="wall-crossing image of a tableau or word")
    p.add_argument("--tableau", default=None)
    p.add_argument("--word", default=None)
    p.add_argument("--pair", required=True, metavar="I,DIR")
    _add_common(p)

    p = sub.add_parser("order", help="build, compare, reduce, query, or probe orders")
    p.add_argument("action", choices=("build", "diff", "hasse", "query", "probe"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", choices=("d", "ch", "dv", "vch", "kl"), default="dv")
    p.add_argument("--order2", choices=("d", "ch", "dv", "vch", "kl"), default=None)
    p.add_argument("--pair", default=None, metavar="T|S", help="two tableaux joined by '|'")
    _add_common(p)

    p = sub.add_parser("spaltenstein", help="finite-field window grid check")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--tableau", required=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--prime", type=int, default=spaltenstein.DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("kl", help="polynomial table and cells")
    p.add_argument("action", choices=("build", "cells"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kl-budget", type=int, default=kl.KL_BUDGET)
    _add_common(p)

    p = sub.add_parser("verify-claims", help="run the whole claims catalog")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--include-heavy", action="store_true")
    p.add_argument("--prime", type=int, default=spaltenstein.DEFAULT_PRIME)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    args = top.parse_args(argv)
    return _dispatch(args)


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "enumerate":
        tabs = tableaux.enumerate_tableaux(args.n)
        if args.format == "csv":
            _emit("\n".join(tableaux.format_tableau(t) for t in tabs), args.out)
        else:
            _emit(json.dumps([tableaux.tableau_to_json(t) for t in tabs]), args.out)
        return 0

    if args.command == "rs":
        p, q = perms.rs(perms.parse_word(args.word))
        _emit(
            json.dumps({"P": tableaux.tableau_to_json(p), "Q": tableaux.tableau_to_json(q)}),
            args.out,
        )
        return 0

    if args.command == "taquin":
        i, j = (int(x) for x in args.window.split(","))
        t = tableaux.taquin_project(tableaux.parse_tableau(args.tableau), i, j)
        _emit(json.dumps(tableaux.tableau_to_json(t)), args.out)
        return 0

    if args.command == "vogan":
        pair = vogan.AdjacentPair.parse(args.pair)
        if (args.tableau is None) == (args.word is None):
            print("vogan: give exactly one of --tableau/--word", file=sys.stderr)
            return 2
        if args.tableau:
            img = vogan.t_ab_tableau(tableaux.parse_tableau(args.tableau), pair)
            _emit(json.dumps(tableaux.tableau_to_json(img)), args.out)
        else:
            img = vogan.t_ab_word(perms.parse_word(args.word), pair)
            _emit(perms.format_word(img), args.out)
        return 0

    if args.command == "order":
        return _order_command(args)

    if args.command == "spaltenstein":
        report = spaltenstein.verify_double_chain(
            tableaux.parse_tableau(args.tableau),
            trials=args.trials,
            p=args.prime,
            seed=args.seed,
        )
        _emit(json.dumps(report, indent=2, sort_keys=True), args.out)
        return 0 if report["status"] == "ok" else 1

    if args.command == "kl":
        table = _kl_cached(args.n, args.kl_budget, args.cache_dir)
        if args.action == "cells":
            cells = [sorted(perms.format_word(w) for w in c) for c in kl.left_cells(table)]
            _emit(json.dumps(sorted(cells)), args.out)
        else:
            _emit(f"kl table for level {args.n}: {len(table.polys)} polynomials", args.out)
        return 0

    if args.command == "verify-claims":
        ctx = claims.ClaimContext(
            max_n=args.max_n,
            include_heavy=args.include_heavy,
            threads=args.threads,
            cache_dir=args.cache_dir,
            prime=args.prime,
            seed=args.seed,
        )
        report = claims.run_claims(ctx)
        print(claims.format_report(report))
        if args.out:
            claims.dump_report(report, args.out)
        return 0 if claims.report_ok(report) else 1

    raise AssertionError(f"unhandled command {args.command}")


def _rel(order_id: str, n: int, args: argparse.Namespace):
    if order_id == "kl":
        return kl.cell_preorder(_kl_cached(n, kl.KL_BUDGET, args.cache_dir))
    return orders.load_or_build(order_id, n, args.cache_dir, args.threads)


def _kl_cached(n: int, budget: int, cache_dir: str | None) -> kl.KLTable:
    cache_dir = cache_dir or os.environ.get("TORD_CACHE_DIR")
    if cache_dir:
        path = os.path.join(cache_dir, f"kl_{n}.csv")
        if os.path.exists(path):
            try:
                return kl.load_csv(path)
            except Exception:
                pass
        table = kl.kl_table(n, budget=budget)
        os.makedirs(cache_dir, exist_ok=True)
        kl.save_csv(table, path)
        return table
    return kl.kl_table(n, budget=budget)


def _order_command(args: argparse.Namespace) -> int:
    if args.action == "probe":
        if args.order == "kl":
            print("order probe: pick one of d/ch/dv/vch", file=sys.stderr)
            return 2
        report = orders.insertion_probe(args.order, args.n, args.threads)
        _emit(json.dumps(report, sort_keys=True), args.out)
        return 0
    rel = _rel(args.order, args.n, args)
    if args.action == "build":
        if args.format == "dot":
            _emit(orders.to_dot(rel), args.out)
        elif args.format == "csv":
            _emit(orders.to_csv_edges(rel), args.out)
        else:
            _emit(json.dumps(orders.summary(rel), sort_keys=True), args.out)
        return 0
    if args.action == "hasse":
        covers = orders.hasse_covers(rel)
        if args.format == "dot":
            _emit(orders.to_dot(rel), args.out)
        else:
            _emit(orders.to_csv_edges(covers), args.out)
        return 0
    if args.action == "diff":
        if not args.order2:
            print("order diff: --order2 required", file=sys.stderr)
            return 2
        other = _rel(args.order2, args.n, args)
        _emit(json.dumps(orders.diff(rel, other), indent=2, sort_keys=True), args.out)
        return 0
    if args.action == "query":
        if not args.pair:
            print("order query: --pair 'T|S' required", file=sys.stderr)
            return 2
        ts, ss = args.pair.split("|")
        t, s = tableaux.parse_tableau(ts), tableaux.parse_tableau(ss)
        result = {
            "t": tableaux.format_tableau(t),
            "s": tableaux.format_tableau(s),
            "order": args.order,
            "related": rel.contains(t, s),
        }
        _emit(json.dumps(result, sort_keys=True), args.out)
        return 0
    raise AssertionError


if __name__ == "__main__":
    raise SystemExit(main())
