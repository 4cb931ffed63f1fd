"""Command-line entry point wiring all the pieces together.

Subcommands: validate | delta | invdeg | screen | oracle | reproduce.
All output is deterministic: identical inputs give byte-identical JSON
regardless of parallelism settings.  Exit codes: 0 success (and, for
screen, "nothing survived"), 2 screening survivors found, 1 error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import comb
from pathlib import Path

from . import chartab, invdeg, screen, sympow
from .oracle import (
    CapExceeded,
    class_function_check,
    enumerate_group,
    invariant_dimensions,
    matrix_from_json,
    perm_from_cycles,
)


def data_dir() -> Path:
    """Shipped fixture directory, overridable via REPSCREEN_DATA."""
    env = os.environ.get("REPSCREEN_DATA")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


def _print_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _load_table_arg(path: str) -> chartab.CharacterTable:
    return chartab.load(path)


def _pick_character(table: chartab.CharacterTable, spec_str: str):
    """Character selector: irreducible name, index, or 'dim=<k>'."""
    if spec_str.startswith("dim="):
        want = int(spec_str[4:])
        hits = [i for i, x in enumerate(table.irreducibles) if x.degree == want]
        if not hits:
            raise SystemExit(f"no irreducible of dimension {want}")
        return table.class_function(hits[0])
    try:
        return table.class_function(int(spec_str))
    except ValueError:
        return table.class_function(table.irreducible_index(spec_str))


# ---------------------------------------------------------------------------
# subcommands

def cmd_validate(args) -> int:
    try:
        table = _load_table_arg(args.table)
    except chartab.TableFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = chartab.validate(table, deep=args.deep)
    print(report)
    if report.ok:
        print(f"{table.group_name}: all checks passed "
              f"({table.n_classes} classes, order {table.order})")
        return 0
    print(f"{table.group_name}: {len(report.failures())} check(s) failed")
    return 1


def cmd_delta(args) -> int:
    if args.delta:
        delta = sympow.load_delta(args.delta)
    else:
        table = _load_table_arg(args.table)
        chi = _pick_character(table, args.char)
        delta = sympow.delta_table(table, chi, args.kmax)
    p = delta.dim - 1
    for k in sorted(delta.dims):
        dims = delta.dims[k]
        _print_json({
            "k": k,
            "dims": dims,
            "sum": sum(dims),
            "binom": comb(p + k, k),
        })
    print()
    for k in sorted(delta.dims):
        print(f"Delta_{k:<2} = {delta.bracket(k)}")
    return 0


def cmd_invdeg(args) -> int:
    table = _load_table_arg(args.table)
    excluded = frozenset(int(d) for d in args.exclude_dims.split(",") if d) \
        if args.exclude_dims else frozenset()
    reports = invdeg.scan(
        table, k_max=args.kmax,
        faithful_only=args.faithful_only,
        excluded_dims=excluded,
    )
    _print_json([
        {
            "name": r.name, "dim": r.dim, "d": r.d,
            "mu": None if r.mu is None else f"{r.mu.numerator}/{r.mu.denominator}",
            "faithful": r.faithful, "flagged": r.flagged,
        }
        for r in reports
    ])
    print()
    print(invdeg.format_table(table.group_name, reports))
    return 0


def cmd_screen(args) -> int:
    if bool(args.sigma) == bool(args.table):
        print("error: pass exactly one of --sigma or --table", file=sys.stderr)
        return 1
    only_n = None if args.n == "all" else int(args.n)
    try:
        if args.sigma:
            delta = sympow.load_delta(args.sigma)
            if args.kmax < delta.k_max:
                delta = sympow.DeltaTable(
                    None, delta.dim, args.kmax,
                    {k: v for k, v in delta.dims.items() if k <= args.kmax},
                )
            elif args.kmax > delta.k_max:
                print(
                    f"warning: fixture provides degrees up to {delta.k_max}; "
                    f"membership checks for {delta.k_max + 1}..{args.kmax} "
                    "are skipped, not assumed",
                    file=sys.stderr,
                )
            report = screen.screen_delta(
                delta, mode=args.mode, extended=args.extended,
                jobs=args.jobs, only_n=only_n, pin=not args.no_pin,
                label=Path(args.sigma).stem,
            )
        else:
            table = _load_table_arg(args.table)
            chi = _pick_character(table, args.char)
            report = screen.screen_rep(
                table, chi, k_max=args.kmax, mode=args.mode,
                extended=args.extended, jobs=args.jobs,
                pin=not args.no_pin,
            )
            if only_n is not None:
                report.entries = [e for e in report.entries if e.n == only_n]
    except (ValueError, chartab.TableFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for entry in report.entries:
        _print_json(entry.to_json())
    survivors = sum(len(e.candidates) for e in report.entries)
    all_excluded = all(e.excluded for e in report.entries)
    print(f"summary: {report.label} dim={report.dim} mode={report.mode} "
          f"n={'all' if only_n is None else only_n}: "
          + ("no candidates" if all_excluded
             else f"{survivors} candidate(s) / not excluded"))
    return 0 if all_excluded else 2


def cmd_oracle(args) -> int:
    with open(args.gens) as fh:
        raw = json.load(fh)
    if not isinstance(raw, list) or not raw:
        print("error: generators file must be a non-empty JSON list", file=sys.stderr)
        return 1
    if isinstance(raw[0], str):
        n_pts = max(
            (max((int(t) for t in part.replace("(", " ").replace(")", " ")
                  .replace(",", " ").split()), default=1) for part in raw),
            default=1,
        )
        gens = [perm_from_cycles(s, n_pts) for s in raw]
    else:
        gens = [matrix_from_json(m) for m in raw]
    try:
        group = enumerate_group(gens)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.action == "enumerate":
        _print_json({
            "order": group.order,
            "classes": [
                {"size": len(m), "order": o}
                for m, o in sorted(
                    zip(group.class_members, group.class_orders),
                    key=lambda t: (t[1], len(t[0])),
                )
            ],
        })
        return 0
    if args.action == "invdim":
        if group.kind != "matrix":
            print("error: invdim needs matrix generators", file=sys.stderr)
            return 1
        dims = invariant_dimensions(group, args.k)
        _print_json({"invariant_dims": dims})
        return 0
    if args.action == "crosscheck":
        table = _load_table_arg(args.table)
        chi = _pick_character(table, args.char)
        pipeline = sympow.sym_power_character(table, chi, args.k)
        rep = class_function_check(group, table, pipeline, args.k)
        print(rep)
        return 0 if rep.ok else 1
    raise AssertionError(args.action)


def cmd_reproduce(args) -> int:
    fixture = data_dir() / f"{args.fixture}_delta.json"
    if not fixture.exists():
        print(f"error: no delta fixture {fixture}", file=sys.stderr)
        return 1
    delta = sympow.load_delta(fixture)
    p = delta.dim - 1
    checks: list[tuple[str, bool, str]] = []

    ok = all(
        sum(delta.dims[k]) == comb(p + k, k) for k in range(1, delta.k_max + 1)
    )
    checks.append((
        "splitting-consistency",
        ok,
        "sum Delta_k = C(%d+k,k) for k=1..%d" % (p, delta.k_max),
    ))

    ok = all(len(delta.dims[k]) == 1 for k in range(2, min(5, delta.k_max) + 1))
    checks.append((
        "symmetric-powers-irreducible",
        ok,
        "Delta_k a single summand for 2 <= k <= 5",
    ))

    low = screen.hypersurface_degree(delta, min(p, delta.k_max))
    has12 = delta.k_max >= 12 and 1 in delta.dims[12]
    checks.append((
        "no-low-degree-semi-invariants",
        low is None and has12,
        f"no 1-dim summand for m <= {p}, first at m = 12",
    ))

    lit = [screen.search(screen.sigma_from_delta(delta), n, mode="literal",
                         jobs=args.jobs)
           for n in range(1, min(8, p - 2) + 1)]
    ok = all(r.empty for r in lit) and all(
        r.enumerated == r.search_space for r in lit
    )
    checks.append((
        "degree-le-8-search",
        ok,
        "literal search empty for n = 1..8 "
        f"({sum(r.enumerated for r in lit)} vectors)",
    ))

    bound = screen.derive_degree_bound(9, p) if p >= 11 else None
    checks.append((
        "degree-bound-43",
        bound == 43,
        f"largest admissible leading term d at n = 9: {bound}",
    ))

    res9 = screen.search(screen.sigma_from_delta(delta), 9, mode="strict",
                         jobs=args.jobs) if p >= 11 else None
    checks.append((
        "degree-9-search",
        res9 is not None and res9.empty and res9.d_bounds == (1, 43),
        f"strict search empty over {res9.enumerated if res9 else 0} vectors, "
        f"d in {res9.d_bounds if res9 else None}",
    ))

    full = screen.screen_delta(delta, mode="strict", jobs=args.jobs,
                               label=args.fixture)
    checks.append((
        "screening-verdict",
        full.passed,
        "every dimension 0 <= n <= %d excluded" % (p - 1),
    ))

    width = max(len(name) for name, _, _ in checks)
    all_ok = True
    for name, ok, detail in checks:
        all_ok &= ok
        print(f"{name:<{width}}  {'pass' if ok else 'FAIL'}  {detail}")
    print("verdict:", "no admissible invariant subvariety found"
          if all_ok else "NOT reproduced")
    return 0 if all_ok else 2


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="repscreen",
        description="Exact character-theoretic screening toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a character-table file")
    p.add_argument("table")
    p.add_argument("--deep", action="store_true",
                   help="also check column orthogonality")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("delta", help="symmetric-power dimension multisets")
    p.add_argument("--table")
    p.add_argument("--char", default="dim=12",
                   help="irreducible name, index, or dim=<k>")
    p.add_argument("--delta", help="pretty-print an existing delta fixture")
    p.add_argument("--kmax", type=int, default=12)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("invdeg", help="minimal semi-invariant degree scan")
    p.add_argument("--table", required=True)
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--faithful-only", action="store_true")
    p.add_argument("--exclude-dims", default="",
                   help="comma-separated dimensions to skip")
    p.set_defaults(func=cmd_invdeg)

    p = sub.add_parser("screen", help="Hilbert-function screening search")
    p.add_argument("--sigma", help="delta fixture path (bypasses sympow)")
    p.add_argument("--table", help="character table path (full pipeline)")
    p.add_argument("--char", default="dim=12")
    p.add_argument("--mode", choices=("literal", "strict"), default="strict")
    p.add_argument("--n", default="all", help="polynomial degree or 'all'")
    p.add_argument("--kmax", type=int, default=12)
    p.add_argument("--extended", action="store_true",
                   help="apply the curve bounds at every degree, not just 9")
    p.add_argument("--no-pin", action="store_true",
                   help="do not force h_m = dim Sym^m at degrees where the "
                        "admissible set is {0, full}; reads the membership "
                        "condition word for word")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("oracle", help="brute-force checks from explicit generators")
    p.add_argument("action", choices=("enumerate", "invdim", "crosscheck"))
    p.add_argument("--gens", required=True,
                   help="JSON list of cycle strings or matrices")
    p.add_argument("--k", type=int, default=8)
    p.add_argument("--table", help="character table (crosscheck)")
    p.add_argument("--char", default="dim=12")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("reproduce",
                       help="re-run the headline screening pipeline on shipped data")
    p.add_argument("--fixture", default="suz12")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_reproduce)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except chartab.TableFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
