"""Command-line front end.

Commands: gen, type, wgen, zindex, classes, irreducibles, oracle, verify,
selftest.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle as oracle_mod
from .classes import enumerate_classes
from .field import field_make
from .linalg import BudgetExceededError
from .parser import ParseError, parse
from .poly import monic_irreducibles
from .series import PowerSeries
from .species import (UnsupportedOperationError, cycle_index, gen_series,
                      type_series, weighted_gen_series)


def _series_output(series: PowerSeries, q: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"q": q, "order": series.order, "series": series.to_json()},
                          indent=2)
    if fmt == "csv":
        lines = ["n,coeff"] + [f"{row['n']},{row['coeff']}" for row in series.to_json()]
        return "\n".join(lines)
    return str(series)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, default=2, help="field characteristic base (default 2)")
    p.add_argument("--ext-k", type=int, default=1, help="extension degree k, q = p^k (default 1)")
    p.add_argument("--order", type=int, default=8, help="series truncation order (default 8)")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--budget", type=int, default=None,
                   help="enumeration budget override for oracle-backed paths")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qspecies",
                                 description="Exact series of q-species over F_q.")
    sub = ap.add_subparsers(dest="command", required=True)

    for cmd, help_text in [("gen", "generating series of EXPR"),
                           ("type", "type generating series of EXPR"),
                           ("wgen", "weighted generating series of EXPR"),
                           ("zindex", "cycle index series of EXPR")]:
        p = sub.add_parser(cmd, help=help_text)
        p.add_argument("expr")
        _add_common(p)

    p = sub.add_parser("classes", help="conjugacy class table of Aut(E_n)")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=["aut", "end"], default="aut")
    _add_common(p)

    p = sub.add_parser("irreducibles", help="monic irreducibles of degree d")
    p.add_argument("d", type=int)
    p.add_argument("--exclude-z", action="store_true")
    _add_common(p)

    p = sub.add_parser("oracle", help="exhaustive-enumeration ground truth")
    p.add_argument("what", choices=["count", "fix", "orbits", "zindex"])
    p.add_argument("expr")
    p.add_argument("n", type=int)
    _add_common(p)

    p = sub.add_parser("verify", help="oracle-vs-closed-form identity suite")
    p.add_argument("--max-dim", type=int, default=3)
    _add_common(p)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    _add_common(p)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, UnsupportedOperationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    field = field_make(args.q, args.ext_k)
    fmt = getattr(args, "format", "text")
    budget_kw = {}
    if getattr(args, "budget", None):
        budget_kw["budget"] = args.budget

    if args.command in ("gen", "type", "wgen"):
        e = parse(args.expr)
        fn = {"gen": gen_series, "type": type_series, "wgen": weighted_gen_series}[args.command]
        series = fn(e, field, args.order)
        print(_series_output(series, field.q, fmt))
        return 0

    if args.command == "zindex":
        e = parse(args.expr)
        z = cycle_index(e, field, args.order)
        if fmt == "json":
            print(json.dumps({"q": field.q, "order": z.order, "terms": z.to_json()},
                             indent=2))
        else:
            print("\n".join(z.render_lines()) or "0")
        return 0

    if args.command == "classes":
        classes = enumerate_classes(field, args.n, args.kind)
        rows = [{"invariant": str(c.invariant),
                 "centralizer_order": c.centralizer_order,
                 "class_size": c.class_size} for c in classes]
        if fmt == "json":
            print(json.dumps({"q": field.q, "n": args.n, "kind": args.kind,
                              "classes": rows}, indent=2))
        else:
            for r in rows:
                print(f"{r['invariant']}  centralizer={r['centralizer_order']}"
                      f"  size={r['class_size']}")
        return 0

    if args.command == "irreducibles":
        polys = monic_irreducibles(field, args.d, exclude_z=args.exclude_z)
        if fmt == "json":
            print(json.dumps({"q": field.q, "d": args.d,
                              "polynomials": [str(f) for f in polys]}, indent=2))
        else:
            for f in polys:
                print(f)
        return 0

    if args.command == "oracle":
        e = parse(args.expr)
        if args.what == "count":
            rows = [{"n": n, "count": oracle_mod.structure_count_bf(e, field, n, **budget_kw)}
                    for n in range(args.n + 1)]
            _table(rows, ["n", "count"], fmt)
        elif args.what == "orbits":
            rows = [{"n": n, "orbits": oracle_mod.orbit_count_bf(e, field, n, **budget_kw)}
                    for n in range(args.n + 1)]
            _table(rows, ["n", "orbits"], fmt)
        elif args.what == "fix":
            rows = []
            for c in enumerate_classes(field, args.n, "aut"):
                fix = oracle_mod.fix_count_bf(e, field, args.n,
                                              c.representative(field), **budget_kw)
                rows.append({"class": str(c.invariant), "fix": fix})
            _table(rows, ["class", "fix"], fmt)
        else:  # zindex
            z = oracle_mod.zindex_bf(e, field, args.n, **budget_kw)
            if fmt == "json":
                print(json.dumps({"q": field.q, "order": z.order, "terms": z.to_json()},
                                 indent=2))
            else:
                print("\n".join(z.render_lines()) or "0")
        return 0

    if args.command == "verify":
        from .verify import run_checks
        results = run_checks(args.q, args.ext_k, args.max_dim)
        report = [r.to_json() for r in results]
        if fmt == "json":
            print(json.dumps(report, indent=2))
        else:
            for r in results:
                print(f"[{r.status.upper():4}] {r.identity}"
                      + (f"  ({r.detail})" if r.detail else ""))
        return 0 if all(r.ok for r in results) else 1

    if args.command == "selftest":
        from .acceptance import run_acceptance
        results = run_acceptance()
        if fmt == "json":
            print(json.dumps([r.to_json() for r in results], indent=2))
        else:
            for r in results:
                print(f"[{r.status.upper():4}] {r.identity}"
                      + (f"  ({r.detail})" if r.detail else ""))
        return 0 if all(r.ok for r in results) else 1

    raise AssertionError("unreachable")


def _table(rows: list[dict], cols: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(rows, indent=2))
    elif fmt == "csv":
        print(",".join(cols))
        for r in rows:
            print(",".join(str(r[c]) for c in cols))
    else:
        for r in rows:
            print("  ".join(f"{c}={r[c]}" for c in cols))


if __name__ == "__main__":
    sys.exit(main())
