"""Command-line front end: counting tables, enumeration dumps, hook
polynomials, generating-function series, and the identity-verification
suite with machine-readable reports.

Exit codes: 0 all good, 1 an identity check failed, 2 usage or resource
errors.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from . import bijections, counting, hookpoly, series, trees

DEFAULT_CAP = trees.DEFAULT_CAP


def _poly_str(p):
    return "[" + ", ".join(p.to_strings()) + "]"


def _series_strs(s):
    return [str(c) for c in s.coeffs]


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class VerificationReport:
    identity: str
    grid: dict
    cells: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def add(self, params, ok, lhs=None, rhs=None):
        cell = {"params": params, "status": "pass" if ok else "fail"}
        if not ok:
            cell["witness"] = {"lhs": str(lhs), "rhs": str(rhs)}
        self.cells.append(cell)

    @property
    def passed(self):
        return all(cell["status"] == "pass" for cell in self.cells)

    def to_dict(self):
        return {
            "identity": self.identity,
            "grid": self.grid,
            "cells": self.cells,
            "passed": self.passed,
            "wall_time_s": self.wall_time_s,
        }


def _grid(args, key, default):
    """Single pinned value if the flag was given, else the default range."""
    value = getattr(args, key, None)
    if value is not None:
        return [value]
    return list(default)


def _ns(args, default_max):
    if args.n is not None:
        return [args.n]
    max_n = args.max_n if args.max_n is not None else default_max
    return list(range(max_n + 1))


# ---------------------------------------------------------------------------
# identity drivers


def _run_postnikov(args, report):
    for n in _ns(args, 7):
        lhs = hookpoly.postnikov_lhs(n, cap=args.cap)
        rhs = hookpoly.postnikov_rhs(n)
        report.add({"n": n}, lhs == rhs, lhs, rhs)


def _run_lascoux(args, report):
    """Product-form identities (binary-tree case and its generalizations),
    checked as polynomial equalities and through the operator pipeline."""
    ns = _ns(args, 8)
    enum_limit = max(n for n in ns) if args.n is not None else 5
    arities = _grid(args, "m", [2, 3, 4])
    for arity in arities:
        for n in ns:
            lhs = hookpoly.transport_mary(
                hookpoly.mary_hook_poly_closed(n, arity), n, arity
            )
            rhs = hookpoly.product_identity_rhs("mary", n, arity)
            report.add(
                {"family": "mary", "arity": arity, "n": n, "route": "closed"},
                lhs == rhs, _poly_str(lhs), _poly_str(rhs),
            )
            if n <= enum_limit:
                lhs = hookpoly.product_identity_lhs("mary", n, arity, cap=args.cap)
                ok = lhs == rhs and hookpoly.verify_operator_transport(
                    "mary", n, arity, enum_side=True, cap=args.cap
                )
                report.add(
                    {"family": "mary", "arity": arity, "n": n, "route": "enumerated"},
                    ok, _poly_str(lhs), _poly_str(rhs),
                )
    for n in ns:
        lhs = hookpoly.transport_forest(hookpoly.forest_hook_poly_closed(n), n)
        rhs = hookpoly.product_identity_rhs("forest", n)
        report.add(
            {"family": "forest", "n": n, "route": "closed"},
            lhs == rhs, _poly_str(lhs), _poly_str(rhs),
        )
        if n <= enum_limit:
            lhs = hookpoly.product_identity_lhs("forest", n, cap=args.cap)
            ok = lhs == rhs and hookpoly.verify_operator_transport(
                "forest", n, enum_side=True, cap=args.cap
            )
            report.add(
                {"family": "forest", "n": n, "route": "enumerated"},
                ok, _poly_str(lhs), _poly_str(rhs),
            )


def _run_mary_hook(args, report):
    for arity in _grid(args, "m", [1, 2, 3, 4]):
        for n in _ns(args, 6):
            enum = hookpoly.mary_hook_poly_enum(n, arity, cap=args.cap)
            recur = hookpoly.mary_hook_poly_recur(n, arity)
            closed = hookpoly.mary_hook_poly_closed(n, arity)
            report.add(
                {"arity": arity, "n": n},
                enum == recur == closed,
                f"enum={_poly_str(enum)} recur={_poly_str(recur)}",
                _poly_str(closed),
            )


def _run_forest_hook(args, report):
    for n in _ns(args, 7):
        enum = hookpoly.forest_hook_poly_enum(n, cap=args.cap)
        recur = hookpoly.forest_hook_poly_recur(n)
        closed = hookpoly.forest_hook_poly_closed(n)
        report.add(
            {"n": n},
            enum == recur == closed,
            f"enum={_poly_str(enum)} recur={_poly_str(recur)}",
            _poly_str(closed),
        )


def _run_km_count(args, report):
    for k in _grid(args, "k", [1, 2, 3]):
        for m in _grid(args, "m", [1, 2, 3]):
            for n in _ns(args, 3):
                enumerated = sum(1 for _ in trees.enumerate_km_trees(k, m, n, cap=args.cap))
                closed = counting.catalan_km(k, m, n)
                recur = counting.catalan_km_recurrence(k, m, n)
                report.add(
                    {"k": k, "m": m, "n": n},
                    enumerated == closed == recur,
                    f"enumerated={enumerated} recurrence={recur}",
                    closed,
                )


def _run_tuple_counts(args, report):
    for k in _grid(args, "k", [1, 2, 3]):
        for m in _grid(args, "m", [1, 2, 3]):
            for n in _ns(args, 2):
                ok = bijections.verify_tuple_counts(k, m, n, cap=args.cap)
                report.add({"k": k, "m": m, "n": n}, ok,
                           "tuple-count equations", "all three hold")


def _split_grid(args):
    if args.k is not None or args.m is not None or args.n is not None:
        for k in _grid(args, "k", [1, 2, 3]):
            for m in _grid(args, "m", [1, 2, 3]):
                for n in _ns(args, 2):
                    yield k, m, n
        return
    seen = set()
    for k in (1, 2, 3):
        for m in (1, 2, 3):
            for n in (0, 1, 2):
                seen.add((k, m, n))
    for k, m in ((2, 1), (1, 2)):
        for n in (0, 1, 2, 3):
            seen.add((k, m, n))
    yield from sorted(seen)


def _run_split_roundtrip(args, report):
    for k, m, n in _split_grid(args):
        ok = bijections.verify_split_roundtrip(k, m, n, cap=args.cap)
        report.add({"k": k, "m": m, "n": n}, ok,
                   "split/merge round trip", "identity on both domains")


def _run_contractions(args, report):
    for k in _grid(args, "k", [1, 2, 3]):
        for n in _ns(args, 3):
            ok = bijections.verify_contraction_k1(k, n, cap=args.cap)
            report.add({"map": "k1", "k": k, "n": n}, ok,
                       "image of contract_k1", f"all {k}-ary trees, {n + 1} internal")
    for m in _grid(args, "m", [1, 2, 3]):
        for n in _ns(args, 3):
            ok = bijections.verify_contraction_1m(m, n, cap=args.cap)
            report.add({"map": "1m", "m": m, "n": n}, ok,
                       "image of contract_1m", f"all {m}-ary trees, {n} internal")


def _run_special_values(args, report):
    mary_names = ("prod-mi-plus-1", "mary-x-eq-m")
    forest_names = ("forest-double-factorial", "forest-x-eq-2")
    for name in mary_names:
        for m in _grid(args, "m", [1, 2, 3]):
            for n in _ns(args, 6):
                lhs = hookpoly.special_value_lhs(name, m, n, cap=args.cap)
                rhs = counting.special_rhs(name, m, n)
                ok = lhs == rhs and hookpoly.special_value_poly_route(name, m, n) == rhs
                report.add({"name": name, "m": m, "n": n}, ok, lhs, rhs)
    for name in forest_names:
        for n in _ns(args, 7):
            lhs = hookpoly.special_value_lhs(name, 2, n, cap=args.cap)
            rhs = counting.special_rhs(name, 2, n)
            ok = lhs == rhs and hookpoly.special_value_poly_route(name, 2, n) == rhs
            report.add({"name": name, "n": n}, ok, lhs, rhs)


def _run_ternary_forest(args, report):
    for n in _ns(args, 6):
        ternary = hookpoly.mary_hook_poly_closed(n, 3)
        forest = hookpoly.forest_hook_poly_closed(n)
        ok = hookpoly.verify_ternary_forest_equality(n)
        report.add({"n": n}, ok, _poly_str(ternary), _poly_str(forest))


def _run_gf_coefficients(args, report):
    order = args.order if args.order is not None else 20
    for k in _grid(args, "k", [1, 2, 3]):
        for m in _grid(args, "m", [1, 2, 3]):
            fixed_point = series.km_tree_series(k, m, order)
            lagrange = series.km_tree_series_lagrange(k, m, order)
            counts_ok = series.series_matches_counts(k, m, order)
            report.add(
                {"k": k, "m": m, "order": order},
                counts_ok and fixed_point == lagrange,
                ", ".join(_series_strs(fixed_point)),
                ", ".join(str(counting.catalan_km(k, m, n)) for n in range(order + 1)),
            )


def _run_k2_ode(args, report):
    order = args.order if args.order is not None else 20
    for k in _grid(args, "k", [1, 2, 3, 4]):
        ok = series.verify_k2_ode(k, order)
        report.add({"k": k, "order": order}, ok,
                   "series differential identity", "holds with alpha=1")


IDENTITY_RUNNERS = {
    "postnikov": _run_postnikov,
    "lascoux": _run_lascoux,
    "mary-hook": _run_mary_hook,
    "forest-hook": _run_forest_hook,
    "km-count": _run_km_count,
    "tuple-counts": _run_tuple_counts,
    "split-roundtrip": _run_split_roundtrip,
    "contractions": _run_contractions,
    "special-values": _run_special_values,
    "ternary-equals-forest": _run_ternary_forest,
    "gf-coefficients": _run_gf_coefficients,
    "k2-ode": _run_k2_ode,
}


def _run_identity(name, args):
    grid = {
        key: getattr(args, key)
        for key in ("k", "m", "n", "max_n", "order")
        if getattr(args, key, None) is not None
    }
    report = VerificationReport(identity=name, grid=grid)
    start = time.perf_counter()
    IDENTITY_RUNNERS[name](args, report)
    report.wall_time_s = round(time.perf_counter() - start, 6)
    return report


# ---------------------------------------------------------------------------
# commands


def _parse_n_spec(text):
    """Accept "3" or a range "0..3"."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _cmd_count(args, parser):
    ns = _parse_n_spec(args.n)
    if args.family == "catalan":
        rows = [(n, counting.catalan(n)) for n in ns]
        params = {}
    elif args.family == "mary":
        if args.m is None:
            parser.error("count --family mary requires --m")
        rows = [(n, counting.catalan_m(args.m, n)) for n in ns]
        params = {"m": args.m}
    else:
        if args.k is None or args.m is None:
            parser.error("count --family km requires --k and --m")
        rows = [(n, counting.catalan_km(args.k, args.m, n)) for n in ns]
        params = {"k": args.k, "m": args.m}

    if args.format == "json":
        print(json.dumps({
            "family": args.family,
            **params,
            "rows": [{"n": n, "count": c} for n, c in rows],
        }))
    else:
        print("n,count")
        for n, c in rows:
            print(f"{n},{c}")
    return 0


def _cmd_enumerate(args, parser):
    if args.family == "mary":
        if args.m is None:
            parser.error("enumerate --family mary requires --m")
        items = list(trees.enumerate_mary_trees(args.m, args.n, cap=args.cap))
        lines = [
            t.to_paren() if args.format != "json" else json.dumps(t.to_nested())
            for t in items
        ]
    elif args.family == "km":
        if args.k is None or args.m is None:
            parser.error("enumerate --family km requires --k and --m")
        items = list(trees.enumerate_km_trees(args.k, args.m, args.n, cap=args.cap))
        lines = [
            t.to_paren() if args.format != "json" else json.dumps(t.to_nested())
            for t in items
        ]
    else:
        items = list(trees.enumerate_plane_forests(args.n, cap=args.cap))
        if args.format != "json":
            lines = [json.dumps([t.to_paren() for t in f]) for f in items]
        else:
            lines = [json.dumps([t.to_nested() for t in f]) for f in items]
    for line in lines:
        print(line)
    print(f"count {len(items)}")
    return 0


def _cmd_hookpoly(args, parser):
    method = args.method or "closed"
    if args.family == "mary":
        if args.m is None:
            parser.error("hookpoly --family mary requires --m (the arity)")
        if method == "enum":
            poly = hookpoly.mary_hook_poly_enum(args.n, args.m, cap=args.cap)
        elif method == "recur":
            poly = hookpoly.mary_hook_poly_recur(args.n, args.m)
        else:
            poly = hookpoly.mary_hook_poly_closed(args.n, args.m)
    else:
        if method == "enum":
            poly = hookpoly.forest_hook_poly_enum(args.n, cap=args.cap)
        elif method == "recur":
            poly = hookpoly.forest_hook_poly_recur(args.n)
        else:
            poly = hookpoly.forest_hook_poly_closed(args.n)
    if args.format == "json":
        print(json.dumps(poly.to_strings()))
    else:
        print(_poly_str(poly))
    return 0


def _cmd_verify(args, parser):
    names = (
        list(IDENTITY_RUNNERS) if args.identity == "all" else [args.identity]
    )
    reports = [_run_identity(name, args) for name in names]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        for report in reports:
            for cell in report.cells:
                params = " ".join(f"{k}={v}" for k, v in cell["params"].items())
                line = f"  {cell['status']:4s} {params}"
                if cell["status"] == "fail":
                    w = cell["witness"]
                    line += f"  lhs={w['lhs']} rhs={w['rhs']}"
                print(line)
            passed = sum(1 for c in report.cells if c["status"] == "pass")
            verdict = "PASS" if report.passed else "FAIL"
            print(
                f"identity {report.identity}: {verdict} "
                f"({passed}/{len(report.cells)} cells, {report.wall_time_s}s)"
            )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_series(args, parser):
    result = series.km_tree_series(args.k, args.m, args.order)
    if args.format == "json":
        print(json.dumps(_series_strs(result)))
    else:
        print(", ".join(_series_strs(result)))
    return 0


def _cmd_ode(args, parser):
    ok = series.verify_k2_ode(args.k, args.order)
    print("pass" if ok else "fail")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kmcatalan",
        description=(
            "Exact counting, enumeration, and identity verification for "
            "plane trees, (k,m)-ary trees, and hook length polynomials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, k=False, m=False, n=False, fmt=None, cap=False):
        if k:
            p.add_argument("--k", type=int)
        if m:
            p.add_argument("--m", type=int)
        if n:
            p.add_argument("--n", type=int)
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                           help="enumeration size guard (default 10^6)")

    p = sub.add_parser("count", help="closed-form counting tables")
    p.add_argument("--family", choices=("catalan", "mary", "km"), required=True)
    add_common(p, k=True, m=True, fmt=("csv", "json", "human"))
    p.add_argument("--n", required=True, help='order, or a range like "0..10"')
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="dump every structure, one per line")
    p.add_argument("--family", choices=("mary", "km", "forest"), required=True)
    add_common(p, k=True, m=True, fmt=("paren", "json"), cap=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("hookpoly", help="hook length polynomial coefficients")
    p.add_argument("--family", choices=("mary", "forest"), required=True)
    add_common(p, m=True, fmt=("human", "json"), cap=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("enum", "recur", "closed"), default="closed")
    p.set_defaults(func=_cmd_hookpoly)

    p = sub.add_parser("verify", help="run an identity suite over a grid")
    p.add_argument("--identity", required=True,
                   choices=sorted(IDENTITY_RUNNERS) + ["all"])
    add_common(p, k=True, m=True, n=True, fmt=("human", "json"), cap=True)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--order", type=int)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("series", help="tree generating function coefficients")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("ode", help="check the (k,2) series differential identity")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--order", type=int, default=20)
    p.set_defaults(func=_cmd_ode)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except trees.EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
