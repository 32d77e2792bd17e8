"""``fusionkit`` command line."""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from typing import Sequence

from .abelian_quotient import build_quotient
from .checks import DEFAULT_ROSTER, CheckConfig, run_checks
from .errors import FusionkitError, InvalidInput
from .fusion import (
    RankTable,
    dim_perm_quotient,
    dim_sgn_quotient,
    level_weights,
    verlinde_dimension,
)
from .ktwist import SPACES, CohomologyProfile, builtin_profile, e2_table, ktable
from .root_system import LieType, RootSystem, build_root_system
from .weyl_group import WeylGroup, classical_order, generate


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--weyl-cap", type=_positive_int, default=None,
                        help="maximum Weyl group size (default: $FUSIONKIT_WEYL_CAP or 1200000)")
    common.add_argument("--threads", type=_positive_int, default=None,
                        help="worker threads for sums over W (results are unaffected)")

    p = argparse.ArgumentParser(prog="fusionkit", description="Exact root-system, Verlinde and twisted K-theory rank computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.add_argument("type", help="Lie type such as A3, C2, G2 (case-insensitive)")
        return sp

    typed("rootsystem", "Cartan matrix, roots, marks, comarks, d, h, h_dual")
    typed("weyl", "Weyl group order and length distribution")
    sp = typed("verlinde", "Verlinde dimension and basis labels M_k")
    sp.add_argument("--level", "-k", type=_nonneg_int, required=True)
    sp = typed("twisted-dim", "dimensions of the signed and unsigned W-invariants of Q[Q_n]")
    sp.add_argument("--n", type=int, required=True)
    sp = typed("ktable", "twisted K-theory rank table for a built-in space")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--space", choices=SPACES, required=True)
    sp.add_argument("--m", type=int, default=None, help="number of commuting elements (commuting space)")
    sp = typed("e2", "E2-term ranks for a built-in space or a custom cohomology profile")
    sp.add_argument("--n", type=int, required=True)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--space", choices=SPACES)
    grp.add_argument("--profile", help='comma list of degree:character, e.g. "0:trivial,2:sign"')
    sp.add_argument("--m", type=int, default=None)

    sp = sub.add_parser("check", parents=[common], help="run the invariant suite")
    sp.add_argument("--types", default=",".join(DEFAULT_ROSTER), help="comma-separated roster")
    sp.add_argument("--max-offset", type=_nonneg_int, default=4, help="levels n = 1 .. h_dual + offset")
    sp.add_argument("--oracle-limit", type=_nonneg_int, default=5000,
                    help="largest |Q_n| for enumeration oracles; 0 skips them")
    sp.add_argument("--seed", type=int, default=0)
    return p


# rendering -----------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False)


def _grid(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h) for i, h in enumerate(headers)]
    line = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    out = [line(headers), "  ".join("─" * w for w in widths)]
    out += [line(r) for r in cells]
    return "\n".join(out)


def _kv(pairs: Sequence[tuple[str, object]]) -> str:
    w = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(w)}  {v}" for k, v in pairs)


def _vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def render_table(t: RankTable) -> str:
    head = f"{t.lie_type}  n={t.n}  space={t.space}"
    extras = "  ".join(f"{k}={v}" for k, v in t.meta.items())
    key = "degree" if t.rows and t.rows[0].degree is not None else "degree mod 2"
    rows = [
        (r.degree if r.degree is not None else r.degree_mod_2, r.dim, r.label) for r in t.rows
    ]
    return f"{head}\n{extras}\n{_grid([key, 'dim', 'label'], rows)}"


# commands ------------------------------------------------------------------

def _group(rs: RootSystem, args) -> WeylGroup:
    return generate(rs, args.weyl_cap)


def cmd_rootsystem(args) -> str:
    rs = build_root_system(args.type)
    data = {
        "type": str(rs.lie_type),
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "marks": list(rs.marks),
        "comarks": list(rs.comarks),
        "d": list(rs.d),
        "coxeter": rs.coxeter,
        "h_dual": rs.dual_coxeter,
        "highest_root_w": list(rs.highest_root_w),
        "positive_roots": [
            {"simple": list(s), "weight": list(w)}
            for s, w in zip(rs.positive_roots_s, rs.positive_roots_w)
        ],
    }
    if args.format == "json":
        return _dump(data)
    cartan = "\n".join("  " + " ".join(f"{x:>2}" for x in row) for row in rs.cartan)
    summary = _kv([
        ("type", data["type"]),
        ("marks", _vec(rs.marks)),
        ("comarks", _vec(rs.comarks)),
        ("d", _vec(rs.d)),
        ("h", rs.coxeter),
        ("h_dual", rs.dual_coxeter),
        ("highest root (weights)", _vec(rs.highest_root_w)),
        ("positive roots", len(rs.positive_roots_w)),
    ])
    roots = _grid(["height", "simple coords", "weight coords"], [
        (sum(s), _vec(s), _vec(w)) for s, w in zip(rs.positive_roots_s, rs.positive_roots_w)
    ])
    return f"{summary}\nCartan matrix:\n{cartan}\n{roots}"


def cmd_weyl(args) -> str:
    rs = build_root_system(args.type)
    W = _group(rs, args)
    dist = sorted(Counter(w.length for w in W).items())
    data = {
        "type": str(rs.lie_type),
        "order": len(W),
        "classical_order": classical_order(rs),
        "longest_length": dist[-1][0],
        "length_distribution": [{"length": l, "count": c} for l, c in dist],
    }
    if args.format == "json":
        return _dump(data)
    head = _kv([(k, data[k]) for k in ("type", "order", "classical_order", "longest_length")])
    return head + "\n" + _grid(["length", "count"], dist)


def cmd_verlinde(args) -> str:
    rs = build_root_system(args.type)
    basis = [a.m for a in level_weights(rs, args.level)]
    data = {
        "type": str(rs.lie_type),
        "level": args.level,
        "n": args.level + rs.dual_coxeter,
        "dim": len(basis),
        "basis": [list(m) for m in basis],
    }
    if args.format == "json":
        return _dump(data)
    head = _kv([("type", data["type"]), ("level k", args.level), ("n = k + h_dual", data["n"]), ("dim", len(basis))])
    return head + "\n" + _grid(["m", "m + rho"], [(_vec(m), _vec(x + 1 for x in m)) for m in basis])


def cmd_twisted_dim(args) -> str:
    rs = build_root_system(args.type)
    W = _group(rs, args)
    q = build_quotient(rs, args.n)
    sgn = dim_sgn_quotient(rs, W, q, args.threads)
    perm = dim_perm_quotient(rs, W, q, args.threads)
    k = abs(args.n) - rs.dual_coxeter
    data = {
        "type": str(rs.lie_type),
        "n": args.n,
        "quotient_order": q.order,
        "invariant_factors": list(q.invariant_factors),
        "dim_sgn": sgn,
        "dim_perm": perm,
        "verlinde_dim": verlinde_dimension(rs, k) if k >= 0 else 0,
        "meta": {"rank": rs.rank, "h_dual": rs.dual_coxeter, "weyl_order": len(W)},
    }
    if args.format == "json":
        return _dump(data)
    return _kv([
        ("type", data["type"]),
        ("n", args.n),
        ("|Q_n|", q.order),
        ("invariant factors", _vec(q.invariant_factors)),
        ("dim (R(T)^sgn/J_n)^W", sgn),
        ("dim (R(T)/K_n)^W", perm),
        ("|M_k|, k = |n| - h_dual", data["verlinde_dim"]),
    ])


def _table_output(t: RankTable, fmt: str) -> str:
    return _dump(t.to_dict()) if fmt == "json" else render_table(t)


def cmd_ktable(args) -> str:
    rs = build_root_system(args.type)
    W = _group(rs, args)
    q = build_quotient(rs, args.n)
    return _table_output(ktable(args.space, rs, W, q, args.n, args.m, args.threads), args.format)


def cmd_e2(args) -> str:
    rs = build_root_system(args.type)
    W = _group(rs, args)
    q = build_quotient(rs, args.n)
    if args.profile is not None:
        profile, space = CohomologyProfile.parse(W, args.profile), "custom"
    else:
        if args.space == "su2-pairs" and str(rs.lie_type) != "A1":
            raise InvalidInput(f"su2-pairs is defined for A1 only, got {rs.lie_type}")
        profile, space = builtin_profile(args.space, rs, W, args.m), args.space
    return _table_output(e2_table(rs, W, q, profile, args.n, space, args.threads), args.format)


def cmd_check(args, out) -> int:
    parsed = [LieType.parse(t) for t in args.types.split(",") if t.strip()]
    if not parsed:
        raise InvalidInput("empty --types roster")
    types = tuple(str(t) for t in parsed)
    cfg = CheckConfig(types, args.max_offset, args.oracle_limit, args.weyl_cap, args.threads, args.seed)
    # build every group up front so a cap problem surfaces before any output
    for t in parsed:
        generate(build_root_system(t), cfg.weyl_cap)
    results = []
    for r in run_checks(cfg):
        results.append(r)
        if args.format == "table":
            print(r.line(), file=out)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        print(_dump({
            "total": len(results),
            "failed": len(failed),
            "results": [{"property": r.name, "where": r.where, "ok": r.ok, "detail": r.detail} for r in results],
        }), file=out)
    else:
        print(f"{len(results) - len(failed)}/{len(results)} passed", file=out)
    return 0 if not failed else 1


COMMANDS = {
    "rootsystem": cmd_rootsystem,
    "weyl": cmd_weyl,
    "verlinde": cmd_verlinde,
    "twisted-dim": cmd_twisted_dim,
    "ktable": cmd_ktable,
    "e2": cmd_e2,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return cmd_check(args, out)
        if args.type is not None:
            args.type = LieType.parse(args.type)
        print(COMMANDS[args.command](args), file=out)
        return 0
    except FusionkitError as exc:
        print(f"fusionkit: error: {exc}", file=err)
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
