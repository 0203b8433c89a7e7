"""Command-line front end.

Commands: semigroup | dedekind | verify | table.  Exit codes: 0 success,
1 verification failure, 2 usage error.  SDLAB_THREADS caps --threads.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .dedekind import (
    carlitz_floor_sum,
    carlitz_poly,
    carlitz_sawtooth_poly,
    dedekind_sum,
    voronoi_sum,
    zolotarev,
)
from .errors import SdlabError
from .identities import SuiteRanges, reports_to_csv, reports_to_json, run_suite, summarize
from .semigroup import NumericalSemigroup, torus_semigroup


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdlab",
        description="Numerical semigroups, Dedekind-type sums, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("semigroup", help="invariants of a numerical semigroup")
    src = ps.add_mutually_exclusive_group(required=True)
    src.add_argument("--gens", type=_parse_int_list, metavar="G1,G2,...", help="generator list")
    src.add_argument("--pair", type=_parse_int_list, metavar="A,B", help="coprime pair a,b")
    ps.add_argument("--apery", type=int, metavar="S", help="print the Apery set of member S")
    ps.add_argument("--gap-poly", action="store_true", help="print the gap polynomial")
    ps.add_argument("--semigroup-poly", action="store_true", help="print 1 - (1-q) * gap polynomial")
    ps.add_argument("--hilbert", type=int, metavar="N", help="print the Hilbert series truncated at N")
    ps.add_argument("--quotient", type=int, metavar="D", help="print invariants of S/D")
    ps.add_argument("--format", choices=("text", "json", "csv"), default="text")
    ps.set_defaults(func=cmd_semigroup)

    pd = sub.add_parser("dedekind", help="Dedekind sums and floor-sum polynomials")
    pd.add_argument("a", type=int)
    pd.add_argument("b", type=int)
    pd.add_argument("--sum", action="store_true", help="s(a,b) by every route")
    pd.add_argument("--voronoi", nargs=2, type=int, metavar=("M", "N"), help="V_{M,N}(a,b)")
    pd.add_argument("--carlitz", action="store_true", help="the polynomial c(q,t;a,b)")
    pd.add_argument("--zolotarev", action="store_true", help="the permutation k -> a*k mod b")
    pd.add_argument("--sawtooth-poly", action="store_true", help="sawtooth generating polynomial")
    pd.add_argument("--floor-sum", action="store_true", help="both sides of the floor-sum identity")
    pd.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pd.set_defaults(func=cmd_dedekind)

    pv = sub.add_parser("verify", help="run the identity verification suite")
    pv.add_argument("--pairs-max", type=int, default=20, help="largest b in coprime-pair sweeps (0: empty run)")
    pv.add_argument("--semigroups", type=int, default=6, help="number of random semigroups")
    pv.add_argument("--member-max", type=int, default=12, help="largest Apery modulus on random semigroups")
    pv.add_argument("--d-max", type=int, default=8, help="largest quotient divisor")
    pv.add_argument("--identity", action="append", default=[], metavar="ID", help="restrict to ids with this prefix")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    pv.add_argument("--format", choices=("json", "csv"), default="json")
    pv.add_argument("--timings", action="store_true", help="record wall-clock timings (breaks byte-identical output)")
    pv.add_argument("--threads", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("table", help="export an invariant table over coprime pairs")
    pt.add_argument("--pairs-max", type=int, default=12)
    pt.add_argument("--out", metavar="FILE")
    pt.add_argument("--format", choices=("csv", "json"), default="csv")
    pt.set_defaults(func=cmd_table)

    return parser


def _poly_payload(p, fmt: str):
    return {"terms": p.to_terms()} if fmt == "json" else str(p)


def _print_kv_csv(out: dict) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in out.items():
        writer.writerow([key, json.dumps(value) if isinstance(value, (list, dict)) else value])
    sys.stdout.write(buf.getvalue())


def cmd_semigroup(args) -> int:
    if args.pair is not None:
        if len(args.pair) != 2:
            raise SdlabError("--pair needs exactly two integers")
        S = torus_semigroup(*args.pair)
    else:
        S = NumericalSemigroup.from_generators(args.gens)

    out = S.to_dict()
    if args.apery is not None:
        out["apery"] = {"s": args.apery, "elements": list(S.apery(args.apery))}
    if args.gap_poly:
        out["gap_poly"] = _poly_payload(S.gap_poly(), args.format)
    if args.semigroup_poly:
        out["semigroup_poly"] = _poly_payload(S.semigroup_poly(), args.format)
    if args.hilbert is not None:
        out["hilbert"] = _poly_payload(S.hilbert_trunc(args.hilbert), args.format)
    if args.quotient is not None:
        out["quotient"] = {"d": args.quotient, **S.quotient(args.quotient).to_dict()}

    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    elif args.format == "csv":
        _print_kv_csv(out)
    else:
        print(f"generators: {', '.join(map(str, S.generators))}")
        print(f"genus: {S.genus}")
        print(f"frobenius: {S.frobenius}")
        print(f"gaps: {', '.join(map(str, S.gaps)) if S.gaps else '(none)'}")
        if args.apery is not None:
            print(f"apery({args.apery}): {', '.join(map(str, out['apery']['elements']))}")
        if args.gap_poly:
            print(f"gap_poly: {out['gap_poly']}")
        if args.semigroup_poly:
            print(f"semigroup_poly: {out['semigroup_poly']}")
        if args.hilbert is not None:
            print(f"hilbert(<= {args.hilbert}): {out['hilbert']}")
        if args.quotient is not None:
            q = out["quotient"]
            print(f"S/{q['d']}: genus {q['genus']}, frobenius {q['frobenius']}, gaps {q['gaps']}")
    return 0


def cmd_dedekind(args) -> int:
    a, b = args.a, args.b
    wants_nothing = not (args.sum or args.voronoi or args.carlitz or args.zolotarev
                         or args.sawtooth_poly or args.floor_sum)
    out = {"a": a, "b": b}
    if args.sum or wants_nothing:
        out["dedekind_sum"] = {
            "sawtooth": str(dedekind_sum(a, b, "sawtooth")),
            "voronoi": str(dedekind_sum(a, b, "voronoi")),
            "cotangent": _fmt_float(dedekind_sum(a, b, "cotangent")),
        }
    if args.voronoi:
        m, n = args.voronoi
        out["voronoi"] = {"m": m, "n": n, "value": voronoi_sum(a, b, m, n)}
    if args.carlitz:
        out["carlitz"] = _poly_payload(carlitz_poly(a, b), args.format)
    if args.zolotarev:
        out["zolotarev"] = list(zolotarev(a, b).images)
    if args.sawtooth_poly:
        out["sawtooth_poly"] = _poly_payload(carlitz_sawtooth_poly(a, b), args.format)
    if args.floor_sum:
        lhs, rhs = carlitz_floor_sum(a, b)
        out["floor_sum"] = {"lhs": _poly_payload(lhs, args.format), "rhs": _poly_payload(rhs, args.format)}

    if args.format == "json":
        print(json.dumps(out, indent=2, sort_keys=True))
    elif args.format == "csv":
        _print_kv_csv(out)
    else:
        if "dedekind_sum" in out:
            s = out["dedekind_sum"]
            print(f"s({a}, {b}) = {s['sawtooth']} [sawtooth] = {s['voronoi']} [voronoi] ~ {s['cotangent']} [cotangent]")
        if "voronoi" in out:
            v = out["voronoi"]
            print(f"V_{{{v['m']},{v['n']}}}({a}, {b}) = {v['value']}")
        if "carlitz" in out:
            print(f"c(q, t; {a}, {b}) = {out['carlitz']}")
        if "zolotarev" in out:
            print(f"zolotarev: {out['zolotarev']}")
        if "sawtooth_poly" in out:
            print(f"sawtooth_poly: {out['sawtooth_poly']}")
        if "floor_sum" in out:
            print(f"floor_sum lhs: {out['floor_sum']['lhs']}")
            print(f"floor_sum rhs: {out['floor_sum']['rhs']}")
    return 0


def _effective_threads(requested: int) -> int:
    cap = os.environ.get("SDLAB_THREADS")
    if cap is not None:
        try:
            requested = min(requested, max(1, int(cap)))
        except ValueError:
            pass
    return max(1, requested)


def cmd_verify(args) -> int:
    ranges = SuiteRanges(
        pairs_max=args.pairs_max,
        semigroups=args.semigroups,
        member_max=args.member_max,
        d_max=args.d_max,
        # --pairs-max bounds every pair sweep; the checker-specific ceilings
        # (12 for composition enumeration, 40 for the linear form) still apply
        prop2_pairs_max=min(12, args.pairs_max),
        prop2_m1_pairs_max=min(40, args.pairs_max),
        identities=tuple(args.identity),
    )
    reports = run_suite(ranges, seed=args.seed, threads=_effective_threads(args.threads))
    text = (
        reports_to_json(reports, include_timings=args.timings)
        if args.format == "json"
        else reports_to_csv(reports, include_timings=args.timings)
    )
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    counts = summarize(reports)
    if reports:
        tally = ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        print(f"checked {len(reports)} identities: {tally}", file=sys.stderr)
    else:
        print("empty report", file=sys.stderr)
    return 1 if counts.get("fail") else 0


def cmd_table(args) -> int:
    rows = []
    for b in range(3, args.pairs_max + 1):
        for a in range(2, b):
            try:
                S = torus_semigroup(a, b)
            except SdlabError:
                continue
            rows.append(
                {
                    "a": a,
                    "b": b,
                    "genus": S.genus,
                    "frobenius": S.frobenius,
                    "dedekind_sum": str(dedekind_sum(a, b, "sawtooth")),
                    "v11": voronoi_sum(a, b, 1, 1),
                }
            )
    if args.format == "json":
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:
        lines = ["a,b,genus,frobenius,dedekind_sum,v11"]
        lines.extend(
            f"{r['a']},{r['b']},{r['genus']},{r['frobenius']},{r['dedekind_sum']},{r['v11']}" for r in rows
        )
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SdlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
