"""Command line interface.

Subcommands: spectrum, close, gap, weyl, gap-asymptotics, index, union,
validate. Exit codes: 0 success, 2 validation or precondition failure,
3 I/O failure. Output is CSV (default) or JSON with exact values in
canonical rational text plus advisory 12-digit decimal columns.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .domains import Ball, DisjointUnion, Domain, Ellipsoid, domain_from_jsonable, load_domain
from .echindex import (
    ellipsoid_action,
    ellipsoid_index,
    index_action_scan,
    orbit_set_from_jsonable,
    star_shaped_index,
)
from .errors import ToricSpecError, ValidationError
from .gaps import best_approx_above, best_approx_below, ellipsoid_close, gap_asymptotics, spectral_gap
from .io import (
    RowCache,
    jsonable_witness,
    render_csv,
    render_json,
    write_manifest,
)
from .rationals import approx_string, parse_rat, to_string
from .spectra import spectrum_for, weyl_report


def _rat_arg(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rat_list_arg(text: str) -> list[Fraction]:
    try:
        return [parse_rat(part) for part in text.split(",") if part.strip()]
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list_arg(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_domain_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--ellipsoid", nargs=2, type=_rat_arg, metavar=("A", "B"))
    group.add_argument("--ball", type=_rat_arg, metavar="A")
    group.add_argument("--domain", metavar="FILE", help="domain JSON file")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--output", default="-", metavar="FILE")
    parser.add_argument("--manifest", default=None, metavar="FILE")


def _domain_from_args(args: argparse.Namespace) -> Domain:
    if args.ellipsoid is not None:
        return Ellipsoid(args.ellipsoid[0], args.ellipsoid[1])
    if args.ball is not None:
        return Ball(args.ball)
    return load_domain(args.domain)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricspec")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="spectral invariants c_0..c_k with witnesses")
    _add_domain_flags(p)
    p.add_argument("--k-max", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("close", help="ellipsoid closing bound at a cutoff")
    p.add_argument("--a", type=_rat_arg, required=True)
    p.add_argument("--b", type=_rat_arg, required=True)
    p.add_argument("--L", type=_rat_arg, required=True, dest="cutoff")
    _add_output_flags(p)

    p = sub.add_parser("gap", help="minimum spectral gap below a cutoff")
    _add_domain_flags(p)
    p.add_argument("--L", type=_rat_arg, required=True, dest="cutoff")
    _add_output_flags(p)

    p = sub.add_parser("weyl", help="growth diagnostics c_k^2 / k against twice the volume")
    _add_domain_flags(p)
    p.add_argument("--k", type=_int_list_arg, required=True, dest="ks",
                   metavar="K1,K2,...")
    p.add_argument("--volume", type=_rat_arg, default=None)
    _add_output_flags(p)

    p = sub.add_parser("gap-asymptotics", help="cutoff * gap over a cutoff grid")
    _add_domain_flags(p)
    p.add_argument("--L-grid", type=_rat_list_arg, required=True, dest="grid",
                   metavar="L1,L2,...")
    _add_output_flags(p)

    p = sub.add_parser("index", help="orbit-set index: closed form, scan, or file")
    p.add_argument("--a", type=_rat_arg)
    p.add_argument("--b", type=_rat_arg)
    p.add_argument("--m1", type=int)
    p.add_argument("--m2", type=int)
    p.add_argument("--scan", type=int, default=None, metavar="M_MAX")
    p.add_argument("--orbit-file", default=None, metavar="FILE")
    _add_output_flags(p)

    p = sub.add_parser("union", help="spectrum of a disjoint union with partitions")
    p.add_argument("--domain", required=True, metavar="FILE")
    p.add_argument("--k-max", type=int, required=True)
    _add_output_flags(p)

    p = sub.add_parser("validate", help="validate a domain file and echo canonical JSON")
    p.add_argument("file", metavar="FILE")

    return parser


def _spectrum_rows(domain: Domain, k_max: int) -> list[dict]:
    key = {"op": "spectrum", "domain": domain.to_jsonable(), "k_max": k_max}
    cache = RowCache()
    cached = cache.load(key)
    if cached is not None:
        return cached
    spec = spectrum_for(domain)
    rows = []
    for k in range(k_max + 1):
        value, witness = spec.entry(k)
        rows.append({"k": k, "exact": to_string(value), "approx": approx_string(value),
                     "witness": jsonable_witness(witness)})
    cache.store(key, rows)
    return rows


def _cmd_spectrum(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    if args.k_max < 0:
        raise ValidationError("--k-max must be nonnegative")
    domain = _domain_from_args(args)
    rows = _spectrum_rows(domain, args.k_max)
    return ["k", "exact", "approx", "witness"], rows, domain.to_jsonable()


def _cmd_union(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    if args.k_max < 0:
        raise ValidationError("--k-max must be nonnegative")
    domain = load_domain(args.domain)
    if not isinstance(domain, DisjointUnion):
        raise ValidationError("union command needs a domain file of type 'union'")
    rows = _spectrum_rows(domain, args.k_max)
    return ["k", "exact", "approx", "witness"], rows, domain.to_jsonable()


def _cmd_close(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    a, b, cutoff = args.a, args.b, args.cutoff
    value = ellipsoid_close(a, b, cutoff)
    below = best_approx_below(a, b, cutoff)
    above = best_approx_above(a, b, cutoff)
    row = {"cutoff": to_string(cutoff), "close": to_string(value),
           "close_approx": approx_string(value),
           "m_minus": below.m, "n_minus": below.n,
           "m_plus": above.m, "n_plus": above.n}
    domain = Ellipsoid(a, b).to_jsonable()
    return ["cutoff", "close", "close_approx", "m_minus", "n_minus", "m_plus", "n_plus"], [row], domain


def _cmd_gap(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    domain = _domain_from_args(args)
    report = spectral_gap(spectrum_for(domain), args.cutoff)
    row = {"cutoff": to_string(report.cutoff),
           "gap": "inf" if report.is_infinite else to_string(report.gap),
           "gap_approx": None if report.is_infinite else approx_string(report.gap),
           "achieving_k": report.achieving_k}
    return ["cutoff", "gap", "gap_approx", "achieving_k"], [row], domain.to_jsonable()


def _cmd_weyl(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    domain = _domain_from_args(args)
    rows_raw = weyl_report(spectrum_for(domain), args.ks, args.volume)
    rows = [{"k": r["k"], "value": to_string(r["value"]),
             "value_approx": approx_string(r["value"]),
             "ratio": to_string(r["ratio"]), "ratio_approx": approx_string(r["ratio"]),
             "deviation": to_string(r["deviation"]),
             "deviation_approx": approx_string(r["deviation"])}
            for r in rows_raw]
    cols = ["k", "value", "value_approx", "ratio", "ratio_approx",
            "deviation", "deviation_approx"]
    return cols, rows, domain.to_jsonable()


def _cmd_gap_asymptotics(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    domain = _domain_from_args(args)
    rows_raw = gap_asymptotics(spectrum_for(domain), args.grid)
    rows = [{"cutoff": to_string(r["cutoff"]),
             "gap": "inf" if r["infinite"] else to_string(r["gap"]),
             "scaled": None if r["scaled"] is None else to_string(r["scaled"]),
             "suffix_sup": None if r["suffix_sup"] is None else to_string(r["suffix_sup"]),
             "infinite": r["infinite"]}
            for r in rows_raw]
    return ["cutoff", "gap", "scaled", "suffix_sup", "infinite"], rows, domain.to_jsonable()


def _cmd_index(args: argparse.Namespace) -> tuple[list[str], list[dict], Optional[dict]]:
    if args.orbit_file is not None:
        with open(args.orbit_file, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ValidationError(f"malformed orbit JSON: {exc}") from exc
        orbit_set = orbit_set_from_jsonable(obj)
        return ["index"], [{"index": star_shaped_index(orbit_set)}], None
    if args.a is None or args.b is None:
        raise ValidationError("index needs --a and --b unless --orbit-file is given")
    domain = Ellipsoid(args.a, args.b).to_jsonable()
    if args.scan is not None:
        report = index_action_scan(args.a, args.b, args.scan)
        rows = [{"m1": r.m1, "m2": r.m2, "action": to_string(r.action),
                 "action_approx": approx_string(r.action), "index": r.index,
                 "rank": r.rank, "tangent_count": r.tangent_count}
                for r in report.rows]
        cols = ["m1", "m2", "action", "action_approx", "index", "rank", "tangent_count"]
        return cols, rows, domain
    if args.m1 is None or args.m2 is None:
        raise ValidationError("index needs --m1 and --m2, or --scan, or --orbit-file")
    action = ellipsoid_action(args.a, args.b, args.m1, args.m2)
    row = {"m1": args.m1, "m2": args.m2, "action": to_string(action),
           "action_approx": approx_string(action),
           "index": ellipsoid_index(args.a, args.b, args.m1, args.m2)}
    return ["m1", "m2", "action", "action_approx", "index"], [row], domain


def _cmd_validate(args: argparse.Namespace) -> int:
    domain = load_domain(args.file)
    sys.stdout.write(json.dumps(domain.to_jsonable(), indent=2) + "\n")
    return 0


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "close": _cmd_close,
    "gap": _cmd_gap,
    "weyl": _cmd_weyl,
    "gap-asymptotics": _cmd_gap_asymptotics,
    "index": _cmd_index,
    "union": _cmd_union,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "validate":
            return _cmd_validate(args)
        columns, rows, domain_jsonable = _COMMANDS[args.command](args)
        if args.format == "json":
            text = render_json(args.command, {"argv": argv}, columns, rows)
        else:
            text = render_csv(columns, rows)
        if args.output == "-":
            sys.stdout.write(text)
        else:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        if args.manifest:
            write_manifest(args.manifest, argv, domain_jsonable, columns, rows)
        return 0
    except ToricSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
