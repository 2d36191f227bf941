"""Command line interface: ``gwcalc {series,solve,degenerate,bps,verify-paper}``."""
from __future__ import annotations

import argparse
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .bps import ClassDescriptor, bps_to_gw, check_integrality, gw_to_bps
from .checks import run_suite
from .correspondence import deconvolve
from .degeneration import Caps, enumerate_admissible_triples, get_preset, survivors_report
from .degeneration.enumeration import profile_dimension_check
from .degeneration.evaluation import evaluate_degeneration
from .errors import GWCalcError, ParseError
from .series import EvenSeries, format_rational, series_pow, sin_u_over_u, sinc_half, sinc_scaled

DEFAULT_ORDER = 12


@dataclass
class RunConfig:
    truncation_order: int = DEFAULT_ORDER
    caps: Caps = Caps()
    out: Optional[Path] = None
    fmt: str = "json"

    def __post_init__(self):
        if self.truncation_order < 0:
            raise ValueError("truncation order must be non-negative")


_SERIES_RE = re.compile(
    r"^\s*(?P<name>sinc_half|sin_u_over_u|sinc_scaled\(\s*(?P<d>\d+)\s*\))\s*(?:\^\s*(?P<k>[+-]?\d+))?\s*$")


def parse_series_expr(expr: str, order: int) -> EvenSeries:
    """``sinc_half^k``, ``sinc_scaled(d)^k`` or ``sin_u_over_u^k`` (k may be negative)."""
    m = _SERIES_RE.match(expr)
    if m is None:
        raise ParseError(f"series expression {expr!r}: expected sinc_half^k, sinc_scaled(d)^k or sin_u_over_u^k")
    k = int(m.group("k") or 1)
    name = m.group("name")
    if name == "sinc_half":
        base = sinc_half(order)
    elif name == "sin_u_over_u":
        base = sin_u_over_u(order)
    else:
        d = int(m.group("d"))
        if d < 1:
            raise ParseError(f"series expression {expr!r}: d must be positive")
        base = sinc_scaled(d, order)
    return series_pow(base, k)


def parse_caps(text: str) -> Caps:
    values = {}
    for item in text.split(","):
        if not item.strip():
            continue
        key, _, val = item.partition("=")
        key = key.strip()
        if key not in ("components", "mu") or not val.strip().isdigit():
            raise argparse.ArgumentTypeError(f"bad caps item {item!r}; use components=K,mu=M")
        values[key] = int(val)
    try:
        return Caps(max_components=values.get("components", 3), max_mu=values.get("mu", 6))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _default_order() -> int:
    env = os.environ.get("GWCALC_ORDER")
    if env is None:
        return DEFAULT_ORDER
    if not env.strip().isdigit():
        raise SystemExit(f"gwcalc: GWCALC_ORDER={env!r} is not a non-negative integer")
    return int(env)


def _emit(text: str, config: RunConfig) -> None:
    if config.out is not None:
        config.out.write_text(text)
    else:
        sys.stdout.write(text)


def _table(rows: Sequence[Sequence[str]], header: Sequence[str]) -> str:
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def _values_table(values, header=("g", "value")) -> str:
    return _table([(g, format_rational(v)) for g, v in enumerate(values)], header)


def cmd_series(args, config: RunConfig) -> int:
    s = parse_series_expr(args.expr, config.truncation_order)
    if config.fmt == "table":
        _emit(_values_table(s.coeffs, ("g", "coeff of u^2g")), config)
    else:
        _emit(io.dumps(io.series_to_json(s)), config)
    return 0


def cmd_solve(args, config: RunConfig) -> int:
    H = io.sequence_from_json(io.load_json(args.h_file), f"{args.h_file}")
    P = io.sequence_from_json(io.load_json(args.p_file), f"{args.p_file}")
    C = deconvolve(H, P)
    if not C.label:
        C = type(C)(C.values, C.c1_pairing, "C")
    if config.fmt == "table":
        _emit(_values_table(C.values, ("g", "C_g")), config)
    else:
        _emit(io.dumps(io.sequence_to_json(C)), config)
    return 0


def _load_problem(target: str, m: int):
    """A preset name, or a JSON file with geometry, markings and optional expected profile."""
    path = Path(target)
    if path.suffix == ".json" or path.exists():
        doc = io.load_json(path)
        geometry = io.geometry_from_json(doc.get("geometry"), f"{path}.geometry")
        markings = io.markings_from_json(doc.get("markings", []), f"{path}.markings")
        return None, geometry, markings
    preset = get_preset(target)
    return preset, preset.geometry, preset.markings(m)


def cmd_degenerate(args, config: RunConfig) -> int:
    preset, geometry, markings = _load_problem(args.target, args.m)
    g_max = args.genus if args.genus is not None else min(config.truncation_order, 5)
    if args.plus_table or args.minus_table:
        if not (args.plus_table and args.minus_table):
            raise ParseError("--plus-table and --minus-table must be given together")
        plus = io.table_from_json(io.load_json(args.plus_table), args.plus_table)
        minus = io.table_from_json(io.load_json(args.minus_table), args.minus_table)
        values = [evaluate_degeneration(g, markings, plus, minus, geometry, config.caps)
                  for g in range(g_max + 1)]
        if config.fmt == "table":
            _emit(_values_table(values), config)
        else:
            _emit(io.dumps({"values": [format_rational(v) for v in values]}), config)
        return 0
    if preset is not None:
        m_values = [args.m] if args.m_given else None
        report = survivors_report(preset, g_max, config.caps, m_values).to_json()
    else:
        def passes(profile, resolved):
            return profile_dimension_check(profile, resolved, geometry).passed

        survivors = []
        for g in range(g_max + 1):
            for t in enumerate_admissible_triples(g, markings, geometry, config.caps, passes):
                survivors.append({"g": g, **t.profile()})
        report = {"geometry": geometry.name, "survivors": survivors}
    if config.fmt == "table":
        rows = [(e["g"], e.get("m", ""), e["mu"], e["delta_degrees"], e["genus_split"], e["components"])
                for e in report["survivors"]]
        _emit(_table(rows, ("g", "m", "mu", "delta_deg", "genus_split", "components")), config)
    else:
        _emit(io.dumps(report), config)
    return 0


def _bps_inputs(paths):
    docs = []
    for p in paths:
        doc = io.load_json(p)
        docs.extend(doc if isinstance(doc, list) else [doc])
    return docs


def cmd_bps(args, config: RunConfig) -> int:
    docs = _bps_inputs(args.files)
    records_out = []
    if args.direction == "to-bps":
        seqs = []
        for i, doc in enumerate(docs):
            where = f"input[{i}]"
            seq = io.sequence_from_json(doc, where)
            coords = tuple(doc.get("class", [1]))
            cls = ClassDescriptor(coords, seq.c1_pairing)
            seqs.append((seq, cls, io.insertions_from_json(doc, where)))
        trivial = {cls.coords: seq for seq, cls, ins in seqs if cls.c1_pairing == 0}
        for seq, cls, ins in seqs:
            family = {c: s for c, s in trivial.items() if c != cls.coords} if cls.c1_pairing == 0 else None
            rec = gw_to_bps(seq, cls, ins, family)
            records_out.append({**io.bps_to_json(rec), "integrality": check_integrality(rec).to_json()})
    else:
        recs = [io.bps_from_json(doc, f"input[{i}]") for i, doc in enumerate(docs)]
        trivial = {r.cls.coords: r for r in recs if r.cls.c1_pairing == 0}
        for r in recs:
            family = {c: x for c, x in trivial.items() if c != r.cls.coords} if r.cls.c1_pairing == 0 else None
            seq = bps_to_gw(r, family)
            records_out.append({"class": list(r.cls.coords), **io.sequence_to_json(seq)})
    if config.fmt == "table":
        rows = []
        for rec in records_out:
            for g, v in enumerate(rec["values"]):
                rows.append((rec["class"], rec["c1_pairing"], g, v))
        _emit(_table(rows, ("class", "c1", "g", "value")), config)
    else:
        _emit(io.dumps(records_out), config)
    return 0


def cmd_verify_paper(args, config: RunConfig) -> int:
    results = run_suite(config.truncation_order, config.caps)
    ok = all(r.passed for r in results)
    if config.fmt == "json":
        _emit(io.dumps({"order": config.truncation_order, "passed": ok,
                        "checks": [r.to_json() for r in results]}), config)
    else:
        _emit("\n".join(r.line() for r in results) + f"\n{'all checks passed' if ok else 'FAILURES'}\n", config)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None, help="truncation genus G (default 12 or $GWCALC_ORDER)")
    common.add_argument("--format", choices=("json", "table"), default=None, dest="fmt")
    common.add_argument("--caps", type=parse_caps, default=None, help="components=K,mu=M")
    common.add_argument("--out", type=Path, default=None, help="write output to PATH")

    parser = argparse.ArgumentParser(prog="gwcalc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="print coefficients of a sinc-type series power")
    p.add_argument("expr", help="sinc_half^k | sinc_scaled(d)^k | sin_u_over_u^k")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("solve", parents=[common], help="solve H = C * P for the coefficients C")
    p.add_argument("h_file")
    p.add_argument("p_file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("degenerate", parents=[common], help="survivor report or degeneration-formula value")
    p.add_argument("target", help="preset name or problem JSON file")
    p.add_argument("--genus", type=int, default=None, help="largest genus (default min(order, 5))")
    p.add_argument("--m", type=int, default=None, help="number of generic insertions on the - side")
    p.add_argument("--plus-table")
    p.add_argument("--minus-table")
    p.set_defaults(func=cmd_degenerate)

    p = sub.add_parser("bps", parents=[common], help="convert GW series to BPS numbers or back")
    p.add_argument("files", nargs="+")
    p.add_argument("--direction", choices=("to-bps", "to-gw"), default="to-bps")
    p.set_defaults(func=cmd_bps)

    p = sub.add_parser("verify-paper", parents=[common], help="run the exact identity suite")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            truncation_order=args.order if args.order is not None else _default_order(),
            caps=args.caps or Caps(),
            out=args.out,
            fmt=args.fmt or ("table" if args.command == "verify-paper" else "json"),
        )
    except ValueError as exc:
        parser.error(str(exc))
    if getattr(args, "m", None) is None and args.command == "degenerate":
        args.m, args.m_given = 1, False
    elif args.command == "degenerate":
        args.m_given = True
    try:
        return args.func(args, config)
    except (GWCalcError, ValueError, OSError) as exc:
        print(f"gwcalc {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
