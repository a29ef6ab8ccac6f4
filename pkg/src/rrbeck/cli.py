"""Command-line front end.

    rrbeck verify [--check NAME|all] [--max-n N] [--order N]
    rrbeck series --name NAME [--order N]
    rrbeck table --theorem {rr1-beck,rr2-beck,beck-euler,corollary} [--max-n N]
    rrbeck sset --n N

All subcommands take ``--format {human,csv,json}`` and ``--output PATH``.
The default series order is 200, or the value of ``RRBECK_ORDER``.
Exit status: 0 when every correctness check passes, 1 on a failure, 2 on a
usage error.  Diagnostic discrepancies go to stderr and leave the status alone.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Optional, Sequence

from .bijections import s_set
from .genfun import SERIES_BUILDERS
from .qseries import DEFAULT_ORDER
from .verify import CHECKS, DIAGNOSTIC, FAIL, TABLES, CheckResult, table

ORDER_ENV = "RRBECK_ORDER"
DEFAULT_MAX_N = 40
ORDER_AWARE = {"rr_identities", "theorem1", "theorem1_cases", "theorem2"}


@dataclass
class RunConfig:
    command: str
    max_n: int = DEFAULT_MAX_N
    order: int = DEFAULT_ORDER
    order_given: bool = False
    selector: str = "all"
    format: str = "human"
    output: Optional[str] = None


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return DEFAULT_ORDER
    try:
        return _non_negative(raw)
    except argparse.ArgumentTypeError as exc:
        print(f"rrbeck: invalid {ORDER_ENV}: {exc}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "csv", "json"], default="human")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="rrbeck", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run identity checks")
    p.add_argument("--check", default="all", choices=["all", *CHECKS])
    p.add_argument("--max-n", type=_non_negative, default=DEFAULT_MAX_N)
    p.add_argument("--order", type=_non_negative, default=None,
                   help="extend series-only comparisons to this order")

    p = sub.add_parser("series", parents=[common], help="print series coefficients 0..order")
    p.add_argument("--name", required=True, choices=list(SERIES_BUILDERS))
    p.add_argument("--order", type=_non_negative, default=None)

    p = sub.add_parser("table", parents=[common], help="per-n part-count table")
    p.add_argument("--theorem", required=True, choices=list(TABLES))
    p.add_argument("--max-n", type=_non_negative, default=DEFAULT_MAX_N)

    p = sub.add_parser("sset", parents=[common], help="list the pairs of S(n)")
    p.add_argument("--n", type=_non_negative, required=True)
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, format=args.format, output=args.output)
    order = getattr(args, "order", None)
    cfg.order_given = order is not None
    cfg.order = order if order is not None else _default_order()
    if args.command == "verify":
        cfg.selector, cfg.max_n = args.check, args.max_n
    elif args.command == "series":
        cfg.selector = args.name
    elif args.command == "table":
        cfg.selector, cfg.max_n = args.theorem, args.max_n
    else:
        cfg.max_n = args.n
    return cfg


@contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------


def _render_checks(results: list[CheckResult], fmt: str) -> str:
    if fmt == "json":
        payload = [r.to_dict() for r in results]
        return _json_text(payload[0] if len(payload) == 1 else payload)
    if fmt == "csv":
        rows = []
        for r in results:
            for w in r.witnesses:
                rows.append([r.check_name, w.label, w.n, w.expected, w.actual,
                             "true" if w.match else "false", w.counterexample or ""])
        return _csv_text(["check", "label", "n", "expected", "actual", "match", "counterexample"], rows)
    lines = []
    for r in results:
        lo, hi = r.n_range
        lines.append(f"{r.check_name:<16} {r.status:<24} n={lo}..{hi}")
        for w in r.failures()[:5]:
            label = f" [{w.label}]" if w.label else ""
            lines.append(f"    n={w.n}{label}: {w.routes}" + (f"  e.g. {w.counterexample}" if w.counterexample else ""))
        lines.extend(f"    note: {note}" for note in r.notes)
    return "\n".join(lines) + "\n"


def _report_diagnostics(results: list[CheckResult]) -> None:
    for r in results:
        for d in r.diagnostics:
            print(f"rrbeck: diagnostic [{r.check_name}] {d['direction']} {d['label']}: "
                  f"{d['count']} case(s), first at n={d['first_n']}: {d['pair']}"
                  + (f" from {d['source']}" if d.get("source") else ""), file=sys.stderr)


def _cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    names = list(CHECKS) if cfg.selector == "all" else [cfg.selector]
    results = []
    for name in names:
        kwargs = {"order": cfg.order} if name in ORDER_AWARE and cfg.order_given else {}
        results.append(CHECKS[name](cfg.max_n, **kwargs))
    _report_diagnostics([r for r in results if r.status == DIAGNOSTIC])
    status = 1 if any(r.status == FAIL for r in results) else 0
    return _render_checks(results, cfg.format), status


def _cmd_series(cfg: RunConfig) -> tuple[str, int]:
    s = SERIES_BUILDERS[cfg.selector](cfg.order)
    coeffs = list(s.coeffs)
    if cfg.format == "json":
        return _json_text({"name": cfg.selector, "order": s.order, "coeffs": coeffs}), 0
    if cfg.format == "csv":
        return _csv_text([f"q^{i}" for i in range(len(coeffs))], [coeffs]), 0
    return ",".join(map(str, coeffs)) + "\n", 0


def _cmd_table(cfg: RunConfig) -> tuple[str, int]:
    rows = table(cfg.selector, cfg.max_n)
    status = 0 if all(r["match"] for r in rows) else 1
    if cfg.format == "json":
        return _json_text(rows), status
    header = ["n", "lhs", "rhs", "excess", "match"]
    if cfg.format == "csv":
        return _csv_text(header, [[r[h] if h != "match" else str(r[h]).lower() for h in header] for r in rows]), status
    lines = ["{:>4} {:>10} {:>10} {:>10}  {}".format(*header)]
    lines += ["{n:>4} {lhs:>10} {rhs:>10} {excess:>10}  {m}".format(m="yes" if r["match"] else "NO", **r) for r in rows]
    return "\n".join(lines) + "\n", status


def _cmd_sset(cfg: RunConfig) -> tuple[str, int]:
    pairs = s_set(cfg.max_n)
    if cfg.format == "json":
        return _json_text([{"lambda": list(p.lam.parts), "a": p.a, "b": p.b} for p in pairs]), 0
    if cfg.format == "csv":
        return _csv_text(["lambda", "a", "b"], [[p.lam.render(), p.a, p.b] for p in pairs]), 0
    return "".join(p.render() + "\n" for p in pairs), 0


COMMANDS = {"verify": _cmd_verify, "series": _cmd_series, "table": _cmd_table, "sset": _cmd_sset}


def run(cfg: RunConfig) -> int:
    text, status = COMMANDS[cfg.command](cfg)
    with _sink(cfg.output) as out:
        out.write(text)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
