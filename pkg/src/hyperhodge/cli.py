"""Command-line interface.

Modes
    spectrum   print the jump spectrum of one parameter pair
    verify     run formula and pipeline, print the comparison report
    operators  print every stage of the confluent-to-regular operator chain
    sweep      read a JSON array of {"alpha": [...], "beta": [...]} pairs
               and emit one verification report per line (order preserved)

Exit codes: 0 success, 1 bad input (the message names the violated
assumption), 2 verification disagreement.

Empty beta is passed as an empty string (``--beta ''``) or by omitting the
flag.  ``HODGE_SWEEP_PARALLELISM`` (positive integer, default 1) sets how
many sweep entries are evaluated concurrently; output order is unaffected.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ValidationError
from .params import format_rational, parse_rational, validate
from .spectra import spectrum_to_json
from .theorem import (
    irregular_hodge_spectrum,
    raw_jump_spectrum,
    report_to_json,
    verify,
)
from .weyl import transformation_chain

MODES = ("spectrum", "verify", "operators", "sweep")
FORMATS = ("table", "json", "csv")
NORMALIZATIONS = ("min-zero", "raw")

_CHAIN_ORDER = ("hypergeometric", "kummer_pullback", "fourier", "inverted", "reduced")


@dataclass
class RunConfig:
    """Parsed invocation; ``run`` turns one of these into an exit code."""

    alpha: list[str] = field(default_factory=list)
    beta: list[str] = field(default_factory=list)
    mode: str = "spectrum"
    format: str = "table"
    normalize: str = "min-zero"
    sweep_path: str | None = None
    gamma_override: str | None = None


class _UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits with 2 by default; 2 means "disagreement" here
        raise _UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(
        prog="hyperhodge",
        description=(
            "Exact jump spectra of hypergeometric connections, with an "
            "independent nearby-cycle pipeline as cross-check."
        ),
    )
    p.add_argument("--alpha", default="", help="comma-separated rationals p/q in [0,1), strictly increasing")
    p.add_argument("--beta", default="", help="same format; empty string or omitted flag for an empty sequence")
    p.add_argument("--mode", choices=MODES, default="spectrum")
    p.add_argument("--format", choices=FORMATS, default="table")
    p.add_argument("--normalize", choices=NORMALIZATIONS, default="min-zero")
    p.add_argument("--sweep", dest="sweep_path", metavar="FILE", help="JSON array of {alpha, beta} objects (sweep mode)")
    p.add_argument("--gamma-override", dest="gamma_override", metavar="P/Q", help="force this shift in the strengthening step")
    return p


def _parse_seq(text: str) -> list[str]:
    text = text.strip()
    if not text:
        return []
    return text.split(",")


def _rationals(items: list[str]) -> list[Fraction]:
    return [parse_rational(x) for x in items]


def _print_spectrum(spec, fmt: str, out) -> None:
    rows = spectrum_to_json(spec)
    if fmt == "json":
        out.write(json.dumps(rows, separators=(",", ":")) + "\n")
    elif fmt == "csv":
        out.write("jump,mult\n")
        for row in rows:
            out.write(f"{row['jump']},{row['mult']}\n")
    else:
        width = max([len("jump")] + [len(r["jump"]) for r in rows])
        out.write(f"{'jump'.ljust(width)}  mult\n")
        for row in rows:
            out.write(f"{row['jump'].ljust(width)}  {row['mult']}\n")


def _spectrum_inline(spec) -> str:
    return "  ".join(f"{format_rational(j)}:{m}" for j, m in spec.sorted_items())


def _run_spectrum(config: RunConfig, out) -> int:
    params = validate(_rationals(config.alpha), _rationals(config.beta))
    spec = (
        irregular_hodge_spectrum(params)
        if config.normalize == "min-zero"
        else raw_jump_spectrum(params)
    )
    _print_spectrum(spec, config.format, out)
    return 0


def _run_verify(config: RunConfig, out) -> int:
    params = validate(_rationals(config.alpha), _rationals(config.beta))
    gamma = parse_rational(config.gamma_override) if config.gamma_override else None
    report = verify(params, gamma)
    if config.format == "json":
        out.write(json.dumps(report_to_json(report), separators=(",", ":")) + "\n")
    elif config.format == "csv":
        raise _UsageError("csv output is only available in spectrum mode")
    else:
        out.write(f"alpha:     {', '.join(map(format_rational, params.alpha)) or '(empty)'}\n")
        out.write(f"beta:      {', '.join(map(format_rational, params.beta)) or '(empty)'}\n")
        out.write(f"mu:        {params.mu}\n")
        out.write(f"gamma:     {format_rational(report.gamma_used)}\n")
        out.write(f"formula:   {_spectrum_inline(report.theorem_spectrum)}\n")
        out.write(f"pipeline:  {_spectrum_inline(report.oracle_spectrum)}\n")
        out.write(f"agrees:    {'true' if report.agrees else 'false'}\n")
        shift = "-" if report.raw_shift is None else format_rational(report.raw_shift)
        out.write(f"raw shift: {shift}\n")
    return 0 if report.agrees else 2


def _run_operators(config: RunConfig, out) -> int:
    if config.format != "table":
        raise _UsageError("operators mode prints text; use --format table")
    params = validate(_rationals(config.alpha), _rationals(config.beta))
    chain = transformation_chain(params)
    width = max(len(name) for name in _CHAIN_ORDER)
    for name in _CHAIN_ORDER:
        out.write(f"{name.ljust(width)}  {chain[name].display()}\n")
    return 0


def _sweep_parallelism() -> int:
    raw = os.environ.get("HODGE_SWEEP_PARALLELISM", "1")
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"HODGE_SWEEP_PARALLELISM must be a positive integer, got {raw!r}")
    if value < 1:
        raise _UsageError(f"HODGE_SWEEP_PARALLELISM must be a positive integer, got {raw!r}")
    return value


def _sweep_entry(index: int, entry) -> dict:
    if not isinstance(entry, dict) or "alpha" not in entry or "beta" not in entry:
        raise ValidationError(f"sweep entry {index}: expected an object with alpha and beta")
    try:
        alpha = [parse_rational(str(x)) for x in entry["alpha"]]
        beta = [parse_rational(str(x)) for x in entry["beta"]]
        return report_to_json(verify(validate(alpha, beta)))
    except ValidationError as exc:
        raise ValidationError(f"sweep entry {index}: {exc}") from exc


def _run_sweep(config: RunConfig, out) -> int:
    if not config.sweep_path:
        raise _UsageError("sweep mode requires --sweep FILE")
    if config.format == "csv":
        raise _UsageError("sweep mode emits JSON lines; use --format json")
    try:
        with open(config.sweep_path, "r", encoding="utf-8") as fh:
            entries = json.load(fh)
    except OSError as exc:
        raise _UsageError(f"cannot read sweep file: {exc}")
    except json.JSONDecodeError as exc:
        raise _UsageError(f"sweep file is not valid JSON: {exc}")
    if not isinstance(entries, list):
        raise _UsageError("sweep file must contain a JSON array")

    workers = _sweep_parallelism()
    if workers == 1:
        reports = [_sweep_entry(i, e) for i, e in enumerate(entries)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_sweep_entry, range(len(entries)), entries))
    failed = 0
    for report in reports:
        out.write(json.dumps(report, separators=(",", ":")) + "\n")
        failed += not report["agrees"]
    return 2 if failed else 0


def run(config: RunConfig, out=None, err=None) -> int:
    """Execute one parsed invocation; returns the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        if config.mode == "spectrum":
            return _run_spectrum(config, out)
        if config.mode == "verify":
            return _run_verify(config, out)
        if config.mode == "operators":
            return _run_operators(config, out)
        if config.mode == "sweep":
            return _run_sweep(config, out)
        raise _UsageError(f"unknown mode {config.mode!r}")
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main(argv=None, out=None, err=None) -> int:
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"error: {exc}\n")
        return 1
    config = RunConfig(
        alpha=_parse_seq(ns.alpha),
        beta=_parse_seq(ns.beta),
        mode=ns.mode,
        format=ns.format,
        normalize=ns.normalize,
        sweep_path=ns.sweep_path,
        gamma_override=ns.gamma_override,
    )
    return run(config, out, err)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
