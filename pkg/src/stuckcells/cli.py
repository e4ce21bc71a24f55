"""Command-line entry point: ``stuckcells <command> ...``.

Exit status is 0 on success, 2 for usage or parameter errors and 3 when a
verification finds failures. JSON output carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import bounds
from .errors import StuckCellsError
from .factory import CONSTRUCTIONS, make_codec
from .oracle import verify_exhaustive
from .simulate import simulate
from .smc import PsaPattern

SCHEMA = 1
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(x) for x in text.replace(",", " ").split()]


def _params(text: str) -> dict:
    """Inline JSON, or ``@path`` to read it from a file."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params is not valid JSON: {exc}") from None
    if not isinstance(value, dict):
        raise UsageError("--params must be a JSON object")
    return value


def _dump_json(obj, out) -> None:
    json.dump({"schema": SCHEMA, **obj}, out, indent=2, sort_keys=True)
    out.write("\n")


def _write_line(values, path: str | None) -> None:
    line = " ".join(str(v) for v in values) + "\n"
    if path:
        Path(path).write_text(line)
    else:
        sys.stdout.write(line)


def _read_word(path: str) -> list[int]:
    return _int_list(Path(path).read_text())


def _parse_grid(text: str) -> list[float]:
    try:
        start, stop, count = text.split(":")
        return [float(p) for p in np.linspace(float(start), float(stop), int(count))]
    except ValueError:
        raise UsageError("--p-grid must look like start:stop:count, e.g. 0:1:101") from None


# -- commands --------------------------------------------------------------------------


def cmd_bounds(args) -> int:
    levels = _int_list(args.levels)
    lv = levels[0] if len(levels) == 1 else levels
    report = bounds.bound_report(args.n, args.q, args.u, lv)
    _dump_json({"command": "bounds", **report.to_dict()}, sys.stdout)
    return 0


def cmd_encode(args) -> int:
    codec = make_codec(args.construction, _params(args.params))
    message = _read_word(args.message_file)
    pattern = PsaPattern.from_json(Path(args.pattern_file).read_text()) if args.pattern_file else PsaPattern()
    _write_line(codec.encode(message, pattern), args.output)
    return 0


def cmd_decode(args) -> int:
    codec = make_codec(args.construction, _params(args.params))
    _write_line(codec.decode(_read_word(args.word_file)), args.output)
    return 0


def cmd_verify(args) -> int:
    codec = make_codec(args.construction, _params(args.params))
    sizes = None if args.u is None else range(args.u + 1)
    report = verify_exhaustive(codec, sizes)
    _dump_json({"command": "verify", "descriptor": codec.descriptor.to_dict(), **report.to_dict()}, sys.stdout)
    return 0 if report.passed else EXIT_VERIFY_FAILED


def cmd_table_delta(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["q", "s", "delta", "printed"])
    for q, s, d, printed in bounds.table_delta_rows():
        w.writerow([q, s, f"{d:.6f}", printed])
    return 0


def cmd_rates(args) -> int:
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["q", "s", "p", "capacity", "rate", "r_max", "threshold"])
    thr = bounds.threshold_p(args.q, args.s)
    has_rmax = args.q % (args.s + 1) == 0
    for p in _parse_grid(args.p_grid):
        rm = f"{bounds.r_max(args.q, p, args.s):.12f}" if has_rmax else ""
        w.writerow(
            [
                args.q,
                args.s,
                f"{p:.6f}",
                f"{bounds.capacity(args.q, p, args.s):.12f}",
                f"{bounds.rate_R(args.q, p, args.s):.12f}",
                rm,
                f"{thr:.12f}",
            ]
        )
    return 0


def cmd_simulate(args) -> int:
    codec = make_codec(args.construction, _params(args.params))
    result = simulate(codec, args.p, args.trials, args.seed, level=args.level)
    _dump_json({"command": "simulate", **result}, sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stuckcells",
        description="Codes for masking partially stuck-at memory cells: bounds, codecs, verification, simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="lower and upper redundancy bounds as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--levels", default="1", help="one level for all cells, or u comma-separated levels")
    p.set_defaults(func=cmd_bounds)

    def codec_args(p):
        p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
        p.add_argument("--params", required=True, help="JSON object or @file")

    p = sub.add_parser("encode", help="encode a message file under a defect pattern")
    codec_args(p)
    p.add_argument("--message-file", required=True)
    p.add_argument("--pattern-file", help='JSON {"positions": [...], "levels": [...]}; omit for no defects')
    p.add_argument("--output", help="write the word here instead of stdout")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a stored word file")
    codec_args(p)
    p.add_argument("--word-file", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="exhaustive masking and round-trip check")
    codec_args(p)
    p.add_argument("--u", type=int, help="check all defect counts 0..u (default: codec capability)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table-delta", help="difference coefficient over the published (q, s) grid as CSV")
    p.set_defaults(func=cmd_table_delta)

    p = sub.add_parser("rates", help="capacity, rate and maximum rate over a p grid as CSV")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--p-grid", default="0:1:101", help="start:stop:count (default 0:1:101)")
    p.set_defaults(func=cmd_rates)

    p = sub.add_parser("simulate", help="Monte Carlo run on the i.i.d. defect channel")
    codec_args(p)
    p.add_argument("--p", type=float, required=True, help="per-cell defect probability")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--level", type=int, default=1, help="defect level for minimum/maximum-level codecs")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, StuckCellsError, OSError) as exc:
        print(f"stuckcells {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
