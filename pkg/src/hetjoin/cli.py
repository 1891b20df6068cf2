"""Replay an event trace through one of the built-in patterns.

Input is JSON Lines, one record per event::

    {"source": 0, "time": 4, "value": 53.5}

Records are sorted by (time, source) before replay.  Exit status is 0 on
success, 1 when the trace cannot be read and 2 when it does not fit the
pattern.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from hetjoin import patterns
from hetjoin.engine import Event, EventSym, Notification, Source
from hetjoin.errors import HetJoinError
from hetjoin.interp_list import ListSym
from hetjoin.render import format_value
from hetjoin.time_meta import at

EXIT_OK, EXIT_IO, EXIT_SCHEMA = 0, 1, 2

PATTERNS = ("fire-alarm", "combine-latest", "align", "cartesian")


class SchemaError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hetjoin", description=__doc__.splitlines()[0])
    parser.add_argument("--pattern", required=True, choices=PATTERNS)
    parser.add_argument("--trace", required=True, metavar="FILE", help="JSON Lines trace")
    parser.add_argument(
        "--within",
        type=float,
        default=None,
        metavar="MINUTES",
        help="fire-alarm window in minutes (default 5)",
    )
    parser.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def parse_records(text: str) -> List[dict]:
    records = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"line {lineno}: {exc.msg}") from None
        if not isinstance(rec, dict) or set(rec) != {"source", "time", "value"}:
            raise SchemaError(f"line {lineno}: expected keys source, time, value")
        source, time, value = rec["source"], rec["time"], rec["value"]
        if not isinstance(source, int) or isinstance(source, bool) or source < 0:
            raise SchemaError(f"line {lineno}: source must be a nonnegative integer")
        if not _is_number(time) or time != time:
            raise SchemaError(f"line {lineno}: time must be a number")
        if not isinstance(value, (bool, int, float, str)):
            raise SchemaError(f"line {lineno}: value must be a JSON scalar")
        records.append(rec)
    # stable: equal (time, source) keep file order
    records.sort(key=lambda r: (r["time"], r["source"]))
    return records


def _json_value(v):
    if isinstance(v, tuple):
        return [_json_value(x) for x in v]
    return v


def _render(value, meta, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(
            {"value": _json_value(value), "interval": None if meta is None else meta.to_json()},
            ensure_ascii=False,
        )
    if meta is None:
        return format_value(value)
    return f"{format_value(value)} {meta!r}"


def _engine_instance(name: str, within: Optional[float]):
    S = EventSym()
    if name == "fire-alarm":
        return patterns.fire_alarm(S, window=5.0 if within is None else within)
    temp = Source("temp_sensor", float)
    if name == "combine-latest":
        return patterns.combine_latest(S, temp=temp)
    return patterns.align(S, temp=temp)


def run(args: argparse.Namespace, out) -> int:
    if args.within is not None and args.pattern != "fire-alarm":
        print("error: --within only applies to --pattern fire-alarm", file=sys.stderr)
        return EXIT_SCHEMA
    try:
        with open(args.trace, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read trace: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        records = parse_records(text)
        lines = replay(args.pattern, records, args.within, args.format)
    except (SchemaError, HetJoinError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    for line in lines:
        out.write(line + "\n")
    return EXIT_OK


def replay(pattern: str, records: Sequence[dict], within=None, fmt: str = "text") -> List[str]:
    if pattern == "cartesian":
        if not records:
            return []
        arity = 1 + max(r["source"] for r in records)
        columns = [[] for _ in range(arity)]
        for r in records:
            columns[r["source"]].append(r["value"])
        result = patterns.cartesian(ListSym(), *columns)
        return [_render(v, None, fmt) for v in result]

    instance = _engine_instance(pattern, within)
    lines = []
    for r in records:
        if r["source"] >= instance.arity:
            raise SchemaError(f"source {r['source']} is outside a {instance.arity}-way join")
        n = Notification(r["source"], Event(r["value"], at(r["time"])))
        for ev in instance.step(n):
            lines.append(_render(ev.value, ev.meta, fmt))
    return lines


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
