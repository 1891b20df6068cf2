"""Text rendering of numbers and values shared by the DSL and the CLI."""

from __future__ import annotations

import math

__all__ = ["format_number", "format_value"]


def format_number(x) -> str:
    """Shortest round-trip decimal; integral floats drop the fraction (``4.0`` -> ``4``)."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x.is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


def format_value(v) -> str:
    """Render a value as text: pairs as ``(a, b)``, bools lowercase."""
    if isinstance(v, (bool, int, float)):
        return format_number(v)
    if isinstance(v, tuple):
        return "(" + ", ".join(format_value(x) for x in v) + ")"
    if isinstance(v, list):
        return "[" + "; ".join(format_value(x) for x in v) + "]"
    return str(v)
