"""JSON helpers: rationals travel as "num/den" strings, vectors as arrays."""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Any

from .arith import Vec, format_rational, parse_rational

INF = "+inf"


def vec_to_json(v: Vec) -> list[str]:
    return [format_rational(x) for x in v]


def vec_from_json(data: Any) -> Vec:
    if not isinstance(data, list):
        raise ValueError(f"expected an array of rationals, got {data!r}")
    return tuple(parse_rational(x) for x in data)


def rat_to_json(x: Q | None) -> str:
    """``None`` stands for +infinity."""
    return INF if x is None else format_rational(x)


def rat_from_json(s: Any) -> Q | None:
    return None if s == INF else parse_rational(s)


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
