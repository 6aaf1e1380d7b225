"""Exact exponent spectra of parametric (n+1)-systems.

Rationals travel as "p/q" strings and come back as fractions.Fraction.
Parameter sets are dicts {"n", "A", "B", "C", "D"}; values may be Fraction,
int or "p/q" text.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from . import _core
from ._core import BranchNotStable, DivisionByZero, InvalidParams, UnsupportedDimension

__all__ = [
    "BranchNotStable",
    "DivisionByZero",
    "InvalidParams",
    "UnsupportedDimension",
    "canonical_params",
    "validate",
    "graph",
    "eval_system",
    "exponents",
    "certify",
    "cfcheck",
    "sample",
    "run_cli",
]

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def _decode(value: Any) -> Any:
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        return Fraction(value)
    if isinstance(value, list):
        return [_decode(v) for v in value]
    if isinstance(value, dict):
        return {k: _decode(v) for k, v in value.items()}
    return value


def _encode(value: Any) -> Any:
    if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
        f = Fraction(value)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    if isinstance(value, list):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {k: (v if k == "n" else _encode(v)) for k, v in value.items()}
    return value


def _params(p: dict) -> str:
    return json.dumps(_encode(p))


def canonical_params(n: int) -> dict:
    return _decode(json.loads(_core.canonical_params(n)))


def validate(params: dict) -> dict:
    return json.loads(_core.validate(_params(params)))


def graph(params: dict) -> dict:
    return _decode(json.loads(_core.graph(_params(params))))


def eval_system(params: dict, q) -> list[Fraction]:
    return [Fraction(v) for v in _core.eval_system(_params(params), _encode(Fraction(q)))]


def exponents(params: dict) -> dict:
    return _decode(json.loads(_core.exponents(_params(params))))


def certify(params: dict, function_set: str = "trajectory") -> dict:
    return _decode(json.loads(_core.certify(_params(params), function_set)))


def cfcheck(params: dict, specialize_c: bool = True) -> dict:
    return _decode(json.loads(_core.cfcheck(_params(params), specialize_c)))


def sample(params: dict, radius, count: int, seed: int) -> list[dict]:
    return _decode(json.loads(_core.sample(_params(params), _encode(Fraction(radius)), count, seed)))


def run_cli(args: list[str]) -> tuple[int, str, str]:
    return _core.run_cli(list(args))
