"""Exact Segre numbers, mixed multiplicities and integral-closure criteria."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DEFAULT_SEED,
    EngineError,
    colength,
    compare_root_sum,
    hilbert_samuel,
    mixed_multiplicities,
    mixed_segre,
    multiplicity,
    normalize_document,
    same_integral_closure,
    segre_numbers,
)

__all__ = [
    "DEFAULT_SEED",
    "EngineError",
    "colength",
    "compare_root_sum",
    "hilbert_samuel",
    "mixed_multiplicities",
    "mixed_segre",
    "multiplicity",
    "normalize_document",
    "run",
    "same_integral_closure",
    "segre_numbers",
    "total_transform",
]


def run(text, command, *names, seed=None, rounds=None):
    """Run a CLI command on document text; returns (report dict, exit code)."""
    report, code = _core.run(text, command, list(names), seed, rounds)
    return json.loads(report), code


def total_transform(matrix, c):
    """Exact solution a = -M^{-1} c as Fractions."""
    return [Fraction(s) for s in _core.total_transform(matrix, [str(Fraction(x)) for x in c])]
