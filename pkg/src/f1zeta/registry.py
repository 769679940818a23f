"""Scheme spec strings and the set of built-in schemes.

Spec grammar: ``affine:r``, ``torus:r``, ``p1``, ``fan:<path or bundled name>``
and ``ranks:[r1,r2,...]``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import DomainError
from .scheme import SchemePoints, affine_space, from_ranks, projective_line, torus
from .toric import BUNDLED_FANS, Fan, bundled_fan, fan_to_scheme_points, load_fan

# schemes exercised by the convergence and equality suites
BUILTIN_SPECS = (
    [f"affine:{r}" for r in range(5)]
    + [f"torus:{r}" for r in range(5)]
    + ["p1"]
    + [f"fan:{name}" for name in BUNDLED_FANS]
)

_INT = re.compile(r"\d+")


def resolve_fan(ref: str) -> Fan:
    """A fan from a file path, falling back to a bundled fan name (``.json`` optional)."""
    path = Path(ref)
    if path.is_file():
        return load_fan(path)
    name = ref[:-5] if ref.endswith(".json") else ref
    if name in BUNDLED_FANS:
        return bundled_fan(name)
    raise DomainError(f"fan file {ref!r} not found and not a bundled fan ({', '.join(BUNDLED_FANS)})")


def parse_scheme_spec(spec: str) -> SchemePoints:
    kind, _, arg = spec.partition(":")
    if kind in ("affine", "torus"):
        if not _INT.fullmatch(arg):
            raise DomainError(f"{kind} needs a nonnegative integer rank, got {spec!r}")
        r = int(arg)
        return affine_space(r) if kind == "affine" else torus(r)
    if spec == "p1":
        return projective_line()
    if kind == "fan" and arg:
        return fan_to_scheme_points(resolve_fan(arg))
    if kind == "ranks":
        try:
            ranks = json.loads(arg)
        except json.JSONDecodeError:
            ranks = None
        if not isinstance(ranks, list) or not all(
            isinstance(r, int) and not isinstance(r, bool) and r >= 0 for r in ranks
        ):
            raise DomainError(f"ranks spec must be a list of nonnegative integers, got {arg!r}")
        return from_ranks(ranks, name=spec)
    raise DomainError(f"unknown scheme spec {spec!r}")


def builtin_schemes() -> list[SchemePoints]:
    return [parse_scheme_spec(s) for s in BUILTIN_SPECS]
