"""Fans of simplicial lattice cones and their counting functions.

A fan is given combinatorially: primitive rays in Z^r plus the maximal cones as
sets of ray indices. The counting polynomial depends only on the dimension
census #I_k (cones with k generators), so dual cones and the monoids
sigma^v cap N^v are never built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from importlib import resources
from itertools import combinations
from math import comb, gcd
from pathlib import Path
from typing import Any

from .errors import FanError, InternalCheckError
from .poly import IntPolynomial, expand_shifted_power
from .scheme import SchemePoints, counting_function

_KEYS = {"ambient_rank", "rays", "maximal_cones"}

BUNDLED_FANS = ("a1", "a2", "a3", "a4", "gm1", "gm2", "gm3", "gm4", "p1", "p2", "p1xp1")


@dataclass(frozen=True)
class Cone:
    ambient_rank: int
    generators: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class Fan:
    ambient_rank: int
    rays: tuple[tuple[int, ...], ...]
    cones: frozenset[tuple[int, ...]]
    name: str = "fan"

    def cone(self, generators) -> Cone:
        key = tuple(sorted(generators))
        if key not in self.cones:
            raise FanError(f"cone {list(key)} is not in the fan")
        return Cone(self.ambient_rank, key)

    def all_cones(self) -> list[Cone]:
        return [Cone(self.ambient_rank, g) for g in sorted(self.cones, key=lambda g: (len(g), g))]

    def maximal_cones(self) -> list[Cone]:
        gens = [set(g) for g in self.cones]
        return [c for c in self.all_cones() if not any(set(c.generators) < g for g in gens)]

    def to_document(self) -> dict[str, Any]:
        return {
            "ambient_rank": self.ambient_rank,
            "rays": [list(v) for v in self.rays],
            "maximal_cones": [list(c.generators) for c in self.maximal_cones()],
        }


def matrix_rank(rows) -> int:
    """Rank over Q by fraction-exact Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col] / m[rank][col]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_fan(document, name: str = "fan") -> Fan:
    """Validate a fan document (JSON text or an already-decoded dict).

    Face closure is completed: every generator subset of a listed cone is
    added, and every ray spans a 1-dimensional cone. Rejects unknown keys,
    non-primitive or duplicate rays, bad indices and dependent generators.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as e:
            raise FanError(f"fan document is not valid JSON: {e}") from None
    if not isinstance(document, dict):
        raise FanError("fan document must be a JSON object")
    unknown = set(document) - _KEYS
    if unknown:
        raise FanError(f"unknown keys in fan document: {sorted(unknown)}")
    missing = _KEYS - set(document)
    if missing:
        raise FanError(f"missing keys in fan document: {sorted(missing)}")

    r = document["ambient_rank"]
    if not _is_int(r) or r < 1:
        raise FanError(f"ambient_rank must be a positive integer, got {r!r}")

    raw_rays = document["rays"]
    if not isinstance(raw_rays, list):
        raise FanError("rays must be a list")
    rays: list[tuple[int, ...]] = []
    for i, v in enumerate(raw_rays):
        if not isinstance(v, list) or len(v) != r or not all(_is_int(x) for x in v):
            raise FanError(f"ray {i} must be a list of {r} integers, got {v!r}")
        g = reduce(gcd, v, 0)
        if g != 1:
            raise FanError(f"ray {i} = {v} is not primitive (gcd of entries is {g})")
        if tuple(v) in rays:
            raise FanError(f"ray {i} = {v} duplicates ray {rays.index(tuple(v))}")
        rays.append(tuple(v))

    raw_cones = document["maximal_cones"]
    if not isinstance(raw_cones, list):
        raise FanError("maximal_cones must be a list")
    cones: set[tuple[int, ...]] = {()}
    for j, c in enumerate(raw_cones):
        if not isinstance(c, list) or not all(_is_int(x) for x in c):
            raise FanError(f"maximal cone {j} must be a list of ray indices, got {c!r}")
        if len(set(c)) != len(c):
            raise FanError(f"maximal cone {j} repeats a ray index: {c}")
        bad = [x for x in c if not 0 <= x < len(rays)]
        if bad:
            raise FanError(f"maximal cone {j} has ray indices out of range: {bad}")
        if c and matrix_rank([rays[x] for x in c]) != len(c):
            raise FanError(f"maximal cone {j} = {c} has linearly dependent generators (not simplicial)")
        gens = sorted(c)
        for k in range(len(gens) + 1):
            cones.update(combinations(gens, k))
    cones.update((i,) for i in range(len(rays)))
    return Fan(r, tuple(rays), frozenset(cones), name)


def load_fan(path) -> Fan:
    path = Path(path)
    return parse_fan(path.read_text(), name=path.stem)


def bundled_fan(name: str) -> Fan:
    """One of the shipped fans: a1..a4, gm1..gm4, p1, p2, p1xp1."""
    if name not in BUNDLED_FANS:
        raise FanError(f"no bundled fan named {name!r}; choose from {', '.join(BUNDLED_FANS)}")
    text = resources.files(__package__).joinpath("fans").joinpath(f"{name}.json").read_text()
    return parse_fan(text, name=name)


def dimension_census(fan: Fan) -> list[int]:
    """[#I_0, ..., #I_r], the number of cones of each dimension."""
    census = [0] * (fan.ambient_rank + 1)
    for g in fan.cones:
        census[len(g)] += 1
    return census


def _shifted_sum(counts: list[int]) -> IntPolynomial:
    # counts[k] multiplies (t - 1)^k
    total = IntPolynomial()
    for k, c in enumerate(counts):
        if c:
            total = total + expand_shifted_power(k).scale(c)
    return total


def counting_function_fan(fan: Fan) -> IntPolynomial:
    """N(t) = sum_k #I_{r-k} (t-1)^k."""
    census = dimension_census(fan)
    r = fan.ambient_rank
    return _shifted_sum([census[r - k] for k in range(r + 1)])


def counting_function_cone(fan: Fan, cone: Cone) -> IntPolynomial:
    """Counting polynomial of the affine toric scheme of a single cone.

    Faces of a simplicial cone are its generator subsets, so #I^sigma_j =
    C(dim sigma, j). The polynomial has degree dim sigma, not the ambient rank.
    """
    if tuple(sorted(cone.generators)) not in fan.cones:
        raise FanError(f"cone {list(cone.generators)} is not in the fan")
    d = cone.dim
    faces = [comb(d, j) for j in range(d + 1)]
    return _shifted_sum([faces[d - k] for k in range(d + 1)])


def fan_to_scheme_points(fan: Fan) -> SchemePoints:
    """One point per cone sigma, of rank r - dim sigma."""
    pts = SchemePoints(f"fan:{fan.name}", [fan.ambient_rank - len(g) for g in fan.cones])
    if counting_function(pts) != counting_function_fan(fan):
        raise InternalCheckError(f"fan {fan.name}: point model disagrees with the census formula")
    return pts


def _strictly_inside(v, a, b) -> bool:
    # v = x*a + y*b with x, y > 0, solved exactly by Cramer's rule
    det = a[0] * b[1] - a[1] * b[0]
    x = Fraction(v[0] * b[1] - v[1] * b[0], det)
    y = Fraction(a[0] * v[1] - a[1] * v[0], det)
    return x > 0 and y > 0


def check_fan_axiom(fan: Fan) -> str:
    """Check that cones meet along common faces.

    Returns ``"verified"`` for ambient rank <= 2 (raising :class:`FanError` on
    a violation) and ``"unverified"`` for rank >= 3, which is not supported.
    In rank 2 with primitive, distinct rays the axiom reduces to: no ray lies
    strictly inside a 2-cone. Two distinct sectors narrower than pi can only
    overlap if a generator of one lies strictly inside the other.
    """
    if fan.ambient_rank >= 3:
        return "unverified"
    if fan.ambient_rank == 1:
        # distinct primitive rays in Z^1 are +1 and -1, which meet only at 0
        return "verified"
    two_cones = [g for g in fan.cones if len(g) == 2]
    for g in two_cones:
        a, b = fan.rays[g[0]], fan.rays[g[1]]
        for i, v in enumerate(fan.rays):
            if i not in g and _strictly_inside(v, a, b):
                raise FanError(f"ray {i} = {list(v)} lies inside cone {list(g)}")
    return "verified"
