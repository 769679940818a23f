"""Torsion-free Noetherian F1-schemes reduced to their point data.

Everything computed downstream (counting polynomial, absolute zeta function,
Euler product) depends only on the multiset of unit-group ranks r(x) over the
finitely many points x, so a scheme is stored as exactly that multiset.
Topology and structure sheaves are not modeled.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import InternalCheckError
from .poly import IntPolynomial, eval_poly, expand_shifted_power


@dataclass(frozen=True)
class SchemePoints:
    """Finite multiset of point ranks, kept sorted in descending order."""

    name: str
    ranks: tuple[int, ...]

    def __init__(self, name: str, ranks: Iterable[int]):
        rs = tuple(sorted((int(r) for r in ranks), reverse=True))
        if any(r < 0 for r in rs):
            raise ValueError(f"ranks must be nonnegative, got {rs}")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "ranks", rs)

    def __len__(self) -> int:
        return len(self.ranks)

    @property
    def max_rank(self) -> int | None:
        return self.ranks[0] if self.ranks else None

    def census(self) -> Counter:
        """Number of points of each rank."""
        return Counter(self.ranks)

    def same_points(self, other: SchemePoints) -> bool:
        return self.ranks == other.ranks

    def __mul__(self, other: SchemePoints) -> SchemePoints:
        return product(self, other)


def affine_space(r: int) -> SchemePoints:
    """A^r: one point per subset I of {1..r}, of rank r - |I|."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    ranks = [r - k for k in range(r + 1) for _ in combinations(range(r), k)]
    return SchemePoints(f"affine:{r}", ranks)


def torus(r: int) -> SchemePoints:
    """G_m^r: the single generic point, of rank r."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return SchemePoints(f"torus:{r}", [r])


def projective_line() -> SchemePoints:
    """P^1: the generic point (rank 1) and two closed points (rank 0)."""
    return SchemePoints("p1", [1, 0, 0])


def from_ranks(ranks: Iterable[int], name: str | None = None) -> SchemePoints:
    ranks = list(ranks)
    return SchemePoints(name or "ranks:[" + ",".join(map(str, ranks)) + "]", ranks)


def product(x: SchemePoints, y: SchemePoints) -> SchemePoints:
    """Product scheme: points are pairs, ranks add.

    Consistent with the counting polynomial being multiplicative:
    (t-1)^a (t-1)^b = (t-1)^(a+b).
    """
    return SchemePoints(f"{x.name}*{y.name}", [a + b for a in x.ranks for b in y.ranks])


def counting_function(x: SchemePoints) -> IntPolynomial:
    """N(t) = sum over points of (t - 1)**r(x)."""
    n = IntPolynomial()
    for r, mult in x.census().items():
        n = n + expand_shifted_power(r).scale(mult)
    return n


def counting_coefficients(x: SchemePoints) -> list[int]:
    """Coefficients of N(t) from the rank census, without expanding powers.

    The coefficient of t^j is sum_{d >= j} (-1)^(d-j) C(d, j) #{points of rank d}.
    """
    census = x.census()
    top = max(census, default=-1)
    return [
        sum((-1) ** (d - j) * comb(d, j) * census.get(d, 0) for d in range(j, top + 1))
        for j in range(top + 1)
    ]


def euler_characteristic(x: SchemePoints) -> int:
    """chi_abs = N(1), which is the number of rank-0 points."""
    return eval_poly(counting_function(x), 1)


def count_points_F1n(x: SchemePoints, n: int) -> int:
    """Number of F_{1^n}-points, sum over points of n**r(x); equals N(n + 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    direct = sum(n**r for r in x.ranks)
    via_poly = eval_poly(counting_function(x), n + 1)
    if direct != via_poly:
        raise InternalCheckError(f"{x.name}: sum n^r = {direct} but N({n + 1}) = {via_poly}")
    return direct
