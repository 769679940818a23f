"""Brute-force oracles that share no code path with the closed formulas.

* Lyndon counts: aperiodic strings are enumerated directly (small cases) or
  Lyndon words are generated one by one with the Fredricksen-Kessler-Maiorana
  algorithm (larger cases). No Moebius function is involved.
* Point counts over F_q: tuples of field elements are enumerated and tested
  with an explicit finite-field implementation, including non-prime q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod

import numba
import numpy as np

from .errors import DomainError, InternalCheckError

LYNDON_MAX_ALPHABET = 8
LYNDON_MAX_LENGTH = 14
POINT_ENVELOPE = 10**7
# a**n at or below this uses the literal string enumeration
_STRING_ENUM_LIMIT = 1 << 16


# --- Lyndon words ------------------------------------------------------------

def _has_proper_period(word: tuple[int, ...]) -> bool:
    n = len(word)
    return any(n % d == 0 and word == word[d:] + word[:d] for d in range(1, n))


def count_aperiodic_strings(a: int, n: int) -> int:
    """Number of length-n strings over a letters that are not a proper power."""
    return sum(1 for w in product(range(a), repeat=n) if not _has_proper_period(w))


@numba.njit(cache=False)
def _fkm_lyndon_count(a, n):
    # Fredricksen-Kessler-Maiorana: walks prenecklaces in lex order; a
    # prenecklace whose longest Lyndon prefix has length n is a Lyndon word
    w = np.zeros(n + 1, dtype=np.int64)
    w[1] = -1
    i = 1
    total = 0
    while True:
        w[i] += 1
        for j in range(i + 1, n + 1):
            w[j] = w[j - i]
        if i == n:
            total += 1
        i = n
        while w[i] == a - 1:
            i -= 1
        if i == 0:
            break
    return total


def generate_lyndon_words(a: int, n: int):
    """Yield the Lyndon words of length n over range(a) in lexicographic order."""
    if a <= 0:
        return
    w = [-1] * (n + 1)
    i = 1
    while True:
        w[i] += 1
        for j in range(i + 1, n + 1):
            w[j] = w[j - i]
        if i == n:
            yield tuple(w[1:])
        i = n
        while w[i] == a - 1:
            i -= 1
        if i == 0:
            return


def lyndon_count(a: int, n: int) -> int:
    """(number of aperiodic length-n strings over a letters) / n, by enumeration.

    Each primitive necklace has exactly n rotations, all aperiodic, and exactly
    one of them is its Lyndon word, so the count equals n times the number of
    Lyndon words; both routes are used depending on size.
    """
    if not (0 <= a <= LYNDON_MAX_ALPHABET and 1 <= n <= LYNDON_MAX_LENGTH):
        raise DomainError(
            f"lyndon_count envelope is 0 <= a <= {LYNDON_MAX_ALPHABET}, "
            f"1 <= n <= {LYNDON_MAX_LENGTH}; got a={a}, n={n}"
        )
    if a == 0:
        return 0
    if a**n <= _STRING_ENUM_LIMIT:
        aperiodic = count_aperiodic_strings(a, n)
    else:
        aperiodic = n * int(_fkm_lyndon_count(a, n))
    q, rem = divmod(aperiodic, n)
    if rem:
        raise InternalCheckError(f"{aperiodic} aperiodic strings is not divisible by n={n}")
    return q


# --- finite fields -----------------------------------------------------------

# monic irreducible polynomials over F_p, low degree first (constant term first)
IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """F_q with q = p**e, 2 <= q <= 64."""

    q: int
    p: int
    e: int

    def __post_init__(self):
        if not _is_prime(self.p) or self.e < 1 or self.p**self.e != self.q:
            raise DomainError(f"q={self.q} is not p^e with p={self.p} prime, e={self.e}")
        if not 2 <= self.q <= 64:
            raise DomainError(f"field size q={self.q} outside 2..64")

    @classmethod
    def of(cls, q: int) -> FieldSpec:
        for p in range(2, q + 1):
            if _is_prime(p):
                e, x = 0, q
                while x % p == 0:
                    x //= p
                    e += 1
                if x == 1 and e:
                    return cls(q, p, e)
                if e:
                    break
        raise DomainError(f"{q} is not a prime power")


class GF:
    """F_q as F_p[x]/(f), elements encoded as integers 0..q-1 (base-p digits)."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.q, self.p, self.e = spec.q, spec.p, spec.e
        self.modulus = IRREDUCIBLE.get((self.p, self.e)) if self.e > 1 else None
        if self.e > 1 and self.modulus is None:
            raise DomainError(f"no irreducible polynomial tabulated for q={self.q}")
        self.elements = range(self.q)

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def _encode(self, digits) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def add(self, x: int, y: int) -> int:
        return self._encode((a + b) % self.p for a, b in zip(self._digits(x), self._digits(y)))

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]

    def _slow_mul(self, x: int, y: int) -> int:
        a, b = self._digits(x), self._digits(y)
        full = [0] * (2 * self.e - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                full[i + j] = (full[i + j] + u * v) % self.p
        if self.modulus is not None:
            f = self.modulus
            for k in range(len(full) - 1, self.e - 1, -1):
                c = full[k]
                if c:
                    for i in range(self.e + 1):
                        full[k - self.e + i] = (full[k - self.e + i] - c * f[i]) % self.p
        return self._encode(full[: self.e])

    @cached_property
    def mul_table(self) -> list[list[int]]:
        return [[self._slow_mul(x, y) for y in range(self.q)] for x in range(self.q)]

    @cached_property
    def units(self) -> frozenset[int]:
        """Elements with a multiplicative inverse, found by search."""
        return frozenset(x for x in range(self.q) if 1 in self.mul_table[x])

    def is_field(self) -> bool:
        """True iff every nonzero element is invertible (the modulus is irreducible)."""
        return self.units == frozenset(range(1, self.q))


def _field(q) -> GF:
    spec = q if isinstance(q, FieldSpec) else FieldSpec.of(q)
    return GF(spec)


def _guard(size: int, what: str) -> None:
    if size > POINT_ENVELOPE:
        raise DomainError(f"{what}: enumeration of {size} tuples exceeds envelope {POINT_ENVELOPE}")


def count_affine(r: int, field) -> int:
    """#A^r(F_q) by listing every r-tuple of field elements."""
    k = _field(field)
    _guard(k.q**r, "count_affine")
    return sum(1 for _ in product(k.elements, repeat=r))


def count_torus(r: int, field) -> int:
    """#G_m^r(F_q): r-tuples of units, the units found by inverse search."""
    k = _field(field)
    _guard((k.q - 1) ** r, "count_torus")
    return sum(1 for _ in product(sorted(k.units), repeat=r))


def count_projective(r: int, field) -> int:
    """#P^r(F_q): orbits of nonzero (r+1)-tuples under scaling by units."""
    if r < 1:
        raise DomainError(f"projective dimension must be positive, got {r}")
    k = _field(field)
    _guard(k.q ** (r + 1), "count_projective")
    seen: set[tuple[int, ...]] = set()
    orbits = 0
    for v in product(k.elements, repeat=r + 1):
        if not any(v) or v in seen:
            continue
        orbits += 1
        for c in k.units:
            seen.add(tuple(k.mul(c, x) for x in v))
    return orbits


def count_product(counts) -> int:
    """Point count of a product scheme."""
    return prod(counts)
