"""Exact integer number theory: Moebius function, divisors and kappa_a(n).

``kappa(a, n) = (1/n) * sum_{m | n} mu(n/m) * a**m`` is always an integer; the
division is checked and a remainder raises :class:`InternalCheckError`.
"""

from __future__ import annotations

import math

from .errors import DomainError, InternalCheckError

#: Largest argument accepted by :func:`moebius` and :func:`divisors`.
MAX_N = 10**7

_WHEEL_PRIMES = (2, 3, 5)
# gaps between successive integers coprime to 30, starting from 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if n > MAX_N:
        raise DomainError(f"n={n} exceeds the supported envelope {MAX_N}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` by trial division over a mod-30 wheel."""
    _check_n(n)
    factors: dict[int, int] = {}
    for p in _WHEEL_PRIMES:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d, i = 7, 0
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += _WHEEL_GAPS[i]
        i = (i + 1) % len(_WHEEL_GAPS)
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def moebius(n: int) -> int:
    """Moebius function: 0 if ``n`` has a squared prime factor, else (-1)**k."""
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    _check_n(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _exact_div(total: int, n: int, a: int) -> int:
    q, r = divmod(total, n)
    if r:
        raise InternalCheckError(f"kappa_{a}({n}) is not an integer: {total}/{n}")
    return q


def kappa(a: int, n: int) -> int:
    """kappa_a(n) by the direct divisor sum.

    For ``a >= 1`` this is the number of Lyndon words of length ``n`` over an
    ``a``-letter alphabet; negative ``a`` is allowed.
    """
    _check_n(n)
    total = sum(moebius(n // m) * a**m for m in divisors(n))
    return _exact_div(total, n, a)


def moebius_table(n_max: int) -> list[int]:
    """mu(0..n_max) by a linear sieve; index 0 is a placeholder 0."""
    mu = [0] * (n_max + 1)
    if n_max >= 1:
        mu[1] = 1
    is_composite = bytearray(n_max + 1)
    primes: list[int] = []
    for i in range(2, n_max + 1):
        if not is_composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            ip = i * p
            if ip > n_max:
                break
            is_composite[ip] = 1
            if i % p == 0:
                mu[ip] = 0
                break
            mu[ip] = -mu[i]
    return mu


def kappa_table(a: int, n_max: int) -> list[int]:
    """[kappa_a(1), ..., kappa_a(n_max)] with one shared divisor sieve.

    Every pair ``d | m <= n_max`` is visited once (a harmonic-sum loop), so the
    cost is O(n_max log n_max) big-integer additions.
    """
    _check_n(n_max)
    mu = moebius_table(n_max)
    acc = [0] * (n_max + 1)
    power = 1
    for d in range(1, n_max + 1):
        power *= a
        for m in range(d, n_max + 1, d):
            k = mu[m // d]
            if k:
                acc[m] += power if k > 0 else -power
    return [_exact_div(acc[n], n, a) for n in range(1, n_max + 1)]
