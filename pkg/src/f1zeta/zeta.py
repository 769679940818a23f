"""Zeta functions as finite multisets of zeros and poles.

A :class:`ZetaMultiset` represents ``Z(s) = prod_rho (s - rho)**m(rho)`` with
exact rational complex locations ``rho`` and nonzero integer multiplicities
(positive for zeros, negative for poles). Only :func:`evaluate` and
:func:`soule_limit_trace` use floating point.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from math import prod
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, InternalCheckError, PoleError
from .poly import IntPolynomial, eval_poly
from .scheme import SchemePoints

Location = tuple[Fraction, Fraction]


def loc(re, im=0) -> Location:
    """Exact location from ints, Fractions or strings like ``"1/2"``."""
    return (Fraction(re), Fraction(im))


@dataclass(frozen=True)
class ZetaMultiset:
    entries: tuple[tuple[Location, int], ...]

    def __init__(self, entries: Mapping | Iterable = ()):
        if isinstance(entries, Mapping):
            entries = entries.items()
        acc: dict[Location, int] = defaultdict(int)
        for rho, m in entries:
            if not isinstance(rho, tuple):
                rho = loc(rho)
            acc[(Fraction(rho[0]), Fraction(rho[1]))] += int(m)
        items = tuple(sorted((r, m) for r, m in acc.items() if m != 0))
        object.__setattr__(self, "entries", items)

    def as_dict(self) -> dict[Location, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __mul__(self, other: ZetaMultiset) -> ZetaMultiset:
        """Pointwise product of the functions: multiplicities add."""
        return ZetaMultiset(self.entries + other.entries)

    def __invert__(self) -> ZetaMultiset:
        return invert(self)

    def __str__(self) -> str:
        return render(self)


ONE = ZetaMultiset()
#: The function s, used as the empty Kurokawa tensor power.
IDENTITY_S = ZetaMultiset({loc(0): 1})
#: The function 1 - 1/s = (s - 1)/s.
ONE_MINUS_INV_S = ZetaMultiset({loc(1): 1, loc(0): -1})


def zeta_from_counting(n: IntPolynomial) -> ZetaMultiset:
    """prod_k (s - k)**(-a_k) for N(t) = sum a_k t**k."""
    return ZetaMultiset({loc(k): -a for k, a in enumerate(n.coeffs) if a})


def invert(z: ZetaMultiset) -> ZetaMultiset:
    return ZetaMultiset((rho, -m) for rho, m in z.entries)


def tensor(*factors: ZetaMultiset) -> ZetaMultiset:
    """r-ary Kurokawa tensor product.

    Each tuple (rho_1, ..., rho_r) contributes at rho_1 + ... + rho_r with
    multiplicity prod m_i when every Im(rho_i) >= 0, (-1)**(r-1) prod m_i when
    every Im(rho_i) < 0, and nothing when the signs are mixed. The rule is
    applied to whole r-tuples; the binary product is not assumed associative.
    """
    if not factors:
        raise ValueError("tensor needs at least one factor")
    r = len(factors)
    neg_sign = -1 if (r - 1) % 2 else 1
    acc: dict[Location, int] = defaultdict(int)
    for combo in cartesian(*(f.entries for f in factors)):
        ims = [rho[1] for rho, _ in combo]
        if all(im >= 0 for im in ims):
            sign = 1
        elif all(im < 0 for im in ims):
            sign = neg_sign
        else:
            continue
        where = (sum(rho[0] for rho, _ in combo), sum(ims))
        acc[where] += sign * prod(m for _, m in combo)
    return ZetaMultiset(acc)


def tensor_power(z: ZetaMultiset, r: int) -> ZetaMultiset:
    """z tensored with itself r times; r = 0 gives the function s."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return IDENTITY_S if r == 0 else tensor(*([z] * r))


def absolute_zeta(x: SchemePoints) -> ZetaMultiset:
    """Finite product over points of 1 / (1 - 1/s)^{tensor r(x)}."""
    out = ONE
    for r, mult in x.census().items():
        factor = invert(tensor_power(ONE_MINUS_INV_S, r))
        out = out * ZetaMultiset((rho, m * mult) for rho, m in factor.entries)
    return out


def evaluate(z: ZetaMultiset, s: complex) -> complex:
    """Z(s) accumulated in log space.

    Locations are compared exactly against the binary value of ``s``. Raises
    :class:`PoleError` at a pole; returns exactly 0 at a zero. When ``s`` and
    every location are real the sign is tracked separately, so the result has
    no spurious imaginary part.
    """
    s = complex(s)
    s_exact = (Fraction(s.real), Fraction(s.imag))
    zero_hit = False
    for rho, m in z.entries:
        if rho == s_exact:
            if m < 0:
                raise PoleError(f"s = {s} is a pole of order {-m}")
            zero_hit = True
    if zero_hit:
        return 0j
    if s.imag == 0 and all(rho[1] == 0 for rho, _ in z.entries):
        log_mag, negative = 0.0, False
        for rho, m in z.entries:
            d = float(s_exact[0] - rho[0])
            log_mag += m * math.log(abs(d))
            negative ^= d < 0 and m % 2 == 1
        mag = math.exp(log_mag)
        return complex(-mag if negative else mag, 0.0)
    log_total = 0j
    for rho, m in z.entries:
        diff = complex(float(s_exact[0] - rho[0]), float(s_exact[1] - rho[1]))
        log_total += m * cmath.log(diff)
    return cmath.exp(log_total)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


MINUS = "−"


def _fmt_signed_int(m: int) -> str:
    return f"{MINUS}{-m}" if m < 0 else str(m)


def _fmt_location_factor(rho: Location) -> str:
    re, im = rho
    if im == 0:
        if re == 0:
            return "(s)"
        op = MINUS if re > 0 else "+"
        return f"(s {op} {_fmt_rational(abs(re))})"
    if re == 0:
        op = MINUS if im > 0 else "+"
        return f"(s {op} {_fmt_rational(abs(im))}i)"
    re_txt = (MINUS if re < 0 else "") + _fmt_rational(abs(re))
    im_op = MINUS if im < 0 else "+"
    return f"(s {MINUS} ({re_txt} {im_op} {_fmt_rational(abs(im))}i))"


def render(z: ZetaMultiset) -> str:
    """Factored form ``(s - rho)^{m} ...`` sorted by real, then imaginary part."""
    if not z.entries:
        return "1"
    return " ".join(f"{_fmt_location_factor(rho)}^{{{_fmt_signed_int(m)}}}" for rho, m in z.entries)


# --- p -> 1 limit of the congruence zeta function -------------------------

SERIES_RTOL = 1e-6


def _series_terms_needed(n: IntPolynomial, s: complex, log_p: float, budget: float) -> int:
    # terms of sum_m N(p^m) p^{-sm} / m are bounded by C x^m / m with
    # x = p^{deg N - Re s} < 1; pick M so the geometric tail is below budget
    c = sum(abs(a) for a in n.coeffs)
    x = math.exp((n.degree - s.real) * log_p)
    m = 16
    while c * x ** (m + 1) / ((m + 1) * (1 - x)) > budget:
        m = int(m * 1.25) + 1
    return m


def _product_form(n: IntPolynomial, s: complex, log_p: float) -> complex:
    # (p-1)^{N(1)} prod_k (1 - p^{k-s})^{-a_k}, each factor via expm1 for p near 1
    log_total = eval_poly(n, 1) * math.log(math.expm1(log_p))
    for k, a in enumerate(n.coeffs):
        if a:
            w = (k - s) * log_p
            one_minus = -_cexpm1(w)
            log_total += -a * cmath.log(one_minus)
    return cmath.exp(log_total)


def _cexpm1(z: complex) -> complex:
    """exp(z) - 1 without cancellation for small |z|."""
    x, y = z.real, z.imag
    em1 = math.expm1(x)
    half = math.sin(y / 2)
    re = em1 * math.cos(y) - 2 * half * half
    im = math.exp(x) * math.sin(y)
    return complex(re, im)


_CHUNK = 1 << 20


def _series_form(n: IntPolynomial, s: complex, log_p: float) -> complex:
    # (p-1)^{N(1)} exp(sum_{m <= M} N(p^m) p^{-sm} / m), N evaluated at p^m directly
    big_m = _series_terms_needed(n, s, log_p, budget=SERIES_RTOL / 10)
    total = 0j
    for start in range(1, big_m + 1, _CHUNK):
        m = np.arange(start, min(start + _CHUNK, big_m + 1), dtype=np.float64)
        values = eval_poly(n, np.exp(m * log_p)) * np.exp(-s * m * log_p) / m
        total += complex(np.sum(values))
    return cmath.exp(eval_poly(n, 1) * math.log(math.expm1(log_p)) + total)


def soule_limit_trace(n: IntPolynomial, s: complex, p_values: Sequence[float]) -> list[complex]:
    """(p-1)^{N(1)} Z(X, p^{-s}) along a sequence of p > 1 tending to 1.

    Each value is computed in closed product form and cross-checked against
    the truncated exponential series; disagreement beyond relative 1e-6 raises
    :class:`InternalCheckError`. The sequence approaches
    ``evaluate(zeta_from_counting(n), s)`` as p -> 1.
    """
    s = complex(s)
    deg = n.degree if not n.is_zero() else 0
    if not s.real > deg:
        raise DomainError(f"need Re(s) > deg N = {deg}, got s = {s}")
    out = []
    for p in p_values:
        if not p > 1:
            raise DomainError(f"p must exceed 1, got {p}")
        log_p = math.log1p(p - 1)
        value = _product_form(n, s, log_p)
        if not n.is_zero():
            check = _series_form(n, s, log_p)
            if abs(check - value) > SERIES_RTOL * abs(value):
                raise InternalCheckError(
                    f"series {check} and product {value} disagree at p={p}, s={s}"
                )
        out.append(value)
    return out
