"""Truncated absolute Euler products and convergence diagnostics.

The product ``(1/s)^{N(1)} prod_{n>=1} (1 - s^{-n})^{-kappa(n, X)}`` is
accumulated as a running sum of complex logarithms and exponentiated per
partial, because kappa(n, X) grows like deg(N)^n / n and direct powering
overflows long before the product itself does.
"""

from __future__ import annotations

import cmath
import csv
import enum
import math
from dataclasses import dataclass, field
from math import comb
from typing import TextIO

from .arith import kappa, kappa_table
from .errors import DomainError, InternalCheckError, PoleError
from .poly import linear_moebius_table, linear_moebius_transform
from .scheme import SchemePoints, counting_function, euler_characteristic
from .zeta import absolute_zeta, evaluate

DEFAULT_TRUNCATION = 150
DEFAULT_TOL = 1e-8
DEFAULT_TAIL_BOUND = 1e3

_INF = complex(math.inf, 0.0)


def kappa_of_scheme(x: SchemePoints, n: int) -> int:
    """kappa(n, X) = sum_x sum_j (-1)^(r(x)-j) C(r(x), j) kappa_j(n).

    Cross-checked against M_n(N(t)); a mismatch raises InternalCheckError.
    """
    total = 0
    for r, mult in x.census().items():
        total += mult * sum((-1) ** (r - j) * comb(r, j) * kappa(j, n) for j in range(r + 1))
    via_poly = linear_moebius_transform(counting_function(x), n)
    if total != via_poly:
        raise InternalCheckError(f"{x.name}: kappa({n}) = {total} but M_{n}(N) = {via_poly}")
    return total


def kappa_of_scheme_table(x: SchemePoints, n_max: int) -> list[int]:
    """[kappa(1, X), ..., kappa(n_max, X)], with the same cross-check as above."""
    census = x.census()
    top = max(census, default=-1)
    tables = [kappa_table(j, n_max) for j in range(top + 1)]
    out = [0] * n_max
    for r, mult in census.items():
        for j in range(r + 1):
            c = mult * (-1) ** (r - j) * comb(r, j)
            for i, k in enumerate(tables[j]):
                out[i] += c * k
    via_poly = linear_moebius_table(counting_function(x), n_max)
    if out != via_poly:
        bad = next(i for i, (u, v) in enumerate(zip(out, via_poly)) if u != v)
        raise InternalCheckError(f"{x.name}: kappa({bad + 1}) mismatch {out[bad]} vs {via_poly[bad]}")
    return out


def _log1m(w: complex) -> complex:
    """log(1 - w) with full relative accuracy for tiny |w|."""
    if not abs(w) < 0.5:
        return complex(math.inf, 0.0) if cmath.isinf(w) else cmath.log(1 - w)
    re = 0.5 * math.log1p(-2.0 * w.real + (w.real * w.real + w.imag * w.imag))
    im = math.atan2(-w.imag, 1.0 - w.real)
    return complex(re, im)


def _cexpm1(z: complex) -> complex:
    if z.real > 709.0:
        return _INF
    half = math.sin(z.imag / 2)
    return complex(
        math.expm1(z.real) * math.cos(z.imag) - 2 * half * half,
        math.exp(z.real) * math.sin(z.imag),
    )


def _times_int(k: int, z: complex) -> complex:
    """k * z for a possibly huge integer k, saturating to inf on overflow."""
    if k.bit_length() < 1000:
        return float(k) * z
    shift = k.bit_length() - 60
    m = float(k >> shift)
    try:
        return complex(math.ldexp(m * z.real, shift), math.ldexp(m * z.imag, shift))
    except OverflowError:
        return complex(math.copysign(math.inf, m * z.real) if z.real else 0.0,
                       math.copysign(math.inf, m * z.imag) if z.imag else 0.0)


def _exp(z: complex) -> complex:
    if z.real > 709.0:
        return _INF
    if z.real == -math.inf:
        return 0j
    return cmath.exp(z)


def _power(u: complex, n: int) -> complex:
    try:
        return u**n
    except OverflowError:
        return _INF


def scalar_euler_product(a: int, u: complex, n_max: int) -> complex:
    """prod_{n <= n_max} (1 - u^n)^{kappa_a(n)}, which tends to 1 - a*u for |u| < 1/a.

    Raises PoleError when a factor 1 - u^n vanishes under a negative exponent.
    """
    if n_max < 1:
        raise DomainError(f"truncation must be positive, got {n_max}")
    u = complex(u)
    log_total = 0j
    for n, k in enumerate(kappa_table(a, n_max), start=1):
        if k == 0:
            continue
        w = _power(u, n)
        if w == 1:
            if k < 0:
                raise PoleError(f"factor 1 - u^{n} vanishes with exponent {k}")
            return 0j
        log_total += _times_int(k, _log1m(w))
    return _exp(log_total)


def scalar_tail_sums(a: int, u: complex, n_max: int) -> list[float]:
    """Running sums of |(1 - u^n)^{kappa_a(n)} - 1| for n = 1..n_max.

    Bounded growth is necessary for absolute convergence; at |u| = 1/a the
    sums grow without bound (roughly like log n for u = 1/a).
    """
    u = complex(u)
    out, acc = [], 0.0
    for n, k in enumerate(kappa_table(a, n_max), start=1):
        if k:
            w = _power(u, n)
            acc += math.inf if w == 1 and k < 0 else abs(_cexpm1(_times_int(k, _log1m(w))))
        out.append(acc)
    return out


class Verdict(enum.Enum):
    CONVERGED = "converged"
    INCONCLUSIVE = "inconclusive"
    DIVERGING = "diverging"


@dataclass
class EulerTrace:
    s: complex
    truncation: int
    partials: list[complex]
    kappa_values: list[int]
    tail_sums: list[float]
    target: complex | None
    verdict: Verdict
    tol: float
    chi: int = 0
    singular_at: int | None = field(default=None)

    @property
    def final(self) -> complex:
        return self.partials[-1]

    @property
    def abs_error(self) -> float | None:
        return None if self.target is None else abs(self.final - self.target)

    def verdict_label(self) -> str:
        if self.verdict is Verdict.CONVERGED:
            return f"converged(tol={self.tol:g})"
        return self.verdict.value

    def write_csv(self, fh: TextIO) -> None:
        """Columns n, kappa_n, partial_re, partial_im, abs_err_vs_closed_form."""
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "kappa_n", "partial_re", "partial_im", "abs_err_vs_closed_form"])
        for n, (k, p) in enumerate(zip(self.kappa_values, self.partials), start=1):
            err = "" if self.target is None else repr(abs(p - self.target))
            w.writerow([n, str(k), repr(p.real), repr(p.imag), err])


def _within(value: complex, target: complex, tol: float) -> bool:
    scale = abs(target)
    return abs(value - target) <= tol * (scale if scale > 0 else 1.0)


def euler_trace(
    x: SchemePoints,
    s: complex,
    truncation: int = DEFAULT_TRUNCATION,
    tol: float = DEFAULT_TOL,
    tail_bound: float = DEFAULT_TAIL_BOUND,
) -> EulerTrace:
    """Partial Euler products of X at s with a convergence verdict.

    ``converged`` means the last ceil(N/5) partials are all within relative
    ``tol`` of the closed-form zeta value. ``diverging`` is a heuristic: a
    singular factor, or the running sum of |factor - 1| exceeding
    ``tail_bound``. Anything else is ``inconclusive``.
    """
    s = complex(s)
    if s == 0:
        raise DomainError("s = 0 is outside the domain of the Euler product")
    if truncation < 1:
        raise DomainError(f"truncation must be positive, got {truncation}")
    chi = euler_characteristic(x)
    kappas = kappa_of_scheme_table(x, truncation)
    u = 1 / s

    try:
        target = evaluate(absolute_zeta(x), s)
    except PoleError:
        target = None

    log_total = -chi * cmath.log(s)
    partials: list[complex] = []
    tails: list[float] = []
    tail = 0.0
    singular_at = None
    zeroed = False
    for n, k in enumerate(kappas, start=1):
        if k and singular_at is None and not zeroed:
            w = _power(u, n)
            if w == 1:
                if k > 0:
                    singular_at = n
                    tail = math.inf
                else:
                    zeroed = True
            else:
                term = _times_int(-k, _log1m(w))
                log_total += term
                tail += abs(_cexpm1(term))
        if singular_at is not None:
            partials.append(_INF)
        elif zeroed:
            partials.append(0j)
        else:
            partials.append(_exp(log_total))
        tails.append(tail)

    window = partials[-math.ceil(truncation / 5):]
    if singular_at is not None:
        verdict = Verdict.DIVERGING
    elif target is not None and all(_within(p, target, tol) for p in window):
        verdict = Verdict.CONVERGED
    elif tail > tail_bound or math.isnan(tail):
        verdict = Verdict.DIVERGING
    else:
        verdict = Verdict.INCONCLUSIVE
    return EulerTrace(s, truncation, partials, kappas, tails, target, verdict, tol, chi, singular_at)


def convergence_radius(x: SchemePoints) -> int | None:
    """deg N, the radius beyond which |s| gives absolute convergence; None for N = 0."""
    n = counting_function(x)
    return None if n.is_zero() else int(n.degree)
