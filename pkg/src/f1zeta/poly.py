"""Exact one-variable integer polynomials and the linear Moebius transform."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .arith import kappa, kappa_table

#: Degree reported for the zero polynomial.
NEG_INF_DEGREE = float("-inf")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial ``sum coeffs[k] * t**k`` with arbitrary-size integer coefficients.

    Trailing zeros are stripped on construction, so ``coeffs == ()`` is the zero
    polynomial and the last coefficient is otherwise nonzero.
    """

    coeffs: tuple[int, ...] = ()

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | float:
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        return eval_poly(self, x)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def scale(self, c: int) -> IntPolynomial:
        return IntPolynomial(c * a for a in self.coeffs)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __str__(self) -> str:
        return render(self)


def eval_poly(p: IntPolynomial, x):
    """Horner evaluation; exact for integer ``x``, also works for floats/arrays."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def expand_shifted_power(r: int) -> IntPolynomial:
    """(t - 1)**r expanded by the binomial theorem."""
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    return IntPolynomial((-1) ** (r - j) * comb(r, j) for j in range(r + 1))


def linear_moebius_transform(p: IntPolynomial, n: int) -> int:
    """M_n(p): the additive map sending t**a to kappa_a(n)."""
    return sum(c * kappa(a, n) for a, c in enumerate(p.coeffs) if c)


def linear_moebius_table(p: IntPolynomial, n_max: int) -> list[int]:
    """[M_1(p), ..., M_{n_max}(p)] using one kappa table per monomial."""
    out = [0] * n_max
    for a, c in enumerate(p.coeffs):
        if c:
            for i, k in enumerate(kappa_table(a, n_max)):
                out[i] += c * k
    return out


def render(p: IntPolynomial, var: str = "t") -> str:
    """Render as ``a_r*t^r + ... + a_0`` with explicit signs and unit coefficients elided."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)(\d*)(\*?)(?:([a-zA-Z])(?:\^(\d+))?)?")


def parse(text: str, var: str = "t") -> IntPolynomial:
    """Parse the :func:`render` format back into a polynomial.

    Accepts optional ``*`` between coefficient and variable, arbitrary spacing,
    and repeated powers (which are summed).
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
        sign, digits, star, name, exp = m.groups()
        if not sign and not first:
            raise ValueError(f"missing sign before term at offset {pos} in {text!r}")
        if name is None:
            if not digits or star or exp:
                raise ValueError(f"malformed term in {text!r}")
            k, c = 0, int(digits)
        else:
            if name != var:
                raise ValueError(f"unexpected variable {name!r} in {text!r}")
            if star and not digits:
                raise ValueError(f"malformed term in {text!r}")
            k = int(exp) if exp else 1
            c = int(digits) if digits else 1
        coeffs[k] = coeffs.get(k, 0) + (-c if sign == "-" else c)
        pos = m.end()
        first = False
    if not coeffs:
        return IntPolynomial()
    return IntPolynomial(coeffs.get(k, 0) for k in range(max(coeffs) + 1))
