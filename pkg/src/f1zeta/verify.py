"""Property suites behind ``f1zeta verify``.

Each suite returns a list of :class:`Check` results; a failing check carries
the counterexample input in its detail string.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import arith, oracle
from .errors import InternalCheckError
from .poly import eval_poly, parse
from .registry import builtin_schemes
from .scheme import affine_space, count_points_F1n, counting_function, from_ranks, torus
from .toric import bundled_fan, counting_function_fan, dimension_census
from .zeta import ZetaMultiset, absolute_zeta, evaluate, loc, soule_limit_trace, tensor, zeta_from_counting


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


def _first_failure(cases, predicate) -> str:
    for case in cases:
        if not predicate(*case):
            return f"counterexample {case}"
    return ""


def _check(name: str, cases, predicate) -> Check:
    detail = _first_failure(cases, predicate)
    return Check(name, not detail, detail)


def suite_table1(seed: int = 0) -> list[Check]:
    ns = range(1, 31)
    tables = {a: arith.kappa_table(a, 30) for a in range(-3, 4)}
    k = lambda a, n: tables[a][n - 1]  # noqa: E731
    return [
        _check("kappa_a(1) = a", [(a,) for a in tables], lambda a: k(a, 1) == a),
        _check("kappa_-1 = (-1, 1, 0, 0, ...)", [(n,) for n in ns],
               lambda n: k(-1, n) == {1: -1, 2: 1}.get(n, 0)),
        _check("kappa_0 = 0", [(n,) for n in ns], lambda n: k(0, n) == 0),
        _check("kappa_1 = delta_1n", [(n,) for n in ns], lambda n: k(1, n) == (n == 1)),
        _check("kappa_a(n) > 0 for a >= 2", [(a, n) for a in (2, 3) for n in ns],
               lambda a, n: k(a, n) > 0),
        _check("sign kappa_-a(n) = (-1)^n for a >= 2", [(a, n) for a in (2, 3) for n in ns],
               lambda a, n: (k(-a, n) > 0) == (n % 2 == 0) and k(-a, n) != 0),
        _check("kappa_table agrees with kappa", [(a, n) for a in tables for n in ns],
               lambda a, n: k(a, n) == arith.kappa(a, n)),
    ]


def suite_moebius(seed: int = 0) -> list[Check]:
    def inversion(a, m):
        table = arith.kappa_table(a, m)
        return sum(n * table[n - 1] for n in arith.divisors(m)) == a**m

    def growth(a, n):
        return abs(n * arith.kappa(a, n) - a**n) <= a ** (n // 2 + 1)

    return [
        _check("mu examples", [(1, 1), (12, 0), (30, -1)], lambda n, mu: arith.moebius(n) == mu),
        _check("sum_{n|m} n kappa_a(n) = a^m", [(a, m) for a in range(-20, 21) for m in range(1, 101)],
               inversion),
        _check("|n kappa_a(n) - a^n| <= a^(n//2+1)", [(a, n) for a in range(0, 31) for n in range(1, 61)],
               growth),
    ]


def suite_lyndon(seed: int = 0) -> list[Check]:
    cases = [(a, n) for a in range(1, 7) for n in range(1, 13)]
    return [_check("kappa_a(n) = Lyndon count", cases,
                   lambda a, n: arith.kappa(a, n) == oracle.lyndon_count(a, n))]


def random_rank_multisets(rng: random.Random, count: int, max_rank: int = 5, max_points: int = 8):
    return [from_ranks(rng.choices(range(max_rank + 1), k=rng.randint(0, max_points)))
            for _ in range(count)]


def suite_tensor(seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    schemes = builtin_schemes() + random_rank_multisets(rng, 100)
    checks = [_check("absolute_zeta(X) = zeta_from_counting(N_X)", [(x,) for x in schemes],
                     lambda x: absolute_zeta(x) == zeta_from_counting(counting_function(x)))]

    def random_real_multiset():
        return ZetaMultiset({loc(rng.randint(-4, 4), 0): rng.choice([-2, -1, 1, 2])
                             for _ in range(rng.randint(1, 3))})

    triples = [tuple(random_real_multiset() for _ in range(3)) for _ in range(30)]
    checks.append(_check("tensor symmetric under permutation", [(t,) for t in triples],
                         lambda t: tensor(*t) == tensor(t[2], t[0], t[1]) == tensor(t[1], t[0], t[2])))
    return checks


def suite_points(seed: int = 0) -> list[Check]:
    qs = (2, 3, 4, 5, 7, 8, 9)
    p2 = counting_function_fan(bundled_fan("p2"))
    p1xp1 = counting_function_fan(bundled_fan("p1xp1"))
    p1 = counting_function_fan(bundled_fan("p1"))
    checks = [
        _check("#A^r(F_q) = N_{A^r}(q)", [(r, q) for r in range(4) for q in qs],
               lambda r, q: oracle.count_affine(r, q) == eval_poly(counting_function(affine_space(r)), q)),
        _check("#G_m^r(F_q) = N_{G_m^r}(q)", [(r, q) for r in range(4) for q in qs],
               lambda r, q: oracle.count_torus(r, q) == eval_poly(counting_function(torus(r)), q)),
        _check("#P^1(F_q) = N_P1(q)", [(q,) for q in qs],
               lambda q: oracle.count_projective(1, q) == eval_poly(p1, q)),
        _check("#P^2(F_q) = N_P2(q)", [(q,) for q in qs],
               lambda q: oracle.count_projective(2, q) == eval_poly(p2, q)),
        _check("#(P^1 x P^1)(F_q) = N(q)", [(q,) for q in qs],
               lambda q: oracle.count_product([oracle.count_projective(1, q)] * 2) == eval_poly(p1xp1, q)),
        _check("P^2 census is [1, 3, 3]", [()], lambda: dimension_census(bundled_fan("p2")) == [1, 3, 3]),
    ]
    f1n = [(x, n) for x in builtin_schemes() for n in range(1, 11)]

    def f1n_ok(x, n):
        try:
            return count_points_F1n(x, n) == eval_poly(counting_function(x), n + 1)
        except InternalCheckError:
            return False

    checks.append(_check("#X(F_{1^n}) = N(n+1)", f1n, f1n_ok))
    return checks


LIMIT_CASES = (("t", 3), ("t^2", 4), ("t^2 - 2*t + 1", 4), ("t + 1", 3))
LIMIT_PS = tuple(1 + 2.0**-j for j in (1, 5, 10, 15, 20))


def suite_limit(seed: int = 0) -> list[Check]:
    def close(text, s):
        n = parse(text)
        try:
            trace = soule_limit_trace(n, s, LIMIT_PS)
        except InternalCheckError:
            return False
        target = evaluate(zeta_from_counting(n), s)
        return abs(trace[-1] - target) <= 1e-4 * abs(target)

    return [_check("p -> 1 limit matches closed form (rtol 1e-4)", LIMIT_CASES, close)]


SUITES: dict[str, Callable[[int], list[Check]]] = {
    "table1": suite_table1,
    "moebius": suite_moebius,
    "lyndon": suite_lyndon,
    "tensor": suite_tensor,
    "points": suite_points,
    "limit": suite_limit,
}
