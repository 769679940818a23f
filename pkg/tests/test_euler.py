import cmath
import io
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from f1zeta.arith import kappa
from f1zeta.errors import DomainError, PoleError
from f1zeta.euler import (
    Verdict,
    convergence_radius,
    euler_trace,
    kappa_of_scheme,
    kappa_of_scheme_table,
    scalar_euler_product,
    scalar_tail_sums,
)
from f1zeta.poly import linear_moebius_transform
from f1zeta.registry import builtin_schemes
from f1zeta.scheme import affine_space, counting_function, from_ranks, projective_line, torus

# 50-digit mpmath product of (1 - 0.4^n)^kappa_2(n) over n <= 60
SCALAR_2_04_60 = 0.2000000189413082864


@given(st.integers(0, 8), st.integers(1, 60))
def test_kappa_of_affine_and_torus(r, n):
    assert kappa_of_scheme(affine_space(r), n) == kappa(r, n)
    expected = sum((-1) ** (r - k) * math.comb(r, k) * kappa(k, n) for k in range(r + 1))
    assert kappa_of_scheme(torus(r), n) == expected


def test_kappa_of_empty_scheme():
    assert kappa_of_scheme(from_ranks([]), 7) == 0


@pytest.mark.parametrize("x", builtin_schemes(), ids=lambda x: x.name)
def test_coefficient_identity_builtins(x):
    n_poly = counting_function(x)
    assert kappa_of_scheme_table(x, 100) == [linear_moebius_transform(n_poly, n) for n in range(1, 101)]


@given(st.lists(st.integers(0, 6), max_size=10), st.integers(1, 100))
def test_coefficient_identity_random(ranks, n):
    x = from_ranks(ranks)
    assert kappa_of_scheme(x, n) == linear_moebius_transform(counting_function(x), n)


def test_scalar_product_a1_is_exact():
    for n_max in (1, 5, 40):
        assert scalar_euler_product(1, 0.3, n_max) == pytest.approx(0.7, abs=1e-15)


def test_scalar_product_a0():
    assert scalar_euler_product(0, 0.9, 50) == 1


def test_scalar_truncation_frozen_value():
    assert abs(scalar_euler_product(2, 0.4, 60) - SCALAR_2_04_60) < 1e-15
    # the N = 60 truncation is 1.9e-8 away from the limit; N = 80 gets under 1e-9
    assert abs(scalar_euler_product(2, 0.4, 80) - 0.2) < 1e-9


@settings(max_examples=50)
@given(st.integers(2, 5), st.floats(0, 0.9), st.floats(0, 2 * math.pi))
def test_scalar_product_identity(a, radius, angle):
    u = cmath.rect(radius / a, angle)
    assert abs(scalar_euler_product(a, u, 120) - (1 - a * u)) < 1e-6


def test_scalar_singular_factor():
    # kappa_-1(2) = 1 and (-1)^2 = 1 gives 1 - u^2 = 0 with a positive exponent
    assert scalar_euler_product(-1, -1, 3) == 0
    with pytest.raises(PoleError):
        scalar_euler_product(-1, 1, 3)


def test_boundary_tail_growth():
    tails = scalar_tail_sums(2, 0.5, 400)
    assert tails[399] - tails[99] >= 1
    assert all(b >= a for a, b in zip(tails, tails[1:]))


def test_euler_affine_line_converges():
    trace = euler_trace(affine_space(1), 3, truncation=80)
    assert trace.verdict is Verdict.CONVERGED
    assert trace.target == 0.5
    assert trace.abs_error < 1e-8
    assert trace.verdict_label() == "converged(tol=1e-08)"


def test_euler_torus_line():
    trace = euler_trace(torus(1), 10, truncation=60)
    assert trace.verdict is Verdict.CONVERGED
    assert trace.target == pytest.approx(10 / 9, rel=1e-15)
    assert abs(trace.final - trace.target) < 1e-8


@pytest.mark.parametrize("x, s, n", [(torus(2), 1.5, 200), (affine_space(2), 1.2, 100)])
def test_euler_outside_region_not_converged(x, s, n):
    assert euler_trace(x, s, truncation=n).verdict is not Verdict.CONVERGED


def test_euler_empty_scheme():
    trace = euler_trace(from_ranks([]), 5, truncation=10)
    assert trace.partials == [1] * 10
    assert trace.verdict is Verdict.CONVERGED


def test_euler_s_zero():
    with pytest.raises(DomainError):
        euler_trace(affine_space(1), 0)


def test_euler_at_pole_has_no_target():
    trace = euler_trace(projective_line(), 1.0, truncation=20)
    assert trace.target is None
    assert trace.verdict is not Verdict.CONVERGED


def test_monotone_refinement():
    short = euler_trace(projective_line(), complex(2, 1), truncation=40)
    long = euler_trace(projective_line(), complex(2, 1), truncation=90)
    assert long.partials[:40] == short.partials


@pytest.mark.parametrize("x", builtin_schemes(), ids=lambda x: x.name)
def test_converges_beyond_degree(x):
    rng = random.Random(hash(x.name) % 1000)
    deg = convergence_radius(x) or 0
    for _ in range(3):
        s = cmath.rect(deg + 0.5 + 3 * rng.random(), rng.uniform(-math.pi, math.pi))
        assert euler_trace(x, s, truncation=150, tol=1e-6).verdict is Verdict.CONVERGED


@pytest.mark.parametrize("x, radius", [(affine_space(3), 3), (torus(4), 4), (projective_line(), 1),
                                       (from_ranks([]), None)])
def test_convergence_radius(x, radius):
    assert convergence_radius(x) == radius


def test_csv_trace():
    trace = euler_trace(affine_space(1), 3, truncation=5)
    buf = io.StringIO()
    trace.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n,kappa_n,partial_re,partial_im,abs_err_vs_closed_form"
    assert len(lines) == 6
    assert lines[1].startswith("1,1,")
