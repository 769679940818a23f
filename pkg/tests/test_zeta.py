import cmath
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from f1zeta.errors import DomainError, PoleError
from f1zeta.poly import IntPolynomial, expand_shifted_power, parse
from f1zeta.registry import builtin_schemes
from f1zeta.scheme import affine_space, counting_function, from_ranks, projective_line, torus
from f1zeta.verify import LIMIT_CASES
from f1zeta.zeta import (
    IDENTITY_S,
    ONE,
    ONE_MINUS_INV_S,
    ZetaMultiset,
    absolute_zeta,
    evaluate,
    invert,
    loc,
    soule_limit_trace,
    tensor,
    tensor_power,
    zeta_from_counting,
)

small_locs = st.tuples(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                       st.fractions(min_value=-3, max_value=3, max_denominator=2))
multisets = st.dictionaries(small_locs, st.integers(-3, 3).filter(bool), max_size=4).map(ZetaMultiset)
real_multisets = st.dictionaries(st.integers(-4, 4).map(loc), st.integers(-2, 2).filter(bool),
                                 min_size=1, max_size=3).map(ZetaMultiset)


def gm_exponents(r):
    return ZetaMultiset({loc(k): (-1) ** (r - k + 1) * comb(r, k) for k in range(r + 1)})


@given(st.integers(0, 10))
def test_zeta_from_counting_closed_forms(r):
    assert zeta_from_counting(IntPolynomial.monomial(r)) == ZetaMultiset({loc(r): -1})
    assert zeta_from_counting(expand_shifted_power(r)) == gm_exponents(r)


def test_zeta_of_zero_polynomial_is_one():
    assert zeta_from_counting(IntPolynomial()) == ONE
    assert evaluate(ONE, 3 + 1j) == 1


def test_multiset_drops_zero_multiplicities():
    z = ZetaMultiset([(loc(1), 2), (loc(1), -2), (loc(0), 1)])
    assert z.as_dict() == {loc(0): 1}


@given(st.integers(1, 6))
def test_tensor_power_of_one_minus_inv_s(r):
    expected = ZetaMultiset({loc(k): (-1) ** (r - k) * comb(r, k) for k in range(r + 1)})
    power = tensor_power(ONE_MINUS_INV_S, r)
    assert power == expected
    assert invert(power) == zeta_from_counting(expand_shifted_power(r))


def test_empty_tensor_power_is_s():
    assert tensor_power(ONE_MINUS_INV_S, 0) == IDENTITY_S == ZetaMultiset({loc(0): 1})


def test_tensor_mixed_signs_drop_out():
    z = ZetaMultiset({loc(0, 1): 1, loc(0, -1): 1})
    assert tensor(z, ZetaMultiset({loc(0, 1): 1})) == ZetaMultiset({loc(0, 2): 1})


def test_tensor_all_negative_sign():
    z = ZetaMultiset({loc(0, -1): 2})
    assert tensor(z, z) == ZetaMultiset({loc(0, -2): -4})
    assert tensor(z, z, z) == ZetaMultiset({loc(0, -3): 8})


@given(multisets)
def test_tensor_with_s_is_identity_upper_half_plane(z):
    upper = ZetaMultiset((rho, m) for rho, m in z.entries if rho[1] >= 0)
    assert tensor(upper, IDENTITY_S) == upper


@given(real_multisets, real_multisets, real_multisets)
def test_tensor_symmetric(a, b, c):
    assert tensor(a, b, c) == tensor(c, a, b) == tensor(b, a, c)


@given(multisets)
def test_invert_involution(z):
    assert invert(invert(z)) == z
    assert ~z == invert(z)
    assert (z * ~z) == ONE


@pytest.mark.parametrize("z, expected", [
    (ZetaMultiset({loc(3): -1}), ZetaMultiset({loc(3): 1})),
    (ONE, ONE),
    (ZetaMultiset({loc(0): 2, loc(1): -3}), ZetaMultiset({loc(0): -2, loc(1): 3})),
])
def test_invert_examples(z, expected):
    assert invert(z) == expected


@given(st.integers(0, 6))
def test_absolute_zeta_closed_forms(r):
    assert absolute_zeta(affine_space(r)) == ZetaMultiset({loc(r): -1})
    assert absolute_zeta(torus(r)) == gm_exponents(r)


def test_absolute_zeta_p1():
    assert absolute_zeta(projective_line()) == ZetaMultiset({loc(0): -1, loc(1): -1})


@pytest.mark.parametrize("x", builtin_schemes(), ids=lambda x: x.name)
def test_two_constructions_builtins(x):
    assert absolute_zeta(x) == zeta_from_counting(counting_function(x))


@given(st.lists(st.integers(0, 5), max_size=8))
def test_two_constructions_random(ranks):
    x = from_ranks(ranks)
    assert absolute_zeta(x) == zeta_from_counting(counting_function(x))


@pytest.mark.parametrize("z, s, value", [
    (ZetaMultiset({loc(4): -1}), 5, 1.0),
    (ZetaMultiset({loc(0): -1, loc(1): -1}), 2, 0.5),
])
def test_evaluate_examples(z, s, value):
    assert evaluate(z, s) == value


def test_evaluate_pole_and_zero():
    with pytest.raises(PoleError):
        evaluate(ONE_MINUS_INV_S, 0)
    assert evaluate(ONE_MINUS_INV_S, 1) == 0
    with pytest.raises(PoleError):
        evaluate(ZetaMultiset({loc("1/2", 1): -1}), complex(0.5, 1.0))


def test_evaluate_real_negative_sign():
    # (s - 1)^3 at s = 0 is -1, returned without an imaginary part
    value = evaluate(ZetaMultiset({loc(1): 3}), 0.0)
    assert value == -1 and value.imag == 0.0


@given(multisets, st.complex_numbers(max_magnitude=6, allow_nan=False, allow_infinity=False))
def test_evaluate_matches_direct_product(z, s):
    if any(abs(s - complex(float(r[0]), float(r[1]))) < 1e-3 for r, _ in z.entries):
        return
    direct = 1 + 0j
    for rho, m in z.entries:
        direct *= (s - complex(float(rho[0]), float(rho[1]))) ** m
    assert cmath.isclose(evaluate(z, s), direct, rel_tol=1e-9, abs_tol=1e-300)


def test_evaluate_no_overflow():
    z = ZetaMultiset({loc(0): 400, loc(1): -399})
    assert cmath.isclose(evaluate(z, 1000.0), 1000.0 * (1000 / 999) ** 399, rel_tol=1e-9)


@pytest.mark.parametrize("z, text", [
    (ZetaMultiset({loc(3): -1}), "(s − 3)^{−1}"),
    (gm_exponents(2), "(s)^{−1} (s − 1)^{2} (s − 2)^{−1}"),
    (ONE, "1"),
    (ZetaMultiset({loc(Fraction(-1, 2)): 2}), "(s + 1/2)^{2}"),
    (ZetaMultiset({loc(1, -2): 1}), "(s − (1 − 2i))^{1}"),
])
def test_render(z, text):
    assert str(z) == text


def test_soule_converges_for_affine_line():
    ps = [1 + 2.0**-j for j in range(1, 21)]
    trace = soule_limit_trace(IntPolynomial.monomial(1), 3, ps)
    errors = [abs(v - 0.5) for v in trace]
    assert all(b < a for a, b in zip(errors, errors[1:]))
    assert errors[-1] < 1e-5


def test_soule_constant_polynomial():
    # (p - 1) (1 - p^{-s})^{-1} with p = 1.5, s = 2
    (value,) = soule_limit_trace(IntPolynomial([1]), 2, [1.5])
    assert value == pytest.approx(0.5 / (1 - 1.5**-2), rel=1e-12)
    assert value == pytest.approx(0.9, rel=1e-12)


def test_soule_zero_polynomial():
    assert soule_limit_trace(IntPolynomial(), 1.5, [2.0, 1.1, 1.01]) == [1, 1, 1]


@pytest.mark.parametrize("text, s", LIMIT_CASES)
def test_soule_limit_cases(text, s):
    n = parse(text)
    (value,) = soule_limit_trace(n, s, [1 + 2.0**-20])
    target = evaluate(zeta_from_counting(n), s)
    assert abs(value - target) <= 1e-4 * abs(target)


def test_soule_complex_s():
    n = IntPolynomial([1, 1])
    (value,) = soule_limit_trace(n, complex(3, 2), [1 + 2.0**-16])
    target = evaluate(zeta_from_counting(n), complex(3, 2))
    assert abs(value - target) <= 1e-3 * abs(target)


def test_soule_domain_errors():
    with pytest.raises(DomainError):
        soule_limit_trace(IntPolynomial.monomial(2), 2, [1.5])
    with pytest.raises(DomainError):
        soule_limit_trace(IntPolynomial.monomial(1), 3, [1.0])
