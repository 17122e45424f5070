"""Unit tests for polynomials, factored products, and partial fractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apery4 import (FactorizationError, LinearFactorProduct, PoleError,
                    Polynomial, RationalFunction, differentiate,
                    factored_derivative_values, partial_fractions, poly_gcd)

F = Fraction


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------


def test_polynomial_trims_trailing_zeros():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0]).is_zero
    assert Polynomial().degree == -1
    assert Polynomial([5]).degree == 0


def test_polynomial_arithmetic_and_evaluation():
    t = Polynomial.variable()
    p = (t + Polynomial.one()) * (t - Polynomial.constant(2))
    assert p == Polynomial([-2, -1, 1])
    assert p(3) == 4
    assert p(F(1, 2)) == F(-9, 4)
    assert p.derivative() == Polynomial([-1, 2])
    assert (p * 3).leading_coefficient == 3


def test_polynomial_divmod():
    p = Polynomial([-2, -1, 1])  # (t + 1)(t - 2)
    quotient, remainder = p.divmod(Polynomial([1, 1]))
    assert quotient == Polynomial([-2, 1]) and remainder.is_zero
    quotient, remainder = p.divmod(Polynomial([0, 0, 0, 1]))
    assert quotient.is_zero and remainder == p
    with pytest.raises(ZeroDivisionError):
        p.divmod(Polynomial.zero())


def test_div_linear_is_division_by_t_minus_root():
    p = Polynomial([3, 0, 2, 1])
    quotient, remainder = p.div_linear(2)
    assert remainder == p(2)
    t = Polynomial.variable()
    assert quotient * (t - Polynomial.constant(2)) + Polynomial.constant(remainder) == p


def test_taylor_prefix_recovers_shift():
    p = Polynomial([1, -3, 0, 2])
    c = F(1, 2)
    prefix = p.taylor_prefix(c, 4)
    assert prefix == list(p.shift_argument(c).coefficients)
    x = F(7, 3)
    assert sum(a * (x - c) ** i for i, a in enumerate(prefix)) == p(x)


def test_shift_argument():
    p = Polynomial([0, 0, 1])  # t^2
    assert p.shift_argument(1) == Polynomial([1, 2, 1])


def test_monic_and_primitive():
    p = Polynomial([F(1, 2), F(3, 2)])
    assert p.monic() == Polynomial([F(1, 3), 1])
    assert Polynomial([4, 6]).primitive() == Polynomial([2, 3])


def test_poly_gcd():
    t = Polynomial.variable()
    a = (t + Polynomial.one()) * (t - Polynomial.constant(2))
    b = (t + Polynomial.one()) * (t + Polynomial.constant(5))
    assert poly_gcd(a, b) == t + Polynomial.one()
    assert poly_gcd(a, Polynomial.zero()) == a.monic()


# ---------------------------------------------------------------------------
# LinearFactorProduct
# ---------------------------------------------------------------------------


def test_factor_product_merges_shifts():
    prod = LinearFactorProduct.of(2, [(F(1), 1), (F(1), 2), (F(0), -1)])
    assert prod.factors == ((F(0), -1), (F(1), 3))
    assert prod.numerator_degree == 3
    assert prod.denominator_degree == 1
    assert prod.degree_gap == -2


def test_factor_product_block_and_value():
    prod = LinearFactorProduct.block(0, 3)  # t (t+1) (t+2)
    assert prod.value_at(1) == 6
    assert prod.value_at(F(1, 2)) == F(15, 8)
    inverse = LinearFactorProduct.block(0, 3, -1)
    with pytest.raises(PoleError):
        inverse.value_at(-2)


def test_factor_product_zero_exponents_drop():
    prod = LinearFactorProduct.of(1, [(F(3), 1), (F(3), -1)])
    assert prod.factors == ()
    assert prod.value_at(0) == 1


def test_factor_product_shifted():
    prod = LinearFactorProduct.single(0, -2)  # 1 / t^2
    moved = prod.shifted(5)                   # 1 / (t + 5)^2
    assert moved.value_at(0) == F(1, 25)
    assert moved.denominator_shifts() == (F(5),)


def test_expand_matches_pointwise_values():
    prod = LinearFactorProduct.of(F(3, 2), [(F(0), -1), (F(1, 2), 2), (F(-2), -1)])
    f = prod.expand()
    for x in (1, 3, F(7, 2)):
        assert f.evaluate(x) == prod.value_at(x)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-2, 2)),
                min_size=1, max_size=5))
def test_expand_is_order_independent(pairs):
    a = LinearFactorProduct.of(1, [(F(s), e) for s, e in pairs])
    b = LinearFactorProduct.of(1, [(F(s), e) for s, e in reversed(pairs)])
    assert a.factors == b.factors
    assert a.expand() == b.expand()


def test_derivative_values_match_symbolic_derivative():
    prod = LinearFactorProduct.of(2, [(F(0), -2), (F(1), 1), (F(-3), -1)])
    f = prod.expand()
    values = prod.derivative_values_at(F(1, 2), 3)
    current = f
    for k in range(4):
        assert values[k] == current.evaluate(F(1, 2))
        current = current.derivative()


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------


def test_rational_function_reduced_cancels():
    t = Polynomial.variable()
    num = (t + Polynomial.one()) * (t - Polynomial.constant(2)) * 3
    den = (t + Polynomial.one()) * t
    f = RationalFunction.reduced(num, den)
    assert f.numerator == Polynomial([-6, 3])
    assert f.denominator == t
    assert f.evaluate(1) == -3
    with pytest.raises(PoleError):
        f.evaluate(0)


def test_rational_function_arithmetic():
    one_over_t = RationalFunction.reduced(Polynomial.one(), Polynomial.variable())
    shifted = RationalFunction.reduced(Polynomial.one(), Polynomial([1, 1]))
    s = one_over_t - shifted
    telescoped = RationalFunction.reduced(Polynomial.one(),
                                          Polynomial.variable() * Polynomial([1, 1]))
    assert s == telescoped
    assert (s * 0).is_zero


def test_derivative_quotient_rule():
    f = RationalFunction.reduced(Polynomial.one(), Polynomial.variable())
    d2 = f.derivative(2)
    assert d2.evaluate(2) == F(2, 8)
    assert differentiate(f, 2) == d2


def test_factored_derivative_values_against_quotient_rule():
    t = Polynomial.variable()
    num = Polynomial([1, 2])
    den_factors = ((F(0), 2), (F(1), 1))
    f = RationalFunction.reduced(num, t * t * (t + Polynomial.one()))
    values = factored_derivative_values(num, den_factors, F(1, 2), 4)
    current = f
    for k in range(5):
        assert values[k] == current.evaluate(F(1, 2))
        current = current.derivative()
    with pytest.raises(PoleError):
        factored_derivative_values(num, den_factors, -1, 1)


# ---------------------------------------------------------------------------
# partial fractions
# ---------------------------------------------------------------------------


def test_partial_fractions_worked_example():
    # (2t + 1) / (t^2 (t + 1)) = 1/t + 1/t^2 - 1/(t+1)
    f = RationalFunction.reduced(
        Polynomial([1, 2]),
        Polynomial.variable() ** 2 * Polynomial([1, 1]))
    expansion = partial_fractions(f, [F(0), F(1), F(5)])
    assert expansion.polynomial_part.is_zero
    by_shift = {term.shift: term.coefficients for term in expansion.terms}
    assert by_shift == {F(0): (F(1), F(1)), F(1): (F(-1),)}


def test_partial_fractions_with_polynomial_part():
    # (t^3 + 1) / (t + 1) has polynomial part t^2 - t + 1 and no pole left
    f = RationalFunction.reduced(Polynomial([1, 0, 0, 1]), Polynomial([1, 1]))
    expansion = partial_fractions(f, [F(1)])
    assert expansion.polynomial_part == Polynomial([1, -1, 1])
    assert expansion.terms == ()


def test_partial_fractions_needs_all_poles_offered():
    f = RationalFunction.reduced(
        Polynomial.one(),
        Polynomial.variable() * Polynomial([1, 1]))
    with pytest.raises(FactorizationError):
        partial_fractions(f, [F(0)])  # the pole at -1 is not covered


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, -1)),
                min_size=1, max_size=4),
       st.lists(st.integers(-2, 2), min_size=0, max_size=2))
def test_partial_fractions_round_trip(den_pairs, num_roots):
    factors = [(F(s), e) for s, e in den_pairs]
    factors += [(F(r), 1) for r in num_roots]
    prod = LinearFactorProduct.of(1, factors)
    f = prod.expand()
    expansion = partial_fractions(f, prod.denominator_shifts())
    assert expansion.reconstruct() == f
