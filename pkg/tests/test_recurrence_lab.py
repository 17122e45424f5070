"""Unit tests for recurrences, closed forms, and companion identities."""

from fractions import Fraction

import pytest

from apery4 import FormParameters, RangeError, ZetaLinearForm, left_form
from apery4.recurrence_lab import (alternating_binomial_check,
                                   alternating_binomial_closed_form,
                                   alternating_binomial_sum, central_sum,
                                   closed_form_m0, closed_form_m1,
                                   left_boundary_check, left_boundary_value,
                                   recurrence_coefficients, recurrence_holds,
                                   recurrence_table, right_column_check,
                                   right_column_coefficients,
                                   trailing_coefficient_nonzero)

F = Fraction


# ---------------------------------------------------------------------------
# the three-term recurrence in m
# ---------------------------------------------------------------------------


def test_recurrence_coefficients_spot_values():
    assert recurrence_coefficients(2, 0) == (1024, 504, -432)
    assert recurrence_coefficients(1, 0) == (32, -3 * (6 - 24 + 8 - 4), -8)
    with pytest.raises(RangeError):
        recurrence_coefficients(-1, 0)
    with pytest.raises(RangeError):
        recurrence_coefficients(2, -1)


def test_recurrence_holds_on_series_values():
    values = {(n, m): left_form(FormParameters(n, m))
              for n in range(5) for m in range(n + 1)}
    for n in range(5):
        for m in range(max(0, n - 1)):
            assert recurrence_holds(values, n, m)
    with pytest.raises(RangeError):
        recurrence_holds(values, 2, 1)


def test_trailing_coefficient_never_vanishes_below_diagonal():
    assert all(trailing_coefficient_nonzero(n, m)
               for n in range(60) for m in range(n))


# ---------------------------------------------------------------------------
# central binomial partial sums and closed forms
# ---------------------------------------------------------------------------


def test_central_sum_spot_values():
    assert central_sum(4, 0) == 1
    assert central_sum(4, 1) == F(3457, 3456)
    assert central_sum(9, 1) == F(839809, 839808)
    with pytest.raises(RangeError):
        central_sum(0, 1)
    with pytest.raises(RangeError):
        central_sum(4, -1)


def test_closed_form_m0_base_case_is_pure_zeta4():
    assert closed_form_m0(0) == ZetaLinearForm.zeta_term(4, 1)


def test_closed_form_m0_matches_pinned_value():
    form = closed_form_m0(1)
    assert (form.constant, form.coefficient(4)) == (F(277, 16), F(-16))


def test_closed_form_m1_matches_pinned_value():
    form = closed_form_m1(1)
    assert (form.constant, form.coefficient(4)) == (F(-13), F(12))
    with pytest.raises(RangeError):
        closed_form_m1(0)


@pytest.mark.parametrize("n", range(0, 7))
def test_closed_forms_match_series_route(n):
    assert closed_form_m0(n) == left_form(FormParameters(n, 0))
    if n >= 1:
        assert closed_form_m1(n) == left_form(FormParameters(n, 1))


# ---------------------------------------------------------------------------
# boundary recurrences for the m = 0 column
# ---------------------------------------------------------------------------


def test_left_boundary_value_base_case():
    assert left_boundary_value(0) == F(-277, 16)
    with pytest.raises(RangeError):
        left_boundary_value(-1)


@pytest.mark.parametrize("n", range(0, 4))
def test_left_boundary_check(n):
    assert left_boundary_check(n)


def test_right_column_coefficients_base_case():
    l0, l1, l2 = right_column_coefficients(0)
    assert l0 == 9037440
    assert l1 == 2094206184
    assert l2 == 8 * 16 * 243 * 831
    with pytest.raises(RangeError):
        right_column_coefficients(-1)


def test_right_column_coefficients_never_vanish():
    assert all(0 not in right_column_coefficients(n) for n in range(100))


@pytest.mark.parametrize("n", range(0, 3))
def test_right_column_check(n):
    assert right_column_check(n)


# ---------------------------------------------------------------------------
# alternating binomial-sum identity
# ---------------------------------------------------------------------------


def test_alternating_binomial_empty_sum_case():
    # at n = 3 the direct sum is empty, so the closed form must vanish too
    assert alternating_binomial_sum(3, 0) == 0
    assert alternating_binomial_closed_form(3, 0) == 0


def test_alternating_binomial_domain():
    with pytest.raises(RangeError):
        alternating_binomial_sum(2, 0)
    with pytest.raises(RangeError):
        alternating_binomial_closed_form(4, 3)


def test_alternating_binomial_identity_sweep():
    assert all(alternating_binomial_check(n, m)
               for n in range(3, 13) for m in range(n - 1))


# ---------------------------------------------------------------------------
# recurrence-driven tabulation
# ---------------------------------------------------------------------------


def test_recurrence_table_matches_series_route():
    table = recurrence_table(6)
    assert len(table) == 7 * 8 // 2
    for (n, m), value in table.items():
        assert value == left_form(FormParameters(n, m))
    with pytest.raises(RangeError):
        recurrence_table(-1)
