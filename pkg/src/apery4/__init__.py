"""Exact verification toolkit for a two-parameter family of zeta(4) forms.

The package constructs two families of linear forms in {1, zeta(4)} from
rational kernels built out of shifted rising factorials, proves their
componentwise equality cell by cell in exact rational arithmetic, checks
the recurrences and closed forms their coefficients satisfy, and audits the
printed summand formulas of the underlying series against independent
evaluation routes.  See the README for a tour.
"""

from __future__ import annotations

from .apery_forms import (FormParameters, SummandCheck, audit_summands,
                          identity_holds, left_form, left_form_numeric,
                          left_kernel, left_mid_sum, left_mid_summand,
                          left_split_check, left_tail_summand,
                          pochhammer_derivative, right_finite_sum, right_form,
                          right_form_numeric, right_kernel_term,
                          right_low_summand, right_mid_summand,
                          right_split_check, right_tail_component, verify_cell)
from .errors import (Apery4Error, DivergenceError, DomainError,
                     FactorizationError, NonProperError, PoleError,
                     PoleInRangeError, RangeError, ReconstructionError)
from .exact_arith import (binomial, factorial, harmonic, harmonic_value,
                          pochhammer, rational_from_string, warm_caches)
from .polyrat import (LinearFactorProduct, PartialFractions, PoleExpansion,
                      Polynomial, RationalFunction, differentiate,
                      factored_derivative_values, partial_fractions, poly_gcd)
from .zeta_forms import (FixedPointNumber, ZetaLinearForm, bernoulli_even,
                         derivative_tail_sum, evaluate_decimal,
                         tail_power_sum, zeta_value)

__all__ = [
    "Apery4Error",
    "DivergenceError",
    "DomainError",
    "FactorizationError",
    "FixedPointNumber",
    "FormParameters",
    "LinearFactorProduct",
    "NonProperError",
    "PartialFractions",
    "PoleError",
    "PoleExpansion",
    "PoleInRangeError",
    "Polynomial",
    "RangeError",
    "RationalFunction",
    "ReconstructionError",
    "SummandCheck",
    "ZetaLinearForm",
    "audit_summands",
    "bernoulli_even",
    "binomial",
    "derivative_tail_sum",
    "differentiate",
    "evaluate_decimal",
    "factored_derivative_values",
    "factorial",
    "harmonic",
    "harmonic_value",
    "identity_holds",
    "left_form",
    "left_form_numeric",
    "left_kernel",
    "left_mid_sum",
    "left_mid_summand",
    "left_split_check",
    "left_tail_summand",
    "partial_fractions",
    "pochhammer",
    "pochhammer_derivative",
    "poly_gcd",
    "rational_from_string",
    "right_finite_sum",
    "right_form",
    "right_form_numeric",
    "right_kernel_term",
    "right_low_summand",
    "right_mid_summand",
    "right_split_check",
    "right_tail_component",
    "verify_cell",
    "zeta_value",
]

__version__ = "0.1.0"
