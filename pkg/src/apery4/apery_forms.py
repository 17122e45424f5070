"""The two families of linear forms in {1, zeta(4)} and their summands.

For integer parameters n >= m >= 0 the package studies two rational kernels,

* the *left* kernel, a degree-gap-3 product of shifted rising factorials with
  an extra (t + n/2) factor, and
* the *right* kernel, a sum over j = 0..n of degree-gap-2 products weighted
  by squared binomials,

and the exact values

    left_form  = -1/3 * sum_{v >= n-m+1} (d/dt left kernel)(v),
    right_form = +1/6 * sum_{v >= 1}   (d^2/dt^2 right kernel)(v),

each an exact linear form in zeta values (in fact in {1, zeta(4)} alone —
the zeta(2), zeta(3), zeta(5) coordinates cancel).  The central verified
claim is left_form == right_form componentwise on the whole parameter grid.

Each form is computed by expanding its kernel, decomposing into certified
partial fractions over the kernel's own denominator shifts, and summing
derivative tails termwise (see :mod:`apery4.zeta_forms`).

The module also carries the three independent evaluation routes for the
*summands* (the term values of the split series):

1. printed closed formulas in terms of harmonic numbers
   (:func:`left_tail_summand`, :func:`left_mid_summand`,
   :func:`right_mid_summand`, :func:`right_low_summand`),
2. a structure-blind polynomial oracle (factored quotient rule on the
   expanded kernel, :func:`polyrat.factored_derivative_values`), and
3. a generated route applying the rising-factorial derivative rule
   (:func:`pochhammer_derivative`) through the product rule in logarithmic
   form (valid wherever no factor vanishes).

:func:`audit_summands` samples parameter cells and compares the routes
pointwise; any disagreement is reported, none is expected.

Finally, :func:`left_form_numeric` / :func:`right_form_numeric` re-evaluate
the defining series numerically (fixed-point truncation with exact
Euler–Maclaurin tail closure) so the exact forms can be cross-checked
against an arithmetic-free route to many digits.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError, RangeError
from .exact_arith import binomial, factorial, harmonic, pochhammer
from .polyrat import (LinearFactorProduct, factored_derivative_values,
                      partial_fractions)
from .zeta_forms import FixedPointNumber, ZetaLinearForm, derivative_tail_sum

__all__ = [
    "FormParameters",
    "left_kernel",
    "right_kernel_term",
    "left_form",
    "right_form",
    "identity_holds",
    "verify_cell",
    "left_tail_summand",
    "left_mid_summand",
    "left_mid_sum",
    "left_split_check",
    "right_mid_summand",
    "right_low_summand",
    "right_finite_sum",
    "right_tail_component",
    "right_split_check",
    "pochhammer_derivative",
    "SummandCheck",
    "audit_summands",
    "left_form_numeric",
    "right_form_numeric",
]

_F = Fraction


@dataclass(frozen=True)
class FormParameters:
    """A grid cell (n, m) with 0 <= m <= n."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not 0 <= self.m <= self.n:
            raise RangeError(f"need 0 <= m <= n, got (n, m) = ({self.n}, {self.m})")


# ---------------------------------------------------------------------------
# kernels
# ---------------------------------------------------------------------------


def _factor_blocks(*specs: tuple[int, int, int]) -> list[tuple[Fraction, int]]:
    """Flatten (shift, count, exponent) rising-factorial blocks to factor pairs."""
    out: list[tuple[Fraction, int]] = []
    for shift, count, exponent in specs:
        out.extend((_F(shift + i), exponent) for i in range(count))
    return out


def left_kernel(p: FormParameters) -> LinearFactorProduct:
    """The left rational kernel (degree gap 3).

    (-1)^m n!^2 / (m! (2n-m)!) * (t + n/2)
      * (t-n)_m (t-2n+m)_{2n-m} (t+n+1)_n (t+n+1)_{2n-m}
      / ((t)_{n+1}^3 (t)_{2n-m+1})

    After structural merging the poles sit at t = -n..0 with order 4
    (order 3 at t = -n/2 for even n, where the linear factor cancels one).
    """
    n, m = p.n, p.m
    scalar = _F((-1) ** m * factorial(n) ** 2, factorial(m) * factorial(2 * n - m))
    factors = [(_F(n, 2), 1)]
    factors += _factor_blocks(
        (-n, m, 1),
        (m - 2 * n, 2 * n - m, 1),
        (n + 1, n, 1),
        (n + 1, 2 * n - m, 1),
        (0, n + 1, -3),
        (0, 2 * n - m + 1, -1),
    )
    return LinearFactorProduct.of(scalar, factors)


def right_kernel_term(p: FormParameters, j: int) -> LinearFactorProduct:
    """The j-th term of the right kernel (degree gap 2), 0 <= j <= n.

    C(n,j)^2 C(2n-m+j, n) * (t-n)_{2n-m} (t-j)_n / ((t)_{n+1} (t)_{2n-m+1})
    """
    n, m = p.n, p.m
    if not 0 <= j <= n:
        raise RangeError(f"need 0 <= j <= n, got j = {j} at n = {n}")
    scalar = _F(binomial(n, j) ** 2 * binomial(2 * n - m + j, n))
    factors = _factor_blocks(
        (-n, 2 * n - m, 1),
        (-j, n, 1),
        (0, n + 1, -1),
        (0, 2 * n - m + 1, -1),
    )
    return LinearFactorProduct.of(scalar, factors)


# ---------------------------------------------------------------------------
# exact form values
# ---------------------------------------------------------------------------


def left_form(p: FormParameters) -> ZetaLinearForm:
    """Exact value of the left form: -1/3 sum_{v >= n-m+1} (d/dt kernel)(v)."""
    kernel = left_kernel(p)
    expansion = partial_fractions(kernel.expand(), kernel.denominator_shifts())
    return _F(-1, 3) * derivative_tail_sum(expansion, 1, p.n - p.m + 1)


def right_form(p: FormParameters) -> ZetaLinearForm:
    """Exact value of the right form: 1/6 sum_j sum_{v >= 1} (d^2/dt^2 term_j)(v)."""
    total = ZetaLinearForm.zero()
    for j in range(p.n + 1):
        kernel = right_kernel_term(p, j)
        expansion = partial_fractions(kernel.expand(), kernel.denominator_shifts())
        total = total + derivative_tail_sum(expansion, 2, 1)
    return _F(1, 6) * total


def identity_holds(p: FormParameters) -> bool:
    """Componentwise equality of the two exact forms at one cell."""
    return left_form(p) == right_form(p)


def verify_cell(n: int, m: int) -> dict:
    """One grid cell as a plain record (picklable, for workers and reports)."""
    started = time.perf_counter()
    p = FormParameters(n, m)
    lhs = left_form(p)
    rhs = right_form(p)
    return {
        "n": n,
        "m": m,
        "left": lhs.to_mapping(),
        "right": rhs.to_mapping(),
        "identityPass": lhs == rhs,
        "pureWeight4": lhs.is_pure_weight4() and rhs.is_pure_weight4(),
        "elapsedMs": round((time.perf_counter() - started) * 1000.0, 3),
    }


# ---------------------------------------------------------------------------
# the rising-factorial derivative rule and the generated route
# ---------------------------------------------------------------------------


def pochhammer_derivative(x: int, k: int, nu: int) -> Fraction:
    """d/dt (x + t)_k at t = nu, for integer x with nu + x >= 1.

    Equals (x + nu)_k * (S_1(nu+x+k-1) - S_1(nu+x-1)) by the product rule.
    """
    if k < 0:
        raise ValueError(f"pochhammer_derivative requires k >= 0, got k = {k}")
    if nu + x < 1:
        raise DomainError(
            f"derivative rule needs nu + x >= 1, got nu + x = {nu + x}")
    return _F(pochhammer(nu + x, k)) * (harmonic(1, nu + x + k - 1)
                                        - harmonic(1, nu + x - 1))


@dataclass(frozen=True)
class _BlockProduct:
    """scalar * prod (t+x)_k^e over blocks * prod (t+s)^e over loose factors.

    Unlike LinearFactorProduct this keeps the rising-factorial block
    structure, which is what the generated derivative route and the series
    streamer need.
    """

    scalar: Fraction
    blocks: tuple[tuple[int, int, int], ...]        # (x, k, e) with x integer
    linears: tuple[tuple[Fraction, int], ...]       # (s, e), s possibly n/2


def _left_blocks(p: FormParameters) -> _BlockProduct:
    n, m = p.n, p.m
    scalar = _F((-1) ** m * factorial(n) ** 2, factorial(m) * factorial(2 * n - m))
    return _BlockProduct(
        scalar,
        ((-n, m, 1), (m - 2 * n, 2 * n - m, 1), (n + 1, n, 1),
         (n + 1, 2 * n - m, 1), (0, n + 1, -3), (0, 2 * n - m + 1, -1)),
        ((_F(n, 2), 1),),
    )


def _right_blocks(p: FormParameters, j: int) -> _BlockProduct:
    n, m = p.n, p.m
    scalar = _F(binomial(n, j) ** 2 * binomial(2 * n - m + j, n))
    return _BlockProduct(
        scalar,
        ((-n, 2 * n - m, 1), (-j, n, 1), (0, n + 1, -1), (0, 2 * n - m + 1, -1)),
        (),
    )


def _generated_derivatives(bp: _BlockProduct, point: int, order: int) -> list[Fraction]:
    """[g, g', g''](point) by the derivative rule in logarithmic form.

    With L = (log g)' = sum e_b (S_1-difference over the block) + sum e/(t+s):
    g' = g L and g'' = g (L^2 + L'), which is exactly the generic product-rule
    application of :func:`pochhammer_derivative` to every factor.  Requires
    every block base at ``point`` to be a positive integer (DomainError
    otherwise) — callers use it on the all-positive tail ranges.
    """
    if order not in (1, 2):
        raise ValueError(f"generated route supports orders 1 and 2, got {order}")
    value = bp.scalar
    log_d = _F(0)
    log_dd = _F(0)
    for x, k, e in bp.blocks:
        base = point + x
        if k == 0:
            continue
        if base < 1:
            raise DomainError(
                f"block (t + {x})_{k} at t = {point} has base {base} < 1; "
                "the derivative rule does not apply")
        value = value * _F(pochhammer(base, k)) ** e
        log_d += e * (harmonic(1, base + k - 1) - harmonic(1, base - 1))
        log_dd -= e * (harmonic(2, base + k - 1) - harmonic(2, base - 1))
    for s, e in bp.linears:
        base = point + s
        if base == 0:
            raise PoleError(f"linear factor (t + {s}) vanishes at t = {point}")
        value = value * base ** e
        log_d += e / base
        log_dd -= e / base ** 2
    out = [value]
    out.append(value * log_d)
    if order >= 2:
        out.append(value * (log_d * log_d + log_dd))
    return out


def _oracle_derivatives(kernel: LinearFactorProduct, point: int, order: int) -> list[Fraction]:
    """[f, f', ..., f^(order)](point) for an expanded kernel (the blind route)."""
    numerator, den_factors = kernel.expand_parts()
    return factored_derivative_values(numerator, den_factors, point, order)


# ---------------------------------------------------------------------------
# printed summand formulas (harmonic-number closed forms)
# ---------------------------------------------------------------------------


def _rising_ext(x: int, k: int) -> Fraction:
    """(x)_k extended to negative k by (x)_{-k} = 1/((x-k)_k)."""
    if k >= 0:
        return _F(pochhammer(x, k))
    base = pochhammer(x + k, -k)
    if base == 0:
        raise DomainError(f"extended rising factorial ({x})_({k}) hits a zero factor")
    return _F(1, base)


def left_tail_summand(p: FormParameters, nu: int) -> Fraction:
    """Printed harmonic-number formula for the left tail summand at v = nu >= 1.

    Equals (d/dt left kernel)(nu + 2n - m): the summand of the tail part of
    the left series after re-indexing so the sum starts at 1.
    """
    n, m = p.n, p.m
    if nu < 1:
        raise RangeError(f"left tail summand needs nu >= 1, got {nu}")
    s1 = lambda a: harmonic(1, a)  # noqa: E731 - local shorthand
    prefactor = (
        _F((-1) ** m * factorial(n) ** 2,
           2 * factorial(m) * factorial(2 * n - m))
        * _rising_ext(1 + nu, 2 * n - m - 1)
        * pochhammer(n - m + nu, m)
        * pochhammer(3 * n - m + 1 + nu, n)
        * pochhammer(3 * n - m + 1 + nu, 2 * n - m)
        / (_F(pochhammer(2 * n - m + nu, n + 1)) ** 3
           * pochhammer(2 * n - m + nu, 2 * n - m + 1))
    )
    bracket = (
        _F(-6 * nu)
        + nu * (5 * n - 2 * m + 2 * nu) * (
            - s1(nu)
            - s1(n - m + nu)
            + 5 * s1(2 * n - m + nu)
            - 5 * s1(3 * n - m + nu)
            - s1(4 * n - 2 * m + nu)
            + s1(n + nu)
            + s1(4 * n - m + nu)
            + s1(5 * n - 2 * m + nu))
        + _F(5 * n * (m - 2 * n), m - 2 * n - nu)
        + _F(n * (3 * n - 2 * m), n + nu)
        + _F(3 * n * (m - n), n - m + nu)
    )
    return prefactor * bracket


def left_mid_summand(p: FormParameters, nu: int) -> Fraction:
    """Printed formula for the left mid-range summand, 1 <= nu <= n.

    Equals (d/dt left kernel)(nu + n - m); vanishes for nu <= m through its
    (nu - m)_m factor.
    """
    n, m = p.n, p.m
    if not 1 <= nu <= n:
        raise RangeError(f"left mid summand needs 1 <= nu <= n, got nu = {nu}")
    return (
        _F((-1) ** m) * (nu + n - m + _F(n, 2))
        * _F(pochhammer(nu - m, m), factorial(m))
        * _F((-1) ** (n - nu) * factorial(nu + n - m - 1) * factorial(n - nu),
             factorial(2 * n - m))
        * _F(pochhammer(nu + 2 * n - m + 1, n), pochhammer(nu + n - m, n + 1))
        * _F(pochhammer(nu + 2 * n - m + 1, 2 * n - m),
             pochhammer(nu + n - m, 2 * n - m + 1))
        * _F(factorial(n), pochhammer(nu + n - m, n + 1)) ** 2
    )


def left_mid_sum(p: FormParameters) -> Fraction:
    """Exact finite mid-range part of the left series: sum_{nu=m+1}^{n}."""
    return sum((left_mid_summand(p, nu) for nu in range(p.m + 1, p.n + 1)),
               start=_F(0))


def left_split_check(p: FormParameters) -> bool:
    """Re-derive the left form from its tail + mid split and compare."""
    kernel = left_kernel(p)
    expansion = partial_fractions(kernel.expand(), kernel.denominator_shifts())
    tail = derivative_tail_sum(expansion, 1, 2 * p.n - p.m + 1)
    split_value = _F(-1, 3) * (tail + ZetaLinearForm.from_constant(left_mid_sum(p)))
    return split_value == left_form(p)


def right_mid_summand(p: FormParameters, j: int, nu: int) -> Fraction:
    """Printed formula for the right mid-range summand, 0 <= j < nu <= n.

    Equals (d^2/dt^2 right kernel term_j)(nu) on that range.
    """
    n, m = p.n, p.m
    if not 0 <= j <= n - 1:
        raise RangeError(f"right mid summand needs 0 <= j <= n-1, got j = {j}")
    if not j < nu <= n:
        raise RangeError(f"right mid summand needs j < nu <= n, got nu = {nu}")
    s1 = lambda a: harmonic(1, a)  # noqa: E731 - local shorthand
    prefactor = _F(
        2 * (-1) ** (n + nu) * binomial(n, j) ** 2 * binomial(2 * n - m + j, n)
        * factorial(n - nu)                 # (1)_{n - nu}
        * factorial(n - m + nu)             # (2)_{n - m + nu - 1}
        * pochhammer(1 - j + nu, n - 1),
        nu ** 3 * (n - m + nu) ** 2
        * pochhammer(1 + nu, n) * pochhammer(1 + nu, 2 * n - m))
    core = nu * (nu - j) * (n - m + nu)
    bracket = (
        core * (_F(1, j - n - nu) - s1(nu - j) + s1(n - j + nu))
        + core * (-s1(2 * n - m + nu) + s1(nu))
        + core * (s1(nu) - s1(n + nu))
        + _F(-nu * (nu - j) + nu * (n - m + nu))
        + 2 * (j - nu) * (n - m + nu)
        + core
        + core * (_F(-1) + s1(n - m + nu))
        - core * s1(n - nu)
    )
    return prefactor * bracket


def right_low_summand(p: FormParameters, j: int, nu: int) -> Fraction:
    """Printed formula for the right low-range summand, 1 <= nu <= j <= n.

    Equals (d^2/dt^2 right kernel term_j)(nu) on that range, where both
    vanishing factors turn the second derivative into twice a cross product.
    """
    n, m = p.n, p.m
    if not 1 <= j <= n:
        raise RangeError(f"right low summand needs 1 <= j <= n, got j = {j}")
    if not 1 <= nu <= j:
        raise RangeError(f"right low summand needs 1 <= nu <= j, got nu = {nu}")
    return _F(
        2 * binomial(n, j) ** 2 * binomial(2 * n - m + j, n)
        * (-1) ** (n + nu)
        * factorial(n + nu - m - 1) * factorial(n - nu) * factorial(n + nu - j - 1)
        * pochhammer(nu - j, j - nu),
        pochhammer(nu, n + 1) * pochhammer(nu, 2 * n - m + 1))


def right_finite_sum(p: FormParameters) -> Fraction:
    """Exact finite part of the right series: all (j, nu) with 1 <= nu <= n."""
    n = p.n
    total = _F(0)
    for j in range(0, n):
        for nu in range(j + 1, n + 1):
            total += right_mid_summand(p, j, nu)
    for j in range(1, n + 1):
        for nu in range(1, j + 1):
            total += right_low_summand(p, j, nu)
    return total


def right_tail_component(p: FormParameters, j: int) -> ZetaLinearForm:
    """Exact tail of the j-th right series from v = n+1 on (shifted to 1)."""
    kernel = right_kernel_term(p, j).shifted(p.n)
    expansion = partial_fractions(kernel.expand(), kernel.denominator_shifts())
    return derivative_tail_sum(expansion, 2, 1)


def right_split_check(p: FormParameters) -> bool:
    """Re-derive the right form from its tail + finite split and compare."""
    total = ZetaLinearForm.from_constant(right_finite_sum(p))
    for j in range(p.n + 1):
        total = total + right_tail_component(p, j)
    return _F(1, 6) * total == right_form(p)


# ---------------------------------------------------------------------------
# summand audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SummandCheck:
    """One pointwise comparison of independent summand evaluation routes."""

    family: str
    n: int
    m: int
    j: int | None
    nu: int
    routes: tuple[str, ...]
    values: tuple[str, ...]

    @property
    def agree(self) -> bool:
        return len(set(self.values)) == 1


def _sample(rng: random.Random, population: range, count: int) -> list[int]:
    if len(population) <= count:
        return list(population)
    return sorted(rng.sample(list(population), count))


def audit_summands(n_max: int = 10, samples: int = 2, seed: int = 0) -> list[SummandCheck]:
    """Compare summand evaluation routes on sampled in-range points.

    For every cell 0 <= m <= n <= n_max and every summand family, ``samples``
    admissible points are drawn (deterministically from ``seed``) and each
    available route is evaluated exactly:

    * left-tail:  printed formula / polynomial oracle / generated rule,
    * left-mid:   printed formula / polynomial oracle,
    * right-tail: polynomial oracle / generated rule (no printed form exists
      for the full tail summand — its source is elided),
    * right-mid:  printed formula / polynomial oracle,
    * right-low:  printed formula / polynomial oracle.
    """
    rng = random.Random(seed)
    checks: list[SummandCheck] = []

    def record(family: str, p: FormParameters, j: int | None, nu: int,
               routes: dict[str, Fraction]) -> None:
        checks.append(SummandCheck(
            family, p.n, p.m, j, nu,
            tuple(routes.keys()), tuple(str(v) for v in routes.values())))

    for n in range(n_max + 1):
        for m in range(n + 1):
            p = FormParameters(n, m)
            shift = 2 * n - m
            for nu in _sample(rng, range(1, 2 * n + 7), samples):
                record("left-tail", p, None, nu, {
                    "printed": left_tail_summand(p, nu),
                    "oracle": _oracle_derivatives(left_kernel(p), nu + shift, 1)[1],
                    "generated": _generated_derivatives(_left_blocks(p), nu + shift, 1)[1],
                })
            for nu in _sample(rng, range(1, n + 1), samples):
                record("left-mid", p, None, nu, {
                    "printed": left_mid_summand(p, nu),
                    "oracle": _oracle_derivatives(left_kernel(p), nu + n - m, 1)[1],
                })
            for nu in _sample(rng, range(n + 1, 3 * n + 7), samples):
                j = rng.randrange(0, n + 1)
                record("right-tail", p, j, nu, {
                    "oracle": _oracle_derivatives(right_kernel_term(p, j), nu, 2)[2],
                    "generated": _generated_derivatives(_right_blocks(p, j), nu, 2)[2],
                })
            if n >= 1:
                for _ in range(min(samples, n)):
                    j = rng.randrange(0, n)
                    nu = rng.randint(j + 1, n)
                    record("right-mid", p, j, nu, {
                        "printed": right_mid_summand(p, j, nu),
                        "oracle": _oracle_derivatives(right_kernel_term(p, j), nu, 2)[2],
                    })
                for _ in range(min(samples, n)):
                    j = rng.randint(1, n)
                    nu = rng.randint(1, j)
                    record("right-low", p, j, nu, {
                        "printed": right_low_summand(p, j, nu),
                        "oracle": _oracle_derivatives(right_kernel_term(p, j), nu, 2)[2],
                    })
    return checks


# ---------------------------------------------------------------------------
# numeric evaluation of the defining series (float-side cross-check)
# ---------------------------------------------------------------------------


def _block_values_positive(bp: _BlockProduct, point: int) -> bool:
    for x, k, _ in bp.blocks:
        if k > 0 and point + x < 1:
            return False
    return True


def _series_tail_numeric(bp: _BlockProduct, kernel: LinearFactorProduct,
                         order: int, start: int, scale_pow: int,
                         target: Fraction) -> tuple[Fraction, Fraction]:
    """(value, error bound) for sum_{v >= start} g^(order)(v), numerically.

    Truncates at a cutoff A chosen so the Euler–Maclaurin closure of the
    remainder is below ``target``: the partial sum start..A-1 runs in
    fixed-point arithmetic (scale 10^-scale_pow) on the logarithmic-derivative
    stream, and the tail from A is closed with the exact corrections

        -g_antiderivative(A) + g(A)/2 - g'(A)/12 + g'''(A)/720 - g^(5)(A)/30240.

    All corrections are exact Fractions; only the streamed partial sum
    carries rounding, bounded crudely but safely in the returned bound.
    """
    numerator, den_factors = kernel.expand_parts()

    cutoff = 1 << 13
    while True:
        high = factored_derivative_values(numerator, den_factors, cutoff, order + 7)
        remainder_bound = 8 * abs(high[order + 7]) * _F(1, 1209600)
        if remainder_bound < target / 4:
            break
        cutoff *= 2

    corrections = (-high[order - 1] + high[order] / 2 - high[order + 1] / 12
                   + high[order + 3] / 720 - high[order + 5] / 30240)

    scale = 10 ** scale_pow

    def fix(value: Fraction) -> int:
        return value.numerator * scale // value.denominator

    value = bp.scalar
    log_d = _F(0)
    log_dd = _F(0)
    for x, k, e in bp.blocks:
        base = start + x
        value = value * _F(pochhammer(base, k)) ** e
        if k > 0:
            log_d += e * (harmonic(1, base + k - 1) - harmonic(1, base - 1))
            log_dd -= e * (harmonic(2, base + k - 1) - harmonic(2, base - 1))
    doubled = []
    for s, e in bp.linears:
        two_base = 2 * start + int(2 * s)
        value = value * _F(two_base, 2) ** e
        log_d += e * _F(2, two_base)
        log_dd -= e * _F(4, two_base * two_base)
        doubled.append((int(2 * s), e))

    l_int = fix(log_d)
    ld_int = fix(log_dd)
    partial = 0
    for nu in range(start, cutoff):
        if order == 1:
            inner = l_int
        else:
            inner = (l_int * l_int) // scale + ld_int
        partial += value.numerator * inner // value.denominator

        ratio_num = 1
        ratio_den = 1
        delta_l = 0
        delta_ld = 0
        for x, k, e in bp.blocks:
            if k == 0:
                continue
            top, bottom = nu + x + k, nu + x
            if e > 0:
                ratio_num *= top ** e
                ratio_den *= bottom ** e
            else:
                ratio_num *= bottom ** (-e)
                ratio_den *= top ** (-e)
            delta_l += e * (scale // top - scale // bottom)
            delta_ld -= e * (scale // (top * top) - scale // (bottom * bottom))
        for two_s, e in doubled:
            top, bottom = 2 * nu + 2 + two_s, 2 * nu + two_s
            if e > 0:
                ratio_num *= top ** e
                ratio_den *= bottom ** e
            else:
                ratio_num *= bottom ** (-e)
                ratio_den *= top ** (-e)
            delta_l += e * (2 * scale // top - 2 * scale // bottom)
            delta_ld -= e * (4 * scale // (top * top) - 4 * scale // (bottom * bottom))
        value = value * _F(ratio_num, ratio_den)
        l_int += delta_l
        ld_int += delta_ld

    steps = cutoff - start
    stream_slack = _F(200 * steps * max(1, steps), scale)
    return _F(partial, scale) + corrections, remainder_bound + stream_slack


def left_form_numeric(p: FormParameters, digits: int = 30) -> FixedPointNumber:
    """Numeric re-evaluation of the left form from its defining series.

    The head n-m+1 .. 2n-m (where kernel factors vanish and the stream's
    logarithmic route is unavailable) is summed exactly pointwise; the rest
    is truncated + Euler–Maclaurin-closed by :func:`_series_tail_numeric`.
    """
    kernel = left_kernel(p)
    numerator, den_factors = kernel.expand_parts()
    head = _F(0)
    for nu in range(p.n - p.m + 1, 2 * p.n - p.m + 1):
        head += factored_derivative_values(numerator, den_factors, nu, 1)[1]
    scale_pow = digits + 40
    target = _F(1, 10 ** (digits + 15))
    tail, bound = _series_tail_numeric(_left_blocks(p), kernel, 1,
                                       2 * p.n - p.m + 1, scale_pow, target)
    value = _F(-1, 3) * (head + tail)
    return FixedPointNumber.from_fraction(value, digits, inherent_error=bound / 3)


def right_form_numeric(p: FormParameters, digits: int = 30) -> FixedPointNumber:
    """Numeric re-evaluation of the right form from its defining series."""
    scale_pow = digits + 40
    target = _F(1, 10 ** (digits + 15))
    total = _F(0)
    bound = _F(0)
    for j in range(p.n + 1):
        kernel = right_kernel_term(p, j)
        numerator, den_factors = kernel.expand_parts()
        for nu in range(1, p.n + 1):
            total += factored_derivative_values(numerator, den_factors, nu, 2)[2]
        tail, tail_bound = _series_tail_numeric(_right_blocks(p, j), kernel, 2,
                                                p.n + 1, scale_pow, target)
        total += tail
        bound += tail_bound
    return FixedPointNumber.from_fraction(total / 6, digits, inherent_error=bound / 6)
