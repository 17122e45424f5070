"""Anatomy of a kernel: factored products, expansion, partial fractions.

Every series summand in the package is a derivative of a rational function
built from shifted linear factors.  This demo dissects the left kernel at
(n, m) = (2, 1): its factor structure, the merged pole pattern, the
certified partial-fraction decomposition, and how derivative tails of the
decomposition turn into zeta values.
"""

from fractions import Fraction

from apery4 import (FormParameters, derivative_tail_sum, left_kernel,
                    partial_fractions)

p = FormParameters(2, 1)
kernel = left_kernel(p)

print("factored form (shift, exponent) pairs of (t + shift)^exponent:")
print(f"  scalar {kernel.scalar}")
for shift, exponent in kernel.factors:
    print(f"  shift {str(shift):>5}  exponent {exponent:+d}")
print(f"degree gap (denominator minus numerator): {kernel.degree_gap}")

# Merging already cancelled most candidate poles: the factors with negative
# exponent sit at shifts 0..n only.
print(f"denominator shifts after merging: {kernel.denominator_shifts()}")

f = kernel.expand()
print(f"\nexpanded: numerator degree {f.numerator.degree}, "
      f"denominator degree {f.denominator.degree}")

expansion = partial_fractions(f, kernel.denominator_shifts())
print("\npartial fractions (certified against the original by rebuilding):")
assert expansion.polynomial_part.is_zero
for term in expansion.terms:
    for j, coefficient in enumerate(term.coefficients, start=1):
        if coefficient:
            print(f"  {coefficient} / (t + {term.shift})^{j}")
assert expansion.reconstruct() == f

# Summing d/dt of each principal-part term from v = n-m+1 gives the exact
# linear form in zeta values -- all tails are shifted polyzeta tails.
tail = derivative_tail_sum(expansion, 1, p.n - p.m + 1)
print(f"\nsum of first derivatives from v = {p.n - p.m + 1}: {tail}")
print(f"scaled by -1/3 this is the left form: {Fraction(-1, 3) * tail}")
