#!/usr/bin/env python3
"""Walkthrough: from presentation parameters to the decomposition of QG.

The group is G = <a, b | a^(p^n) = b^(p^m) = 1, b a b^-1 = a^r> for an odd
prime p. Everything about QG is determined by (p, n, m) and the exponent s
of the multiplicative order p^s of r mod p^n, and the decomposition comes
out of closed-form counting - no matrices, no floats.
"""

from metacyclic import validate, wedderburn_closed_form
from metacyclic.cli import format_decomposition

EXAMPLES = [
    (3, 4, 2, 10),  # r = 10 = 1 + 3^2, so s = 2
    (3, 3, 3, 4),   # r = 4 = 1 + 3, so s = 2
    (3, 2, 3, 4),   # r = 4 = 1 + 3, so s = 1
]

print("Three textbook groups and their rational group algebras")
print("=" * 64)
for p, n, m, r in EXAMPLES:
    params = validate(p, n, m, r)
    dec = wedderburn_closed_form(params)
    print(f"\nG = <a, b | a^{p}^{n}, b^{p}^{m}, b a b^-1 = a^{r}>   |G| = {params.order}")
    print(f"  derived: s = {params.s} (order of r mod p^n is p^s), k = {params.k}")
    print(f"  QG = {format_decomposition(dec)}")
    print(f"  dimension check: sum of mult * q^2 * [Q(z):Q] = {dec.dimension()}")

print("\nOnly s matters, not which twist r realizes it")
print("=" * 64)
for k in (1, 2, 4):
    r = 1 + k * 3 ** 2
    params = validate(3, 4, 2, r)
    line = format_decomposition(wedderburn_closed_form(params))
    print(f"  r = {r:3d} (k = {k}):  {line}")

print("\nThe commuting case routes through the abelian grid")
print("=" * 64)
for n, m in [(1, 0), (1, 1), (2, 1), (3, 2)]:
    params = validate(3, max(n, m), min(n, m), 1, abelian=True)
    line = format_decomposition(wedderburn_closed_form(params))
    print(f"  C_(3^{n}) x C_(3^{m}):  {line}")
