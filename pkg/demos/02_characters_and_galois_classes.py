#!/usr/bin/env python3
"""The oracle route: characters -> Galois classes -> simple components.

Rebuilds the decomposition of QG from first principles for one group:
enumerate the irreducible complex characters via the little-group
construction, bucket them into Galois conjugacy classes, read off each
class's character field, and emit one matrix component per class. The
result must coincide with the closed form - and it does, exactly.
"""

from collections import Counter

from metacyclic import (
    GroupElement,
    character_value,
    enumerate_irreducibles,
    galois_classes,
    validate,
    wedderburn_closed_form,
    wedderburn_from_classes,
)
from metacyclic.cli import format_decomposition

params = validate(3, 2, 3, 4)  # |G| = 243, s = 1
print(f"G with (p, n, m, r) = (3, 2, 3, 4), |G| = {params.order}")

chars = enumerate_irreducibles(params)
histogram = Counter(ch.degree for ch in chars)
print(f"\n{len(chars)} irreducible complex characters, by degree: {dict(histogram)}")
print(f"sum of degree^2 = {sum(c.degree ** 2 for c in chars)} = |G|")

print("\nA few exact values of one induced character:")
sample = next(ch for ch in chars if ch.degree == 3 and ch.u == 1)
for i, j in [(0, 0), (1, 0), (3, 0), (0, 3), (3, 3), (1, 1)]:
    value = character_value(sample, GroupElement(i, j), params)
    print(f"  psi(a^{i} b^{j}) = {value!r}")

classes = galois_classes(chars, params)
print(f"\n{len(classes)} Galois conjugacy classes; sizes x counts: "
      f"{dict(Counter(cls.size for cls in classes))}")
for cls in classes[:4]:
    rep = cls.representative
    print(f"  size {cls.size}, field Q(zeta_{3 ** cls.field_level}), "
          f"matrix size {rep.degree}")

oracle = wedderburn_from_classes(classes, params)
closed = wedderburn_closed_form(params)
print(f"\noracle:      {format_decomposition(oracle)}")
print(f"closed form: {format_decomposition(closed)}")
print(f"equal: {oracle == closed}")
