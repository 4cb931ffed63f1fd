#!/usr/bin/env python3
"""Loading, validating, and querying character tables."""

from pathlib import Path

from repscreen import chartab
from repscreen.chartab import inner_product, power_class, validate

DATA = Path(__file__).resolve().parents[1] / "src" / "repscreen" / "data"

m11 = chartab.load(DATA / "m11.json")
print(f"{m11.group_name}: order {m11.order}, {m11.n_classes} classes, "
      f"conductor {m11.conductor}")
print("degrees:", [x.degree for x in m11.irreducibles])
print("class layout:", [(c.name, c.size) for c in m11.classes])

print("\nEvery stated invariant is checked exactly:")
print(validate(m11))

print("\nPower maps compose: the class of g^6 for g of order 8")
c8 = next(i for i, c in enumerate(m11.classes) if c.element_order == 8)
target = power_class(m11, c8, 6)
print(f"  class {m11.classes[c8].name} ^6 -> {m11.classes[target].name} "
      f"(order {m11.classes[target].element_order})")

print("\nInner products are exact rationals:")
for i in (0, 1, 5):
    for j in (0, 1):
        v = inner_product(m11, m11.class_function(i), m11.class_function(j))
        print(f"  <{m11.irreducibles[i].name}, {m11.irreducibles[j].name}> = "
              f"{v.as_rational()}")
