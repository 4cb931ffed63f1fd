#!/usr/bin/env python3
"""Symmetric-power characters, decompositions, and the Delta multisets."""

from pathlib import Path

from repscreen import chartab, sympow

DATA = Path(__file__).resolve().parents[1] / "src" / "repscreen" / "data"

s3 = chartab.load(DATA / "s3.json")
std = s3.class_function(2)
print("S3, standard 2-dim character (2, 0, -1):")
for k in range(5):
    sk = sympow.sym_power_character(s3, std, k)
    deco = sympow.decompose(s3, sk)
    vals = [str(v.as_rational()) for v in sk.values]
    print(f"  Sym^{k}: values ({', '.join(vals)}),  constituents {deco.names()}")

print("\nExterior square is the sign character:")
e2 = sympow.ext_power_character(s3, std, 2)
print("  Lambda^2 values:", [str(v.as_rational()) for v in e2.values])

m11 = chartab.load(DATA / "m11.json")
i10 = next(
    i for i, x in enumerate(m11.irreducibles)
    if x.degree == 10 and not all(v.is_rational() for v in x.values)
)
print(f"\nM11, complex 10-dim irreducible {m11.irreducibles[i10].name}: "
      "dimension multisets of Sym^k of the dual")
delta = sympow.delta_table(m11, m11.class_function(i10), 6, verbose=True)
for k in range(1, 7):
    print(f"  Delta_{k} = {delta.bracket(k)}")
print("the 1 at degree 4 is the semi-invariant that rules this case out")

print("\nThe headline 12-dimensional data, straight from the shipped fixture:")
suz = sympow.load_delta(DATA / "suz12_delta.json")
for k in range(1, 13):
    print(f"  Delta_{k:<2} = {suz.bracket(k)}")
