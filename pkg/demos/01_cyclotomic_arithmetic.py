#!/usr/bin/env python3
"""Exact cyclotomic arithmetic: roots of unity, Galois actions, golden ratio."""

from fractions import Fraction

from repscreen.cyclo import CycNum, cyclotomic_poly, root

print("Cyclotomic polynomials, computed by exact division:")
for n in (1, 4, 5, 12):
    coeffs = cyclotomic_poly(n)
    terms = " + ".join(
        f"{c}x^{i}" for i, c in enumerate(coeffs) if c
    ).replace("+ -", "- ")
    print(f"  Phi_{n}(x) = {terms}")

print("\nSums of roots of unity collapse to rationals:")
s = root(5, 1) + root(5, 2) + root(5, 3) + root(5, 4)
print(f"  z5 + z5^2 + z5^3 + z5^4 = {s.as_rational()}")

sqrt2 = root(8, 1) + root(8, 7)
print(f"  (z8 + z8^-1)^2 = {(sqrt2 * sqrt2).as_rational()}   (so z8 + z8^-1 = sqrt 2)")

phi = CycNum.one() + root(5, 1) + root(5, 4)
phi_conjugate = -root(5, 1) - root(5, 4)
print(f"  golden ratio as 1 + z5 + z5^4; phi * phi' = {(phi * phi_conjugate).as_rational()}")
print(f"  phi + phi' = {(phi + phi_conjugate).as_rational()}")

print("\nGalois actions permute the roots:")
x = root(7, 2)
print(f"  conjugation sends z7^2 to z7^{x.conj()}  -> equals z7^5: {x.conj() == root(7, 5)}")
y = root(35, 3)
print(f"  galois(2) then galois(3) equals galois(6): {y.galois(2).galois(3) == y.galois(6)}")

print("\nSerialization is canonical and bit-exact:")
val = root(12, 1) * Fraction(1, 2) + 5
print(f"  {val!r} -> {val.to_json()}")
print(f"  round-trips: {CycNum.from_json(val.to_json()) == val}")
