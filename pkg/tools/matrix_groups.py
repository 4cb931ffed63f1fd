#!/usr/bin/env python3
"""Dev-only: exact matrix generators for the small matrix-group fixtures.

Builds and verifies:
  * the 3-dimensional rotation representation of A5 (icosahedral rotations,
    entries in Q(zeta_5), golden-ratio arithmetic);
  * the binary icosahedral group 2I = SL(2,5) inside SU(2), realized from
    unit icosian quaternions (entries in Q(zeta_20));
  * the standard 2-dimensional representation of S3 (integer entries).

Each candidate generator set is verified by full enumeration (order and
class layout), so nothing here rests on memory.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from repscreen.cyclo import CycNum, root
from repscreen.oracle import enumerate_group

HALF = Fraction(1, 2)


def cn(q) -> CycNum:
    return CycNum.from_rational(q)


# golden ratio and friends, exactly in Q(zeta_5)
PHI = cn(1) + root(5, 1) + root(5, 4)          # (1+sqrt5)/2
PHI_INV = root(5, 1) + root(5, 4)              # hold on: this is phi - 1 = 1/phi
SQRT5 = cn(1) + 2 * root(5, 1) + 2 * root(5, 4)


def a5_rotation_generators():
    """Cyclic coordinate rotation (order 3) and a 5-fold icosahedral rotation."""
    z = CycNum.zero()
    one = CycNum.one()
    cyc = (
        (z, z, one),
        (one, z, z),
        (z, one, z),
    )
    h = cn(HALF)
    five = (
        (PHI_INV * h, -PHI * h, h),
        (PHI * h, h, PHI_INV * h),
        (-h, PHI_INV * h, PHI * h),
    )
    return [cyc, five]


def su2_from_quaternion(a, b, c, d):
    """Unit quaternion a+bi+cj+dk as an SU(2) matrix over Q(zeta_20)."""
    i = root(4, 1)
    return (
        (a + b * i, c + d * i),
        (-c + d * i, a - b * i),
    )


def binary_icosahedral_generators():
    """Two unit icosians generating all 120 elements of 2I."""
    h = cn(HALF)
    s = su2_from_quaternion(h, h, h, h)                      # order 6
    t = su2_from_quaternion(PHI * h, PHI_INV * h, h, cn(0))  # order 10
    return [s, t]


def s3_standard_generators():
    """2-dim standard representation of S3 (root-lattice basis)."""
    return [
        ((cn(-1), cn(1)), (cn(0), cn(1))),
        ((cn(0), cn(-1)), (cn(1), cn(-1))),
    ]


def c2_line_generators():
    return [((cn(-1),),)]


def verify():
    checks = [
        ("A5 rotations", a5_rotation_generators(), 60, [1, 12, 12, 15, 20]),
        ("2I = SL(2,5)", binary_icosahedral_generators(), 120,
         [1, 1, 12, 12, 12, 12, 20, 20, 30]),
        ("S3 standard", s3_standard_generators(), 6, [1, 2, 3]),
        ("C2 on a line", c2_line_generators(), 2, [1, 1]),
    ]
    groups = {}
    for name, gens, order, sizes in checks:
        g = enumerate_group(gens)
        got = sorted(g.class_sizes())
        status = "ok" if (g.order == order and got == sizes) else "MISMATCH"
        print(f"{name}: order {g.order}, class sizes {got} [{status}]")
        if status != "ok":
            raise SystemExit(f"{name}: expected order {order}, sizes {sizes}")
        groups[name] = g
    return groups


if __name__ == "__main__":
    verify()
