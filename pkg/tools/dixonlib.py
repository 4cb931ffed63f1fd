#!/usr/bin/env python3
"""Dev-only pipeline that computes exact character tables of small groups.

Not part of the shipped package.  Strategy:

1. enumerate the group and its conjugacy classes with repscreen.oracle;
2. build a random integer combination of the class-algebra matrices and
   take its (numeric) eigenvectors -- these are the central characters;
3. recover each character value exactly from the eigenvalue multiplicities
   of a class representative (integers, so safe to round);
4. assemble the table and verify it EXACTLY (orthogonality and friends)
   with repscreen.chartab.validate -- any numeric slip dies here.

The committed fixtures are the exactly-verified outputs of this script.
"""

from __future__ import annotations

import cmath
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from repscreen import chartab
from repscreen.cyclo import CycNum, root
from repscreen.oracle import ExplicitGroup

PRIMES = (2, 3, 5, 7, 11)


def element_powers_class(group: ExplicitGroup, class_index: int, upto: int) -> list[int]:
    """Classes of rep^0ue..rep^upto for the class representative."""
    rep = group.elements[group.class_reps[class_index]]
    out = [0]
    x = group.identity()
    for _ in range(upto):
        x = group.mul(x, rep)
        out.append(group.class_of[group.index[x]])
    return out


def class_matrix_combo(group: ExplicitGroup, weights: list[int]) -> np.ndarray:
    """sum_j weights[j] * M_j where (M_j)_{k,l} = #{(x,y) in C_j x C_k : xy = rep_l}."""
    r = len(group.class_members)
    combo = np.zeros((r, r), dtype=np.float64)
    inv_index = _all_inverses(group)
    for l in range(r):
        g_l = group.elements[group.class_reps[l]]
        for xi in range(group.order):
            j = group.class_of[xi]
            y = group.mul(group.elements[inv_index[xi]], g_l)
            k = group.class_of[group.index[y]]
            combo[k, l] += weights[j]
    return combo


def _all_inverses(group: ExplicitGroup) -> list[int]:
    if group.kind == "perm":
        inv = [0] * group.order
        for xi, x in enumerate(group.elements):
            out = [0] * len(x)
            for i, img in enumerate(x):
                out[img] = i
            inv[xi] = group.index[tuple(out)]
        return inv
    inv = [0] * group.order
    for xi, x in enumerate(group.elements):
        o = group.element_order(x)
        y = group.identity()
        for _ in range(o - 1):
            y = group.mul(y, x)
        inv[xi] = group.index[y]
    return inv


def numeric_characters(group: ExplicitGroup, seed: int = 1) -> np.ndarray:
    """Numeric character values chi[i][k] using class-matrix eigenvectors."""
    r = len(group.class_members)
    sizes = np.array(group.class_sizes(), dtype=np.float64)
    rng = np.random.default_rng(seed)
    for attempt in range(20):
        weights = rng.integers(1, 1000, size=r).tolist()
        combo = class_matrix_combo(group, weights)
        eigvals, eigvecs = np.linalg.eig(combo.astype(np.complex128))
        # need simple eigenvalues so the eigenvectors are the omega vectors
        sorted_vals = np.sort_complex(eigvals)
        gaps = np.abs(np.diff(sorted_vals))
        if r > 1 and gaps.min() < 1e-6 * max(1.0, np.abs(eigvals).max()):
            continue
        chars = np.zeros((r, r), dtype=np.complex128)
        for i in range(r):
            v = eigvecs[:, i]
            v = v / v[0]  # omega(identity class) = 1
            s = np.sum(v * np.conj(v) / sizes)
            deg = math.sqrt(group.order / s.real)
            deg_int = round(deg)
            if abs(deg - deg_int) > 1e-6 * max(1.0, deg):
                break
            chars[i] = deg_int * v / sizes
        else:
            return chars
    raise RuntimeError("could not obtain clean eigenvector data")


def exact_value(
    group: ExplicitGroup, class_index: int, chi_numeric: np.ndarray
) -> CycNum:
    """Exact chi(rep) from eigenvalue multiplicities of the representative."""
    o = group.class_orders[class_index]
    power_classes = element_powers_class(group, class_index, o - 1)
    mult = []
    for l in range(o):
        m = sum(
            chi_numeric[power_classes[i]] * cmath.exp(-2j * cmath.pi * l * i / o)
            for i in range(o)
        ) / o
        m_int = round(m.real)
        if abs(m - m_int) > 0.2 or m_int < 0:
            raise ArithmeticError(
                f"eigenvalue multiplicity not a clean nonnegative integer: {m}"
            )
        mult.append(m_int)
    val = CycNum.zero()
    for l, m in enumerate(mult):
        if m:
            val = val + m * root(o, l)
    return val.normalized()


def exact_table(group: ExplicitGroup, group_name: str, seed: int = 1):
    """Full exact character table, deterministically ordered and named."""
    chars = numeric_characters(group, seed)
    r = len(group.class_members)

    # deterministic class order: identity first, then (element order, size, rep idx)
    order_key = sorted(
        range(r),
        key=lambda c: (
            group.class_orders[c],
            len(group.class_members[c]),
            group.class_reps[c],
        ),
    )
    assert group.class_orders[order_key[0]] == 1  # identity class ends up first

    exact_rows = []
    for i in range(r):
        row = [exact_value(group, c, chars[i]) for c in order_key]
        deg = row[0].as_rational()
        assert deg is not None and deg.denominator == 1
        exact_rows.append((int(deg), row))

    # deterministic irreducible order: trivial first, then degree, then values
    def row_key(item):
        deg, row = item
        trivial = all(v == 1 for v in row)
        return (deg, 0 if trivial else 1, [str(v.to_json()) for v in row])

    exact_rows.sort(key=row_key)

    # names: letters per degree / per element order
    irr_names = _letter_names(deg for deg, _ in exact_rows)
    class_orders_sorted = [group.class_orders[c] for c in order_key]
    class_names = _letter_names(class_orders_sorted)

    # least N with every value in Q(zeta_N)
    conductor = 1
    for _, row in exact_rows:
        for v in row:
            conductor = math.lcm(conductor, v.N)
    new_pos = {c: i for i, c in enumerate(order_key)}
    classes = []
    for c in order_key:
        powers = element_powers_class(group, c, max(PRIMES))
        pmaps = {
            str(p): new_pos[powers[p % group.class_orders[c]]] for p in PRIMES
        }
        classes.append(
            {
                "name": class_names[new_pos[c]],
                "size": str(len(group.class_members[c])),
                "order": group.class_orders[c],
                "powermaps": pmaps,
            }
        )

    irreducibles = []
    for (deg, row), name in zip(exact_rows, irr_names):
        irreducibles.append(
            {
                "name": name,
                "degree": deg,
                "values": [v.to_json() for v in row],
            }
        )

    obj = {
        "group": group_name,
        "order": str(group.order),
        "conductor": conductor,
        "classes": classes,
        "irreducibles": irreducibles,
    }
    table = chartab.loads(obj, source=group_name)
    report = chartab.validate(table, deep=(group.order <= 10_000))
    if not report.ok:
        print(report)
        raise RuntimeError(f"{group_name}: exact verification FAILED")
    return table


def _letter_names(keys) -> list[str]:
    out = []
    seen: dict[int, int] = {}
    for k in keys:
        i = seen.get(k, 0)
        seen[k] = i + 1
        suffix = ""
        j = i
        while True:
            suffix = "abcdefghijklmnopqrstuvwxyz"[j % 26] + suffix
            j = j // 26 - 1
            if j < 0:
                break
        out.append(f"{k}{suffix}")
    return out
