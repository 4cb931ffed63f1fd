#!/usr/bin/env python3
"""Dev-only: generate the committed character-table and generator fixtures.

  python3 tools/make_group_fixtures.py small   # A5, SL(2,5), M11 + gens files
  python3 tools/make_group_fixtures.py big     # M12 and 2.M12 dumps for gapconv

Every table is verified exactly (orthogonality etc.) before being written.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "tools"))

from dixonlib import exact_table
from golay3 import build_all
from matrix_groups import (
    a5_rotation_generators,
    binary_icosahedral_generators,
    c2_line_generators,
    s3_standard_generators,
)

from repscreen import chartab
from repscreen.cyclo import CycNum
from repscreen.oracle import enumerate_group, perm_to_cycles

DATA = ROOT / "src" / "repscreen" / "data"
GENS = DATA / "gens"
DUMPS = ROOT / "gapconv" / "fixtures"


def write_gens_perms(path: Path, perms):
    path.write_text(json.dumps([perm_to_cycles(p) for p in perms], indent=1) + "\n")


def write_gens_matrices(path: Path, mats):
    payload = [[[v.to_json() for v in row] for row in m] for m in mats]
    path.write_text(json.dumps(payload, indent=1) + "\n")


def save_table(table, filename: str, where: Path = DATA):
    out = where / filename
    out.write_text(chartab.dump_json(table) + "\n")
    print(f"wrote {out.relative_to(ROOT)}")


# ---------------------------------------------------------------------------
# dump format for the converter fixtures

def cyc_to_gap(v: CycNum) -> str:
    """A CycNum as a GAP-style cyclotomic expression (sums of c*E(N)^k)."""
    v = v.normalized()
    q = v.as_rational()
    if q is not None:
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    parts = []
    for j, c in enumerate(v.coeffs):
        if not c:
            continue
        mag = abs(c)
        coeff = "" if mag == 1 else (
            f"{mag.numerator}*" if mag.denominator == 1
            else f"{mag.numerator}/{mag.denominator}*"
        )
        if j == 0:
            term = str(mag) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
        else:
            power = f"E({v.N})" if j == 1 else f"E({v.N})^{j}"
            term = coeff + power
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + term)
    return "".join(parts)


def write_dump(table, path: Path):
    lines = [
        "GAPDUMP v1",
        f"GROUP {table.group_name}",
        f"ORDER {table.order}",
        f"NCLASSES {table.n_classes}",
        "NAMES " + " ".join(c.name for c in table.classes),
        "SIZES " + " ".join(str(c.size) for c in table.classes),
        "ORDERS " + " ".join(str(c.element_order) for c in table.classes),
    ]
    for p in (2, 3, 5, 7, 11):
        # 1-based class indices, the way a CAS prints them
        lines.append(
            f"POWERMAP {p} " + " ".join(str(c.power_maps[p] + 1) for c in table.classes)
        )
    for x in table.irreducibles:
        lines.append(f"IRR {x.name} {x.degree}")
        lines.extend(cyc_to_gap(v) for v in x.values)
        lines.append("ENDIRR")
    lines.append("END")
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path.relative_to(ROOT)}")


def make_small():
    GENS.mkdir(parents=True, exist_ok=True)

    s3m = s3_standard_generators()
    write_gens_matrices(GENS / "s3_std2.json", s3m)
    c2m = c2_line_generators()
    write_gens_matrices(GENS / "c2_line.json", c2m)

    a5m = a5_rotation_generators()
    write_gens_matrices(GENS / "a5_rot3.json", a5m)
    icosa = binary_icosahedral_generators()
    write_gens_matrices(GENS / "sl25_su2.json", icosa)

    t0 = time.time()
    A5 = enumerate_group([
        (1, 2, 3, 4, 0),   # (1,2,3,4,5)
        (1, 0, 3, 2, 4),   # (1,2)(3,4)
    ])
    write_gens_perms(GENS / "a5_perm.json", A5.generators)
    save_table(exact_table(A5, "A5"), "a5.json")
    print(f"  A5 in {time.time()-t0:.1f}s")

    t0 = time.time()
    SL25 = enumerate_group(icosa)
    save_table(exact_table(SL25, "SL(2,5)"), "sl25.json")
    print(f"  SL(2,5) in {time.time()-t0:.1f}s")

    t0 = time.time()
    built = build_all()
    gens11, M11 = built["m11"]
    write_gens_perms(GENS / "m11_perm.json", gens11)
    save_table(exact_table(M11, "M11"), "m11.json")
    print(f"  M11 in {time.time()-t0:.1f}s")

    # S3 perm generators for the oracle CLI demos
    write_gens_perms(GENS / "s3_perm.json", [(1, 0, 2), (1, 2, 0)])
    return built


def make_big(built=None):
    DUMPS.mkdir(parents=True, exist_ok=True)
    (DUMPS.parent / "fixtures").mkdir(exist_ok=True)

    # S3 dump straight from the hand-built fixture (round-trip target)
    s3 = chartab.load(DATA / "s3.json")
    write_dump(s3, DUMPS / "s3.dump")

    if built is None:
        built = build_all()

    t0 = time.time()
    gens12, M12 = built["m12"]
    t_m12 = exact_table(M12, "M12")
    write_dump(t_m12, DUMPS / "m12.dump")
    save_table(t_m12, "m12.json", DUMPS / "expected")
    print(f"  M12 in {time.time()-t0:.1f}s")

    t0 = time.time()
    gens24, M12x2 = built["2m12"]
    t_2m12 = exact_table(M12x2, "2.M12")
    write_dump(t_2m12, DUMPS / "2m12.dump")
    save_table(t_2m12, "2m12.json", DUMPS / "expected")
    print(f"  2.M12 in {time.time()-t0:.1f}s")


if __name__ == "__main__":
    what = sys.argv[1] if len(sys.argv) > 1 else "all"
    (DUMPS / "expected").mkdir(parents=True, exist_ok=True)
    if what in ("small", "all"):
        built = make_small()
    else:
        built = None
    if what in ("big", "all"):
        make_big(built)
