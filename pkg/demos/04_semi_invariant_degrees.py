#!/usr/bin/env python3
"""Minimal semi-invariant degrees d(U) and the per-group scan."""

from pathlib import Path

from repscreen import chartab, invdeg

DATA = Path(__file__).resolve().parents[1] / "src" / "repscreen" / "data"

for name in ("a5", "sl25", "m11"):
    table = chartab.load(DATA / f"{name}.json")
    reports = invdeg.scan(table, k_max=12, faithful_only=True)
    print(invdeg.format_table(table.group_name, reports))
    flagged = invdeg.flagged_entries(reports)
    print(f"  -> table entry: d = {flagged[0].d}, dim = {flagged[0].dim}\n")

print("The A5 row cross-checked by brute force (60 rotation matrices):")
import json

from repscreen.oracle import enumerate_group, invariant_dimensions, matrix_from_json

gens = json.loads((DATA / "gens" / "a5_rot3.json").read_text())
group = enumerate_group([matrix_from_json(m) for m in gens])
dims = invariant_dimensions(group, 6)
print(f"  invariant dimensions in Sym^0..Sym^6: {dims}")
print(f"  first positive degree: {next(k for k in range(1, 7) if dims[k])}")
