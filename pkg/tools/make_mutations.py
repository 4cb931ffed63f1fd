#!/usr/bin/env python3
"""Dev-only: single-entry mutation fixtures for the validator tests.

Each output file differs from a shipped fixture in exactly one entry and
must trip a specific validation check; the manifest records which check
and a substring the diagnostic must contain.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

DATA = ROOT / "src" / "repscreen" / "data"
OUT = ROOT / "tests" / "fixtures" / "mutations"


def load(name):
    return json.loads((DATA / name).read_text())


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    manifest = {}

    # 1. one character value bumped by +1 -> row orthogonality breaks
    s3 = load("s3.json")
    assert s3["irreducibles"][2]["values"][1] == "0"
    s3["irreducibles"][2]["values"][1] = "1"
    (OUT / "s3_value_plus1.json").write_text(json.dumps(s3, indent=1))
    manifest["s3_value_plus1.json"] = {
        "check": "first-orthogonality", "locates": "(2,"
    }

    # 2. one class size bumped -> size bookkeeping breaks
    a5 = load("a5.json")
    assert a5["classes"][1]["size"] == "15"
    a5["classes"][1]["size"] = "16"
    (OUT / "a5_class_size.json").write_text(json.dumps(a5, indent=1))
    manifest["a5_class_size.json"] = {
        "check": "class-sizes-sum", "locates": "61"
    }

    # 3. one power map redirected -> order compatibility breaks
    m11 = load("m11.json")
    c8 = next(i for i, c in enumerate(m11["classes"]) if c["order"] == 8)
    assert m11["classes"][c8]["powermaps"]["2"] != 0
    m11["classes"][c8]["powermaps"]["2"] = 0
    (OUT / "m11_powermap.json").write_text(json.dumps(m11, indent=1))
    manifest["m11_powermap.json"] = {
        "check": "power-map-order", "locates": f"class {c8}"
    }

    # 4. declared degree off by one -> identity column and degree sum break
    s3b = load("s3.json")
    s3b["irreducibles"][2]["degree"] = 3
    (OUT / "s3_degree.json").write_text(json.dumps(s3b, indent=1))
    manifest["s3_degree.json"] = {
        "check": "degree-at-identity", "locates": "declared degree 3"
    }

    # 5. golden-ratio pair swapped in one 3-dim character -> it collides
    #    with its Galois twin, so the off-diagonal inner product is 1
    a5b = load("a5.json")
    irr = a5b["irreducibles"][1]
    assert irr["degree"] == 3
    irr["values"][3], irr["values"][4] = irr["values"][4], irr["values"][3]
    (OUT / "a5_value_swap.json").write_text(json.dumps(a5b, indent=1))
    manifest["a5_value_swap.json"] = {
        "check": "first-orthogonality", "locates": "(1,2)"
    }

    # 6. table conductor too small for the stored values
    m11b = load("m11.json")
    m11b["conductor"] = 8
    (OUT / "m11_conductor.json").write_text(json.dumps(m11b, indent=1))
    manifest["m11_conductor.json"] = {
        "check": "value-conductors", "locates": "conductor"
    }

    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=1))
    print(f"wrote {len(manifest)} mutation fixtures")

    # sanity: each mutation trips exactly the recorded check
    from repscreen import chartab

    for fname, spec in manifest.items():
        table = chartab.load(OUT / fname)
        report = chartab.validate(table)
        failed = {r.check for r in report.failures()}
        assert spec["check"] in failed, (fname, failed)
        details = " ".join(r.detail for r in report.failures()
                           if r.check == spec["check"])
        assert spec["locates"] in details, (fname, details)
        print(f"  {fname}: trips {spec['check']} OK")


if __name__ == "__main__":
    main()
