#!/usr/bin/env python3
"""Build the hand-made small character-table fixtures (S3, C2, C7).

Writes canonical JSON into src/repscreen/data/ and validates each file.
"""

from pathlib import Path
import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from repscreen import chartab
from repscreen.cyclo import CycNum, root

DATA = Path(__file__).resolve().parents[1] / "src" / "repscreen" / "data"

PRIMES = (2, 3, 5, 7, 11)


def pm(targets):
    return {str(p): t for p, t in zip(PRIMES, targets)}


def build_s3():
    return {
        "group": "S3",
        "order": "6",
        "conductor": 1,
        "classes": [
            {"name": "1a", "size": "1", "order": 1, "powermaps": pm([0, 0, 0, 0, 0])},
            {"name": "2a", "size": "3", "order": 2, "powermaps": pm([0, 1, 1, 1, 1])},
            {"name": "3a", "size": "2", "order": 3, "powermaps": pm([2, 0, 2, 2, 2])},
        ],
        "irreducibles": [
            {"name": "1a", "degree": 1, "values": ["1", "1", "1"]},
            {"name": "1b", "degree": 1, "values": ["1", "-1", "1"]},
            {"name": "2a", "degree": 2, "values": ["2", "0", "-1"]},
        ],
    }


def build_c2():
    return {
        "group": "C2",
        "order": "2",
        "conductor": 1,
        "classes": [
            {"name": "1a", "size": "1", "order": 1, "powermaps": pm([0, 0, 0, 0, 0])},
            {"name": "2a", "size": "1", "order": 2, "powermaps": pm([0, 1, 1, 1, 1])},
        ],
        "irreducibles": [
            {"name": "1a", "degree": 1, "values": ["1", "1"]},
            {"name": "1b", "degree": 1, "values": ["1", "-1"]},
        ],
    }


def build_c7():
    classes = [
        {"name": "1a", "size": "1", "order": 1, "powermaps": pm([0] * 5)},
    ]
    for j in range(1, 7):
        classes.append(
            {
                "name": f"7{'abcdef'[j - 1]}",
                "size": "1",
                "order": 7,
                "powermaps": {str(p): (j * p) % 7 for p in PRIMES},
            }
        )
    irreducibles = []
    for k in range(7):
        values = [root(7, j * k).to_json() for j in range(7)]
        name = "1a" if k == 0 else f"1{'bcdefg'[k - 1]}"
        irreducibles.append({"name": name, "degree": 1, "values": values})
    return {
        "group": "C7",
        "order": "7",
        "conductor": 7,
        "classes": classes,
        "irreducibles": irreducibles,
    }


def write_and_check(obj, filename):
    table = chartab.loads(obj, source=filename)
    out = DATA / filename
    out.write_text(chartab.dump_json(table) + "\n")
    loaded = chartab.load(out)
    report = chartab.validate(loaded, deep=True)
    if not report.ok:
        print(report)
        raise SystemExit(f"{filename}: validation failed")
    print(f"{filename}: {len(loaded.classes)} classes, order {loaded.order}, valid")


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    write_and_check(build_s3(), "s3.json")
    write_and_check(build_c2(), "c2.json")
    write_and_check(build_c7(), "c7.json")


if __name__ == "__main__":
    main()
