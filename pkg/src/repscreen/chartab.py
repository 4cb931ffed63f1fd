"""Character tables: data model, JSON ingestion, validation, inner products.

The canonical ingestion format is a single JSON object::

    { "group": str, "order": str(int), "conductor": int,
      "classes": [ { "name": str, "size": str(int), "order": int,
                     "powermaps": { "2": int, "3": int, "5": int,
                                    "7": int, "11": int } }, ... ],
      "irreducibles": [ { "name": str, "degree": int,
                          "values": [ <CycNum serialization>, ... ] }, ... ] }

Class 0 must be the identity class, power maps are class indices, and the
table conductor must be a multiple of every value's conductor.  Power maps
for all primes up to 12 are required even when the prime does not divide
the group order, so that g^k is computable for any k <= 12 without runtime
surprises.

Tables are immutable after loading; every operation here is read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import json
import math

from .cyclo import CycNum, euler_phi, factorize

REQUIRED_PRIMES = (2, 3, 5, 7, 11)  # all primes <= 12


class TableFormatError(ValueError):
    """Structural problem in a character-table file, with its location."""

    def __init__(self, location: str, problem: str):
        super().__init__(f"{location}: {problem}")
        self.location = location
        self.problem = problem


@dataclass(frozen=True)
class ConjClass:
    name: str
    size: int
    element_order: int
    power_maps: dict[int, int]  # prime -> class index of g^p


@dataclass(frozen=True)
class CharacterTable:
    group_name: str
    order: int
    conductor: int
    classes: tuple[ConjClass, ...]
    irreducibles: tuple["Irreducible", ...]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def irreducible_index(self, name: str) -> int:
        for i, irr in enumerate(self.irreducibles):
            if irr.name == name:
                return i
        raise KeyError(f"no irreducible named {name!r} in table {self.group_name}")

    def class_function(self, index: int) -> "ClassFunction":
        irr = self.irreducibles[index]
        return ClassFunction(self, irr.values)


@dataclass(frozen=True)
class Irreducible:
    name: str
    degree: int
    values: tuple[CycNum, ...]


@dataclass(frozen=True)
class ClassFunction:
    table: CharacterTable
    values: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.values) != self.table.n_classes:
            raise ValueError("class function length does not match class count")

    def __call__(self, class_index: int) -> CycNum:
        return self.values[class_index]

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.table, tuple(v.conj() for v in self.values))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        _same_table(self, other)
        return ClassFunction(
            self.table, tuple(a + b for a, b in zip(self.values, other.values))
        )

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        _same_table(self, other)
        return ClassFunction(
            self.table, tuple(a - b for a, b in zip(self.values, other.values))
        )

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            _same_table(self, other)
            return ClassFunction(
                self.table, tuple(a * b for a, b in zip(self.values, other.values))
            )
        return ClassFunction(self.table, tuple(v * other for v in self.values))

    __rmul__ = __mul__


def _same_table(a: ClassFunction, b: ClassFunction):
    if a.table is not b.table:
        raise ValueError("class functions live over different tables")


# ---------------------------------------------------------------------------
# loading

def load(path) -> CharacterTable:
    """Load a character table from the canonical JSON format.

    Checks structural well-formedness only (shape, parsability, index
    ranges); mathematical consistency is the job of :func:`validate`.
    """
    with open(path, "rb") as fh:
        text = fh.read()
    if not text.strip():
        raise TableFormatError(str(path), "file is empty")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from exc
    return loads(obj, source=str(path))


def loads(obj, source: str = "<table>") -> CharacterTable:
    """Build a CharacterTable from an already-parsed JSON object."""
    if not isinstance(obj, dict):
        raise TableFormatError(source, "top level must be a JSON object")
    for key in ("group", "order", "conductor", "classes", "irreducibles"):
        if key not in obj:
            raise TableFormatError(source, f"missing field {key!r}")
    group = obj["group"]
    order = _parse_big_int(obj["order"], f"{source}.order")
    conductor = obj["conductor"]
    if not isinstance(conductor, int) or conductor < 1:
        raise TableFormatError(f"{source}.conductor", "must be a positive integer")

    raw_classes = obj["classes"]
    if not isinstance(raw_classes, list) or not raw_classes:
        raise TableFormatError(f"{source}.classes", "must be a non-empty list")
    classes = []
    for ci, rc in enumerate(raw_classes):
        loc = f"{source}.classes[{ci}]"
        if not isinstance(rc, dict):
            raise TableFormatError(loc, "must be an object")
        for key in ("name", "size", "order", "powermaps"):
            if key not in rc:
                raise TableFormatError(loc, f"missing field {key!r}")
        size = _parse_big_int(rc["size"], f"{loc}.size")
        eorder = rc["order"]
        if not isinstance(eorder, int) or eorder < 1:
            raise TableFormatError(f"{loc}.order", "must be a positive integer")
        pmaps = {}
        for p in REQUIRED_PRIMES:
            if str(p) not in rc["powermaps"]:
                raise TableFormatError(f"{loc}.powermaps", f"missing prime {p}")
            target = rc["powermaps"][str(p)]
            if not isinstance(target, int) or not 0 <= target < len(raw_classes):
                raise TableFormatError(
                    f"{loc}.powermaps.{p}", f"class index {target!r} out of range"
                )
            pmaps[p] = target
        classes.append(ConjClass(rc["name"], size, eorder, pmaps))

    raw_irr = obj["irreducibles"]
    if not isinstance(raw_irr, list) or not raw_irr:
        raise TableFormatError(f"{source}.irreducibles", "must be a non-empty list")
    irreducibles = []
    for xi, rx in enumerate(raw_irr):
        loc = f"{source}.irreducibles[{xi}]"
        if not isinstance(rx, dict):
            raise TableFormatError(loc, "must be an object")
        for key in ("name", "degree", "values"):
            if key not in rx:
                raise TableFormatError(loc, f"missing field {key!r}")
        degree = rx["degree"]
        if not isinstance(degree, int) or degree < 1:
            raise TableFormatError(f"{loc}.degree", "must be a positive integer")
        vals = rx["values"]
        if not isinstance(vals, list) or len(vals) != len(classes):
            raise TableFormatError(
                f"{loc}.values", f"expected {len(classes)} values, got {len(vals)}"
            )
        parsed = []
        for vi, raw in enumerate(vals):
            try:
                parsed.append(CycNum.from_json(raw))
            except ValueError as exc:
                raise TableFormatError(f"{loc}.values[{vi}]", str(exc)) from exc
        irreducibles.append(Irreducible(rx["name"], degree, tuple(parsed)))

    return CharacterTable(group, order, conductor, tuple(classes), tuple(irreducibles))


def dump_json(table: CharacterTable) -> str:
    """Serialize back to the canonical JSON format (deterministic bytes)."""
    obj = {
        "group": table.group_name,
        "order": str(table.order),
        "conductor": table.conductor,
        "classes": [
            {
                "name": c.name,
                "size": str(c.size),
                "order": c.element_order,
                "powermaps": {str(p): c.power_maps[p] for p in REQUIRED_PRIMES},
            }
            for c in table.classes
        ],
        "irreducibles": [
            {
                "name": x.name,
                "degree": x.degree,
                "values": [v.to_json() for v in x.values],
            }
            for x in table.irreducibles
        ],
    }
    return json.dumps(obj, indent=1, sort_keys=False)


def _parse_big_int(raw, loc: str) -> int:
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw)
        except ValueError:
            pass
    raise TableFormatError(loc, f"not an integer: {raw!r}")


# ---------------------------------------------------------------------------
# validation

@dataclass
class CheckResult:
    check: str
    ok: bool
    detail: str = ""


@dataclass
class ValidationReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def add(self, check: str, ok: bool, detail: str = ""):
        self.results.append(CheckResult(check, ok, detail))

    def __str__(self):
        lines = []
        for r in self.results:
            status = "ok  " if r.ok else "FAIL"
            lines.append(f"[{status}] {r.check}" + (f": {r.detail}" if r.detail else ""))
        return "\n".join(lines)


def validate(table: CharacterTable, deep: bool = False) -> ValidationReport:
    """Check every table invariant; failures become report entries.

    ``deep=True`` additionally checks column (second) orthogonality, which
    is implied by row orthogonality plus completeness but quadratic-times-
    quadratic in cost, so it is off by default.
    """
    rep = ValidationReport()
    idc = table.classes[0]
    rep.add(
        "identity-class",
        idc.size == 1 and idc.element_order == 1,
        f"class 0 has size {idc.size}, element order {idc.element_order}",
    )
    total = sum(c.size for c in table.classes)
    rep.add(
        "class-sizes-sum",
        total == table.order,
        f"sum of class sizes {total} vs group order {table.order}",
    )
    size_ok = True
    for i, c in enumerate(table.classes):
        if table.order % c.size:
            size_ok = False
            rep.add("class-size-divides-order", False,
                    f"class {i} ({c.name}) size {c.size} does not divide {table.order}")
    if size_ok:
        rep.add("class-size-divides-order", True)
    pm_ok = True
    for i, c in enumerate(table.classes):
        for p in REQUIRED_PRIMES:
            if p not in c.power_maps:
                pm_ok = False
                rep.add("power-map-present", False, f"class {i} ({c.name}) misses prime {p}")
                continue
            img = table.classes[c.power_maps[p]]
            want = c.element_order // math.gcd(c.element_order, p)
            if img.element_order != want:
                pm_ok = False
                rep.add(
                    "power-map-order",
                    False,
                    f"class {i} ({c.name}) ^{p} -> class {c.power_maps[p]} "
                    f"of order {img.element_order}, expected order {want}",
                )
    if pm_ok:
        rep.add("power-maps", True)

    deg_ok = True
    for i, x in enumerate(table.irreducibles):
        v = x.values[0].as_rational()
        if v != x.degree:
            deg_ok = False
            rep.add("degree-at-identity", False,
                    f"irreducible {i} ({x.name}) has value {x.values[0]!r} at identity, "
                    f"declared degree {x.degree}")
    if deg_ok:
        rep.add("degree-at-identity", True)
    deg_sq = sum(x.degree**2 for x in table.irreducibles)
    rep.add("sum-of-squared-degrees", deg_sq == table.order,
            f"sum of degree^2 = {deg_sq} vs group order {table.order}")

    bad_conductor = [
        (i, vi)
        for i, x in enumerate(table.irreducibles)
        for vi, v in enumerate(x.values)
        if table.conductor % v.N
    ]
    rep.add("value-conductors", not bad_conductor,
            "" if not bad_conductor else
            f"value conductors not dividing table conductor at (irr, class) {bad_conductor[:5]}")

    # first (row) orthogonality for all pairs
    ortho_fail = []
    n = len(table.irreducibles)
    for i in range(n):
        a = table.class_function(i)
        for j in range(i, n):
            b = table.class_function(j)
            got = inner_product(table, a, b)
            want = 1 if i == j else 0
            if got != want:
                ortho_fail.append((i, j, got))
    rep.add(
        "first-orthogonality",
        not ortho_fail,
        "" if not ortho_fail else "failing pairs (i, j): "
        + ", ".join(f"({i},{j}) -> {v!r}" for i, j, v in ortho_fail[:5]),
    )

    if deep:
        col_fail = []
        for ci in range(table.n_classes):
            for cj in range(ci, table.n_classes):
                s = CycNum.zero()
                for x in table.irreducibles:
                    s = s + x.values[ci] * x.values[cj].conj()
                want = (
                    Fraction(table.order, table.classes[ci].size) if ci == cj else 0
                )
                if s != want:
                    col_fail.append((ci, cj))
        rep.add("second-orthogonality", not col_fail,
                "" if not col_fail else f"failing class pairs {col_fail[:5]}")
    return rep


# ---------------------------------------------------------------------------
# operations

def power_class(table: CharacterTable, class_index: int, k: int) -> int:
    """Index of the class of g^k for g in the given class.

    k is first reduced modulo the element order of the class, then the
    remaining exponent is split into prime factors and the stored prime
    power maps are composed (the result is independent of factorization
    order).  Requires a stored map for every prime factor that survives
    the reduction.
    """
    if k < 1:
        raise ValueError("exponent must be a positive integer")
    cls = table.classes[class_index]
    k %= cls.element_order
    if k == 0:
        return 0  # identity class
    idx = class_index
    for p, e in factorize(k).items():
        for _ in range(e):
            maps = table.classes[idx].power_maps
            if p not in maps:
                raise KeyError(
                    f"class {idx} has no power map for prime {p} "
                    f"(needed for exponent {k})"
                )
            idx = maps[p]
    return idx


def inner_product(table: CharacterTable, a: ClassFunction, b: ClassFunction) -> CycNum:
    """(1/|G|) * sum over classes of |C| * a(C) * conj(b(C)), exact."""
    if a.table is not table or b.table is not table:
        raise ValueError("class functions do not belong to the given table")
    total = CycNum.zero()
    for c, av, bv in zip(table.classes, a.values, b.values):
        total = total + (av * bv.conj()) * c.size
    return total * Fraction(1, table.order)


def permutation_character(table: CharacterTable, fixed_points: list[int]) -> ClassFunction:
    """Class function from per-class fixed-point counts (helper for tests)."""
    return ClassFunction(
        table, tuple(CycNum.from_rational(f) for f in fixed_points)
    )


def kernel_classes(table: CharacterTable, chi: ClassFunction) -> list[int]:
    """Indices of classes C with chi(C) = chi(identity)."""
    ident = chi.values[0]
    return [i for i, v in enumerate(chi.values) if v == ident]


def is_faithful(table: CharacterTable, chi: ClassFunction) -> bool:
    return kernel_classes(table, chi) == [0]
