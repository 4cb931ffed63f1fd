"""Brute-force verification engine for small explicit groups.

Everything here works from explicit generators — permutations on at most
64 points or square matrices over exact cyclotomic numbers of dimension at
most 8 — and never touches character tables or power maps.  That makes it
an independent cross-check for the character-theoretic pipeline: invariant
dimensions are computed by averaging traces over every group element, with
the trace of a symmetric power obtained from traces of matrix powers via
the same Newton-type recursion used on characters.

Enumeration is a plain breadth-first closure with a hard cap of 2*10^5
elements; groups beyond the cap (anything Suzuki-sized) are out of scope
here and enter the toolkit only through ingested character tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import re

from .chartab import CharacterTable, ClassFunction
from .cyclo import CycNum

MAX_ELEMENTS = 200_000
MAX_POINTS = 64
MAX_DIM = 8


class CapExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# permutations (tuples of images, 0-based) and matrices (tuples of CycNum rows)

def perm_from_cycles(text: str, n_points: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation like "(1,2)(3,4,5)" into an image tuple (1-based input).

    >>> perm_from_cycles("(1,2,3)", 4)
    (1, 2, 0, 3)
    """
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles and text.strip() not in ("", "()"):
        raise ValueError(f"cannot parse cycle notation: {text!r}")
    parsed = []
    maxpt = 0
    for body in cycles:
        if not body.strip():
            continue
        pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip())]
        if any(p < 1 for p in pts):
            raise ValueError(f"points must be >= 1 in {text!r}")
        maxpt = max(maxpt, max(pts))
        parsed.append(pts)
    n = n_points or maxpt
    if n > MAX_POINTS:
        raise ValueError(f"permutation degree {n} exceeds the {MAX_POINTS}-point limit")
    images = list(range(n))
    for pts in parsed:
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def perm_to_cycles(perm: tuple[int, ...]) -> str:
    """Inverse of :func:`perm_from_cycles` (1-based output, fixed points omitted)."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cyc.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        out.append("(" + ",".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) or "()"


def _perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a*b)(x) = a(b(x))
    return tuple(a[x] for x in b)


def _perm_inv(a: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(a)
    for i, img in enumerate(a):
        out[img] = i
    return tuple(out)


Matrix = tuple[tuple[CycNum, ...], ...]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    out = []
    for row in a:
        out.append(
            tuple(
                sum((x * y for x, y in zip(row, col) if not x.is_zero()),
                    CycNum.zero())
                for col in bt
            )
        )
    return tuple(out)


def _mat_identity(n: int) -> Matrix:
    return tuple(
        tuple(CycNum.one() if i == j else CycNum.zero() for j in range(n))
        for i in range(n)
    )


def mat_trace(a: Matrix) -> CycNum:
    return sum((a[i][i] for i in range(len(a))), CycNum.zero())


def matrix_from_json(rows) -> Matrix:
    mat = tuple(tuple(CycNum.from_json(v) for v in row) for row in rows)
    if len(mat) > MAX_DIM or any(len(r) != len(mat) for r in mat):
        raise ValueError(f"matrices must be square with dimension <= {MAX_DIM}")
    return mat


# ---------------------------------------------------------------------------
# group enumeration

@dataclass
class ExplicitGroup:
    """A fully enumerated group with its conjugacy class partition."""

    generators: list
    elements: list            # all group elements, BFS discovery order
    index: dict               # element -> position in `elements`
    class_of: list[int]       # element position -> class number
    class_members: list[list[int]]
    class_reps: list[int]     # element position of each class representative
    class_orders: list[int]   # element order per class
    kind: str                 # "perm" | "matrix"

    @property
    def order(self) -> int:
        return len(self.elements)

    def class_sizes(self) -> list[int]:
        return [len(m) for m in self.class_members]

    def mul(self, a, b):
        return _perm_mul(a, b) if self.kind == "perm" else _mat_mul(a, b)

    def identity(self):
        if self.kind == "perm":
            return tuple(range(len(self.generators[0])))
        return _mat_identity(len(self.generators[0]))

    def element_order(self, x) -> int:
        e = self.identity()
        k, y = 1, x
        while y != e:
            y = self.mul(y, x)
            k += 1
        return k

    def power_class(self, class_index: int, k: int) -> int:
        """Class of g^k computed directly from a class representative."""
        g = self.elements[self.class_reps[class_index]]
        y = self.identity()
        for _ in range(k % self.element_order(g) or 0):
            y = self.mul(y, g)
        return self.class_of[self.index[y]]


def enumerate_group(generators) -> ExplicitGroup:
    """Breadth-first closure of the generators plus conjugacy classes.

    Raises :class:`CapExceeded` once more than 2*10^5 elements appear.
    """
    if not generators:
        raise ValueError("need at least one generator")
    kinds = {("perm" if isinstance(g, tuple) and all(isinstance(i, int) for i in g)
              else "matrix") for g in generators}
    if len(kinds) != 1:
        raise ValueError("generators must be all permutations or all matrices")
    kind = kinds.pop()
    if kind == "perm":
        n = len(generators[0])
        if any(len(g) != n for g in generators):
            raise ValueError("permutation generators act on different point counts")
        if n > MAX_POINTS:
            raise ValueError(f"permutation degree {n} exceeds {MAX_POINTS}")
        ident = tuple(range(n))
        mul = _perm_mul
    else:
        n = len(generators[0])
        if n > MAX_DIM:
            raise ValueError(f"matrix dimension {n} exceeds {MAX_DIM}")
        ident = _mat_identity(n)
        mul = _mat_mul

    elements = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > MAX_ELEMENTS:
                        raise CapExceeded(
                            f"group exceeds the {MAX_ELEMENTS}-element cap"
                        )
        frontier = nxt

    # conjugacy classes: orbits under conjugation by the generators
    if kind == "perm":
        gen_invs = [_perm_inv(g) for g in generators]
    else:
        gen_invs = []
        for g in generators:
            # inverse of g is g^(order-1); fine at these sizes
            o, y = 1, g
            while y != ident:
                y = mul(y, g)
                o += 1
            inv = ident
            for _ in range(o - 1):
                inv = mul(inv, g)
            gen_invs.append(inv)

    class_of = [-1] * len(elements)
    class_members: list[list[int]] = []
    class_reps: list[int] = []
    for start in range(len(elements)):
        if class_of[start] != -1:
            continue
        cnum = len(class_members)
        orbit = [start]
        class_of[start] = cnum
        queue = [start]
        while queue:
            xi = queue.pop()
            x = elements[xi]
            for g, gi in zip(generators, gen_invs):
                y = mul(mul(g, x), gi)
                yi = index[y]
                if class_of[yi] == -1:
                    class_of[yi] = cnum
                    orbit.append(yi)
                    queue.append(yi)
        class_members.append(sorted(orbit))
        class_reps.append(min(orbit))

    group = ExplicitGroup(
        generators=list(generators),
        elements=elements,
        index=index,
        class_of=class_of,
        class_members=class_members,
        class_reps=class_reps,
        class_orders=[],
        kind=kind,
    )
    group.class_orders = [
        group.element_order(elements[r]) for r in class_reps
    ]
    return group


# ---------------------------------------------------------------------------
# invariant dimensions by trace averaging

def sym_power_traces(group: ExplicitGroup, x, k_max: int) -> list[CycNum]:
    """Traces of Sym^0..Sym^k_max of a single matrix, via the recursion
    s_k = (1/k) * sum_{i=1..k} trace(x^i) * s_{k-i}."""
    if group.kind != "matrix":
        raise ValueError("symmetric-power traces need a matrix group")
    powers = [x]
    for _ in range(k_max - 1):
        powers.append(group.mul(powers[-1], x))
    tr = [mat_trace(p) for p in powers]  # tr[i-1] = trace(x^i)
    s: list[CycNum] = [CycNum.one()]
    for k in range(1, k_max + 1):
        acc = CycNum.zero()
        for i in range(1, k + 1):
            acc = acc + tr[i - 1] * s[k - i]
        s.append(acc * Fraction(1, k))
    return s


def invariant_dimension(group: ExplicitGroup, k: int) -> int:
    """dim of the invariants in Sym^k of the defining matrix representation.

    Averages the symmetric-power trace over every group element; exact.
    """
    total = CycNum.zero()
    for x in group.elements:
        total = total + sym_power_traces(group, x, k)[k]
    val = (total * Fraction(1, group.order)).as_rational()
    if val is None or val.denominator != 1 or val < 0:
        raise ArithmeticError(f"invariant dimension came out as {val!r}")
    return int(val)


def invariant_dimensions(group: ExplicitGroup, k_max: int) -> list[int]:
    """Invariant dimensions for Sym^0..Sym^k_max in one sweep."""
    totals = [CycNum.zero() for _ in range(k_max + 1)]
    for x in group.elements:
        s = sym_power_traces(group, x, k_max)
        for k in range(k_max + 1):
            totals[k] = totals[k] + s[k]
    out = []
    for k in range(k_max + 1):
        val = (totals[k] * Fraction(1, group.order)).as_rational()
        if val is None or val.denominator != 1 or val < 0:
            raise ArithmeticError(f"invariant dimension at k={k} came out as {val!r}")
        out.append(int(val))
    return out


# ---------------------------------------------------------------------------
# cross-checking a character table against the explicit group

@dataclass
class ClassMatch:
    signature: tuple          # (size, element order)
    oracle_classes: list[int]
    table_classes: list[int]

    @property
    def unambiguous(self) -> bool:
        return len(self.oracle_classes) == 1 and len(self.table_classes) == 1


def match_classes(group: ExplicitGroup, table: CharacterTable) -> list[ClassMatch]:
    """Pair oracle classes with table classes by (size, element order).

    Signatures shared by several classes stay grouped; the caller compares
    value multisets there instead of per-class values.
    """
    buckets: dict[tuple, ClassMatch] = {}
    for i, (members, order) in enumerate(zip(group.class_members, group.class_orders)):
        sig = (len(members), order)
        buckets.setdefault(sig, ClassMatch(sig, [], [])).oracle_classes.append(i)
    for j, c in enumerate(table.classes):
        sig = (c.size, c.element_order)
        buckets.setdefault(sig, ClassMatch(sig, [], [])).table_classes.append(j)
    matches = sorted(buckets.values(), key=lambda m: m.signature)
    bad = [m.signature for m in matches
           if len(m.oracle_classes) != len(m.table_classes)]
    if bad:
        raise ValueError(f"class signatures do not correspond: {bad}")
    return matches


@dataclass
class AgreementReport:
    entries: list  # (signature, ok, detail)

    @property
    def ok(self) -> bool:
        return all(e[1] for e in self.entries)

    def __str__(self):
        return "\n".join(
            f"[{'ok  ' if ok else 'FAIL'}] classes {sig}: {detail}"
            for sig, ok, detail in self.entries
        )


def class_function_check(
    group: ExplicitGroup,
    table: CharacterTable,
    pipeline_values: ClassFunction,
    k: int,
) -> AgreementReport:
    """Compare the table pipeline's Sym^k character with oracle traces.

    The explicit matrix group must realize the representation whose
    character was fed to the pipeline.  Classes are matched by
    (size, element order); ambiguous signatures are compared as value
    multisets.
    """
    matches = match_classes(group, table)
    entries = []
    for m in matches:
        oracle_vals = [
            sym_power_traces(group, group.elements[group.class_reps[ci]], k)[k]
            for ci in m.oracle_classes
        ]
        table_vals = [pipeline_values.values[cj] for cj in m.table_classes]
        if m.unambiguous:
            ok = oracle_vals[0] == table_vals[0]
            detail = "match" if ok else (
                f"oracle {oracle_vals[0]!r} vs pipeline {table_vals[0]!r}"
            )
        else:
            remaining = list(table_vals)
            ok = True
            for v in oracle_vals:
                try:
                    remaining.remove(v)
                except ValueError:
                    ok = False
                    break
            detail = ("multiset match" if ok
                      else f"value multisets differ on signature {m.signature}")
        entries.append((m.signature, ok, detail))
    return AgreementReport(entries)
