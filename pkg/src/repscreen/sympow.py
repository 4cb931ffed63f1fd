"""Symmetric and exterior power characters and their decompositions.

The k-th symmetric power of a character is computed classwise by the
Newton-type recursion

    s_k(g) = (1/k) * sum_{i=1..k} chi(g^i) * s_{k-i}(g),      s_0 = 1,

with chi(g^i) read off through the table's power maps.  The recursion runs
over exact cyclotomic numbers; intermediate values are rationals that only
become algebraic integers after the division, so integrality is never
asserted midway.

Decomposing a character against the table's irreducibles yields the
multiset of constituent dimensions; per degree k these multisets are the
input to the downstream screening machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chartab import (
    CharacterTable,
    ClassFunction,
    inner_product,
    is_faithful,
    power_class,
)
from .cyclo import CycNum


class DecompositionError(ArithmeticError):
    """A supposed character fails to decompose with nonnegative integers."""


@dataclass(frozen=True)
class Decomposition:
    """Multiset of (irreducible index, multiplicity) with positive mult."""

    table: CharacterTable
    entries: tuple[tuple[int, int], ...]

    def dims(self) -> list[int]:
        """Sorted multiset of constituent dimensions (multiplicity expanded)."""
        out = []
        for idx, mult in self.entries:
            out.extend([self.table.irreducibles[idx].degree] * mult)
        return sorted(out)

    def multiplicity(self, irr_index: int) -> int:
        for idx, mult in self.entries:
            if idx == irr_index:
                return mult
        return 0

    def names(self) -> list[tuple[str, int]]:
        return [(self.table.irreducibles[i].name, m) for i, m in self.entries]

    def dimension(self) -> int:
        return sum(self.table.irreducibles[i].degree * m for i, m in self.entries)


@dataclass(frozen=True)
class DeltaTable:
    """Per-degree dimension multisets of the symmetric powers of a dual rep."""

    table: CharacterTable | None
    dim: int                       # dimension of the underlying representation
    k_max: int
    dims: dict[int, list[int]]     # k -> sorted dimension multiset
    detail: dict[int, Decomposition] | None = None

    def entries(self, k: int) -> list[int]:
        return self.dims[k]

    def bracket(self, k: int) -> str:
        """Human form matching the r x m multiset notation, e.g. [364,12012]."""
        dims = self.dims[k]
        parts = []
        for d in sorted(set(dims)):
            r = dims.count(d)
            parts.append(f"{r}x{d}" if r > 1 else f"{d}")
        return "[" + ",".join(parts) + "]"


def dual_character(chi: ClassFunction) -> ClassFunction:
    """Character of the dual representation: pointwise conjugation."""
    return chi.conj()


def _power_values(table: CharacterTable, chi: ClassFunction, c: int, k: int):
    """chi(g^i) for i = 1..k at the class c, via power maps."""
    return [chi.values[power_class(table, c, i)] for i in range(1, k + 1)]


def sym_power_table(
    table: CharacterTable, chi: ClassFunction, k_max: int
) -> list[ClassFunction]:
    """Characters of Sym^0..Sym^k_max(chi), sharing one recursion sweep."""
    if k_max < 0:
        raise ValueError("power must be nonnegative")
    per_class: list[list[CycNum]] = []
    for c in range(table.n_classes):
        pv = _power_values(table, chi, c, k_max)
        s = [CycNum.one()]
        for k in range(1, k_max + 1):
            acc = CycNum.zero()
            for i in range(1, k + 1):
                acc = acc + pv[i - 1] * s[k - i]
            s.append(acc * Fraction(1, k))
        per_class.append(s)
    return [
        ClassFunction(table, tuple(per_class[c][k] for c in range(table.n_classes)))
        for k in range(k_max + 1)
    ]


def sym_power_character(
    table: CharacterTable, chi: ClassFunction, k: int
) -> ClassFunction:
    """Character of the k-th symmetric power of chi."""
    return sym_power_table(table, chi, k)[k]


def ext_power_character(
    table: CharacterTable, chi: ClassFunction, k: int
) -> ClassFunction:
    """Character of the k-th exterior power (alternating-sign recursion)."""
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = []
    for c in range(table.n_classes):
        pv = _power_values(table, chi, c, k)
        e = [CycNum.one()]
        for j in range(1, k + 1):
            acc = CycNum.zero()
            for i in range(1, j + 1):
                term = pv[i - 1] * e[j - i]
                acc = acc + (term if i % 2 == 1 else -term)
            e.append(acc * Fraction(1, j))
        out.append(e[k])
    return ClassFunction(table, tuple(out))


def decompose(table: CharacterTable, theta: ClassFunction) -> Decomposition:
    """Multiplicities of every irreducible in theta, with hard sanity checks.

    Raises :class:`DecompositionError` when some inner product is not a
    nonnegative rational integer (corrupted table, or theta is virtual),
    or when the dimensions do not add up.
    """
    entries = []
    for i in range(len(table.irreducibles)):
        m = inner_product(table, theta, table.class_function(i)).as_rational()
        if m is None or m.denominator != 1:
            raise DecompositionError(
                f"multiplicity of {table.irreducibles[i].name} is {m!r}, "
                "not a rational integer"
            )
        if m < 0:
            raise DecompositionError(
                f"multiplicity of {table.irreducibles[i].name} is negative ({m}); "
                "input is a virtual character"
            )
        if m:
            entries.append((i, int(m)))
    deco = Decomposition(table, tuple(entries))
    total = theta.values[0].as_rational()
    if total is None or deco.dimension() != total:
        raise DecompositionError(
            f"constituent dimensions sum to {deco.dimension()}, "
            f"but the character has degree {total}"
        )
    return deco


def delta_table(
    table: CharacterTable,
    chi: ClassFunction,
    k_max: int,
    verbose: bool = False,
) -> DeltaTable:
    """Dimension multisets of Sym^k(dual of chi) for 1 <= k <= k_max.

    Requires chi to be an irreducible, faithful character of the table.
    """
    norm = inner_product(table, chi, chi).as_rational()
    if norm != 1:
        raise ValueError(f"character is not irreducible (norm {norm})")
    if not is_faithful(table, chi):
        raise ValueError("character is not faithful")
    dim = chi.values[0].as_rational()
    powers = sym_power_table(table, dual_character(chi), k_max)
    dims: dict[int, list[int]] = {}
    detail: dict[int, Decomposition] = {}
    for k in range(1, k_max + 1):
        deco = decompose(table, powers[k])
        expected = comb(int(dim) + k - 1, k)
        if deco.dimension() != expected:
            raise DecompositionError(
                f"Sym^{k} dimensions sum to {deco.dimension()}, expected {expected}"
            )
        dims[k] = deco.dims()
        if verbose:
            detail[k] = deco
    return DeltaTable(table, int(dim), k_max, dims, detail if verbose else None)


# ---------------------------------------------------------------------------
# delta fixture files: {"1": [12], "2": [78], ...} with multiplicity expanded

def delta_to_json(delta: DeltaTable) -> dict:
    return {str(k): delta.dims[k] for k in sorted(delta.dims)}


def delta_from_json(obj, source: str = "<delta>") -> DeltaTable:
    if not isinstance(obj, dict) or not obj:
        raise ValueError(f"{source}: delta fixture must be a non-empty object")
    dims: dict[int, list[int]] = {}
    for key, val in obj.items():
        k = int(key)
        if k < 1 or not isinstance(val, list) or not val:
            raise ValueError(f"{source}: bad entry for degree {key!r}")
        if any(not isinstance(d, int) or d < 1 for d in val):
            raise ValueError(f"{source}: dimensions at degree {k} must be positive ints")
        dims[k] = sorted(val)
    k_max = max(dims)
    if sorted(dims) != list(range(1, k_max + 1)):
        raise ValueError(f"{source}: degrees must cover 1..{k_max}")
    # the representation dimension; several entries mean a reducible rep,
    # which the screening pipeline reports under n = 0
    dim = sum(dims[1])
    for k, entries in dims.items():
        expected = comb(dim + k - 1, k)
        if sum(entries) != expected:
            raise ValueError(
                f"{source}: degree {k} dimensions sum to {sum(entries)}, "
                f"expected C({dim}+{k}-1,{k}) = {expected}"
            )
    return DeltaTable(None, dim, k_max, dims)


def load_delta(path) -> DeltaTable:
    import json

    with open(path) as fh:
        return delta_from_json(json.load(fh), source=str(path))
