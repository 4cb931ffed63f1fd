"""Minimal semi-invariant degrees and per-table scans.

A semi-invariant of degree d of a representation is a one-dimensional
subrepresentation of the d-th symmetric power; d(U) is the least degree at
which one appears.  The scan checks all linear characters, not just the
trivial one, so it stays correct on non-perfect groups even though for the
perfect groups of interest every semi-invariant is an invariant.

Reports carry mu = d / dim.  The entry matching the published per-group
tables is the faithful irreducible maximizing d/dim: representations with
an invariant of very low degree are the easy-to-exclude ones, so the
closest call is the one with the largest minimal degree relative to its
dimension.  Ties are all reported rather than assumed away.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import CharacterTable, ClassFunction, inner_product, is_faithful
from .sympow import dual_character, sym_power_table


@dataclass(frozen=True)
class InvariantDegreeReport:
    name: str
    dim: int
    d: int | None              # least degree <= k_max with a linear summand
    mu: Fraction | None        # d / dim when d was found
    faithful: bool
    flagged: bool = False      # extremal entry reproducing the published tables

    def row(self) -> str:
        d = "-" if self.d is None else str(self.d)
        mu = "-" if self.mu is None else f"{self.mu.numerator}/{self.mu.denominator}"
        mark = " *" if self.flagged else ""
        return f"{self.name:>8}  {d:>4}  {self.dim:>6}  {mu:>9}{mark}"


def linear_characters(table: CharacterTable) -> list[int]:
    """Indices of the degree-1 irreducibles."""
    return [i for i, x in enumerate(table.irreducibles) if x.degree == 1]


def semi_invariant_degree(
    table: CharacterTable, chi: ClassFunction, k_max: int
) -> int | None:
    """Least d <= k_max with a linear character inside Sym^d(dual of chi).

    The dual is used throughout; for the existence question the two sides
    agree, since duals of one-dimensional subrepresentations are again
    one-dimensional.  Returns None when no degree up to k_max works.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    linear = [table.class_function(i) for i in linear_characters(table)]
    powers = sym_power_table(table, dual_character(chi), k_max)
    for d in range(1, k_max + 1):
        for lam in linear:
            m = inner_product(table, powers[d], lam).as_rational()
            if m is None or m.denominator != 1 or m < 0:
                raise ArithmeticError(
                    f"multiplicity of a linear character came out as {m!r}"
                )
            if m > 0:
                return d
    return None


def scan(
    table: CharacterTable,
    k_max: int = 12,
    faithful_only: bool = False,
    excluded_dims: frozenset[int] | set[int] = frozenset(),
) -> list[InvariantDegreeReport]:
    """One report per irreducible passing the filters, sorted by (mu, dim, name).

    The flagged entries are those attaining the maximal mu = d/dim among
    faithful irreducibles with a degree found; that is the entry the
    published per-group tables record (ties share the flag).
    """
    reports = []
    for i, irr in enumerate(table.irreducibles):
        if irr.degree in excluded_dims:
            continue
        chi = table.class_function(i)
        faithful = is_faithful(table, chi)
        if faithful_only and not faithful:
            continue
        d = semi_invariant_degree(table, chi, k_max)
        mu = Fraction(d, irr.degree) if d is not None else None
        reports.append(
            InvariantDegreeReport(irr.name, irr.degree, d, mu, faithful)
        )
    flag_pool = [r.mu for r in reports if r.faithful and r.mu is not None]
    if flag_pool:
        best = max(flag_pool)
        reports = [
            InvariantDegreeReport(
                r.name, r.dim, r.d, r.mu, r.faithful,
                flagged=(r.faithful and r.mu == best),
            )
            for r in reports
        ]
    reports.sort(
        key=lambda r: (
            (0, r.mu) if r.mu is not None else (1, 0),
            r.dim,
            r.name,
        )
    )
    return reports


def flagged_entries(reports: list[InvariantDegreeReport]) -> list[InvariantDegreeReport]:
    return [r for r in reports if r.flagged]


def format_table(group_name: str, reports: list[InvariantDegreeReport]) -> str:
    """Human table with columns mirroring the published layout (G, d(U), dim(U))."""
    lines = [
        f"G = {group_name}",
        f"{'irr':>8}  {'d(U)':>4}  {'dim(U)':>6}  {'d/dim':>9}",
    ]
    lines.extend(r.row() for r in reports)
    return "\n".join(lines)
