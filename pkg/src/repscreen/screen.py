"""Hilbert-function screening of invariant subvarieties.

Given the dimension multisets Delta_m of the symmetric powers of a dual
representation, the set Sigma_m of their subset sums lists every dimension
an invariant subspace of degree-m forms can have, hence every value the
degree-m Hilbert function of an invariant subvariety V in P^P may take.

The search enumerates candidate value vectors h_1..h_{n+1} with
h_m in Sigma_m, interpolates the unique degree-<=n polynomial through
them by forward differences, insists the degree is exactly n, and checks
membership h_m in Sigma_m for the remaining degrees up to K_max.  Both
modes pin h_m to the full space dimension wherever Sigma_m = {0, full}
(an invariant subvariety misses either all or no forms of such a degree,
and missing all is absurd); see ``search`` for the unpinned escape hatch.

* ``literal`` imposes just membership and exact degree;
* ``strict`` additionally bounds the leading term d = Delta^n h(1) by the
  ambient degree bound, requires q_{n+1} >= C(P, n+1) ideal sections one
  degree up, and at n = 9 runs the nonnegativity and genus tests on the
  hyperplane-section ideal counts q_i(V_j).

Everything is exact integer arithmetic; enumeration never prunes, so the
reported `enumerated` count always equals the product of the free
coordinate ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .sympow import DeltaTable


# ---------------------------------------------------------------------------
# admissible-value tables

@dataclass(frozen=True)
class SigmaTable:
    """Subset sums of the Delta multisets, one bitset per degree."""

    p: int                      # ambient projective dimension (= dim U - 1)
    k_max: int
    full: dict[int, int]        # m -> C(p + m, m)
    bits: dict[int, bytes]      # m -> little-endian bitset over [0, full(m)]

    def member(self, m: int, v: int) -> bool:
        if v < 0 or v > self.full[m]:
            return False
        buf = self.bits[m]
        return bool(buf[v >> 3] >> (v & 7) & 1)

    def values(self, m: int) -> list[int]:
        buf = self.bits[m]
        out = []
        for byte_index, byte in enumerate(buf):
            while byte:
                low = byte & -byte
                out.append((byte_index << 3) + low.bit_length() - 1)
                byte ^= low
        return out

    def size(self, m: int) -> int:
        return sum(bin(b).count("1") for b in self.bits[m])

    def is_pinned(self, m: int) -> bool:
        """True when Sigma_m = {0, full}: the value is forced in strict mode."""
        return self.size(m) == 2 and self.full[m] > 0

    def complement_closed(self, m: int) -> bool:
        vals = self.values(m)
        full = self.full[m]
        return all(self.member(m, full - v) for v in vals)


def sigma_from_delta(delta: DeltaTable) -> SigmaTable:
    """Subset sums of each Delta_m, multiplicities respected, deduplicated.

    Uses a bitset accumulator (mask |= mask << dim per summand), so even
    the ~10^6-value degree-12 table stays exact and fast.
    """
    p = delta.dim - 1
    full = {}
    bits = {}
    for m in range(1, delta.k_max + 1):
        entries = delta.dims[m]
        total = sum(entries)
        expected = comb(p + m, m)
        if total != expected:
            raise ValueError(
                f"Delta_{m} sums to {total}, expected C({p}+{m},{m}) = {expected}"
            )
        mask = 1
        for d in entries:
            mask |= mask << d
        full[m] = total
        bits[m] = mask.to_bytes(total // 8 + 1, "little")
    return SigmaTable(p, delta.k_max, full, bits)


# ---------------------------------------------------------------------------
# finite-difference interpolation

def forward_diffs(values) -> tuple[int, ...]:
    """Delta^j h(1) for j = 0..len(values)-1."""
    row = list(values)
    out = [row[0]]
    while len(row) > 1:
        row = [b - a for a, b in zip(row, row[1:])]
        out.append(row[0])
    return tuple(out)


def newton_eval(diffs, m: int) -> int:
    """Value at integer m of the polynomial with the given forward differences
    at 1: H(m) = sum_j diffs[j] * C(m-1, j)."""
    return sum(c * comb(m - 1, j) for j, c in enumerate(diffs) if c)


@dataclass(frozen=True)
class Candidate:
    """An interpolated Hilbert-polynomial candidate with its check trace."""

    n: int                          # polynomial degree
    h: tuple[int, ...]              # values at m = 1..len(h)
    diffs: tuple[int, ...]          # forward differences at 1
    d: int                          # Delta^n h(1); leading coefficient d/n!
    q: tuple[int, ...] = ()         # q_m = full(m) - h_m, m = 1..len(h)
    trace: tuple = ()               # (constraint, passed, detail) triples

    def evaluate(self, m: int) -> int:
        return newton_eval(self.diffs, m)

    @property
    def degree(self) -> int:
        """Effective degree: largest j with a nonzero difference."""
        for j in range(len(self.diffs) - 1, -1, -1):
            if self.diffs[j]:
                return j
        return 0


def interpolate(values) -> Candidate:
    """Partial candidate from values at m = 1..len(values): differences and
    an exact Newton evaluator; constraint fields stay empty."""
    values = tuple(int(v) for v in values)
    diffs = forward_diffs(values)
    cand = Candidate(n=len(values) - 1, h=values, diffs=diffs, d=diffs[-1])
    return cand


# ---------------------------------------------------------------------------
# the constraint system

def qivj_value(q, i: int, j: int) -> int:
    """q_i(V_j) = sum_t (-1)^t C(j, t) q_{i-t}, with q_m = 0 for m <= 0.

    q is indexed q[m-1] = q_m for m >= 1.
    """
    total = 0
    for t in range(j + 1):
        m = i - t
        if m >= 1:
            qm = q[m - 1]
            total += qm * comb(j, t) * (1 if t % 2 == 0 else -1)
    return total


def qivj_nonnegativity(q, n: int, k_max: int, extended: bool = False):
    """Nonnegativity of the hyperplane-section ideal counts.

    Default mode checks only q_9(V_8) >= 0 (so nothing below n = 9);
    extended mode checks q_i(V_j) >= 0 for all 1 <= j <= n-1, j+1 <= i <= k_max.
    """
    checks = []
    if extended:
        pairs = [(i, j) for j in range(1, n) for i in range(j + 1, k_max + 1)]
    else:
        pairs = [(9, 8)] if n == 9 else []
    for i, j in pairs:
        v = qivj_value(q, i, j)
        checks.append((f"q{i}(V{j})>=0", v >= 0, v))
    return checks


def curve_constraint(q, n: int, p: int, d: int):
    """Genus test on the curve section V_{n-1}.

    q_n(V_{n-1}) = C(P+1, n) - n*d + g - 1 for the genus g of the curve
    section, so g is recoverable; the candidate passes iff g is a
    nonnegative integer with 2g - 2 < (n-1)*d.  Returns (ok, g, q_n(V_{n-1})).
    """
    qnv = qivj_value(q, n, n - 1)
    g = qnv - comb(p + 1, n) + n * d + 1
    ok = g >= 0 and 2 * g - 2 < (n - 1) * d
    return ok, g, qnv


def derive_degree_bound(n: int, p: int) -> int:
    """Largest d >= 1 keeping the genus window
    [max(0, C(P+1,n) - n*d - 1), C(P+1,n) - (n+1)*d/2) nonempty."""
    if n < 1 or n > p - 2:
        raise ValueError(f"need 1 <= n <= P-2, got n={n}, P={p}")
    b = comb(p + 1, n)
    best = 0
    d = 1
    while 2 * b - (n + 1) * d > 0:  # upper endpoint still positive
        lo = max(0, b - n * d - 1)
        if 2 * lo < 2 * b - (n + 1) * d:
            best = d
        d += 1
    return best


# ---------------------------------------------------------------------------
# the exhaustive search

@dataclass
class SearchResult:
    n: int
    mode: str
    candidates: list[Candidate]
    enumerated: int
    search_space: int
    d_bounds: tuple[int, int] | None

    @property
    def empty(self) -> bool:
        return not self.candidates


def search(
    sigma: SigmaTable,
    n: int,
    mode: str = "literal",
    d_bounds: tuple[int, int] | None = None,
    extended: bool = False,
    jobs: int = 1,
    pin: bool = True,
) -> SearchResult:
    """Exhaustively enumerate admissible Hilbert-function vectors of degree n.

    Visits every h_1..h_{n+1} in Sigma_1 x .. x Sigma_{n+1}, so
    `enumerated` equals the product of the free coordinate sizes.
    Survivors come back with full check traces, in lexicographic order of
    the value vector regardless of `jobs`.

    Both modes pin h_m = full(m) at degrees where Sigma_m = {0, full(m)}:
    an invariant subvariety either misses all degree-m forms (it would be
    empty) or none, so the value is forced.  Pass ``pin=False`` to drop
    that context and read the membership condition word for word; with the
    degree-12 data of the headline representation that unpinned reading
    admits one stray degree-8 polynomial (through h_1 = h_2 = h_4 = 0),
    which is why the pinned reading is the default everywhere.
    """
    if mode not in ("literal", "strict"):
        raise ValueError(f"unknown mode {mode!r}")
    if not 1 <= n <= sigma.p - 2:
        raise ValueError(f"need 1 <= n <= P-2 = {sigma.p - 2}, got {n}")
    if n + 1 > sigma.k_max:
        raise ValueError(f"need n+1 <= K_max = {sigma.k_max}")

    strict = mode == "strict"
    if strict:
        dmin, dmax = d_bounds if d_bounds else (1, comb(sigma.p, n))
        if n == 9 or (extended and n >= 2):
            dmax = min(dmax, derive_degree_bound(n, sigma.p))
    else:
        dmin, dmax = None, None

    pos_values: list[tuple[int, ...]] = []
    search_space = 1
    for m in range(1, n + 2):
        if pin and sigma.is_pinned(m):
            pos_values.append((sigma.full[m],))
        else:
            vals = tuple(sigma.values(m))
            pos_values.append(vals)
            search_space *= len(vals)

    if jobs > 1:
        split_at = next(
            (i for i, vals in enumerate(pos_values) if len(vals) > 1), None
        )
        if split_at is not None:
            chunk_values = pos_values[split_at]
            n_chunks = min(jobs, len(chunk_values))
            # contiguous slices keep the lexicographic merge order
            chunks = [
                tuple(chunk_values[i] for i in range(len(chunk_values))
                      if i * n_chunks // len(chunk_values) == c)
                for c in range(n_chunks)
            ]
            import concurrent.futures

            with concurrent.futures.ProcessPoolExecutor(n_chunks) as pool:
                futs = [
                    pool.submit(
                        _search_chunk, sigma, n, mode, (dmin, dmax), extended,
                        pin, pos_values, split_at, chunk,
                    )
                    for chunk in chunks if chunk
                ]
                results = [f.result() for f in futs]
            cands: list[Candidate] = []
            enumerated = 0
            for c_list, count in results:
                cands.extend(c_list)
                enumerated += count
            return SearchResult(n, mode, cands, enumerated, search_space,
                                (dmin, dmax) if strict else None)

    cands, enumerated = _search_chunk(
        sigma, n, mode, (dmin, dmax), extended, pin, pos_values, None, None
    )
    return SearchResult(n, mode, cands, enumerated, search_space,
                        (dmin, dmax) if strict else None)


def _search_chunk(sigma, n, mode, d_window, extended, pin, pos_values, split_at, chunk):
    """Enumerate one slice of the search space (worker for parallel runs)."""
    if split_at is not None:
        pos_values = list(pos_values)
        pos_values[split_at] = chunk
    strict = mode == "strict"
    dmin, dmax = d_window
    k_max = sigma.k_max
    p = sigma.p
    full = sigma.full
    bits = sigma.bits
    pinned = {m for m in range(1, k_max + 1) if pin and sigma.is_pinned(m)}
    q_next_min = comb(p, n + 1) if strict else None

    survivors: list[list[int]] = []
    count = 0
    chosen = [0] * (n + 1)

    def leaf(diag):
        nonlocal count
        count += 1
        d = diag[n]
        if d == 0:
            return
        if strict and (d < dmin or d > dmax):
            return
        # extend the difference diagonal to evaluate H at n+2..k_max
        cur = diag
        hm = []
        for m in range(n + 2, k_max + 1):
            nxt = [0] * (n + 1)
            nxt[n] = cur[n]
            for i in range(n - 1, -1, -1):
                nxt[i] = cur[i] + nxt[i + 1]
            v = nxt[0]
            if m in pinned:
                if v != full[m]:
                    return
            else:
                if v < 0 or v > full[m] or not (bits[m][v >> 3] >> (v & 7) & 1):
                    return
            hm.append(v)
            cur = nxt
        if strict:
            if full[n + 1] - chosen[n] < q_next_min:
                return
            hvec = chosen + hm
            q = [full[m] - hvec[m - 1] for m in range(1, k_max + 1)]
            for _, ok, _ in qivj_nonnegativity(q, n, k_max, extended):
                if not ok:
                    return
            if n == 9 or (extended and n >= 2):
                ok, _, _ = curve_constraint(q, n, p, d)
                if not ok:
                    return
        survivors.append(list(chosen) + hm)

    def rec(idx, diag):
        vals = pos_values[idx]
        if idx == n:
            for v in vals:
                t = v
                nd = [t]
                for u in diag:
                    t = t - u
                    nd.append(t)
                chosen[idx] = v
                leaf(nd)
        else:
            nxt = idx + 1
            for v in vals:
                t = v
                nd = [t]
                for u in diag:
                    t = t - u
                    nd.append(t)
                chosen[idx] = v
                rec(nxt, nd)

    rec(0, [])

    cands = [_build_candidate(sigma, n, mode, extended, d_window, hvec)
             for hvec in survivors]
    return cands, count


def _build_candidate(sigma, n, mode, extended, d_window, hvec) -> Candidate:
    """Full trace for a surviving value vector (rare, so done leisurely)."""
    strict = mode == "strict"
    diffs = forward_diffs(hvec[: n + 1])
    d = diffs[n]
    k_max = sigma.k_max
    q = tuple(sigma.full[m] - hvec[m - 1] for m in range(1, k_max + 1))
    trace = [("degree-exact", d != 0, f"d = {d}")]
    for m in range(1, k_max + 1):
        trace.append(
            (f"h_{m}-admissible", sigma.member(m, hvec[m - 1]), f"h_{m} = {hvec[m-1]}")
        )
    if strict:
        dmin, dmax = d_window
        trace.append((f"degree-window[{dmin},{dmax}]", dmin <= d <= dmax, f"d = {d}"))
        trace.append(
            (f"q_{n+1}>=C({sigma.p},{n+1})",
             q[n] >= comb(sigma.p, n + 1),
             f"q_{n+1} = {q[n]}")
        )
        for name, ok, val in qivj_nonnegativity(list(q), n, k_max, extended):
            trace.append((name, ok, str(val)))
        if n == 9 or (extended and n >= 2):
            ok, g, qnv = curve_constraint(list(q), n, sigma.p, d)
            trace.append(("curve-genus", ok, f"g = {g}, q_{n}(V_{n-1}) = {qnv}"))
    return Candidate(
        n=n, h=tuple(hvec), diffs=diffs, d=d, q=q, trace=tuple(trace)
    )


# ---------------------------------------------------------------------------
# per-representation verdicts

@dataclass
class ScreenEntry:
    n: int
    excluded: bool
    reason: str
    candidates: list[Candidate] = field(default_factory=list)
    enumerated: int = 0
    search_space: int = 0

    def to_json(self):
        return {
            "n": self.n,
            "excluded": self.excluded,
            "excluded_by": self.reason,
            "candidates": [
                {
                    "h": list(c.h),
                    "d": c.d,
                    "diffs": list(c.diffs),
                    "trace": [list(t) for t in c.trace],
                }
                for c in self.candidates
            ],
            "enumerated": self.enumerated,
            "search_space": self.search_space,
        }


@dataclass
class ScreenReport:
    label: str
    dim: int
    p: int
    k_max: int
    mode: str
    entries: list[ScreenEntry]

    @property
    def passed(self) -> bool:
        """True when every dimension n is excluded: no admissible invariant
        subvariety candidate survives."""
        return all(e.excluded for e in self.entries)

    def to_json(self):
        return {
            "label": self.label,
            "dim": self.dim,
            "P": self.p,
            "k_max": self.k_max,
            "mode": self.mode,
            "entries": [e.to_json() for e in self.entries],
            "verdict": (
                "no admissible invariant subvariety found"
                if self.passed else "candidates not excluded"
            ),
            "passed": self.passed,
        }


def hypersurface_degree(delta: DeltaTable, up_to: int) -> int | None:
    """Least m <= up_to with a one-dimensional summand in Delta_m."""
    for m in range(1, up_to + 1):
        if 1 in delta.dims[m]:
            return m
    return None


def screen_delta(
    delta: DeltaTable,
    mode: str = "strict",
    extended: bool = False,
    jobs: int = 1,
    only_n: int | None = None,
    pin: bool = True,
    label: str = "delta-fixture",
) -> ScreenReport:
    """Run the full exclusion pipeline from a Delta table.

    Covers n = 0 (irreducibility), 1 <= n <= P-2 (the search), and
    n = P-1 (invariant hypersurfaces, excluded when no one-dimensional
    summand appears in degree <= P).
    """
    sigma = sigma_from_delta(delta)
    p = sigma.p
    entries: list[ScreenEntry] = []

    def want(n):
        return only_n is None or n == only_n

    if want(0):
        irreducible = len(delta.dims[1]) == 1
        entries.append(
            ScreenEntry(0, irreducible,
                        "irreducible representation" if irreducible
                        else "NOT excluded: representation is reducible")
        )
    for n in range(1, p - 1):
        if not want(n):
            continue
        if n + 1 > delta.k_max:
            # interpolation needs n+1 sample degrees; never assume exclusion
            entries.append(
                ScreenEntry(
                    n, False,
                    f"NOT excluded: need Delta up to degree {n + 1}, "
                    f"have K_max = {delta.k_max} (check skipped)",
                )
            )
            continue
        res = search(sigma, n, mode=mode, extended=extended, jobs=jobs, pin=pin)
        entries.append(
            ScreenEntry(
                n,
                res.empty,
                f"search-empty({mode})" if res.empty
                else f"NOT excluded: {len(res.candidates)} candidate(s)",
                res.candidates,
                res.enumerated,
                res.search_space,
            )
        )
    if p - 1 >= 1 and want(p - 1):
        if delta.k_max >= p:
            deg = hypersurface_degree(delta, p)
            entries.append(
                ScreenEntry(
                    p - 1,
                    deg is None,
                    "no invariant hypersurface of degree <= "
                    f"{p}" if deg is None
                    else f"NOT excluded: invariant hypersurface of degree {deg}",
                )
            )
        else:
            entries.append(
                ScreenEntry(p - 1, False,
                            f"NOT excluded: need Delta up to degree {p}, "
                            f"have K_max = {delta.k_max} (check skipped)")
            )
    return ScreenReport(label, delta.dim, p, delta.k_max, mode, entries)


def screen_rep(table, chi, k_max: int = 12, mode: str = "strict",
               extended: bool = False, jobs: int = 1,
               pin: bool = True) -> ScreenReport:
    """Full pipeline for an irreducible faithful character of a table."""
    from .chartab import inner_product, is_faithful
    from .invdeg import semi_invariant_degree
    from .sympow import delta_table

    norm = inner_product(table, chi, chi).as_rational()
    if norm != 1:
        raise ValueError(f"character is not irreducible (norm {norm})")
    if not is_faithful(table, chi):
        raise ValueError("character is not faithful")
    dim = int(chi.values[0].as_rational())
    p = dim - 1
    delta = delta_table(table, chi, k_max)
    report = screen_delta(delta, mode=mode, extended=extended, jobs=jobs,
                          pin=pin, label=table.group_name)
    # redo the hypersurface entry through the semi-invariant machinery
    if p - 1 >= 0 and k_max >= p:
        deg = semi_invariant_degree(table, chi, p)
        for i, e in enumerate(report.entries):
            if e.n == p - 1:
                report.entries[i] = ScreenEntry(
                    p - 1,
                    deg is None,
                    f"no semi-invariant of degree <= {p}" if deg is None
                    else f"NOT excluded: semi-invariant of degree {deg}",
                )
    return report
