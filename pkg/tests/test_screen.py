import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from repscreen import screen, sympow
from repscreen.screen import (
    Candidate,
    curve_constraint,
    derive_degree_bound,
    forward_diffs,
    interpolate,
    newton_eval,
    qivj_nonnegativity,
    qivj_value,
    search,
    sigma_from_delta,
)
from repscreen.sympow import DeltaTable


def make_delta(dims_by_k):
    dim = dims_by_k[1][0] if len(dims_by_k[1]) == 1 else sum(dims_by_k[1])
    return DeltaTable(None, dim, max(dims_by_k), {k: sorted(v) for k, v in dims_by_k.items()})


# ---------------------------------------------------------------------------
# sigma tables

def test_sigma_subset_sums_of_pair(suz12_sigma):
    assert suz12_sigma.values(6) == [0, 364, 12012, 12376]


def test_sigma_singleton(suz12_sigma):
    assert suz12_sigma.values(2) == [0, 78]
    assert suz12_sigma.is_pinned(2)
    assert not suz12_sigma.is_pinned(6)


def test_sigma_multiplicity_handling():
    # Delta = [2 x a]: subset sums {0, a, 2a}
    delta = DeltaTable(None, 14, 1, {1: [7, 7]})
    sigma = sigma_from_delta(delta)
    assert sigma.values(1) == [0, 7, 14]


def test_sigma_complement_closure(suz12_sigma):
    for m in range(1, 13):
        assert suz12_sigma.complement_closed(m)


def test_sigma_sizes(suz12_sigma):
    sizes = {m: suz12_sigma.size(m) for m in range(1, 13)}
    assert sizes[8] == 16          # 4 distinct summands
    assert sizes[9] == 36          # multiplicities 2,2,1,1
    assert sizes[12] == 516313     # heavy dedup of 3^8 * 2^11 raw sums


def test_sigma_rejects_bad_delta():
    with pytest.raises(ValueError, match="sums to"):
        sigma_from_delta(DeltaTable(None, 12, 1, {1: [11]}))


@given(st.lists(st.integers(1, 40), min_size=1, max_size=9))
@settings(max_examples=60, deadline=None)
def test_sigma_matches_itertools_oracle(entries):
    # independent oracle: enumerate all 2^len subsets directly
    from itertools import combinations

    total = sum(entries)
    delta = DeltaTable(None, total, 1, {1: sorted(entries)})
    sigma = sigma_from_delta(delta)
    brute = set()
    for r in range(len(entries) + 1):
        for combo in combinations(entries, r):
            brute.add(sum(combo))
    assert sigma.values(1) == sorted(brute)
    assert sigma.size(1) == len(brute)
    for v in range(total + 1):
        assert sigma.member(1, v) == (v in brute)


# ---------------------------------------------------------------------------
# interpolation

def test_interpolate_constant():
    cand = interpolate([5, 5, 5, 5])
    assert cand.diffs == (5, 0, 0, 0)
    assert cand.degree == 0
    assert cand.evaluate(40) == 5


def test_interpolate_binomial_needs_degree_eleven():
    # C(11+m, m) is degree 11 in m; ten samples only give the degree-9
    # truncation, whose tail misses by the dropped Newton terms
    values = [comb(11 + m, m) for m in range(1, 11)]
    cand = interpolate(values)
    assert cand.degree == 9
    # independent oracle: Lagrange interpolation over exact rationals
    def lagrange(xs, ys, x):
        total = Fraction(0)
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            term = Fraction(yi)
            for j, xj in enumerate(xs):
                if i != j:
                    term *= Fraction(x - xj, xi - xj)
            total += term
        return total
    for m in (11, 12):
        lag = lagrange(range(1, 11), values, m)
        assert cand.evaluate(m) == lag
    assert cand.evaluate(11) == comb(22, 11) - 12
    assert cand.evaluate(12) == comb(23, 12) - 133
    # sampling all twelve values captures the polynomial exactly
    cand12 = interpolate([comb(11 + m, m) for m in range(1, 13)])
    assert cand12.degree == 11
    assert cand12.evaluate(13) == comb(24, 13)


def test_interpolate_full_dims_gives_zero_ideal(suz12_sigma):
    values = [suz12_sigma.full[m] for m in range(1, 13)]
    cand = interpolate(values)
    q = [suz12_sigma.full[m] - cand.evaluate(m) for m in range(1, 13)]
    assert q == [0] * 12


def test_newton_eval_matches_lagrange_on_random_vectors():
    # 100 random integer value vectors: the forward-difference evaluator
    # agrees with direct (Lagrange, exact rational) interpolation at 1..20
    rng = random.Random(11)
    for _ in range(100):
        values = [rng.randrange(-10**6, 10**6) for _ in range(rng.randrange(2, 9))]
        diffs = forward_diffs(values)
        xs = range(1, len(values) + 1)
        for m in range(1, 21):
            lag = Fraction(0)
            for i, (xi, yi) in enumerate(zip(xs, values)):
                term = Fraction(yi)
                for j, xj in enumerate(xs):
                    if i != j:
                        term *= Fraction(m - xj, xi - xj)
                lag += term
            assert lag.denominator == 1 and newton_eval(diffs, m) == lag


def test_newton_eval_matches_direct_polynomial():
    rng = random.Random(7)
    for _ in range(100):
        coeffs = [rng.randrange(-50, 50) for _ in range(rng.randrange(1, 7))]
        def poly(m):
            return sum(c * m**i for i, c in enumerate(coeffs))
        samples = [poly(m) for m in range(1, len(coeffs) + 1)]
        diffs = forward_diffs(samples)
        for m in range(1, 21):
            assert newton_eval(diffs, m) == poly(m)


@given(st.lists(st.integers(-10**6, 10**6), min_size=2, max_size=8))
@settings(max_examples=50, deadline=None)
def test_reconstruction_reproduces_samples(values):
    diffs = forward_diffs(values)
    for m, v in enumerate(values, start=1):
        assert newton_eval(diffs, m) == v


# ---------------------------------------------------------------------------
# constraints

def test_qivj_value_alternating_sum():
    q = [0, 0, 0, 0, 0, 12376, 0, 0, 0]   # q_6 = 12376, rest zero
    assert qivj_value(q, 9, 8) == -56 * 12376


def test_qivj_nonnegativity_examples():
    zeros = [0] * 12
    assert all(ok for _, ok, _ in qivj_nonnegativity(zeros, 9, 12))
    q = [0] * 12
    q[5] = 12376  # q_6
    checks = qivj_nonnegativity(q, 9, 12)
    assert checks and not checks[0][1]
    q = [0] * 12
    q[5], q[6], q[7], q[8] = 364, 4368, 1365, 728
    checks = qivj_nonnegativity(q, 9, 12)
    value = 728 - 8 * 1365 + 28 * 4368 - 56 * 364
    assert value == 91728  # positive, so the check passes
    assert checks[0][1] and checks[0][2] == value


def test_qivj_default_mode_only_at_nine():
    assert qivj_nonnegativity([0] * 12, 8, 12) == []
    assert len(qivj_nonnegativity([0] * 12, 9, 12, extended=True)) > 1


def test_curve_constraint_examples():
    # d=43, q_9(V_8)=0: g = -220 + 387 + 1 = 168, and 334 < 344
    q = [0] * 12
    ok, g, qnv = curve_constraint(q, 9, 11, 43)
    assert (ok, g, qnv) == (True, 168, 0)
    # d=44: window 220 - 5d = 0 is empty
    ok, g, _ = curve_constraint(q, 9, 11, 44)
    assert not ok
    # d=1 with q_9(V_8) = 209 < 219 - 9 = 210: fails the lower bound (g < 0)
    q9 = [0] * 12
    q9[8] = 209
    ok, g, qnv = curve_constraint(q9, 9, 11, 1)
    assert qnv == 209 and g == 209 - 220 + 9 + 1 and g < 0 and not ok


def test_curve_window_matches_closed_form():
    # the genus test accepts exactly the integers in
    # [max(0, 219 - 9d), 220 - 5d), for every admissible d
    for d in range(1, 45):
        lo = max(0, 219 - 9 * d)
        hi = 220 - 5 * d
        for qv in range(0, 400):
            q = [0] * 12
            q[8] = qv  # q_9 = q_9(V_8) when everything else vanishes
            ok, _, qnv = curve_constraint(q, 9, 11, d)
            assert qnv == qv
            assert ok == (lo <= qv < hi), (d, qv)


def test_derive_degree_bound():
    assert derive_degree_bound(9, 11) == 43
    # direct check that 44 closes the window and 43 keeps it open
    assert 220 - 5 * 44 == 0
    assert max(0, 219 - 9 * 43) < 220 - 5 * 43
    assert derive_degree_bound(1, 11) == 11
    with pytest.raises(ValueError):
        derive_degree_bound(10, 11)


# ---------------------------------------------------------------------------
# the search

def test_search_degenerate_sigma_degree_one():
    # Sigma_m = {0, full} everywhere: nothing of degree 1 can follow
    # binomial growth
    delta = DeltaTable(None, 4, 4, {1: [4], 2: [10], 3: [20], 4: [35]})
    sigma = sigma_from_delta(delta)
    res = search(sigma, 1, mode="literal")
    assert res.empty
    assert res.enumerated == 1  # both coordinates pinned
    res = search(sigma, 1, mode="literal", pin=False)
    assert res.enumerated == 4
    assert res.empty


def test_search_space_counter_literal(suz12_sigma):
    for n in (1, 5, 7):
        res = search(suz12_sigma, n, mode="literal")
        expect = 1
        for m in range(1, n + 2):
            if not suz12_sigma.is_pinned(m):
                expect *= suz12_sigma.size(m)
        assert res.enumerated == res.search_space == expect


def test_search_unpinned_admits_known_stray(suz12_sigma):
    # word-for-word reading of the membership condition: one degree-8
    # polynomial slips through via h_1 = h_2 = h_4 = 0
    res = search(suz12_sigma, 8, mode="literal", pin=False)
    assert len(res.candidates) == 1
    cand = res.candidates[0]
    assert cand.h == (0, 0, 364, 0, 4368, 12012, 27456, 69927, 167232,
                      343980, 633204, 1160302)
    assert cand.d == 19864
    for m in range(1, 13):
        assert suz12_sigma.member(m, cand.h[m - 1])
    # the pinned reading excludes it
    assert search(suz12_sigma, 8, mode="literal").empty


LINE_DELTA = DeltaTable(None, 5, 5, {
    # crafted so that H(m) = 5m - 3 threads the subset sums: a literal
    # survivor of degree 1 whose leading term d = 5 > C(4,1) fails strict
    1: [2, 3], 2: [7, 8], 3: [12, 23], 4: [17, 53], 5: [22, 104],
})


def test_strict_subset_of_literal():
    sigma = sigma_from_delta(LINE_DELTA)
    for n in (1, 2):
        lit = {c.h for c in search(sigma, n, mode="literal").candidates}
        sub = {c.h for c in search(sigma, n, mode="strict").candidates}
        assert sub <= lit
    # and the containment is strict at n = 1 for this table
    assert search(sigma, 1, mode="literal").candidates
    assert not search(sigma, 1, mode="strict").candidates


def test_search_rejects_out_of_range_degree(suz12_sigma):
    with pytest.raises(ValueError):
        search(suz12_sigma, 10, mode="strict")
    with pytest.raises(ValueError):
        search(suz12_sigma, 0)


def test_search_jobs_deterministic(suz12_sigma):
    seq = search(suz12_sigma, 6, mode="literal")
    par = search(suz12_sigma, 6, mode="literal", jobs=3)
    assert seq.enumerated == par.enumerated
    assert [c.h for c in seq.candidates] == [c.h for c in par.candidates]


def test_strict_d_bounds_echo(suz12_sigma):
    res = search(suz12_sigma, 9, mode="strict")
    assert res.d_bounds == (1, 43)
    res = search(suz12_sigma, 8, mode="strict")
    assert res.d_bounds == (1, comb(11, 8))


def test_extended_mode_applies_curve_bound_below_nine(suz12_sigma):
    res = search(suz12_sigma, 8, mode="strict", extended=True)
    assert res.d_bounds == (1, derive_degree_bound(8, 11)) == (1, 109)
    assert res.empty


def test_explicit_d_bounds_override(suz12_sigma):
    res = search(suz12_sigma, 9, mode="strict", d_bounds=(1, 20))
    assert res.d_bounds == (1, 20)  # curve bound still intersects at n = 9
    assert res.empty


def test_candidate_trace_populated():
    sigma = sigma_from_delta(LINE_DELTA)
    res = search(sigma, 1, mode="literal")
    assert res.candidates
    cand = res.candidates[0]
    assert cand.h == (2, 7, 12, 17, 22) and cand.d == 5
    assert any(name == "degree-exact" for name, _, _ in cand.trace)
    assert all(ok for _, ok, _ in cand.trace)
    assert cand.q[0] == sigma.full[1] - cand.h[0]
    # reconstruction invariant: the stored samples reproduce
    for m in range(1, len(cand.h) + 1):
        assert cand.evaluate(m) == cand.h[m - 1]


# ---------------------------------------------------------------------------
# verdict pipelines

def test_screen_delta_full_verdict(suz12_delta):
    report = screen.screen_delta(suz12_delta, mode="strict")
    assert report.passed
    assert [e.n for e in report.entries] == list(range(11))
    nine = next(e for e in report.entries if e.n == 9)
    assert nine.enumerated == 2488320
    ten = next(e for e in report.entries if e.n == 10)
    assert ten.excluded and "hypersurface" in ten.reason


def test_screen_delta_hypersurface_entries(suz12_delta):
    assert screen.hypersurface_degree(suz12_delta, 11) is None
    assert screen.hypersurface_degree(suz12_delta, 12) == 12


def test_screen_delta_degrees_beyond_data_never_assumed(suz12_delta):
    # truncate the fixture to degree 6: degrees needing more samples (or
    # the hypersurface bound) come back NOT excluded, not crash, not pass
    truncated = DeltaTable(
        None, 12, 6, {k: suz12_delta.dims[k] for k in range(1, 7)}
    )
    rep = screen.screen_delta(truncated, mode="strict")
    by_n = {e.n: e for e in rep.entries}
    assert by_n[5].excluded                      # search still runs: 6 samples
    for n in (6, 7, 8, 9, 10):
        assert not by_n[n].excluded
        assert "skipped" in by_n[n].reason
    assert not rep.passed


def test_screen_rep_a5_not_excluded(a5):
    i3 = next(i for i, x in enumerate(a5.irreducibles) if x.degree == 3)
    report = screen.screen_rep(a5, a5.class_function(i3), k_max=8)
    assert not report.passed
    hyp = next(e for e in report.entries if e.n == 1)
    assert not hyp.excluded and "degree 2" in hyp.reason


def test_screen_rep_rejects_reducible(a5):
    with pytest.raises(ValueError, match="irreducible"):
        screen.screen_rep(a5, a5.class_function(0) + a5.class_function(1), k_max=6)


def test_screen_rep_rejects_unfaithful(sl25):
    # a lifted (quotient) character of SL(2,5) is not faithful
    i3 = next(
        i for i, x in enumerate(sl25.irreducibles)
        if x.degree == 3
    )
    with pytest.raises(ValueError, match="faithful"):
        screen.screen_rep(sl25, sl25.class_function(i3), k_max=6)


def test_report_json_deterministic(suz12_delta):
    import json

    a = json.dumps(screen.screen_delta(suz12_delta, mode="strict", only_n=5).to_json(),
                   sort_keys=True)
    b = json.dumps(screen.screen_delta(suz12_delta, mode="strict", only_n=5).to_json(),
                   sort_keys=True)
    assert a == b
