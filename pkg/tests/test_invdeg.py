from fractions import Fraction

import pytest

from repscreen import chartab, invdeg
from repscreen.invdeg import (
    flagged_entries,
    linear_characters,
    scan,
    semi_invariant_degree,
)
from repscreen.oracle import enumerate_group, invariant_dimensions, matrix_from_json


def test_linear_characters(s3, a5, m11):
    assert len(linear_characters(s3)) == 2
    assert linear_characters(a5) == [0]
    assert linear_characters(m11) == [0]


def test_trivial_character_degree_one(s3):
    assert semi_invariant_degree(s3, s3.class_function(0), 12) == 1


def test_a5_rotation_degree_two(a5):
    i3 = next(i for i, x in enumerate(a5.irreducibles) if x.degree == 3)
    assert semi_invariant_degree(a5, a5.class_function(i3), 12) == 2


def test_a5_rotation_matches_trace_oracle(a5, gens):
    # trace-averaged invariant dimensions over the 60 rotation matrices
    group = enumerate_group([matrix_from_json(m) for m in gens["a5_rot3"]])
    dims = invariant_dimensions(group, 8)
    first = next(k for k in range(1, 9) if dims[k] > 0)
    i3 = next(i for i, x in enumerate(a5.irreducibles) if x.degree == 3)
    assert semi_invariant_degree(a5, a5.class_function(i3), 8) == first == 2


def test_one_dimensional_characters_have_degree_one(s3):
    # any linear character is itself a semi-invariant in degree 1
    assert semi_invariant_degree(s3, s3.class_function(1), 12) == 1
    assert semi_invariant_degree(s3, s3.class_function(0), 12) == 1


def test_monotone_in_kmax(m11):
    # raising K_max never changes an already-found degree
    for i in range(len(m11.irreducibles)):
        chi = m11.class_function(i)
        d8 = semi_invariant_degree(m11, chi, 8)
        d12 = semi_invariant_degree(m11, chi, 12)
        if d8 is not None:
            assert d12 == d8
        assert semi_invariant_degree(m11, chi, 12 if d12 is None else d12) == d12


def test_scan_m11_flagged_entry(m11):
    reports = scan(m11, k_max=12, faithful_only=True)
    fl = flagged_entries(reports)
    assert fl, "no flagged entry"
    assert all(r.mu == Fraction(4, 10) and r.d == 4 and r.dim == 10 for r in fl)
    # the attaining dimension is unique even though the Galois pair ties
    assert len({r.dim for r in fl}) == 1
    assert len(fl) == 2


def test_scan_m11_real_reps_have_quadratic_invariants(m11):
    reports = scan(m11, k_max=12, faithful_only=True)
    by_name = {r.name: r for r in reports}
    for name in ("11a", "44a", "45a", "55a"):
        assert by_name[name].d == 2


def test_scan_sorted_by_mu_dim_name(m11):
    reports = scan(m11, k_max=12)
    mus = [(r.mu, r.dim, r.name) for r in reports if r.mu is not None]
    assert mus == sorted(mus)


def test_scan_trivial_only_table():
    table = chartab.loads(
        {
            "group": "1",
            "order": "1",
            "conductor": 1,
            "classes": [
                {"name": "1a", "size": "1", "order": 1,
                 "powermaps": {"2": 0, "3": 0, "5": 0, "7": 0, "11": 0}}
            ],
            "irreducibles": [{"name": "1a", "degree": 1, "values": ["1"]}],
        }
    )
    reports = scan(table, k_max=12)
    assert len(reports) == 1
    assert reports[0].d == 1 and reports[0].mu == 1


def test_scan_excluded_dims(m11):
    reports = scan(m11, k_max=12, faithful_only=True, excluded_dims={10})
    assert all(r.dim != 10 for r in reports)
    fl = flagged_entries(reports)
    assert fl and all(r.dim == 16 and r.d == 3 for r in fl)


def test_scan_faithful_filter(sl25):
    # SL(2,5): the lifted characters of the icosahedral quotient are not
    # faithful; only the genuinely faithful ones survive the filter
    all_reports = scan(sl25, k_max=12)
    faithful = scan(sl25, k_max=12, faithful_only=True)
    assert len(faithful) < len(all_reports)
    assert {r.dim for r in faithful} == {2, 4, 6}
    fl = flagged_entries(faithful)
    assert all(r.dim == 2 and r.d == 12 for r in fl)


def test_scan_reports_unfound_degrees_last(sl25):
    reports = scan(sl25, k_max=4, faithful_only=True)
    assert any(r.d is None for r in reports)
    tail = [r for r in reports if r.d is None]
    assert reports[-len(tail):] == tail
