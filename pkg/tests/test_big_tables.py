"""Structural checks on the large converted-table fixtures.

These tables ship with the converter package; every test here skips
cleanly if they are absent, so the primary suite stands alone.
"""

from fractions import Fraction
from pathlib import Path

import pytest

from repscreen import chartab, invdeg
from repscreen.chartab import validate

FIXTURES = Path(__file__).resolve().parents[1] / "gapconv" / "fixtures" / "expected"

needs_m12 = pytest.mark.skipif(
    not (FIXTURES / "m12.json").exists(), reason="converter fixtures not present"
)
needs_2m12 = pytest.mark.skipif(
    not (FIXTURES / "2m12.json").exists(), reason="converter fixtures not present"
)


@pytest.fixture(scope="module")
def m12():
    return chartab.load(FIXTURES / "m12.json")


@pytest.fixture(scope="module")
def m12x2():
    return chartab.load(FIXTURES / "2m12.json")


@needs_m12
def test_m12_degrees_and_validation(m12):
    assert m12.order == 95040
    assert sorted(x.degree for x in m12.irreducibles) == [
        1, 11, 11, 16, 16, 45, 54, 55, 55, 55, 66, 99, 120, 144, 176,
    ]
    assert validate(m12).ok


@needs_m12
def test_m12_appendix_entry(m12):
    flagged = invdeg.flagged_entries(invdeg.scan(m12, 12, faithful_only=True))
    assert flagged and all(
        r.d == 3 and r.dim == 16 and r.mu == Fraction(3, 16) for r in flagged
    )


@needs_2m12
def test_2m12_faithful_spectrum(m12x2):
    assert m12x2.order == 190080
    faithful = [
        x.degree
        for i, x in enumerate(m12x2.irreducibles)
        if chartab.is_faithful(m12x2, m12x2.class_function(i))
    ]
    assert sorted(faithful) == [10, 10, 12, 32, 44, 44, 110, 110, 120, 160, 160]
    assert sum(d * d for d in faithful) == 95040  # the faithful half
    assert validate(m12x2).ok


@needs_2m12
def test_2m12_appendix_entry(m12x2):
    flagged = invdeg.flagged_entries(invdeg.scan(m12x2, 12, faithful_only=True))
    assert flagged and all(
        r.d == 6 and r.dim == 10 and r.mu == Fraction(6, 10) for r in flagged
    )


@needs_2m12
def test_2m12_quotient_characters_match_m12(m12, m12x2):
    # the lifted (non-faithful) irreducibles of the double cover carry the
    # same degree multiset as the quotient's table
    lifted = [
        x.degree
        for i, x in enumerate(m12x2.irreducibles)
        if not chartab.is_faithful(m12x2, m12x2.class_function(i))
    ]
    assert sorted(lifted) == sorted(x.degree for x in m12.irreducibles)
