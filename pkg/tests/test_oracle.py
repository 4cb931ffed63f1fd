import pytest

from repscreen import sympow
from repscreen.cyclo import CycNum
from repscreen.oracle import (
    CapExceeded,
    class_function_check,
    enumerate_group,
    invariant_dimension,
    invariant_dimensions,
    match_classes,
    matrix_from_json,
    perm_from_cycles,
    perm_to_cycles,
    sym_power_traces,
)


def test_cycle_notation_round_trip():
    p = perm_from_cycles("(1,2)(3,4,5)", 6)
    assert p == (1, 0, 3, 4, 2, 5)
    assert perm_to_cycles(p) == "(1,2)(3,4,5)"
    assert perm_from_cycles("()", 3) == (0, 1, 2)


def test_enumerate_s3():
    g = enumerate_group([perm_from_cycles("(1,2)", 3), perm_from_cycles("(1,2,3)", 3)])
    assert g.order == 6
    assert sorted(g.class_sizes()) == [1, 2, 3]
    assert sorted(g.class_orders) == [1, 2, 3]


def test_enumerate_a5():
    g = enumerate_group(
        [perm_from_cycles("(1,2,3,4,5)", 5), perm_from_cycles("(1,2)(3,4)", 5)]
    )
    assert g.order == 60
    assert sorted(g.class_sizes()) == [1, 12, 12, 15, 20]


def test_enumerate_m11(gens):
    g = enumerate_group([perm_from_cycles(s, 11) for s in gens["m11_perm"]])
    assert g.order == 7920
    assert len(g.class_members) == 10


def test_closure_property():
    g = enumerate_group([perm_from_cycles("(1,2,3,4)", 4), perm_from_cycles("(1,2)", 4)])
    assert g.order == 24
    sample = g.elements[::5]
    for a in sample:
        for b in sample:
            assert g.mul(a, b) in g.index


def test_class_sizes_partition_group(gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["sl25_su2"]])
    assert g.order == 120
    assert sum(g.class_sizes()) == 120


def test_cap_exceeded():
    # S9 has 362880 elements, past the 200000-element cap
    with pytest.raises(CapExceeded):
        enumerate_group(
            [perm_from_cycles("(1,2)", 9),
             perm_from_cycles("(1,2,3,4,5,6,7,8,9)", 9)]
        )


def test_c2_line_dims(gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["c2_line"]])
    assert invariant_dimensions(g, 4) == [1, 0, 1, 0, 1]
    assert invariant_dimension(g, 3) == 0


def test_s3_standard_invariants(gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["s3_std2"]])
    # polynomial invariants of the standard reflection-free S3 action:
    # generated in degrees 2 and 3
    assert invariant_dimensions(g, 6) == [1, 0, 1, 1, 1, 1, 2]


def test_a5_rotation_invariants(gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["a5_rot3"]])
    assert g.order == 60
    dims = invariant_dimensions(g, 3)
    assert dims[2] == 1 and dims[3] == 0  # quadratic form, nothing cubic


def test_sym_power_traces_match_direct_expansion(gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["s3_std2"]])
    x = g.elements[1]
    s = sym_power_traces(g, x, 2)
    tr1 = s[1]
    # trace of Sym^2 = (tr(x)^2 + tr(x^2)) / 2 by hand
    from fractions import Fraction

    tr_x2 = sym_power_traces(g, g.mul(x, x), 1)[1]
    assert s[2] == (tr1 * tr1 + tr_x2) * Fraction(1, 2)


def test_class_function_check_s3(s3, gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["s3_std2"]])
    std = s3.class_function(2)
    for k in range(9):
        pipeline = sympow.sym_power_character(s3, std, k)
        rep = class_function_check(g, s3, pipeline, k)
        assert rep.ok, f"k={k}:\n{rep}"


def test_class_function_check_a5(a5, gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["a5_rot3"]])
    i3 = next(
        i for i, x in enumerate(a5.irreducibles) if x.degree == 3
    )
    # the matrix group realizes one member of the 3-dim Galois pair; the
    # 5A/5B signatures are ambiguous, so the check compares multisets there
    chi = a5.class_function(i3)
    for k in range(9):
        pipeline = sympow.sym_power_character(a5, chi, k)
        rep = class_function_check(g, a5, pipeline, k)
        assert rep.ok, f"k={k}:\n{rep}"


def test_class_function_check_detects_wrong_character(s3, gens):
    g = enumerate_group([matrix_from_json(m) for m in gens["s3_std2"]])
    sign = s3.class_function(1)
    rep = class_function_check(g, s3, sympow.sym_power_character(s3, sign, 1), 1)
    assert not rep.ok
    bad = [sig for sig, ok, _ in rep.entries if not ok]
    assert bad  # localized to the classes where sign differs from the trace


def test_class_function_check_mismatched_table(s3, gens):
    # a table whose class layout cannot correspond to the group
    g = enumerate_group([matrix_from_json(m) for m in gens["c2_line"]])
    with pytest.raises(ValueError, match="signatures"):
        match_classes(g, s3)


def test_class_function_check_perturbed_power_map_localized(gens):
    # redirect one power map in the table: the symmetric-power recursion
    # then computes a wrong value exactly at the affected class
    import json

    from repscreen import chartab
    from conftest import DATA

    obj = json.loads((DATA / "s3.json").read_text())
    assert obj["classes"][2]["powermaps"]["2"] == 2
    obj["classes"][2]["powermaps"]["2"] = 1  # order-3 class "squares" to 2a
    broken = chartab.loads(obj)
    g = enumerate_group([matrix_from_json(m) for m in gens["s3_std2"]])
    std = broken.class_function(2)
    rep = class_function_check(g, broken, sympow.sym_power_character(broken, std, 2), 2)
    assert not rep.ok
    bad = {sig for sig, ok, _ in rep.entries if not ok}
    good = {sig for sig, ok, _ in rep.entries if ok}
    assert bad == {(2, 3)}          # only the tampered class disagrees
    assert (1, 1) in good and (3, 2) in good


def test_matrix_dimension_limit():
    big = [[CycNum.one().to_json()] * 9 for _ in range(9)]
    with pytest.raises(ValueError, match="dimension"):
        matrix_from_json(big)
