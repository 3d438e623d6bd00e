"""Chain windows, cones, and the two-by-two matrix DG algebra."""

from fractions import Fraction

import pytest

from gradedhh.chromatic_presets import ChromaticParams, bp_q
from gradedhh.dg_complexes import (
    ChainWindow,
    GradedComplex,
    build_cycles_window,
    build_mdga_window,
    commutative_model_check,
    cone,
    cone_report,
    cycles_subalgebra,
    degree_dims,
    dga_diff,
    dga_structure_check,
    homology_dims,
    homology_ring_check,
    is_vn_free_cycle_shape,
    matrix_dga,
    mdga_basis_labels,
    mdga_diag,
    mdga_element,
    mdga_eps,
    mdga_identity,
    quasi_iso_check,
)
from gradedhh.exact_linear import RationalMatrix
from gradedhh.graded_algebra import Element, make_presentation


def poly_ring():
    return make_presentation([("v1", 2, False), ("v2", 6, False)])


# -- degree dims and chain windows ---------------------------------------------


def test_degree_dims_polynomial():
    dims = degree_dims(poly_ring(), (-2, 8))
    assert dims == {-2: 0, -1: 0, 0: 1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 2,
                    7: 0, 8: 2}


def test_chain_window_rejects_gaps_and_bad_shapes():
    with pytest.raises(ValueError):
        ChainWindow({0: ["x"], 2: ["y"]}, {})
    with pytest.raises(ValueError):
        ChainWindow({0: ["x"], 1: ["y"]}, {})  # missing differential
    with pytest.raises(ValueError):
        ChainWindow({0: ["x"], 1: ["y"]}, {1: RationalMatrix(2, 1)})


def test_chain_window_rejects_nonzero_d_squared():
    one = RationalMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        ChainWindow({0: ["x"], 1: ["y"], 2: ["z"]}, {1: one, 2: one})


def test_chain_window_homology_needs_padding():
    w = ChainWindow(
        {0: ["x"], 1: ["y"], 2: ["z"]},
        {1: RationalMatrix.from_rows([[1]]), 2: RationalMatrix(1, 1)},
    )
    assert w.homology_dims((1, 1)) == {1: 0}
    with pytest.raises(ValueError):
        w.homology_dims((0, 1))


# -- cones on multiplication maps ------------------------------------------------


def test_cone_on_regular_element_matches_quotient():
    pres = poly_ring()
    v2 = Element.gen(pres, "v2")
    report = cone_report(pres, v2, (-4, 8))
    nonzero = {t: d for t, d in report["homology_dims"].items() if d}
    assert nonzero == {0: 1, 2: 1, 4: 1, 6: 1, 8: 1}
    assert report["regular"]
    assert report["dims_match_quotient"]
    assert report["comparison_binding"]


def test_cone_on_zero_gives_summand_and_shift():
    pres = poly_ring()
    report = cone_report(pres, Element.zero(pres), (-2, 4), caps=3)
    nonzero = {t: d for t, d in report["homology_dims"].items() if d}
    assert nonzero == {0: 1, 1: 1, 2: 1, 3: 1, 4: 1}
    assert not report["regular"]
    assert not report["comparison_binding"]


def test_cone_on_unit_is_acyclic():
    pres = poly_ring()
    report = cone_report(pres, Element.one(pres), (-2, 4), caps=3)
    assert all(d == 0 for d in report["homology_dims"].values())


def test_cone_requires_homogeneous_attaching_map():
    pres = poly_ring()
    v1, v2 = Element.gen(pres, "v1"), Element.gen(pres, "v2")
    with pytest.raises(ValueError):
        cone(pres, v1 + v2)


def test_graded_complex_rejects_non_chain_maps():
    pres = poly_ring()
    v1 = Element.gen(pres, "v1")
    with pytest.raises(ValueError):
        GradedComplex(pres, (0, 1), (v1,))  # shift says degree 0, v1 is degree 2


def test_homology_dims_dispatch():
    pres = poly_ring()
    c = cone(pres, Element.gen(pres, "v2"))
    dims = homology_dims(c, (0, 4))
    assert dims == {0: 1, 1: 0, 2: 1, 3: 0, 4: 1}


# -- matrix DGA: elements and differential -----------------------------------------


def test_matrix_dga_shape_and_unit_degrees():
    dga = matrix_dga(2, 2)
    assert dga.offdiag == 7
    assert dga.pres == bp_q(ChromaticParams(2, 2))
    eps = mdga_eps(dga)
    assert eps.k == -7
    one = mdga_identity(dga)
    assert one.k == 0
    assert one * one == one
    with pytest.raises(ValueError):
        matrix_dga(2, 0)


def test_mdga_slot_degree_validation():
    dga = matrix_dga(2, 1)
    v1 = Element.gen(dga.pres, "v1")
    mdga_diag(dga, v1)  # fine: degree 2 in both diagonal slots
    with pytest.raises(ValueError):
        mdga_diag(dga, Element.gen(dga.pres, "v1") + Element.one(dga.pres))


def test_dga_diff_frozen_values():
    dga = matrix_dga(2, 1)
    pres = dga.pres
    v1 = Element.gen(pres, "v1")
    zero, one = Element.zero(pres), Element.one(pres)

    assert dga_diff(mdga_identity(dga)).is_zero()
    assert dga_diff(mdga_eps(dga)).is_zero()

    e11 = type(mdga_identity(dga))(dga, 0, one, zero, zero, zero)
    d = dga_diff(e11)
    assert d.k == -1
    assert d.a.is_zero() and d.c.is_zero() and d.d.is_zero()
    assert d.b == -v1


def test_dga_diff_squares_to_zero_on_window_basis():
    dga = matrix_dga(2, 2)
    for k in range(-9, 10):
        for slot, mono in mdga_basis_labels(dga, k):
            el = mdga_element(dga, k, slot, mono)
            assert dga_diff(dga_diff(el)).is_zero()


def test_dga_diff_is_a_derivation_spot_checks():
    dga = matrix_dga(2, 1)
    pres = dga.pres
    v1 = Element.gen(pres, "v1")
    f = mdga_diag(dga, v1)
    g = mdga_eps(dga)
    sign = -1 if f.k % 2 else 1
    assert dga_diff(f * g) == dga_diff(f) * g + sign * (f * dga_diff(g))


def test_dga_structure_check_reports():
    report = dga_structure_check(2, 1, (-6, 4))
    assert report["d_squared_zero"]
    assert report["derivation_law"]
    assert report["basis_size"] > 0
    assert report["pairs_checked"] == report["basis_size"] ** 2


# -- matrix DGA: homology ------------------------------------------------------------


def test_homology_ring_check_height_one():
    report = homology_ring_check(2, 1, (-8, 4))
    nonzero = {t: d for t, d in report["computed_dims"].items() if d}
    assert nonzero == {0: 1, -3: 1}
    assert report["dims_match"]
    assert report["eps_degree"] == -3
    assert report["eps_is_cycle"]
    assert report["eps_nonzero_in_homology"]
    assert report["eps_square_zero"]
    assert report["eps_central"]
    assert report["v_classes_nonzero"]
    assert report["all_ok"]


def test_homology_ring_check_height_one_p_three():
    report = homology_ring_check(3, 1, (-10, 6))
    nonzero = {t: d for t, d in report["computed_dims"].items() if d}
    assert nonzero == {0: 1, -5: 1}
    assert report["all_ok"]


def test_homology_ring_check_height_two():
    report = homology_ring_check(2, 2, (-12, 8))
    # answer ring Q[v1] (x) exterior on a class in degree -7
    expected = {0: 1, 2: 1, 4: 1, 6: 1, 8: 1,
                -7: 1, -5: 1, -3: 1, -1: 1, 1: 1, 3: 1, 5: 1, 7: 1}
    nonzero = {t: d for t, d in report["computed_dims"].items() if d}
    assert nonzero == expected
    assert report["dims_match"]
    assert report["all_ok"]


# -- matrix DGA: commutative cycle model ----------------------------------------------


def test_cycles_subalgebra_height_one_examples():
    dga = matrix_dga(2, 1)
    triples = cycles_subalgebra(dga, (-4, 4))
    by_degree = {}
    for k, label, el in triples:
        by_degree.setdefault(k, []).append(el)
        assert is_vn_free_cycle_shape(el)
        assert dga_diff(el).is_zero()
    assert by_degree[0] == [mdga_identity(dga)]
    assert by_degree[-3] == [mdga_eps(dga)]
    assert 2 not in by_degree  # diag(v1) is not v1-free


def test_quasi_iso_check_on_cycle_inclusion():
    dga = matrix_dga(2, 1)
    window = (-6, 4)
    amb = build_mdga_window(dga, window)
    sub, inclusion = build_cycles_window(dga, window)
    report = quasi_iso_check(sub, amb, inclusion, window)
    assert report.all_iso
    assert report.per_degree[0]["sub"] == 1
    assert report.per_degree[-3]["amb"] == 1


def test_quasi_iso_check_rejects_non_chain_map():
    dga = matrix_dga(2, 1)
    window = (-4, 2)
    amb = build_mdga_window(dga, window)
    sub, inclusion = build_cycles_window(dga, window)
    bad = dict(inclusion)
    k = 0
    entries = dict(bad[k].entries)
    entries[(1, 0)] = entries.get((1, 0), Fraction(0)) + 1
    bad[k] = RationalMatrix(bad[k].rows, bad[k].cols, entries)
    with pytest.raises(ValueError, match="not a chain map"):
        quasi_iso_check(sub, amb, bad, window)


def test_commutative_model_check_all_heights():
    for p, n, window in [(2, 1, (-8, 4)), (3, 1, (-10, 6)), (2, 2, (-12, 8))]:
        report = commutative_model_check(p, n, window)
        assert report["closed_under_product"], (p, n)
        assert report["graded_commutative"], (p, n)
        assert report["chain_map"], (p, n)
        assert report["all_ok"], (p, n)
