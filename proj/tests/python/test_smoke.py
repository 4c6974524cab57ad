# Smoke tests for the python bindings against values frozen in the C++ suites.

import pytest

import omega_matroids as om


def test_count_m2():
    assert [om.count_m2(n) for n in range(2, 8)] == [1, 3, 7, 13, 23, 37]


def test_schubert_labels():
    labels = om.schubert_labels(2, 4)
    assert len(labels) == 6
    assert "S(1,2)" in labels and "S(3,4)" in labels
    assert len(om.schubert_labels(3, 5)) == 10


def test_matrix_golden_n4():
    m = om.omega_matrix(2, 4)
    assert len(m["rows"]) == 6
    assert len(m["columns"]) == 7
    coeffs = [c["coefficients"] for c in m["columns"]]
    assert {"S(1,3)": 2, "S(1,2)": -1} in coeffs
    units = [c for c in coeffs if len(c) == 1]
    assert len(units) == 6


def test_expansion_two_lines_meeting():
    e = om.expansion(
        5, [([], 0), ([1, 2, 3], 2), ([3, 4, 5], 2), ([1, 2, 3, 4, 5], 3)]
    )
    assert e == {"S(1,2,4)": 2, "S(1,2,3)": -1}


def test_expansion_rejects_invalid_lattice():
    with pytest.raises(ValueError):
        om.expansion(4, [([1, 2, 3], 2), ([1, 2, 3, 4], 3)])


def test_hull_stats_rank3_n5():
    s = om.hull_stats(3, 5)
    assert s["points"] == 13
    assert s["linear_dimension"] == 10
    assert s["affine_dimension"] == 9
    assert s["vertices"] == 11
