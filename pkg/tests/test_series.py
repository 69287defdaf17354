import pytest

from grothlib import (
    Series,
    Truncation,
    groth,
    groth_dual,
    monomial as M,
    refined,
)


T22 = Truncation(n_x=2, n_y=2, n_z=2, max_degree=4)


def test_truncation_admits():
    tr = Truncation(n_x=1, n_y=0, n_z=1, max_degree=2)
    assert tr.admits(M(xe=(2,), ze=(1,)))
    assert not tr.admits(M(xe=(3,)))       # degree too high
    assert not tr.admits(M(ye=(1,)))       # no y variables
    assert not tr.admits(M(xe=(0, 1)))     # x2 out of range


def test_series_arithmetic():
    x1 = Series.var("x", 1, T22)
    y1 = Series.var("y", 1, T22)
    s = (x1 + y1) * (x1 - y1)
    assert s == x1 * x1 - y1 * y1
    assert (Series.one(T22) + x1).scale(-2) == Series.one(T22).scale(-2) + x1.scale(-2)
    assert Series.zero(T22) * x1 == Series.zero(T22)


def test_groth_empty_and_single_box():
    tr = Truncation(n_x=0, n_y=2, n_z=1, max_degree=2)
    assert groth((), tr) == Series.one(tr)
    g = groth((1,), tr)
    # y1 + y2 - z1*y1*y2
    want = (Series.var("y", 1, tr) + Series.var("y", 2, tr)
            - Series.var("z", 1, tr) * Series.var("y", 1, tr) * Series.var("y", 2, tr))
    assert g == want


def test_groth_requires_finite_degree():
    with pytest.raises(ValueError):
        groth((1,), Truncation(n_x=1, n_y=1, n_z=1, max_degree=None))


def test_groth_dual_single_box():
    tr = Truncation(n_x=1, n_y=1, n_z=1, max_degree=None)
    assert groth_dual((1,), tr) == Series.var("x", 1, tr) + Series.var("y", 1, tr)
    tr = Truncation(n_x=1, n_y=0, n_z=1, max_degree=None)
    g = groth_dual((2,), tr)
    x1, z1 = Series.var("x", 1, tr), Series.var("z", 1, tr)
    assert g == x1 * x1 + z1 * x1


def test_refined_variants():
    tr = Truncation(n_x=2, n_y=0, n_z=1, max_degree=2)
    x1, x2, z1 = (Series.var(v, i, tr) for v, i in (("x", 1), ("x", 2), ("z", 1)))
    assert refined("1A", (1,), tr) == x1 + x2 - z1 * x1 * x2
    assert refined("1A", (1,), tr, z_one=True) == x1 + x2 - x1 * x2
    tr1 = Truncation(n_x=1, n_y=0, n_z=1, max_degree=None)
    assert refined("2B", (1,), tr1) == Series.var("x", 1, tr1)
    with pytest.raises(ValueError):
        refined("3C", (1,), tr)


def test_symmetry_checks():
    tr = Truncation(n_x=3, n_y=0, n_z=2, max_degree=3)
    g = refined("1B", (2, 1), tr)
    assert g.is_symmetric_x()
    assert g.apply_x_transposition(1) == g


def test_swap_xy():
    tr = Truncation(n_x=1, n_y=1, n_z=0, max_degree=2)
    x1, y1 = Series.var("x", 1, tr), Series.var("y", 1, tr)
    s = x1 + y1.scale(2)
    assert s.swap_xy() == y1 + x1.scale(2)


def test_subs_z_one():
    tr = Truncation(n_x=1, n_y=0, n_z=1, max_degree=2)
    x1, z1 = Series.var("x", 1, tr), Series.var("z", 1, tr)
    assert (x1 + z1 * x1).subs_z_one() == x1.scale(2)


def test_homogeneous_part():
    tr = Truncation(n_x=2, n_y=0, n_z=1, max_degree=2)
    g = refined("1A", (1,), tr)
    x1, x2 = Series.var("x", 1, tr), Series.var("x", 2, tr)
    assert g.homogeneous_part(1) == x1 + x2
    assert g.homogeneous_part(3) == Series.zero(tr)


def test_latex_rendering():
    tr = Truncation(n_x=2, n_y=0, n_z=1, max_degree=2)
    assert refined("1A", (1,), tr).to_latex() == "x_1+x_2-z_1x_1x_2"


def test_json_round_trip_shape():
    tr = Truncation(n_x=1, n_y=1, n_z=1, max_degree=2)
    obj = groth_dual((1,), tr).to_json_obj()
    assert {"xe": [1], "ye": [], "ze": [], "c": 1} in obj
    assert {"xe": [], "ye": [1], "ze": [], "c": 1} in obj
