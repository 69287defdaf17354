import pytest

from grothlib import (
    EnumBounds,
    TotalOrder,
    enum_family,
    enum_OFT,
    enum_OT,
    enum_PFT,
    enum_PT,
    enum_PT_order,
    enum_UFT,
    enum_UT,
    straight,
    validate,
)
from grothlib.core import validate_pt_order
from grothlib.shapes import SkewShape


def count(it):
    return sum(1 for _ in it)


def test_ot_single_box():
    # shape (1), values <= 1, no extra entries: {1'} and {1}
    assert count(enum_OT((1,), EnumBounds(1, 0))) == 2
    # one extra entry adds {1',1} and {1,1}
    assert count(enum_OT((1,), EnumBounds(1, 1))) == 4


def test_ut_single_box():
    # shape (1), values <= 2: 1', 1, 2', 2
    assert count(enum_UT((1,), EnumBounds(2))) == 4


def test_pt_column():
    # shape (1,1), values <= 2: 8 primed tableaux
    assert count(enum_PT((1, 1), 2)) == 8


def test_flagged_counts():
    shape = SkewShape((2,), (1,))
    assert count(enum_PFT(shape)) == 2
    assert count(enum_OFT(shape)) == 1
    assert count(enum_UFT(shape)) == 1
    big = SkewShape((6, 6, 5, 4), (4, 3, 2, 1))
    assert count(enum_OFT(big)) == 20


def test_enumerated_tableaux_are_valid():
    for t in enum_OT((2, 1), EnumBounds(2, 1)):
        assert validate(t, "OT")
    for t in enum_UT((2, 1), EnumBounds(2)):
        assert validate(t, "UT")
    for t in enum_PT((2, 1), 2):
        assert validate(t, "PT")
    shape = SkewShape((3, 2), (1,))
    for t in enum_PFT(shape):
        assert validate(t, "PFT")
    for t in enum_OFT(shape):
        assert validate(t, "OFT")
    for t in enum_UFT(shape):
        assert validate(t, "UFT")


def test_enum_pt_order_matches_standard():
    # with the standard order PT_< coincides with PT
    lam = (2, 1)
    std = set(enum_PT(lam, 2))
    assert set(enum_PT_order(straight(lam), TotalOrder.standard(2), 2)) == std
    for t in std:
        assert validate_pt_order(t, TotalOrder.standard(2))


def test_enum_no_duplicates():
    ts = list(enum_OT((2,), EnumBounds(2, 2)))
    assert len(ts) == len(set(ts))
    ts = list(enum_UT((2, 2), EnumBounds(3)))
    assert len(ts) == len(set(ts))


def test_counting_identity():
    # splitting an underfull tableau into its filled part (a primed tableau of
    # a subshape with the same rows) and the pattern of empty boxes gives
    # |UT(lam, N)| = sum over mu <= lam (same rows) of |PT(mu, N)| * |UFT(lam/mu)|
    from grothlib.shapes import subpartitions_same_rows

    for lam in ((1,), (2,), (1, 1), (2, 1), (2, 2)):
        for n in (1, 2, 3):
            lhs = count(enum_UT(lam, EnumBounds(n)))
            rhs = 0
            for mu in subpartitions_same_rows(lam):
                rhs += count(enum_PT(mu, n)) * count(enum_UFT(SkewShape(lam, mu)))
            assert lhs == rhs, (lam, n)


def test_enum_family_dispatch():
    shape = SkewShape((2,), (1,))
    assert count(enum_family("PFT", shape, EnumBounds(1))) == 2
    with pytest.raises(ValueError):
        list(enum_family("XX", shape, EnumBounds(1)))


def test_empty_shape():
    assert count(enum_OT((), EnumBounds(1, 0))) == 1
    assert count(enum_UT((), EnumBounds(1))) == 1
    assert count(enum_PFT(SkewShape((), ()))) == 1
