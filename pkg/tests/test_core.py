import pytest

from grothlib import (
    EMPTY_TABLEAU,
    BoxFill,
    L,
    Letter,
    P,
    Tableau,
    TotalOrder,
    flag_weight,
    left_weight,
    loads_tableau,
    dumps_tableau,
    overweight,
    parse_letter,
    pft_key,
    right_weight,
    tableau_from_json,
    tableau_to_json,
    underweight,
    validate,
    validate_pt_order,
)
from grothlib.core import ValidationError

from conftest import load_fixture


def test_letter_order():
    # 1' < 1 < 2' < 2 < ...
    seq = [P(1), L(1), P(2), L(2), P(3)]
    keys = [l.key for l in seq]
    assert keys == sorted(keys)
    assert str(P(2)) == "2'" and str(L(2)) == "2"
    assert parse_letter("3'") == P(3) and parse_letter("3") == L(3)
    with pytest.raises(ValueError):
        Letter(0)


def test_pft_key_order():
    # ... < 2 < 1 < 1' < 2' < ...
    seq = [L(3), L(2), L(1), P(1), P(2), P(3)]
    keys = [pft_key(l) for l in seq]
    assert keys == sorted(keys)


def test_total_orders():
    std = TotalOrder.standard(2)
    assert std.sequence == (P(1), L(1), P(2), L(2))
    assert TotalOrder.flagged(2).sequence == (L(2), L(1), P(1), P(2))
    assert std.le(P(1), L(2))
    with pytest.raises(ValueError):
        TotalOrder((L(1), L(2)))  # missing primed letters


def test_boxfill():
    f = BoxFill.of(L(1), L(1), P(2))
    assert f.unprimed == (1, 1) and f.primed == frozenset({2})
    assert f.min_letter() == L(1) and f.max_letter() == P(2)
    with pytest.raises(ValueError):
        BoxFill.of(P(1), P(1))  # primed entries form a set
    with pytest.raises(ValidationError):
        f.single()


def test_from_rows_and_json_round_trip():
    t = Tableau.from_rows((3, 2), ["1' 1,2' 2", "2 ."])
    assert t.fill((1, 2)) == BoxFill.of(L(1), P(2))
    assert t.is_empty((2, 2))
    assert loads_tableau(dumps_tableau(t)) == t
    skew = Tableau.from_rows((3, 2), ["1' 2", "1"], inner=(1,))
    assert skew.fill((1, 2)) == BoxFill.of(P(1))
    assert tableau_from_json(tableau_to_json(skew)) == skew


def test_overfull_fixture_weights():
    fx = load_fixture("overfull_weights.json")
    t = tableau_from_json(fx["tableau"])
    assert validate(t, "OT")
    assert left_weight(t) == tuple(fx["left_weight"])
    assert right_weight(t) == tuple(fx["right_weight"])
    assert overweight(t) == tuple(fx["overweight"])


def test_underfull_fixture_weights():
    fx = load_fixture("underfull_weights.json")
    t = tableau_from_json(fx["tableau"])
    assert validate(t, "UT")
    assert left_weight(t) == tuple(fx["left_weight"])
    assert right_weight(t) == tuple(fx["right_weight"])
    assert underweight(t) == tuple(fx["underweight"])


def test_flagged_fixture_weights():
    for name, family in (("over_flagged_weights.json", "OFT"),
                         ("under_flagged_weights.json", "UFT")):
        fx = load_fixture(name)
        t = tableau_from_json(fx["tableau"])
        assert validate(t, family)
        assert flag_weight(t) == tuple(fx["weight"])


def test_empty_tableau():
    assert left_weight(EMPTY_TABLEAU) == ()
    assert right_weight(EMPTY_TABLEAU) == ()
    for family in ("OT", "UT", "PT"):
        assert validate(EMPTY_TABLEAU, family)


def test_pt_is_ot_and_ut():
    t = Tableau.from_rows((2, 1), ["1' 1", "1"])
    assert validate(t, "PT") and validate(t, "OT") and validate(t, "UT")
    assert overweight(t) == () and underweight(t) == ()
    assert validate_pt_order(t, TotalOrder.standard(1))


def test_ot_rejections():
    # repeated unprimed down a column is not allowed
    bad = Tableau.from_rows((1, 1), ["1", "1"])
    assert not validate(bad, "OT")
    # repeated primed along a row is not allowed
    bad = Tableau.from_rows((2,), ["1' 1'"])
    assert not validate(bad, "OT")
    # repeated unprimed along a row is allowed, primed down a column too
    assert validate(Tableau.from_rows((2,), ["1 1"]), "OT")
    assert validate(Tableau.from_rows((1, 1), ["1'", "1'"]), "OT")
    # empty box disqualifies
    assert not validate(Tableau.from_rows((2,), ["1 ."]), "OT")


def test_ut_rejections():
    # leftmost column must be nonempty
    assert not validate(Tableau.from_rows((2, 1), ["1 1'", "."]), "UT")
    # nearest nonempty right neighbor must strictly dominate unless both unprimed
    assert not validate(Tableau.from_rows((3,), ["2 . 1"]), "UT")
    assert validate(Tableau.from_rows((3,), ["1 . 1"]), "UT")
    assert not validate(Tableau.from_rows((3,), ["1' . 1'"]), "UT")
    # column rule compares to the rightmost nonempty box weakly left, one row
    # down, and only binds when the box directly below exists
    assert not validate(Tableau.from_rows((2, 2), ["1 1", "1' 1'"]), "UT")
    # (1,2) has no box directly below, so "1" above "1" at (2,1) is free;
    # the same pair straight down a column would be rejected
    assert validate(Tableau.from_rows((2, 1), ["1' 1", "1"]), "UT")
    assert not validate(Tableau.from_rows((1, 1), ["1", "1"]), "UT")
    assert validate(Tableau.from_rows((1, 1), ["1'", "1'"]), "UT")


def test_pft_flags():
    # unprimed value bounded by the inner row length, primed by outer - 1
    assert validate(Tableau.from_rows((2,), ["1"], inner=(1,)), "PFT")
    assert not validate(Tableau.from_rows((2,), ["2"], inner=(1,)), "PFT")
    assert validate(Tableau.from_rows((2,), ["1'"], inner=(1,)), "PFT")
    assert not validate(Tableau.from_rows((2,), ["2'"], inner=(1,)), "PFT")


def test_weight_trailing_zeros_stripped():
    t = Tableau.from_rows((1,), ["1"])
    assert left_weight(t) == (1,) and right_weight(t) == ()
