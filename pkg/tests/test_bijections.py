import pytest

from grothlib import (
    BijectionError,
    EnumBounds,
    JdtPair,
    RskPair,
    enum_OT,
    enum_UT,
    iota,
    jdt_backward,
    jdt_forward,
    left_weight,
    overweight,
    reorder,
    right_weight,
    rsk_backward,
    rsk_forward,
    split,
    superimpose,
    swap_path,
    tableau_from_json,
    underweight,
    unprimed_count,
    validate,
)
from grothlib.shapes import weight_add
from grothlib.bijections import _adjacent_swap_info
from grothlib.cli import parse_order
from grothlib.core import left_weight as lw

from conftest import load_fixture


def test_rsk_fixture_trace():
    fx = load_fixture("insertion_trace.json")
    t = tableau_from_json(fx["input"])
    pair, trace = rsk_forward(t, trace=True)
    assert pair.p == tableau_from_json(fx["p"])
    assert pair.q == tableau_from_json(fx["q"])
    assert len(trace) == len(fx["panels"])
    for got, want in zip(trace, fx["panels"]):
        assert got == tableau_from_json(want)
    assert rsk_backward(pair, t.shape.outer) == t


def test_jdt_fixture_trace():
    fx = load_fixture("sliding_trace.json")
    t = tableau_from_json(fx["input"])
    pair, trace = jdt_forward(t, trace=True)
    assert pair.p == tableau_from_json(fx["p"])
    assert pair.q == tableau_from_json(fx["q"])
    assert len(trace) == len(fx["panels"])
    for got, want in zip(trace, fx["panels"]):
        assert got == tableau_from_json(want)
    assert jdt_backward(pair, t.shape.outer) == t


def test_rsk_weight_transport():
    fx = load_fixture("insertion_trace.json")
    t = tableau_from_json(fx["input"])
    pair = rsk_forward(t)
    # the insertion tableau keeps both weights; the recording tableau's
    # flag weight matches the overweight
    assert left_weight(pair.p) == left_weight(t)
    assert right_weight(pair.p) == right_weight(t)
    from grothlib.core import flag_weight
    assert flag_weight(pair.q) == overweight(t)


def test_jdt_weight_transport():
    fx = load_fixture("sliding_trace.json")
    t = tableau_from_json(fx["input"])
    pair = jdt_forward(t)
    assert left_weight(pair.p) == left_weight(t)
    assert right_weight(pair.p) == right_weight(t)
    from grothlib.core import flag_weight
    assert flag_weight(pair.q) == underweight(t)


def test_rsk_round_trip_small():
    for t in enum_OT((2, 1), EnumBounds(2, 1)):
        pair = rsk_forward(t)
        assert validate(pair.p, "PT")
        assert validate(pair.q, "OFT")
        assert rsk_backward(pair, (2, 1)) == t


def test_jdt_round_trip_small():
    for t in enum_UT((2, 2), EnumBounds(2)):
        pair = jdt_forward(t)
        assert validate(pair.p, "PT")
        assert validate(pair.q, "UFT")
        assert jdt_backward(pair, (2, 2)) == t


def test_order_swap_fixture():
    fx = load_fixture("order_swap.json")
    a = parse_order(fx["order_from"])
    b = parse_order(fx["order_to"])
    s = tableau_from_json(fx["source"])
    t = tableau_from_json(fx["target"])
    assert reorder(s, a, b) == t
    assert reorder(t, b, a) == s
    # right weight is preserved either way
    assert right_weight(s) == right_weight(t)


def test_swap_path():
    a = parse_order("1',1,2,3,2',4,3',4'")
    b = parse_order("1',1,2,2',3,4,3',4'")
    path = swap_path(a, b)
    assert path[0] == a and path[-1] == b and len(path) == 2
    i, j, up = _adjacent_swap_info(path[0], path[1])
    assert {path[0].sequence[i].value, path[0].sequence[j].value} <= {2, 3}
    # same-kind adjacent transpositions are outside the map's scope
    with pytest.raises(BijectionError):
        swap_path(parse_order("1',1,2,2'"), parse_order("1',2,1,2'"))


def test_iota_fixture():
    fx = load_fixture("prime_flip.json")
    a = tableau_from_json(fx["a"])
    b = tableau_from_json(fx["b"])
    assert iota(a) == b and iota(b) == a
    # the flip keeps the combined weight but reverses the sign
    assert weight_add(lw(a), right_weight(a)) == weight_add(lw(b), right_weight(b))
    assert unprimed_count(a) % 2 != unprimed_count(b) % 2


def test_superimpose_split_round_trip():
    from grothlib.shapes import SkewShape, contains, subpartitions_same_rows
    from grothlib.enumeration import enum_OFT, enum_PFT, enum_UFT

    lam, mu = (2, 2), (1, 1)
    targets = set(enum_PFT(SkewShape(lam, mu)))
    seen = []
    for rho in subpartitions_same_rows(lam):
        if not contains(mu, rho):
            continue
        for p in enum_OFT(SkewShape(rho, mu)):
            for q in enum_UFT(SkewShape(lam, rho)):
                r = superimpose(p, q)
                assert r in targets
                assert split(r) == (p, q)
                seen.append(r)
    # the overlay pairs hit the skew family exactly once each
    assert len(seen) == len(targets) == len(set(seen))
