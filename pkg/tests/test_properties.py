"""Property-based checks on small randomly drawn inputs."""

from hypothesis import given, settings, strategies as st

from grothlib import (
    EnumBounds,
    Series,
    Truncation,
    ZPoly,
    conjugate,
    enum_OT,
    enum_PFT,
    enum_UT,
    iota,
    jdt_backward,
    jdt_forward,
    rsk_backward,
    rsk_forward,
    unprimed_count,
)
from grothlib.shapes import SkewShape


partitions = st.lists(st.integers(1, 4), max_size=4).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


_OT_POOL = [t for lam in ((1,), (2,), (1, 1), (2, 1))
            for t in enum_OT(lam, EnumBounds(2, 1))]
_UT_POOL = [t for lam in ((1,), (2,), (2, 1))
            for t in enum_UT(lam, EnumBounds(2))]
_PFT_POOL = [t for outer, inner in (((2,), (1,)), ((3, 1), (1,)), ((2, 2), (1, 1)))
             for t in enum_PFT(SkewShape(outer, inner))]


@given(st.sampled_from(_OT_POOL))
def test_rsk_round_trip(t):
    pair = rsk_forward(t)
    assert rsk_backward(pair, t.shape.outer) == t


@given(st.sampled_from(_UT_POOL))
def test_jdt_round_trip(t):
    pair = jdt_forward(t)
    assert jdt_backward(pair, t.shape.outer) == t


@given(st.sampled_from(_PFT_POOL))
def test_iota_involution(t):
    img = iota(t)
    assert img != t
    assert iota(img) == t
    assert unprimed_count(img) % 2 != unprimed_count(t) % 2


zpolys = st.dictionaries(
    st.lists(st.integers(0, 2), max_size=3).map(tuple),
    st.integers(-3, 3), max_size=4,
).map(ZPoly.from_map)


@given(zpolys, zpolys, zpolys)
@settings(max_examples=50)
def test_zpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == ZPoly.zero()


TR = Truncation(n_x=2, n_y=0, n_z=1, max_degree=3)

series_terms = st.dictionaries(
    st.tuples(st.tuples(st.integers(0, 2), st.integers(0, 2)),
              st.just(()), st.tuples(st.integers(0, 1))),
    st.integers(-2, 2), max_size=4,
).map(lambda m: Series.from_map(m, TR))


@given(series_terms, series_terms)
@settings(max_examples=50)
def test_series_ring_axioms(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert f - f == Series.zero(TR)
    assert f * Series.one(TR) == f
