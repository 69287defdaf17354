"""End-to-end acceptance checks: worked-example fixtures reproduced bit-exactly
and every machine verification passing at full scale within its time budget."""

import time

import pytest

from grothlib import (
    Truncation,
    expand_schur,
    partitions_up_to,
    refined,
    schur_expansion_via_flags,
    schur_poly,
    tableau_from_json,
    verify_duo1,
    verify_duo2,
    verify_fact1,
    verify_fact2,
    verify_lemma_ordering,
    verify_lemma_rskjdt,
    verify_lemma_z,
)
from grothlib.bijections import iota, jdt_forward, reorder, rsk_forward
from grothlib.cli import parse_order
from grothlib.core import (
    flag_weight,
    left_weight,
    overweight,
    right_weight,
    underweight,
)

from conftest import load_fixture


def timed(budget):
    """Fail the test if the body exceeds its wall-clock budget (seconds)."""
    class _Timer:
        def __enter__(self):
            self.start = time.monotonic()
            return self

        def __exit__(self, *exc):
            self.elapsed = time.monotonic() - self.start
            if exc[0] is None:
                assert self.elapsed < budget, (
                    f"ran {self.elapsed:.1f}s, budget {budget}s")
    return _Timer()


def test_acceptance_1_fixtures_bit_exact():
    with timed(1.0):
        fx = load_fixture("overfull_weights.json")
        t = tableau_from_json(fx["tableau"])
        assert (left_weight(t), right_weight(t), overweight(t)) == (
            tuple(fx["left_weight"]), tuple(fx["right_weight"]),
            tuple(fx["overweight"]))
        fx = load_fixture("underfull_weights.json")
        t = tableau_from_json(fx["tableau"])
        assert (left_weight(t), right_weight(t), underweight(t)) == (
            tuple(fx["left_weight"]), tuple(fx["right_weight"]),
            tuple(fx["underweight"]))
        for name in ("over_flagged_weights.json", "under_flagged_weights.json"):
            fx = load_fixture(name)
            assert flag_weight(tableau_from_json(fx["tableau"])) == tuple(fx["weight"])

        fx = load_fixture("insertion_trace.json")
        pair, trace = rsk_forward(tableau_from_json(fx["input"]), trace=True)
        assert pair.p == tableau_from_json(fx["p"])
        assert pair.q == tableau_from_json(fx["q"])
        assert trace == [tableau_from_json(p) for p in fx["panels"]]

        fx = load_fixture("sliding_trace.json")
        pair, trace = jdt_forward(tableau_from_json(fx["input"]), trace=True)
        assert pair.p == tableau_from_json(fx["p"])
        assert pair.q == tableau_from_json(fx["q"])
        assert trace == [tableau_from_json(p) for p in fx["panels"]]

        fx = load_fixture("order_swap.json")
        a, b = parse_order(fx["order_from"]), parse_order(fx["order_to"])
        s, t = tableau_from_json(fx["source"]), tableau_from_json(fx["target"])
        assert reorder(s, a, b) == t and reorder(t, b, a) == s

        fx = load_fixture("prime_flip.json")
        x, y = tableau_from_json(fx["a"]), tableau_from_json(fx["b"])
        assert iota(x) == y and iota(y) == x


def test_acceptance_2_insertion_sliding_bijections():
    with timed(120.0):
        report = verify_lemma_rskjdt(max_rsk_size=4, max_jdt_size=5, n=3, budget=2)
    assert report.passed, report.to_text()


def test_acceptance_3_order_swap_bijections():
    with timed(120.0):
        report = verify_lemma_ordering(max_size=5, n=3, max_swaps=3)
    assert report.passed, report.to_text()


def test_acceptance_4_prime_flip_and_overlay():
    with timed(300.0):
        rz = verify_lemma_z(max_size=6)
        rf = verify_fact2(max_size=6)
    assert rz.passed, rz.to_text()
    assert rf.passed, rf.to_text()


def test_acceptance_5_double_expansion_and_conjugation():
    with timed(600.0):
        r1 = verify_fact1(max_size=4)
        rd = verify_duo1(max_size=4)
    assert r1.passed, r1.to_text()
    assert rd.passed, rd.to_text()


def test_acceptance_6_gram_matrices_identity():
    with timed(300.0):
        report = verify_duo2(max_size=4)
    assert report.passed, report.to_text()


def test_acceptance_7_expansions_consistent():
    with timed(120.0):
        # the flag formula for the dual family matches direct expansion
        for lam in partitions_up_to(4):
            trunc = Truncation(n_x=4, n_y=0, n_z=6, max_degree=None)
            direct = expand_schur(refined("2B", lam, trunc))
            flags = schur_expansion_via_flags(lam, "Gdual")
            for mu in set(direct.support()) | set(flags.support()):
                assert direct.coeff(mu) == flags.coeff(mu), (lam, mu)
        # the lowest-degree part of the signed family is the Schur polynomial
        for lam in partitions_up_to(4):
            d = sum(lam)
            trunc = Truncation(n_x=3, n_y=0, n_z=max(d, 1), max_degree=d + 2)
            f = refined("1A", lam, trunc)
            assert f.homogeneous_part(d).terms == schur_poly(lam, 3).terms, lam
