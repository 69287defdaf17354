#!/usr/bin/env python3
"""Regenerate tests/fixtures from the canonical worked examples.

Each fixture bundles an input tableau with every derived object (weights,
images, step traces) so the test suite can assert bit-exact reproduction.
The script recomputes everything through the library and fails loudly on any
mismatch, so a successful run certifies the fixtures.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from grothlib import (
    Tableau,
    iota,
    jdt_forward,
    left_weight,
    flag_weight,
    overweight,
    reorder,
    right_weight,
    rsk_forward,
    tableau_to_json,
    underweight,
    validate,
)
from grothlib.cli import parse_order

FIXDIR = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures"


def T(outer, rows, inner=()):
    return Tableau.from_rows(outer, rows, inner)


def dump(name, obj):
    path = FIXDIR / name
    path.write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path.name}")


def main():
    FIXDIR.mkdir(parents=True, exist_ok=True)

    # overfull tableau with its three weight vectors
    ot = T((3, 3, 2), ["1',1,1 1,2' 2,3'", "2' 2 3',3,3", "2',3' 3"])
    assert validate(ot, "OT")
    assert left_weight(ot) == (3, 2, 3)
    assert right_weight(ot) == (1, 3, 3)
    assert overweight(ot) == (3, 1, 3)
    dump("overfull_weights.json", {
        "tableau": tableau_to_json(ot),
        "left_weight": [3, 2, 3],
        "right_weight": [1, 3, 3],
        "overweight": [3, 1, 3],
    })

    # underfull tableau with its three weight vectors
    ut = T((5, 5, 3, 1), ["1' . 1 . 1", "1 2' . 2 .", "2' . 3", "3"])
    assert validate(ut, "UT")
    assert left_weight(ut) == (3, 1, 2)
    assert right_weight(ut) == (1, 2)
    assert underweight(ut) == (2, 1, 1, 1)
    dump("underfull_weights.json", {
        "tableau": tableau_to_json(ut),
        "left_weight": [3, 1, 2],
        "right_weight": [1, 2],
        "underweight": [2, 1, 1, 1],
    })

    # flagged tableaux with weights
    oft = T((6, 6, 5, 4), ["4 2", "3 2 1", "2 2 1", "1 1 1"],
            inner=(4, 3, 2, 1))
    assert validate(oft, "OFT")
    assert flag_weight(oft) == (5, 4, 1, 1)
    dump("over_flagged_weights.json", {
        "tableau": tableau_to_json(oft),
        "weight": [5, 4, 1, 1],
    })
    uft = T((6, 6, 5, 4), ["1' 5'", "2' 3' 5'", "1' 2' 4'", "1' 2' 3'"],
            inner=(4, 3, 2, 1))
    assert validate(uft, "UFT")
    assert flag_weight(uft) == (3, 3, 2, 1, 2)
    dump("under_flagged_weights.json", {
        "tableau": tableau_to_json(uft),
        "weight": [3, 3, 2, 1, 2],
    })

    # column insertion trace: input, image pair, and the seven panels
    rsk_in = T((2, 2, 1), ["1' 2',3'", "1,2',3' 3,3", "3',4',4"])
    rsk_p = T((5, 4, 2), ["1' 2' 3' 3 3", "1 2' 3' 4", "3' 4'"])
    rsk_q = T((5, 4, 2), ["2 2 1", "1 1", "1"], inner=(2, 2, 1))
    panels = [
        rsk_in,
        T((3, 2, 1), ["1' 2',3' 3", "1,2',3' 3", "3',4',4"]),
        T((4, 2, 1), ["1' 2' 3' 3", "1,2',3' 3", "3',4',4"]),
        T((4, 2, 2), ["1' 2' 3' 3", "1,2',3' 3", "3',4' 4"]),
        T((4, 3, 2), ["1' 2' 3' 3", "1,2',3' 3 4", "3' 4'"]),
        T((4, 4, 2), ["1' 2' 3' 3", "1,2' 3' 3 4", "3' 4'"]),
        T((5, 4, 2), ["1' 2' 3' 3 3", "1 2' 3' 4", "3' 4'"]),
    ]
    pair, trace = rsk_forward(rsk_in, trace=True)
    assert (pair.p, pair.q) == (rsk_p, rsk_q)
    assert trace == panels, "insertion trace diverged from the reference"
    dump("insertion_trace.json", {
        "input": tableau_to_json(rsk_in),
        "p": tableau_to_json(rsk_p),
        "q": tableau_to_json(rsk_q),
        "panels": [tableau_to_json(t) for t in panels],
    })

    # sliding trace: input, image pair, and the nine panels
    jdt_in = T((5, 5, 5, 3),
               ["1' . . . 3'", "2' . 3' . .", "2 3 . 4 4", "4 . 4"])
    jdt_p = T((5, 2, 2, 1), ["1' 3' 4 4 4", "2' 3'", "2 3", "4"])
    jdt_q = T((5, 5, 5, 3), ["", "1' 2' 3'", "1' 3' 4'", "1' 2'"],
              inner=(5, 2, 2, 1))
    panels = [
        jdt_in,
        T((5, 5, 4, 3), ["1' . . . 3'", "2' . 3' . 4", "2 3 . 4", "4 . 4"]),
        T((5, 5, 3, 3), ["1' . . . 3'", "2' . 3' 4 4", "2 3 .", "4 . 4"]),
        T((5, 4, 3, 3), ["1' . . 3' 4", "2' . 3' 4", "2 3 .", "4 . 4"]),
        T((5, 4, 3, 2), ["1' . . 3' 4", "2' . 3' 4", "2 3 4", "4 ."]),
        T((5, 3, 3, 2), ["1' . 3' 4 4", "2' . 3'", "2 3 4", "4 ."]),
        T((5, 3, 3, 1), ["1' . 3' 4 4", "2' . 3'", "2 3 4", "4"]),
        T((5, 3, 2, 1), ["1' . 3' 4 4", "2' 3' 4", "2 3", "4"]),
        jdt_p,
    ]
    pair, trace = jdt_forward(jdt_in, trace=True)
    assert (pair.p, pair.q) == (jdt_p, jdt_q)
    assert trace == panels, "sliding trace diverged from the reference"
    dump("sliding_trace.json", {
        "input": tableau_to_json(jdt_in),
        "p": tableau_to_json(jdt_p),
        "q": tableau_to_json(jdt_q),
        "panels": [tableau_to_json(t) for t in panels],
    })

    # order swap between two orders differing by one 3 <-> 2' transposition
    order_from = "1',1,2,3,2',4,3',4'"
    order_to = "1',1,2,2',3,4,3',4'"
    s = T((9, 8, 7, 5, 3, 2),
          ["1' 1 2 2 3 3 2'", "1' 1 1 3 3 3 3' 4'", "1' 2 2 2' 4 4 3'",
           "1 3 3 2' 3'", "2 4 3'", "3 3'"], inner=(2,))
    t = T((9, 8, 7, 5, 3, 2),
          ["1' 1 2 2 2' 3 3", "1' 1 1 2' 3 3 3' 4'", "1' 2 2 2' 4 4 3'",
           "1 3 3 3 3'", "2 4 3'", "3 3'"], inner=(2,))
    assert reorder(s, parse_order(order_from), parse_order(order_to)) == t
    assert reorder(t, parse_order(order_to), parse_order(order_from)) == s
    dump("order_swap.json", {
        "order_from": order_from,
        "order_to": order_to,
        "source": tableau_to_json(s),
        "target": tableau_to_json(t),
    })

    # prime flip pair
    a = T((10, 10, 9, 8),
          ["5 4 4 3' 5'", "4 3 3 3' 6' 8'", "3 2 2 3' 6'", "3 2 2' 3' 4'"],
          inner=(5, 4, 4, 3))
    b = T((10, 10, 9, 8),
          ["5 4 4 3' 5'", "4 3 3 3' 6' 8'", "3 2 2' 3' 6'", "3 2 2' 3' 4'"],
          inner=(5, 4, 4, 3))
    assert iota(a) == b and iota(b) == a
    dump("prime_flip.json", {
        "a": tableau_to_json(a),
        "b": tableau_to_json(b),
        "flip_cell": [3, 7],
    })

    print("all fixtures reproduced by the library")


if __name__ == "__main__":
    main()
