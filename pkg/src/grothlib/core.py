"""Primed letters, box fills, tableaux, and validators for the seven families.

One Tableau type carries every family (OT, UT, PT, OFT, UFT, PFT, PT under an
arbitrary total order); family membership is checked by validators.  Boxes are
(row, col), 1-indexed, English orientation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .shapes import (
    Part,
    ShapeError,
    SkewShape,
    check_partition,
    straight,
    strip_zeros,
    weight_from_counts,
)


class ValidationError(ValueError):
    """An operation received a tableau outside its declared family."""


@dataclass(frozen=True, order=False)
class Letter:
    """A primed or unprimed positive integer from the alphabet 1' < 1 < 2' < 2 < ..."""

    value: int
    primed: bool = False

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"letter value must be >= 1: {self.value}")

    @property
    def key(self) -> tuple[int, int]:
        """Sort key realizing the standard order 1' < 1 < 2' < 2 < ..."""
        return (self.value, 0 if self.primed else 1)

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)


def L(value: int) -> Letter:
    return Letter(value, False)


def P(value: int) -> Letter:
    return Letter(value, True)


def parse_letter(s: str) -> Letter:
    s = s.strip()
    if s.endswith("'"):
        return Letter(int(s[:-1]), True)
    return Letter(int(s), False)


@dataclass(frozen=True)
class TotalOrder:
    """A total order on the letters {1', 1, ..., N', N}, given as a sequence."""

    sequence: tuple[Letter, ...]

    def __post_init__(self):
        values = {l.value for l in self.sequence}
        if values and values != set(range(1, max(values) + 1)):
            raise ValueError("order must cover values 1..N with no gaps")
        expected = {Letter(v, p) for v in values for p in (False, True)}
        if set(self.sequence) != expected or len(self.sequence) != len(expected):
            raise ValueError("order must list every letter with value <= N exactly once")
        object.__setattr__(
            self, "_pos", {l: i for i, l in enumerate(self.sequence)}
        )

    @property
    def max_value(self) -> int:
        return max((l.value for l in self.sequence), default=0)

    def position(self, letter: Letter) -> int:
        try:
            return self._pos[letter]
        except KeyError:
            raise ValueError(f"letter {letter} outside order domain") from None

    def le(self, a: Letter, b: Letter) -> bool:
        return self.position(a) <= self.position(b)

    @classmethod
    def standard(cls, n: int) -> "TotalOrder":
        """1' < 1 < 2' < 2 < ... < n' < n."""
        seq = []
        for v in range(1, n + 1):
            seq += [Letter(v, True), Letter(v, False)]
        return cls(tuple(seq))

    @classmethod
    def unprimed_first(cls, n: int) -> "TotalOrder":
        """1 < 2 < ... < n < 1' < 2' < ... < n'."""
        seq = [Letter(v, False) for v in range(1, n + 1)]
        seq += [Letter(v, True) for v in range(1, n + 1)]
        return cls(tuple(seq))

    @classmethod
    def primed_first(cls, n: int) -> "TotalOrder":
        """1' < 2' < ... < n' < 1 < 2 < ... < n."""
        seq = [Letter(v, True) for v in range(1, n + 1)]
        seq += [Letter(v, False) for v in range(1, n + 1)]
        return cls(tuple(seq))

    @classmethod
    def flagged(cls, n: int) -> "TotalOrder":
        """n < ... < 2 < 1 < 1' < 2' < ... < n', the order behind PFT."""
        seq = [Letter(v, False) for v in range(n, 0, -1)]
        seq += [Letter(v, True) for v in range(1, n + 1)]
        return cls(tuple(seq))


def pft_key(letter: Letter) -> tuple[int, int]:
    """Sort key for the order ... < 2 < 1 < 1' < 2' < ... (unbounded)."""
    return (1, letter.value) if letter.primed else (0, -letter.value)


@dataclass(frozen=True)
class BoxFill:
    """A box content: a set of primed values plus a multiset of unprimed values."""

    primed: frozenset[int]
    unprimed: tuple[int, ...]  # sorted multiset

    def __post_init__(self):
        object.__setattr__(self, "primed", frozenset(int(v) for v in self.primed))
        object.__setattr__(self, "unprimed", tuple(sorted(int(v) for v in self.unprimed)))
        if any(v < 1 for v in self.primed) or any(v < 1 for v in self.unprimed):
            raise ValueError("box values must be >= 1")

    @classmethod
    def of(cls, *letters: Letter) -> "BoxFill":
        primed = [l.value for l in letters if l.primed]
        unprimed = [l.value for l in letters if not l.primed]
        if len(set(primed)) != len(primed):
            raise ValueError("primed entries of a box form a set")
        return cls(frozenset(primed), tuple(unprimed))

    @classmethod
    def empty(cls) -> "BoxFill":
        return cls(frozenset(), ())

    def letters(self) -> Iterator[Letter]:
        for v in sorted(self.primed):
            yield Letter(v, True)
        for v in self.unprimed:
            yield Letter(v, False)

    def __len__(self) -> int:
        return len(self.primed) + len(self.unprimed)

    def min_letter(self) -> Letter:
        return min(self.letters(), key=lambda l: l.key)

    def max_letter(self) -> Letter:
        return max(self.letters(), key=lambda l: l.key)

    def single(self) -> Letter:
        if len(self) != 1:
            raise ValidationError(f"box holds {len(self)} letters, expected 1")
        return next(self.letters())

    def __str__(self) -> str:
        return "{" + " ".join(str(l) for l in sorted(self.letters(), key=lambda l: l.key)) + "}"


@dataclass(frozen=True)
class Tableau:
    """A skew shape plus per-box fills; boxes absent from `fills` are empty."""

    shape: SkewShape
    fills: tuple[tuple[tuple[int, int], BoxFill], ...]

    def __post_init__(self):
        canon = tuple(
            sorted(((cell, fill) for cell, fill in self.fills if len(fill)))
        )
        for cell, _ in canon:
            if cell not in self.shape:
                raise ShapeError(f"cell {cell} outside shape {self.shape}")
        object.__setattr__(self, "fills", canon)
        object.__setattr__(self, "_cells", dict(canon))

    @classmethod
    def from_dict(cls, shape: SkewShape, cells: dict[tuple[int, int], BoxFill]) -> "Tableau":
        return cls(shape, tuple(cells.items()))

    @classmethod
    def from_rows(cls, outer, rows, inner=()) -> "Tableau":
        """Build from per-row strings like "1' 2 2" with "." marking empty boxes."""
        shape = SkewShape(check_partition(outer), check_partition(inner))
        cells = {}
        for r, row in enumerate(rows, start=1):
            tokens = row.split() if isinstance(row, str) else row
            for k, tok in enumerate(tokens):
                cell = (r, shape.inner_len(r) + 1 + k)
                if tok == ".":
                    continue
                letters = [parse_letter(t) for t in tok.split(",")]
                cells[cell] = BoxFill.of(*letters)
        return cls.from_dict(shape, cells)

    def fill(self, cell: tuple[int, int]) -> BoxFill:
        return self._cells.get(cell, BoxFill.empty())

    def filled_cells(self) -> Iterator[tuple[tuple[int, int], BoxFill]]:
        yield from self.fills

    def letters(self) -> Iterator[Letter]:
        for _, f in self.fills:
            yield from f.letters()

    def is_empty(self, cell: tuple[int, int]) -> bool:
        return cell not in self._cells

    def entry_count(self) -> int:
        return sum(len(f) for _, f in self.fills)

    def __str__(self) -> str:
        lines = []
        for r, length in enumerate(self.shape.outer, start=1):
            row = []
            for c in range(1, length + 1):
                if (r, c) not in self.shape:
                    row.append("*")
                elif self.is_empty((r, c)):
                    row.append(".")
                else:
                    row.append("".join(str(l) for l in sorted(self.fill((r, c)).letters(), key=lambda l: l.key)))
            lines.append(" ".join(f"{x:>6}" for x in row))
        return "\n".join(lines) if lines else "(empty)"


EMPTY_TABLEAU = Tableau(SkewShape((), ()), ())


# --- weights ----------------------------------------------------------------

def left_weight(t: Tableau) -> tuple[int, ...]:
    """Coordinate i counts unprimed i."""
    counts: dict[int, int] = {}
    for l in t.letters():
        if not l.primed:
            counts[l.value] = counts.get(l.value, 0) + 1
    return weight_from_counts(counts)


def right_weight(t: Tableau) -> tuple[int, ...]:
    """Coordinate i counts primed i'."""
    counts: dict[int, int] = {}
    for l in t.letters():
        if l.primed:
            counts[l.value] = counts.get(l.value, 0) + 1
    return weight_from_counts(counts)


def _column_entry_counts(t: Tableau) -> list[int]:
    lam = t.shape.outer
    width = lam[0] if lam else 0
    counts = [0] * width
    for (r, c), f in t.filled_cells():
        counts[c - 1] += len(f)
    return counts


def overweight(t: Tableau) -> tuple[int, ...]:
    """Per-column excess of entries over boxes of an OT."""
    if not validate(t, "OT"):
        raise ValidationError("overweight requires a valid OT")
    lam = t.shape.outer
    boxes = [sum(1 for x in lam if x >= c) for c in range(1, (lam[0] if lam else 0) + 1)]
    entries = _column_entry_counts(t)
    return strip_zeros(tuple(e - b for e, b in zip(entries, boxes)))


def underweight(t: Tableau) -> tuple[int, ...]:
    """Coordinate i is the deficit (boxes - entries) in column i+1 of a UT."""
    if not validate(t, "UT"):
        raise ValidationError("underweight requires a valid UT")
    lam = t.shape.outer
    width = lam[0] if lam else 0
    boxes = [sum(1 for x in lam if x >= c) for c in range(1, width + 1)]
    entries = _column_entry_counts(t)
    return strip_zeros(tuple(boxes[c] - entries[c] for c in range(1, width)))


def flag_weight(t: Tableau) -> tuple[int, ...]:
    """Weight of an OFT (counts of i) or a UFT (counts of i')."""
    letters = list(t.letters())
    if not letters:
        return ()
    if all(l.primed for l in letters):
        return right_weight(t)
    if all(not l.primed for l in letters):
        return left_weight(t)
    raise ValidationError("flag weight requires an all-primed or all-unprimed tableau")


# --- validators -------------------------------------------------------------

def _key(letter: Letter) -> tuple[int, int]:
    return letter.key


def _ot_row_ok(a: BoxFill, b: BoxFill) -> bool:
    """Adjacent boxes A (left) and B (right): every pair a<b or equal unprimed."""
    ma, mb = a.max_letter(), b.min_letter()
    if ma.key < mb.key:
        return True
    return ma == mb and not ma.primed


def _ot_col_ok(a: BoxFill, c: BoxFill) -> bool:
    """Adjacent boxes A (above) and C (below): every pair a<c or equal primed."""
    ma, mc = a.max_letter(), c.min_letter()
    if ma.key < mc.key:
        return True
    return ma == mc and ma.primed


def _validate_ot(t: Tableau) -> bool:
    if not t.shape.is_straight:
        return False
    for cell in t.shape.cells():
        if t.is_empty(cell):
            return False
    for (r, c) in t.shape.cells():
        if (r, c + 1) in t.shape and not _ot_row_ok(t.fill((r, c)), t.fill((r, c + 1))):
            return False
        if (r + 1, c) in t.shape and not _ot_col_ok(t.fill((r, c)), t.fill((r + 1, c))):
            return False
    return True


def _validate_ut(t: Tableau) -> bool:
    if not t.shape.is_straight:
        return False
    lam = t.shape.outer
    for cell, f in t.filled_cells():
        if len(f) != 1:
            return False
    for r in range(1, len(lam) + 1):
        if t.is_empty((r, 1)):
            return False
    # row rule: against the nearest nonempty box to the right
    for (r, c) in t.shape.cells():
        if t.is_empty((r, c)):
            continue
        a = t.fill((r, c)).single()
        for c2 in range(c + 1, lam[r - 1] + 1):
            if not t.is_empty((r, c2)):
                b = t.fill((r, c2)).single()
                if not (a.key < b.key or (a == b and not a.primed)):
                    return False
                break
    # column rule: a box constrains against the rightmost nonempty box weakly
    # to its left in the row below, but only when the box directly below is
    # part of the shape (boxes sticking out past the lower row are free).
    for (r, c) in t.shape.cells():
        if t.is_empty((r, c)) or (r + 1, c) not in t.shape:
            continue
        a = t.fill((r, c)).single()
        for c2 in range(c, 0, -1):
            if not t.is_empty((r + 1, c2)):
                v = t.fill((r + 1, c2)).single()
                if not (a.key < v.key or (a == v and a.primed)):
                    return False
                break
    return True


def _validate_pt(t: Tableau) -> bool:
    if any(len(f) != 1 for _, f in t.filled_cells()):
        return False
    if any(t.is_empty(cell) for cell in t.shape.cells()):
        return False
    return _validate_ot(t) and _validate_ut(t)


def validate_pt_order(t: Tableau, order: TotalOrder) -> bool:
    """Membership in PT_< for an arbitrary total order on the primed alphabet."""
    for cell in t.shape.cells():
        f = t.fill(cell)
        if len(f) != 1:
            return False
        order.position(f.single())  # raises if outside the domain
    pos = order.position
    for (r, c) in t.shape.cells():
        a = pos(t.fill((r, c)).single())
        if (r, c + 1) in t.shape and a > pos(t.fill((r, c + 1)).single()):
            return False
        if (r + 1, c) in t.shape and a > pos(t.fill((r + 1, c)).single()):
            return False
    # at most one i per column, at most one i' per row
    col_seen: set[tuple[int, int]] = set()
    row_seen: set[tuple[int, int]] = set()
    for (r, c) in t.shape.cells():
        l = t.fill((r, c)).single()
        if l.primed:
            if (r, l.value) in row_seen:
                return False
            row_seen.add((r, l.value))
        else:
            if (c, l.value) in col_seen:
                return False
            col_seen.add((c, l.value))
    return True


def _flag_rows_ok(shape: SkewShape) -> bool:
    return len(shape.outer) == len(shape.inner)


def _validate_oft(t: Tableau) -> bool:
    shape = t.shape
    if not _flag_rows_ok(shape):
        return False
    for cell in shape.cells():
        f = t.fill(cell)
        if len(f) != 1 or f.single().primed:
            return False
    for (r, c) in shape.cells():
        v = t.fill((r, c)).single().value
        if v > shape.inner[r - 1]:
            return False
        if (r, c + 1) in shape and v < t.fill((r, c + 1)).single().value:
            return False
        if (r + 1, c) in shape and v <= t.fill((r + 1, c)).single().value:
            return False
    return True


def _validate_uft(t: Tableau) -> bool:
    shape = t.shape
    if not _flag_rows_ok(shape):
        return False
    for cell in shape.cells():
        f = t.fill(cell)
        if len(f) != 1 or not f.single().primed:
            return False
    for (r, c) in shape.cells():
        v = t.fill((r, c)).single().value
        if v >= shape.outer[r - 1]:
            return False
        if (r, c + 1) in shape and v >= t.fill((r, c + 1)).single().value:
            return False
        if (r + 1, c) in shape and v > t.fill((r + 1, c)).single().value:
            return False
    return True


def _validate_pft(t: Tableau) -> bool:
    shape = t.shape
    for cell in shape.cells():
        f = t.fill(cell)
        if len(f) != 1:
            return False
    for (r, c) in shape.cells():
        l = t.fill((r, c)).single()
        if l.primed:
            if l.value >= shape.outer[r - 1]:
                return False
        else:
            if l.value > shape.inner_len(r):
                return False
        a = pft_key(l)
        if (r, c + 1) in shape and a > pft_key(t.fill((r, c + 1)).single()):
            return False
        if (r + 1, c) in shape and a > pft_key(t.fill((r + 1, c)).single()):
            return False
    col_seen: set[tuple[int, int]] = set()
    row_seen: set[tuple[int, int]] = set()
    for (r, c) in shape.cells():
        l = t.fill((r, c)).single()
        if l.primed:
            if (r, l.value) in row_seen:
                return False
            row_seen.add((r, l.value))
        else:
            if (c, l.value) in col_seen:
                return False
            col_seen.add((c, l.value))
    return True


_VALIDATORS = {
    "OT": _validate_ot,
    "UT": _validate_ut,
    "PT": _validate_pt,
    "OFT": _validate_oft,
    "UFT": _validate_uft,
    "PFT": _validate_pft,
}

FAMILIES = tuple(_VALIDATORS)


def validate(t: Tableau, family: str) -> bool:
    """True iff t satisfies every clause of the family's definition."""
    try:
        checker = _VALIDATORS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    return checker(t)


# --- JSON interchange -------------------------------------------------------

def tableau_to_json(t: Tableau) -> dict:
    return {
        "outer": list(t.shape.outer),
        "inner": list(t.shape.inner),
        "cells": [
            {
                "row": r,
                "col": c,
                "primed": sorted(f.primed),
                "unprimed": list(f.unprimed),
            }
            for (r, c), f in t.filled_cells()
        ],
    }


def tableau_from_json(data: dict) -> Tableau:
    shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", [])))
    cells = {}
    for entry in data.get("cells", []):
        cell = (int(entry["row"]), int(entry["col"]))
        cells[cell] = BoxFill(
            frozenset(int(v) for v in entry.get("primed", [])),
            tuple(int(v) for v in entry.get("unprimed", [])),
        )
    return Tableau.from_dict(shape, cells)


def letter_to_json(l: Letter) -> dict:
    return {"v": l.value, "p": l.primed}


def letter_from_json(data: dict) -> Letter:
    return Letter(int(data["v"]), bool(data["p"]))


def dumps_tableau(t: Tableau) -> str:
    return json.dumps(tableau_to_json(t), sort_keys=True)


def loads_tableau(s: str) -> Tableau:
    return tableau_from_json(json.loads(s))
