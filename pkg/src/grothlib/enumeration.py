"""Exhaustive, bound-parameterized generators for the seven tableau families.

Every generator backtracks cell by cell in row-major order, prunes with the
local row/column comparisons, and emits tableaux in a deterministic canonical
order (lexicographic on cell coordinates, then letter order).  These streams
are both the polynomial engine's source and the brute-force oracle for the
bijections and identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator

from .core import (
    BoxFill,
    Letter,
    Tableau,
    TotalOrder,
    pft_key,
    validate,
)
from .shapes import Part, SkewShape, check_partition, straight


@dataclass(frozen=True)
class EnumBounds:
    """Finiteness bounds: max letter value N, extra entries past one-per-box B."""

    max_letter_value: int
    extra_entry_budget: int = 0
    max_unprimed: int | None = None  # tighter caps per letter kind, for series
    max_primed: int | None = None

    def __post_init__(self):
        if self.max_letter_value < 0 or self.extra_entry_budget < 0:
            raise ValueError("bounds must be nonnegative")

    @property
    def unprimed_cap(self) -> int:
        cap = self.max_letter_value
        if self.max_unprimed is not None:
            cap = min(cap, self.max_unprimed)
        return cap

    @property
    def primed_cap(self) -> int:
        cap = self.max_letter_value
        if self.max_primed is not None:
            cap = min(cap, self.max_primed)
        return cap


@lru_cache(maxsize=None)
def _box_fills(nu: int, np_: int, max_size: int) -> tuple[BoxFill, ...]:
    """All nonempty BoxFills with <= max_size letters, unprimed <= nu, primed <= np_."""
    fills = []
    for pk in range(0, min(np_, max_size) + 1):
        for primed in combinations(range(1, np_ + 1), pk):
            for uk in range(0, max_size - pk + 1):
                if pk + uk == 0:
                    continue
                for unprimed in combinations_with_replacement(range(1, nu + 1), uk):
                    fills.append(BoxFill(frozenset(primed), unprimed))
    fills.sort(key=lambda f: (len(f), tuple(l.key for l in f.letters())))
    return tuple(fills)


def _ot_row_ok(a: BoxFill, b: BoxFill) -> bool:
    ma, mb = a.max_letter(), b.min_letter()
    return ma.key < mb.key or (ma == mb and not ma.primed)


def _ot_col_ok(a: BoxFill, c: BoxFill) -> bool:
    ma, mc = a.max_letter(), c.min_letter()
    return ma.key < mc.key or (ma == mc and ma.primed)


def enum_OT(mu, bounds: EnumBounds) -> Iterator[Tableau]:
    """All overfull tableaux of straight shape mu within the bounds."""
    mu = check_partition(mu)
    shape = straight(mu)
    cells = list(shape.cells())
    candidates = _box_fills(bounds.unprimed_cap, bounds.primed_cap,
                            1 + bounds.extra_entry_budget)
    fills: dict[tuple[int, int], BoxFill] = {}

    def rec(idx: int, budget: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_dict(shape, dict(fills))
            return
        r, c = cells[idx]
        left = fills.get((r, c - 1))
        above = fills.get((r - 1, c))
        for f in candidates:
            if len(f) - 1 > budget:
                continue
            if left is not None and not _ot_row_ok(left, f):
                continue
            if above is not None and not _ot_col_ok(above, f):
                continue
            fills[(r, c)] = f
            yield from rec(idx + 1, budget - (len(f) - 1))
            del fills[(r, c)]

    yield from rec(0, bounds.extra_entry_budget)


def _ut_letters(bounds: EnumBounds) -> tuple[Letter, ...]:
    letters = [Letter(v, True) for v in range(1, bounds.primed_cap + 1)]
    letters += [Letter(v, False) for v in range(1, bounds.unprimed_cap + 1)]
    letters.sort(key=lambda l: l.key)
    return tuple(letters)


def enum_UT(lam, bounds: EnumBounds) -> Iterator[Tableau]:
    """All underfull tableaux of straight shape lam with letter values in bounds."""
    lam = check_partition(lam)
    shape = straight(lam)
    letters = _ut_letters(bounds)
    fills: dict[tuple[int, int], Letter] = {}

    def row_ok(r: int) -> bool:
        # nearest-nonempty row comparison within row r
        prev: Letter | None = None
        for c in range(1, lam[r - 1] + 1):
            cur = fills.get((r, c))
            if cur is None:
                continue
            if prev is not None:
                if not (prev.key < cur.key or (prev == cur and not prev.primed)):
                    return False
            prev = cur
        return True

    def col_ok_for_row_above(r: int) -> bool:
        # row r is complete; each nonempty box of row r-1 with a box of row r
        # directly below it constrains against the rightmost nonempty box
        # weakly to its left in row r
        if r == 1:
            return True
        below_len = lam[r - 1]
        for c in range(1, min(lam[r - 2], below_len) + 1):
            a = fills.get((r - 1, c))
            if a is None:
                continue
            v = None
            for c2 in range(c, 0, -1):
                v = fills.get((r, c2))
                if v is not None:
                    break
            if v is None:
                continue
            if not (a.key < v.key or (a == v and a.primed)):
                return False
        return True

    def rec(r: int, c: int) -> Iterator[Tableau]:
        if c > lam[r - 1]:
            if not col_ok_for_row_above(r):
                return
            if r == len(lam):
                yield Tableau.from_dict(
                    shape, {p: BoxFill.of(l) for p, l in fills.items()})
                return
            yield from rec(r + 1, 1)
            return
        # nearest nonempty to the left in this row
        prev = None
        for c2 in range(c - 1, 0, -1):
            prev = fills.get((r, c2))
            if prev is not None:
                break
        options: list[Letter | None] = [] if c == 1 else [None]
        for l in letters:
            if prev is None or prev.key < l.key or (prev == l and not prev.primed):
                options.append(l)
        for opt in options:
            if opt is None:
                yield from rec(r, c + 1)
            else:
                fills[(r, c)] = opt
                yield from rec(r, c + 1)
                del fills[(r, c)]

    if not lam:
        yield Tableau.from_dict(shape, {})
        return
    yield from rec(1, 1)


def enum_PT_order(shape: SkewShape, order: TotalOrder, n: int) -> Iterator[Tableau]:
    """All one-letter-per-box fillings weakly increasing under the given order,
    with at most one unprimed i per column and one primed i' per row."""
    letters = sorted(
        (l for l in order.sequence if l.value <= n), key=order.position)
    cells = list(shape.cells())
    pos = order.position
    fills: dict[tuple[int, int], Letter] = {}
    col_used: set[tuple[int, int]] = set()  # (col, unprimed value)
    row_used: set[tuple[int, int]] = set()  # (row, primed value)

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_dict(
                shape, {p: BoxFill.of(l) for p, l in fills.items()})
            return
        r, c = cells[idx]
        lo = 0
        left = fills.get((r, c - 1))
        above = fills.get((r - 1, c))
        if left is not None:
            lo = max(lo, pos(left))
        if above is not None:
            lo = max(lo, pos(above))
        for l in letters:
            if pos(l) < lo:
                continue
            tag = (r, l.value) if l.primed else (c, l.value)
            used = row_used if l.primed else col_used
            if tag in used:
                continue
            fills[(r, c)] = l
            used.add(tag)
            yield from rec(idx + 1)
            used.remove(tag)
            del fills[(r, c)]

    yield from rec(0)


def enum_PT(lam, n: int) -> Iterator[Tableau]:
    """All primed tableaux of straight shape lam with values <= n."""
    lam = check_partition(lam)
    if n == 0:
        if not lam:
            yield Tableau.from_dict(straight(()), {})
        return
    yield from enum_PT_order(straight(lam), TotalOrder.standard(n), n)


def _flag_rows_differ(shape: SkewShape) -> bool:
    return len(shape.outer) != len(shape.inner)


def enum_OFT(shape: SkewShape) -> Iterator[Tableau]:
    """All over flagged tableaux: unprimed entries <= inner row flag, rows
    weakly decreasing, columns strictly decreasing."""
    if _flag_rows_differ(shape):
        return
    cells = list(shape.cells())
    fills: dict[tuple[int, int], Letter] = {}

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_dict(
                shape, {p: BoxFill.of(l) for p, l in fills.items()})
            return
        r, c = cells[idx]
        hi = shape.inner[r - 1]
        left = fills.get((r, c - 1))
        above = fills.get((r - 1, c))
        if left is not None:
            hi = min(hi, left.value)
        if above is not None:
            hi = min(hi, above.value - 1)
        for v in range(1, hi + 1):
            fills[(r, c)] = Letter(v, False)
            yield from rec(idx + 1)
            del fills[(r, c)]

    yield from rec(0)


def enum_UFT(shape: SkewShape) -> Iterator[Tableau]:
    """All under flagged tableaux: primed entries < outer row flag, rows
    strictly increasing, columns weakly increasing."""
    if _flag_rows_differ(shape):
        return
    cells = list(shape.cells())
    fills: dict[tuple[int, int], Letter] = {}

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_dict(
                shape, {p: BoxFill.of(l) for p, l in fills.items()})
            return
        r, c = cells[idx]
        lo = 1
        left = fills.get((r, c - 1))
        above = fills.get((r - 1, c))
        if left is not None:
            lo = max(lo, left.value + 1)
        if above is not None:
            lo = max(lo, above.value)
        for v in range(lo, shape.outer[r - 1]):
            fills[(r, c)] = Letter(v, True)
            yield from rec(idx + 1)
            del fills[(r, c)]

    yield from rec(0)


def enum_PFT(shape: SkewShape) -> Iterator[Tableau]:
    """All primed flagged tableaux under the order ... < 2 < 1 < 1' < 2' < ...,
    with the over flag on unprimed entries and the under flag on primed ones."""
    cells = list(shape.cells())
    fills: dict[tuple[int, int], Letter] = {}
    col_used: set[tuple[int, int]] = set()
    row_used: set[tuple[int, int]] = set()

    def candidates(r: int) -> list[Letter]:
        out = [Letter(v, False) for v in range(shape.inner_len(r), 0, -1)]
        out += [Letter(v, True) for v in range(1, shape.outer[r - 1])]
        return out

    def rec(idx: int) -> Iterator[Tableau]:
        if idx == len(cells):
            yield Tableau.from_dict(
                shape, {p: BoxFill.of(l) for p, l in fills.items()})
            return
        r, c = cells[idx]
        lo = (0, 0)
        left = fills.get((r, c - 1))
        above = fills.get((r - 1, c))
        have_bound = False
        for nb in (left, above):
            if nb is not None:
                k = pft_key(nb)
                lo = max(lo, k) if have_bound else k
                have_bound = True
        for l in candidates(r):
            if have_bound and pft_key(l) < lo:
                continue
            tag = (r, l.value) if l.primed else (c, l.value)
            used = row_used if l.primed else col_used
            if tag in used:
                continue
            fills[(r, c)] = l
            used.add(tag)
            yield from rec(idx + 1)
            used.remove(tag)
            del fills[(r, c)]

    yield from rec(0)


_FAMILY_ENUM = {
    "OT": lambda shape, bounds: enum_OT(shape.outer, bounds),
    "UT": lambda shape, bounds: enum_UT(shape.outer, bounds),
    "PT": lambda shape, bounds: enum_PT(shape.outer, bounds.max_letter_value),
    "OFT": lambda shape, bounds: enum_OFT(shape),
    "UFT": lambda shape, bounds: enum_UFT(shape),
    "PFT": lambda shape, bounds: enum_PFT(shape),
}


def enum_family(family: str, shape: SkewShape, bounds: EnumBounds) -> Iterator[Tableau]:
    """Uniform dispatcher used by the CLI; straight families take shape.outer."""
    try:
        gen = _FAMILY_ENUM[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    if family in ("OT", "UT", "PT") and not shape.is_straight:
        raise ValueError(f"{family} is only defined on straight shapes")
    return gen(shape, bounds)
