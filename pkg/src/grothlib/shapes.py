"""Integer partitions, skew shapes, and finitely supported weight vectors.

Partitions are plain tuples of weakly decreasing positive integers.  Weight
vectors are tuples of nonnegative integers compared after stripping trailing
zeros, since their natural length depends on context.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterator

Part = tuple[int, ...]


class ShapeError(ValueError):
    """A malformed partition or skew shape (structural, not a validation miss)."""


def check_partition(parts) -> Part:
    """Normalize to a tuple and reject anything not weakly decreasing positive."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ShapeError(f"partition parts must be positive: {p}")
        if i > 0 and p[i - 1] < x:
            raise ShapeError(f"partition parts must weakly decrease: {p}")
    return p


def conjugate(parts) -> Part:
    """Transpose the Young diagram and read off row lengths."""
    p = check_partition(parts)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= c) for c in range(1, p[0] + 1))


def contains(inner, outer) -> bool:
    """Componentwise containment, padding the shorter partition with zeros."""
    return all(i <= o for i, o in zip_longest(inner, outer, fillvalue=0))


@dataclass(frozen=True)
class SkewShape:
    """Skew shape outer/inner; a straight shape has empty inner."""

    outer: Part
    inner: Part = ()

    def __post_init__(self):
        object.__setattr__(self, "outer", check_partition(self.outer))
        object.__setattr__(self, "inner", check_partition(self.inner))
        if not contains(self.inner, self.outer):
            raise ShapeError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def inner_len(self, row: int) -> int:
        """Length of the inner partition in 1-indexed row `row` (0 if absent)."""
        return self.inner[row - 1] if row <= len(self.inner) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """All (row, col) boxes, 1-indexed, row-major order."""
        for r, length in enumerate(self.outer, start=1):
            for c in range(self.inner_len(r) + 1, length + 1):
                yield (r, c)

    def __contains__(self, cell: tuple[int, int]) -> bool:
        r, c = cell
        if r < 1 or r > len(self.outer):
            return False
        return self.inner_len(r) < c <= self.outer[r - 1]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def straight(parts) -> SkewShape:
    return SkewShape(check_partition(parts), ())


# --- weight vectors ---------------------------------------------------------

def strip_zeros(vec) -> tuple[int, ...]:
    """Canonical form of a weight vector: drop trailing zeros."""
    v = tuple(int(x) for x in vec)
    n = len(v)
    while n and v[n - 1] == 0:
        n -= 1
    return v[:n]


def weight_from_counts(counts: dict[int, int]) -> tuple[int, ...]:
    """Turn {value: multiplicity} into a stripped weight vector."""
    if not counts:
        return ()
    top = max(counts)
    return strip_zeros(tuple(counts.get(i, 0) for i in range(1, top + 1)))


def weight_add(a, b) -> tuple[int, ...]:
    return strip_zeros(tuple(x + y for x, y in zip_longest(a, b, fillvalue=0)))


# --- partition generators ---------------------------------------------------

def partitions_of(n: int, max_part: int | None = None) -> Iterator[Part]:
    """All partitions of n with parts bounded by max_part, lexicographically decreasing."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(max_size: int, max_part: int | None = None) -> Iterator[Part]:
    """All partitions of every size from 0 to max_size."""
    for n in range(max_size + 1):
        yield from partitions_of(n, max_part)


def subpartitions(lam) -> Iterator[Part]:
    """All partitions contained in lam (any number of rows)."""
    lam = check_partition(lam)

    def rec(row: int, prev: int) -> Iterator[Part]:
        if row == len(lam):
            yield ()
            return
        # part 0 terminates the partition (later rows then forced to 0)
        yield ()
        for x in range(1, min(lam[row], prev) + 1):
            for rest in rec(row + 1, x):
                yield (x,) + rest

    yield from rec(0, lam[0] if lam else 0)


def superpartitions_same_rows(mu, max_size: int) -> Iterator[Part]:
    """Partitions lam with mu <= lam componentwise, len(lam) == len(mu), |lam| <= max_size."""
    mu = check_partition(mu)
    budget = max_size - sum(mu)
    if budget < 0:
        return

    def rec(row: int, cap: int, left: int) -> Iterator[Part]:
        if row == len(mu):
            yield ()
            return
        lo = mu[row]
        for x in range(lo, min(cap, lo + left) + 1):
            for rest in rec(row + 1, x, left - (x - lo)):
                yield (x,) + rest

    if not mu:
        yield ()
        return
    yield from rec(0, mu[0] + budget, budget)


def subpartitions_same_rows(lam) -> Iterator[Part]:
    """Partitions sigma contained in lam with the same number of rows."""
    lam = check_partition(lam)

    def rec(row: int, prev: int) -> Iterator[Part]:
        if row == len(lam):
            yield ()
            return
        for x in range(1, min(lam[row], prev) + 1):
            for rest in rec(row + 1, x):
                yield (x,) + rest

    if not lam:
        yield ()
        return
    yield from rec(0, lam[0])
