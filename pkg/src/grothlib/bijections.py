"""The four structural maps: primed column insertion, primed jeu de taquin,
the order-swap maps on diagonally indexed components, the sign-reversing
prime-flip involution, and the superimpose/split correspondence.

Insertion and sliding are run on standardized ranks: occurrences are totally
ordered by the standard letter order, breaking ties among equal unprimed
letters left to right and among equal primed letters top to bottom.  The
classical distinct-letter algorithms are applied to the ranks and the result
is mapped back to letters.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterator

from .core import (
    BoxFill,
    Letter,
    Tableau,
    TotalOrder,
    ValidationError,
    flag_weight,
    left_weight,
    overweight,
    pft_key,
    right_weight,
    underweight,
    validate,
    validate_pt_order,
)
from .shapes import SkewShape, check_partition, straight, strip_zeros


class BijectionError(ValueError):
    """Input outside the domain or pair outside the image of a bijection."""


@dataclass(frozen=True)
class RskPair:
    p: Tableau  # one letter per box, straight shape
    q: Tableau  # unprimed recording tableau on outer/inner

    def __post_init__(self):
        if self.q.shape.outer != self.p.shape.outer:
            raise BijectionError("recording tableau must share the outer shape")


@dataclass(frozen=True)
class JdtPair:
    p: Tableau  # one letter per box, straight shape
    q: Tableau  # primed recording tableau whose inner shape is p's shape

    def __post_init__(self):
        if self.q.shape.inner != self.p.shape.outer:
            raise BijectionError("recording tableau's inner shape must be p's shape")


# --- standardization ---------------------------------------------------------

def _standardize(t: Tableau) -> list[tuple[Letter, tuple[int, int], int]]:
    """Occurrences sorted into rank order.

    Equal unprimed letters are ordered left to right (column, then row, then
    slot within the box); equal primed letters top to bottom (row, column).
    """
    occs = []
    for (r, c), f in t.filled_cells():
        for v in sorted(f.primed):
            occs.append((Letter(v, True), (r, c), 0))
        for slot, v in enumerate(f.unprimed):
            occs.append((Letter(v, False), (r, c), slot))

    def skey(o):
        l, (r, c), slot = o
        tiebreak = (r, c, 0) if l.primed else (c, r, slot)
        return (l.key, tiebreak)

    occs.sort(key=skey)
    return occs


def _columns_to_tableau(cols: dict[int, list[int]],
                        letter_of: dict[int, Letter]) -> Tableau:
    heights = {c: len(col) for c, col in cols.items() if col}
    width = max(heights, default=0)
    lam = []
    r = 1
    while True:
        length = sum(1 for c in heights if heights[c] >= r)
        if length == 0:
            break
        lam.append(length)
        r += 1
    shape = straight(tuple(lam))
    cells = {}
    for c, col in cols.items():
        for r0, rank in enumerate(col, start=1):
            cells[(r0, c)] = BoxFill.of(letter_of[rank])
    return Tableau.from_dict(shape, cells)


# --- column insertion --------------------------------------------------------

def rsk_forward(t: Tableau, trace: bool = False):
    """Map an overfull tableau to (one-letter tableau, unprimed recorder).

    Column by column from the right, each box keeps its smallest entry; the
    removed entries are inserted, largest rank first, into the columns to the
    right by classical column insertion on ranks.  Boxes appended while
    processing column i are recorded with the label i.

    Returns the pair, or (pair, panels) when trace is set.
    """
    if not validate(t, "OT"):
        raise BijectionError("input is not a valid overfull tableau")
    mu = t.shape.outer
    occs = _standardize(t)
    letter_of = {rank: o[0] for rank, o in enumerate(occs)}
    rank_at: dict[tuple[tuple[int, int], int, bool], int] = {}
    for rank, (l, cell, slot) in enumerate(occs):
        rank_at[(cell, slot, l.primed) if not l.primed else (cell, l.value, True)] = rank

    # per-box rank sets, grouped by column
    box_ranks: dict[tuple[int, int], list[int]] = {}
    for rank, (l, cell, slot) in enumerate(occs):
        box_ranks.setdefault(cell, []).append(rank)
    for ranks in box_ranks.values():
        ranks.sort()

    cols: dict[int, list[int]] = {}
    qlabels: dict[tuple[int, int], int] = {}
    panels = []

    def snapshot(active_col: int, pending: dict[tuple[int, int], list[int]]):
        cells: dict[tuple[int, int], BoxFill] = {}
        for (r, c), ranks in box_ranks.items():
            if c < active_col:
                cells[(r, c)] = BoxFill.of(*(letter_of[x] for x in ranks))
        for c, col in cols.items():
            for r0, rank in enumerate(col, start=1):
                cells[(r0, c)] = BoxFill.of(letter_of[rank])
        # the active column shows kept entries plus removals still in flight
        for (r, c), ranks in pending.items():
            cells[(r, c)] = BoxFill.of(*(letter_of[x] for x in ranks))
        heights: dict[int, int] = {}
        for (r, c) in cells:
            heights[c] = max(heights.get(c, 0), r)
        lam = []
        r = 1
        while True:
            length = max((c for c in heights if heights[c] >= r), default=0)
            if length == 0:
                break
            lam.append(length)
            r += 1
        panels.append(Tableau.from_dict(straight(tuple(lam)), cells))

    if trace:
        panels.append(t)

    width = mu[0] if mu else 0
    for i in range(width, 0, -1):
        col_boxes = sorted(cell for cell in box_ranks if cell[1] == i)
        kept = []
        removed = []
        pending: dict[tuple[int, int], list[int]] = {}
        for cell in col_boxes:
            ranks = box_ranks[cell]
            kept.append(ranks[0])
            removed.extend(ranks[1:])
            pending[cell] = list(ranks)
        cols[i] = kept
        removed.sort(reverse=True)
        for x in removed:
            for cell in pending:
                if x in pending[cell]:
                    pending[cell].remove(x)
                    break
            c = i + 1
            while True:
                col = cols.setdefault(c, [])
                idx = bisect_right(col, x)
                if idx < len(col):
                    col[idx], x = x, col[idx]
                    c += 1
                else:
                    col.append(x)
                    qlabels[(len(col), c)] = i
                    break
            if trace:
                snapshot(i, pending)

    p = _columns_to_tableau(cols, letter_of)
    lam = p.shape.outer
    q = Tableau.from_dict(
        SkewShape(lam, mu),
        {cell: BoxFill.of(Letter(i, False)) for cell, i in qlabels.items()})
    if not validate(p, "PT"):
        raise BijectionError("insertion produced an invalid primed tableau")
    if not validate(q, "OFT"):
        raise BijectionError("insertion produced an invalid recording tableau")
    pair = RskPair(p, q)
    return (pair, panels) if trace else pair


def rsk_backward(pair: RskPair, mu) -> Tableau:
    """Inverse of rsk_forward; raises if the pair is not in the image."""
    mu = check_partition(mu)
    p, q = pair.p, pair.q
    if q.shape.inner != mu:
        raise BijectionError("inner shape of the recorder must equal mu")
    if not validate(p, "PT") or not validate(q, "OFT"):
        raise BijectionError("pair is not (primed tableau, flagged recorder)")

    occs = _standardize(p)
    letter_of = {rank: o[0] for rank, o in enumerate(occs)}
    rank_of_cell = {o[1]: rank for rank, o in enumerate(occs)}

    cols: dict[int, list[int]] = {}
    for (r, c), _ in p.filled_cells():
        cols.setdefault(c, []).append((r, rank_of_cell[(r, c)]))
    for c in cols:
        cols[c] = [rank for _, rank in sorted(cols[c])]

    labels: dict[int, list[tuple[int, int]]] = {}
    for cell, f in q.filled_cells():
        labels.setdefault(f.single().value, []).append(cell)

    box_ranks: dict[tuple[int, int], list[int]] = {}
    width = mu[0] if mu else 0
    for i in range(1, width + 1):
        for cell in sorted(labels.get(i, ()), key=lambda rc: -rc[1]):
            r, c = cell
            col = cols.get(c, [])
            if len(col) != r:
                raise BijectionError("recorded box is not removable")
            y = col.pop()
            for c2 in range(c - 1, i, -1):
                col2 = cols[c2]
                idx = bisect_left(col2, y) - 1
                if idx < 0:
                    raise BijectionError("reverse insertion fell off a column")
                col2[idx], y = y, col2[idx]
            # return y to the column-i box with the largest smaller minimum
            target = None
            for r0, k in enumerate(cols[i], start=1):
                if k < y:
                    target = (r0, i)
            if target is None:
                raise BijectionError("no source box for a reverse insertion")
            box_ranks.setdefault(target, []).append(y)

    for c, col in cols.items():
        height = sum(1 for x in mu if x >= c)
        if len(col) != height:
            raise BijectionError("unwound columns do not fill the target shape")
        for r0, k in enumerate(col, start=1):
            box_ranks.setdefault((r0, c), []).insert(0, k)

    cells = {cell: BoxFill.of(*(letter_of[x] for x in ranks))
             for cell, ranks in box_ranks.items()}
    try:
        result = Tableau.from_dict(straight(mu), cells)
    except Exception as exc:
        raise BijectionError(f"reconstruction left the shape: {exc}") from exc
    if not validate(result, "OT"):
        raise BijectionError("reconstruction is not a valid overfull tableau")
    if rsk_forward(result) != pair:
        raise BijectionError("pair is not in the image of the insertion map")
    return result


# --- jeu de taquin -----------------------------------------------------------

def jdt_forward(t: Tableau, trace: bool = False):
    """Map an underfull tableau to (one-letter tableau, primed recorder).

    Empty boxes are processed column by column from the right, bottom to top
    within a column.  Each empty box slides toward the smaller of its right
    and lower neighbors until an outer corner is removed; a corner removed
    while clearing column i is recorded with the label (i-1)'.
    """
    if not validate(t, "UT"):
        raise BijectionError("input is not a valid underfull tableau")
    lam = t.shape.outer
    occs = _standardize(t)
    letter_of = {rank: o[0] for rank, o in enumerate(occs)}
    grid = {o[1]: rank for rank, o in enumerate(occs)}
    region = set(t.shape.cells())
    qlabels: dict[tuple[int, int], int] = {}
    panels = []

    def snapshot():
        heights: dict[int, int] = {}
        for (r, c) in region:
            heights[c] = max(heights.get(c, 0), r)
        shape_rows = []
        r = 1
        while True:
            length = max((c for c in heights if heights[c] >= r), default=0)
            if length == 0:
                break
            shape_rows.append(length)
            r += 1
        cells = {cell: BoxFill.of(letter_of[grid[cell]])
                 for cell in region if cell in grid}
        panels.append(Tableau.from_dict(straight(tuple(shape_rows)), cells))

    if trace:
        snapshot()

    width = lam[0] if lam else 0
    for i in range(width, 1, -1):
        holes = sorted(
            (cell for cell in region
             if cell[1] == i and cell not in grid and cell not in qlabels),
            reverse=True)
        for hole in holes:
            r, c = hole
            while True:
                cands = []
                for nb in ((r, c + 1), (r + 1, c)):
                    if nb in region and nb in grid:
                        cands.append(nb)
                if not cands:
                    region.discard((r, c))
                    qlabels[(r, c)] = i - 1
                    break
                nb = min(cands, key=lambda p: grid[p])
                grid[(r, c)] = grid.pop(nb)
                r, c = nb
            if trace:
                snapshot()

    heights: dict[int, int] = {}
    for (r, c) in region:
        heights[c] = max(heights.get(c, 0), r)
    mu_rows = []
    r = 1
    while True:
        length = max((c for c in heights if heights[c] >= r), default=0)
        if length == 0:
            break
        mu_rows.append(length)
        r += 1
    mu = tuple(mu_rows)
    try:
        p = Tableau.from_dict(
            straight(mu),
            {cell: BoxFill.of(letter_of[grid[cell]]) for cell in region})
    except Exception as exc:
        raise BijectionError(f"slides left a non-partition region: {exc}") from exc
    q = Tableau.from_dict(
        SkewShape(lam, mu),
        {cell: BoxFill.of(Letter(v, True)) for cell, v in qlabels.items()})
    if not validate(p, "PT"):
        raise BijectionError("slides produced an invalid primed tableau")
    if not validate(q, "UFT"):
        raise BijectionError("slides produced an invalid recording tableau")
    pair = JdtPair(p, q)
    return (pair, panels) if trace else pair


def jdt_backward(pair: JdtPair, lam) -> Tableau:
    """Inverse of jdt_forward by depth-first search over reverse-slide stops.

    Reverse slides are deterministic while the moving hole sits right of the
    cleared column; inside it, every stop row consistent with replaying the
    forward slide is explored.  The first reconstruction whose forward image
    equals the pair is returned.
    """
    lam = check_partition(lam)
    p, q = pair.p, pair.q
    if q.shape.outer != lam:
        raise BijectionError("outer shape of the recorder must equal lam")
    if not validate(p, "PT") or not validate(q, "UFT"):
        raise BijectionError("pair is not (primed tableau, flagged recorder)")

    occs = _standardize(p)
    letter_of = {rank: o[0] for rank, o in enumerate(occs)}
    rank_of_cell = {o[1]: rank for rank, o in enumerate(occs)}
    grid = {cell: rank_of_cell[cell] for cell, _ in p.filled_cells()}
    region = set(p.shape.cells())
    empties: set[tuple[int, int]] = set()

    events = []  # (column i, recorder cell) in undo order
    by_label: dict[int, list[tuple[int, int]]] = {}
    for cell, f in q.filled_cells():
        by_label.setdefault(f.single().value, []).append(cell)
    width = lam[0] if lam else 0
    for i in range(2, width + 1):
        for cell in sorted(by_label.get(i - 1, ())):
            events.append((i, cell))

    def addable(cell) -> bool:
        r, c = cell
        if cell in region:
            return False
        left_ok = c == 1 or (r, c - 1) in region
        up_ok = r == 1 or (r - 1, c) in region
        return left_ok and up_ok

    def replay_ok(start, column, corner) -> bool:
        # forward slide from `start` must remove exactly `corner`
        r, c = start
        seen = dict(grid)
        while True:
            cands = [nb for nb in ((r, c + 1), (r + 1, c))
                     if nb in region and nb in seen]
            if not cands:
                return (r, c) == corner
            nb = min(cands, key=lambda x: seen[x])
            seen[(r, c)] = seen.pop(nb)
            r, c = nb

    def undo(idx: int) -> Tableau | None:
        if idx == len(events):
            mu_cells = {cell for cell in region if cell not in empties}
            cells = {cell: BoxFill.of(letter_of[grid[cell]])
                     for cell in region if cell in grid}
            try:
                candidate = Tableau.from_dict(straight(lam), cells)
            except Exception:
                return None
            if not validate(candidate, "UT"):
                return None
            if jdt_forward(candidate) != pair:
                return None
            return candidate
        i, corner = events[idx]
        if not addable(corner):
            return None
        region.add(corner)
        r, c = corner
        path = []
        result = None
        while True:
            if c == i:
                # candidate stop: the hole becomes an original empty box
                if replay_ok((r, c), i, corner):
                    empties.add((r, c))
                    result = undo(idx + 1)
                    empties.discard((r, c))
                    if result is not None:
                        break
                nb = (r - 1, c)
                if nb in region and nb in grid and nb not in empties:
                    path.append(((r, c), nb))
                    grid[(r, c)] = grid.pop(nb)
                    r, c = nb
                    continue
                break
            cands = [nb for nb in ((r, c - 1), (r - 1, c))
                     if nb[0] >= 1 and nb[1] >= i and nb in region
                     and nb in grid and nb not in empties]
            if not cands:
                break
            nb = max(cands, key=lambda x: grid[x])
            path.append(((r, c), nb))
            grid[(r, c)] = grid.pop(nb)
            r, c = nb
        for hole, nb in reversed(path):
            grid[nb] = grid.pop(hole)
        region.discard(corner)
        return result

    out = undo(0)
    if out is None:
        raise BijectionError("pair is not in the image of the sliding map")
    return out


# --- order swaps -------------------------------------------------------------

def _adjacent_swap_info(a: TotalOrder, b: TotalOrder) -> tuple[int, int, bool]:
    """For orders differing by one adjacent unprimed/primed transposition,
    return (i, j, up) where `up` means a has i immediately before j'."""
    sa, sb = a.sequence, b.sequence
    if len(sa) != len(sb) or set(sa) != set(sb):
        raise BijectionError("orders must share one letter domain")
    diff = [k for k in range(len(sa)) if sa[k] != sb[k]]
    if len(diff) != 2 or diff[1] != diff[0] + 1:
        raise BijectionError("orders do not differ by one adjacent transposition")
    k = diff[0]
    x, y = sa[k], sa[k + 1]
    if (x, y) != (sb[k + 1], sb[k]):
        raise BijectionError("orders do not differ by one adjacent transposition")
    if not x.primed and y.primed:
        return (x.value, y.value, True)
    if x.primed and not y.primed:
        return (y.value, x.value, False)
    raise BijectionError("the transposed letters must be one unprimed, one primed")


def _swap_components(t: Tableau, i: int, j: int) -> list[list[tuple[int, int]]]:
    """Boxes holding i or j', grouped into runs of consecutive diagonals."""
    target = {Letter(i, False), Letter(j, True)}
    by_diag: dict[int, tuple[int, int]] = {}
    for cell, f in t.filled_cells():
        if f.single() in target:
            d = cell[1] - cell[0]
            if d in by_diag:
                raise BijectionError("two swap letters on one diagonal")
            by_diag[d] = cell
    comps = []
    for d in sorted(by_diag):
        if comps and comps[-1][-1][1] - comps[-1][-1][0] == d - 1:
            comps[-1].append(by_diag[d])
        else:
            comps.append([by_diag[d]])
    return comps


def _apply_swap(t: Tableau, i: int, j: int, up: bool) -> Tableau:
    cells = {cell: f for cell, f in t.filled_cells()}
    for comp in _swap_components(t, i, j):
        boxes = set(comp)
        # component boxes are listed from the lower-left diagonal upward
        source = comp[-1] if up else comp[0]
        dest = comp[0] if up else comp[-1]
        carried = cells[source].single()
        moves = []
        for cell in comp:
            if cell == source:
                continue
            l = cells[cell].single()
            r, c = cell
            if not l.primed:
                tgt = (r, c + 1) if up else (r, c - 1)
            else:
                tgt = (r - 1, c) if up else (r + 1, c)
            if tgt not in boxes:
                raise BijectionError("a moved entry left its component")
            moves.append((cell, tgt, l))
        for cell, _, _ in moves:
            del cells[cell]
        del cells[source]
        for _, tgt, l in moves:
            cells[tgt] = BoxFill.of(l)
        cells[dest] = BoxFill.of(carried)
    return Tableau.from_dict(t.shape, cells)


def order_swap_up(t: Tableau, order_from: TotalOrder, order_to: TotalOrder) -> Tableau:
    """Move from the order with i just before j' to the order with them swapped."""
    i, j, up = _adjacent_swap_info(order_from, order_to)
    if not up:
        raise BijectionError("order_from must place the unprimed letter first")
    if not validate_pt_order(t, order_from):
        raise BijectionError("input invalid under the source order")
    out = _apply_swap(t, i, j, True)
    if not validate_pt_order(out, order_to):
        raise BijectionError("swap produced a tableau invalid under the target order")
    return out


def order_swap_down(t: Tableau, order_from: TotalOrder, order_to: TotalOrder) -> Tableau:
    """Inverse direction: the source order places j' just before i."""
    i, j, up = _adjacent_swap_info(order_to, order_from)
    if not up:
        raise BijectionError("order_to must place the unprimed letter first")
    if not validate_pt_order(t, order_from):
        raise BijectionError("input invalid under the source order")
    out = _apply_swap(t, i, j, False)
    if not validate_pt_order(out, order_to):
        raise BijectionError("swap produced a tableau invalid under the target order")
    return out


def swap_path(order_from: TotalOrder, order_to: TotalOrder) -> list[TotalOrder]:
    """Bubble path of orders from order_from to order_to, each consecutive
    pair differing by one adjacent unprimed/primed transposition.

    Defined when the orders agree on unprimed letters among themselves and on
    primed letters among themselves, so only cross-kind transpositions occur.
    """
    sa, sb = order_from.sequence, order_to.sequence
    if set(sa) != set(sb):
        raise BijectionError("orders must share one letter domain")
    for kind in (False, True):
        ra = [l for l in sa if l.primed == kind]
        rb = [l for l in sb if l.primed == kind]
        if ra != rb:
            raise BijectionError(
                "orders must agree within the unprimed and primed alphabets")
    path = [order_from]
    cur_seq = list(sa)
    target_pos = {l: k for k, l in enumerate(sb)}
    while cur_seq != list(sb):
        progressed = False
        for k in range(len(cur_seq) - 1):
            a, b = cur_seq[k], cur_seq[k + 1]
            if target_pos[a] > target_pos[b]:
                if a.primed == b.primed:
                    raise BijectionError(
                        "bubble path required a same-kind transposition")
                cur_seq[k], cur_seq[k + 1] = b, a
                path.append(TotalOrder(tuple(cur_seq)))
                progressed = True
                break
        if not progressed:
            raise BijectionError("no adjacent transposition made progress")
    return path


def reorder(t: Tableau, order_from: TotalOrder, order_to: TotalOrder) -> Tableau:
    """Composite of adjacent swaps along a bubble path between the two orders.

    Supported when the orders agree on unprimed letters among themselves and
    on primed letters among themselves, so only unprimed/primed adjacent
    transpositions are needed.
    """
    path = swap_path(order_from, order_to)
    out = t
    for cur, nxt in zip(path, path[1:]):
        _, _, up = _adjacent_swap_info(cur, nxt)
        if up:
            out = order_swap_up(out, cur, nxt)
        else:
            out = order_swap_down(out, cur, nxt)
    return out


# --- prime-flip involution ---------------------------------------------------

def iota(t: Tableau) -> Tableau:
    """Flip the prime on the last box of the first row holding the smallest value."""
    if not validate(t, "PFT"):
        raise BijectionError("input is not a valid primed flagged tableau")
    values = [l.value for l in t.letters()]
    if not values:
        raise BijectionError("the empty tableau has no entry to flip")
    m = min(values)
    cells = [cell for cell, f in t.filled_cells() if f.single().value == m]
    i = min(r for r, _ in cells)
    j = max(c for r, c in cells if r == i)
    old = t.fill((i, j)).single()
    new_cells = {cell: f for cell, f in t.filled_cells()}
    new_cells[(i, j)] = BoxFill.of(Letter(m, not old.primed))
    out = Tableau.from_dict(t.shape, new_cells)
    if not validate(out, "PFT"):
        raise BijectionError("prime flip left the family")
    return out


def unprimed_count(t: Tableau) -> int:
    return sum(1 for l in t.letters() if not l.primed)


# --- superimpose / split -----------------------------------------------------

def superimpose(p: Tableau, q: Tableau) -> Tableau:
    """Overlay an over flagged p on rho/mu and an under flagged q on lam/rho."""
    if p.shape.outer != q.shape.inner:
        raise BijectionError("shapes do not tile: p's outer must be q's inner")
    if not validate(p, "OFT") or not validate(q, "UFT"):
        raise BijectionError("inputs must be flagged tableaux of nesting shapes")
    shape = SkewShape(q.shape.outer, p.shape.inner)
    cells = {cell: f for cell, f in p.filled_cells()}
    for cell, f in q.filled_cells():
        if cell in cells:
            raise BijectionError("overlapping cells")
        cells[cell] = f
    out = Tableau.from_dict(shape, cells)
    if not validate(out, "PFT"):
        raise BijectionError("superimposition left the primed flagged family")
    return out


def split(r: Tableau) -> tuple[Tableau, Tableau]:
    """Inverse of superimpose: unprimed entries form the inner flagged layer."""
    if not validate(r, "PFT"):
        raise BijectionError("input is not a valid primed flagged tableau")
    mu = r.shape.inner
    lam = r.shape.outer
    rho = []
    for row in range(1, len(lam) + 1):
        unprimed_cols = [c for (rr, c), f in r.filled_cells()
                         if rr == row and not f.single().primed]
        base = mu[row - 1] if row <= len(mu) else 0
        if sorted(unprimed_cols) != list(range(base + 1, base + 1 + len(unprimed_cols))):
            raise BijectionError("unprimed region is not left-justified")
        rho.append(base + len(unprimed_cols))
    rho = strip_zeros(tuple(rho))
    try:
        p_shape = SkewShape(rho, mu)
        q_shape = SkewShape(lam, rho)
    except Exception as exc:
        raise BijectionError(f"unprimed region is not a partition: {exc}") from exc
    p = Tableau.from_dict(p_shape, {
        cell: f for cell, f in r.filled_cells() if not f.single().primed})
    q = Tableau.from_dict(q_shape, {
        cell: f for cell, f in r.filled_cells() if f.single().primed})
    if not validate(p, "OFT") or not validate(q, "UFT"):
        raise BijectionError("split layers are not flagged tableaux")
    return p, q
