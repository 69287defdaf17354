"""Exhaustive desk-scale verifiers for the structural bijections and the two
duality identities.

Each verifier sweeps every instance inside its finite parameter ranges,
collects counterexamples (never stopping at the first), and returns a
VerifyReport.  Sweeps parallelize over instances with a process pool when
jobs > 1; reports are aggregated in deterministic instance order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .bijections import (
    BijectionError,
    JdtPair,
    RskPair,
    _adjacent_swap_info,
    _apply_swap,
    iota,
    jdt_backward,
    jdt_forward,
    rsk_backward,
    rsk_forward,
    split,
    superimpose,
    swap_path,
    unprimed_count,
)
from .core import (
    Letter,
    Tableau,
    TotalOrder,
    flag_weight,
    left_weight,
    overweight,
    right_weight,
    underweight,
    validate_pt_order,
)
from .enumeration import (
    EnumBounds,
    enum_OFT,
    enum_OT,
    enum_PFT,
    enum_PT,
    enum_PT_order,
    enum_UFT,
    enum_UT,
)
from .series import Truncation, refined
from .shapes import (
    SkewShape,
    conjugate,
    contains,
    partitions_up_to,
    subpartitions,
    subpartitions_same_rows,
    superpartitions_same_rows,
    weight_add,
)
from .symfunc import (
    ZPoly,
    expand_schur,
    expand_schur_xy,
    hall_pair,
    omega,
    pt_double_series,
    schur_expansion_via_flags,
)

MAX_REPORTED_FAILURES = 20


@dataclass
class VerifyReport:
    """Outcome of one exhaustive identity sweep."""

    identity: str
    ranges: dict
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json_obj(self) -> dict:
        return {
            "identity": self.identity,
            "ranges": self.ranges,
            "instances": self.instances,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 3),
            "status": self.status,
        }

    def to_text(self) -> str:
        lines = [
            f"{self.status} {self.identity}"
            f" ({self.instances} instances, {self.elapsed:.1f}s)"
        ]
        lines += [f"  ranges: {self.ranges}"]
        for f in self.failures[:MAX_REPORTED_FAILURES]:
            lines.append(f"  counterexample: {f}")
        if len(self.failures) > MAX_REPORTED_FAILURES:
            lines.append(f"  ... {len(self.failures)} failures total")
        return "\n".join(lines)


def _run(identity: str, ranges: dict, fn, items, jobs: int = 1) -> VerifyReport:
    """Map an instance function returning (count, failures) over items."""
    t0 = time.time()
    report = VerifyReport(identity, ranges)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, items))
    else:
        results = [fn(it) for it in items]
    for count, fails in results:
        report.instances += count
        report.failures.extend(fails)
    report.elapsed = time.time() - t0
    return report


# --- insertion/sliding bijectivity and weight transport ----------------------


def _rsk_instance(args) -> tuple[int, list[str]]:
    """One straight shape mu: round trip, weight transport, image coverage."""
    mu, n, budget = args
    fails: list[str] = []
    count = 0
    image: set[RskPair] = set()
    bounds = EnumBounds(n, budget)
    for t in enum_OT(mu, bounds):
        count += 1
        pair = rsk_forward(t)
        image.add(pair)
        triple = (left_weight(t), right_weight(t), overweight(t))
        out = (left_weight(pair.p), right_weight(pair.p), flag_weight(pair.q))
        if triple != out:
            fails.append(f"insertion weight transport broke at mu={mu}: {triple} != {out}")
        try:
            back = rsk_backward(pair, mu)
        except BijectionError as exc:
            fails.append(f"insertion round trip failed at mu={mu}: {exc}")
            continue
        if back != t:
            fails.append(f"insertion round trip changed a tableau at mu={mu}")
    codomain: set[RskPair] = set()
    for lam in superpartitions_same_rows(mu, sum(mu) + budget):
        shape = SkewShape(lam, mu)
        qs = list(enum_OFT(shape))
        for p in enum_PT(lam, n):
            for q in qs:
                codomain.add(RskPair(p, q))
    if image != codomain:
        fails.append(
            f"insertion image mismatch at mu={mu}:"
            f" {len(image)} reached vs {len(codomain)} valid pairs")
    return count, fails


def _jdt_instance(args) -> tuple[int, list[str]]:
    """One straight shape lam: round trip, weight transport, image coverage."""
    lam, n = args
    fails: list[str] = []
    count = 0
    image: set[JdtPair] = set()
    for t in enum_UT(lam, EnumBounds(n)):
        count += 1
        pair = jdt_forward(t)
        image.add(pair)
        triple = (left_weight(t), right_weight(t), underweight(t))
        out = (left_weight(pair.p), right_weight(pair.p), flag_weight(pair.q))
        if triple != out:
            fails.append(f"sliding weight transport broke at lam={lam}: {triple} != {out}")
        try:
            back = jdt_backward(pair, lam)
        except BijectionError as exc:
            fails.append(f"sliding round trip failed at lam={lam}: {exc}")
            continue
        if back != t:
            fails.append(f"sliding round trip changed a tableau at lam={lam}")
    codomain: set[JdtPair] = set()
    for mu in subpartitions_same_rows(lam):
        shape = SkewShape(lam, mu)
        qs = list(enum_UFT(shape))
        for p in enum_PT(mu, n):
            for q in qs:
                codomain.add(JdtPair(p, q))
    if image != codomain:
        fails.append(
            f"sliding image mismatch at lam={lam}:"
            f" {len(image)} reached vs {len(codomain)} valid pairs")
    return count, fails


def verify_lemma_rskjdt(max_rsk_size: int = 4, max_jdt_size: int = 5,
                        n: int = 3, budget: int = 2, jobs: int = 1) -> VerifyReport:
    """Insertion and sliding are weight-transporting bijections onto the
    bounded (one-letter tableau, flagged recorder) pair sets."""
    ranges = {"max_rsk_size": max_rsk_size, "max_jdt_size": max_jdt_size,
              "max_value": n, "extra_entries": budget}
    rsk_items = [(mu, n, budget) for mu in partitions_up_to(max_rsk_size)]
    jdt_items = [(lam, n) for lam in partitions_up_to(max_jdt_size)]
    t0 = time.time()
    a = _run("lemma-rskjdt", ranges, _rsk_instance, rsk_items, jobs)
    b = _run("lemma-rskjdt", ranges, _jdt_instance, jdt_items, jobs)
    a.instances += b.instances
    a.failures.extend(b.failures)
    a.elapsed = time.time() - t0
    return a


# --- order-swap bijections ----------------------------------------------------


def _interleavings(n: int) -> list[TotalOrder]:
    """All total orders keeping 1<2<...<n within each of the two kinds."""
    unpr = [Letter(v, False) for v in range(1, n + 1)]
    prim = [Letter(v, True) for v in range(1, n + 1)]
    out = []
    for pos in combinations(range(2 * n), n):
        posset = set(pos)
        seq = []
        u = p = 0
        for k in range(2 * n):
            if k in posset:
                seq.append(unpr[u])
                u += 1
            else:
                seq.append(prim[p])
                p += 1
        out.append(TotalOrder(tuple(seq)))
    return out


def _order_distance(a: TotalOrder, b: TotalOrder) -> int:
    """Number of unprimed/primed pairs the two orders rank oppositely."""
    d = 0
    for u in a.sequence:
        if u.primed:
            continue
        for p in a.sequence:
            if not p.primed:
                continue
            if (a.position(u) < a.position(p)) != (b.position(u) < b.position(p)):
                d += 1
    return d


def _ordering_instance(args) -> tuple[int, list[str]]:
    """One skew shape: every order pair within the swap distance is checked
    elementwise by composing the (separately verified) single-swap maps.

    Tableaux are interned per order so a swap map becomes an index array;
    composing along the bubble path is then pure array chasing, which keeps
    the full sweep inside its time budget.
    """
    outer, inner, n, max_swaps = args
    shape = SkewShape(outer, inner)
    fails: list[str] = []
    orders = _interleavings(n)
    enums: dict[TotalOrder, tuple[list[Tableau], dict[Tableau, int], list]] = {}

    def tabs(o: TotalOrder):
        if o not in enums:
            ts = list(enum_PT_order(shape, o, n))
            index = {t: k for k, t in enumerate(ts)}
            wt = [(left_weight(t), right_weight(t)) for t in ts]
            enums[o] = (ts, index, wt)
        return enums[o]

    edge_maps: dict[tuple[TotalOrder, TotalOrder], list[int]] = {}

    def edge(a: TotalOrder, b: TotalOrder) -> list[int]:
        key = (a, b)
        if key in edge_maps:
            return edge_maps[key]
        i, j, up = _adjacent_swap_info(a, b)
        ta, index_a, wt_a = tabs(a)
        tb, index_b, wt_b = tabs(b)
        arr = []
        ok = len(ta) == len(tb)
        for k, t in enumerate(ta):
            # inputs come straight from the enumerator, so only the output
            # needs validating
            u = _apply_swap(t, i, j, up)
            if not validate_pt_order(u, b):
                fails.append(
                    f"swap output invalid under target order on {outer}/{inner}")
                ok = False
                break
            pos = index_b.get(u)
            if pos is None or wt_b[pos] != wt_a[k]:
                fails.append(
                    f"swap image or weight mismatch on {outer}/{inner}"
                    f" between {a.sequence} and {b.sequence}")
                ok = False
                break
            arr.append(pos)
        if ok and len(set(arr)) != len(tb):
            fails.append(
                f"single swap not a bijection on {outer}/{inner}"
                f" between {a.sequence} and {b.sequence}")
            ok = False
        edge_maps[key] = arr if ok else []
        return edge_maps[key]

    count = 0
    for a in orders:
        for b in orders:
            if a is b:
                continue
            if _order_distance(a, b) > max_swaps:
                continue
            path = swap_path(a, b)
            arrs = [edge(x, y) for x, y in zip(path, path[1:])]
            if any(not arr for arr in arrs):
                continue  # the broken edge is already reported
            _, _, wt_a = tabs(a)
            _, _, wt_b = tabs(b)
            image = set()
            for k in range(len(wt_a)):
                count += 1
                u = k
                for arr in arrs:
                    u = arr[u]
                image.add(u)
                if wt_b[u] != wt_a[k]:
                    fails.append(f"reorder changed a weight on {outer}/{inner}")
            if image != set(range(len(wt_b))):
                fails.append(
                    f"reorder not onto for {outer}/{inner}:"
                    f" {len(image)} images vs {len(wt_b)} targets")
    return count, fails


def verify_lemma_ordering(max_size: int = 5, n: int = 3,
                          max_swaps: int = 3, jobs: int = 1) -> VerifyReport:
    """reorder is a weight-preserving bijection between the one-letter tableau
    sets of any two orders within max_swaps adjacent cross-kind swaps."""
    ranges = {"max_size": max_size, "max_value": n, "max_swaps": max_swaps}
    items = []
    for lam in partitions_up_to(max_size):
        if not lam:
            continue
        for mu in subpartitions(lam):
            items.append((lam, mu, n, max_swaps))
    return _run("lemma-ordering", ranges, _ordering_instance, items, jobs)


# --- the prime-flip involution and superimposition ----------------------------


def _strict_flag_pairs(max_size: int):
    """(lam, mu) with mu strictly inside lam and equal row counts."""
    for lam in partitions_up_to(max_size):
        if not lam:
            continue
        for mu in subpartitions_same_rows(lam):
            if mu != lam:
                yield lam, mu


def _lemma_z_instance(args) -> tuple[int, list[str]]:
    lam, mu = args
    shape = SkewShape(lam, mu)
    fails: list[str] = []
    pfts = list(enum_PFT(shape))
    pft_set = set(pfts)
    signed: dict[tuple[int, ...], int] = {}
    for r in pfts:
        w = weight_add(left_weight(r), right_weight(r))
        sign = -1 if unprimed_count(r) % 2 else 1
        signed[w] = signed.get(w, 0) + sign
        img = iota(r)
        if img == r:
            fails.append(f"prime flip has a fixed point on {lam}/{mu}")
            continue
        if iota(img) != r:
            fails.append(f"prime flip is not an involution on {lam}/{mu}")
        if unprimed_count(img) % 2 == unprimed_count(r) % 2:
            fails.append(f"prime flip kept the sign on {lam}/{mu}")
        if weight_add(left_weight(img), right_weight(img)) != w:
            fails.append(f"prime flip changed the weight sum on {lam}/{mu}")
    if any(signed.values()):
        fails.append(f"signed weight sum nonzero on {lam}/{mu}: {signed}")
    overlay_count = 0
    for rho in subpartitions_same_rows(lam):
        if not contains(mu, rho):
            continue
        ps = list(enum_OFT(SkewShape(rho, mu)))
        qs = list(enum_UFT(SkewShape(lam, rho)))
        for p in ps:
            for q in qs:
                overlay_count += 1
                r = superimpose(p, q)
                if r not in pft_set:
                    fails.append(f"superimposition left the family on {lam}/{mu}")
                if split(r) != (p, q):
                    fails.append(f"split did not invert superimpose on {lam}/{mu}")
    if overlay_count != len(pfts):
        fails.append(
            f"superimposition cardinality mismatch on {lam}/{mu}:"
            f" {overlay_count} pairs vs {len(pfts)} tableaux")
    return len(pfts), fails


def verify_lemma_z(max_size: int = 6, jobs: int = 1) -> VerifyReport:
    """The prime flip is a sign-reversing, weight-sum-preserving involution on
    each primed flagged family, and superimpose/split is a bijection with the
    layered flagged pairs."""
    ranges = {"max_size": max_size}
    return _run("lemma-z", ranges, _lemma_z_instance,
                list(_strict_flag_pairs(max_size)), jobs)


def _fact2_instance(args) -> tuple[int, list[str]]:
    lam, mu = args
    total = ZPoly.zero()
    npairs = 0
    for rho in subpartitions_same_rows(lam):
        if not contains(mu, rho):
            continue
        zp: dict[tuple[int, ...], int] = {}
        for p in enum_OFT(SkewShape(rho, mu)):
            e = flag_weight(p)
            zp[e] = zp.get(e, 0) + 1
        zq: dict[tuple[int, ...], int] = {}
        for q in enum_UFT(SkewShape(lam, rho)):
            e = flag_weight(q)
            zq[e] = zq.get(e, 0) + 1
        npairs += sum(zp.values()) * sum(zq.values())
        sign = -1 if (sum(rho) - sum(mu)) % 2 else 1
        total = total + (ZPoly.from_map(zp) * ZPoly.from_map(zq)).scale(sign)
    fails = []
    if not total.is_zero():
        fails.append(f"signed pair sum nonzero on {lam}/{mu}: {total.to_text()}")
    return npairs, fails


def verify_fact2(max_size: int = 6, jobs: int = 1) -> VerifyReport:
    """The signed sum of z^wt(P) z^wt(Q) over layered flagged pairs vanishes
    for every strict containment with equal row counts."""
    ranges = {"max_size": max_size}
    return _run("fact2", ranges, _fact2_instance,
                list(_strict_flag_pairs(max_size)), jobs)


# --- the two dualities ---------------------------------------------------------


def _fact1_instance(lam) -> tuple[int, list[str]]:
    n = sum(lam)
    left = expand_schur_xy(pt_double_series(lam, n))
    right = expand_schur_xy(pt_double_series(lam, n, swapped=True))
    fails = []
    keys = set(left.support()) | set(
        (conjugate(a), conjugate(b)) for a, b in right.support())
    count = 0
    for mu, nu in keys:
        count += 1
        if left.coeff(mu, nu) != right.coeff(conjugate(mu), conjugate(nu)):
            fails.append(
                f"double expansion asymmetry at lam={lam}, (mu,nu)=({mu},{nu})")
    return count, fails


def verify_fact1(max_size: int = 4, jobs: int = 1) -> VerifyReport:
    """Conjugating both index partitions of the two-alphabet one-letter
    tableau sum equals exchanging the alphabets, coefficient by coefficient."""
    ranges = {"max_size": max_size, "n_vars": "size of the shape"}
    return _run("fact1", ranges, _fact1_instance,
                list(partitions_up_to(max_size)), jobs)


def _duo1_instance(lam) -> tuple[int, list[str]]:
    d = sum(lam) + 2
    n = d
    trunc = Truncation(n, 0, max(d, 1), d)
    fails = []
    count = 0
    for b_var, a_var in (("1B", "1A"), ("2B", "2A")):
        eb = expand_schur(refined(b_var, lam, trunc))
        ea = expand_schur(refined(a_var, conjugate(lam), trunc))
        web = omega(eb)
        for p in set(web.support()) | set(ea.support()):
            count += 1
            if web.coeff(p) != ea.coeff(p):
                fails.append(
                    f"conjugation duality broke for {b_var}->{a_var}"
                    f" at lam={lam}, s_{p}")
    return count, fails


def verify_duo1(max_size: int = 4, jobs: int = 1) -> VerifyReport:
    """The Schur-index conjugation involution carries each B variant to the A
    variant at the conjugate shape, on expansions truncated past the shape."""
    ranges = {"max_size": max_size, "extra_degree": 2}
    return _run("duo1", ranges, _duo1_instance,
                list(partitions_up_to(max_size)), jobs)


def _duo2_instance(args) -> tuple[int, list[str]]:
    mu, lam, max_size = args
    fails = []
    expected = ZPoly.one() if mu == lam else ZPoly.zero()
    for conj, name in ((False, "B"), (True, "A")):
        g = schur_expansion_via_flags(mu, "G", conjugated=conj, cap=max_size)
        gd = schur_expansion_via_flags(lam, "Gdual", conjugated=conj)
        got = hall_pair(g, gd)
        if got != expected:
            fails.append(
                f"pairing of {name} variants at (mu,lam)=({mu},{lam})"
                f" gave {got.to_text()}")
    return 2, fails


def verify_duo2(max_size: int = 4, jobs: int = 1) -> VerifyReport:
    """Under the pairing with orthonormal Schur basis, the two polynomial
    families are exactly dual: the Gram matrix is the identity over Z[z]."""
    ranges = {"max_size": max_size}
    parts = list(partitions_up_to(max_size))
    items = [(mu, lam, max_size) for mu in parts for lam in parts]
    return _run("duo2", ranges, _duo2_instance, items, jobs)


VERIFIERS = {
    "fact1": verify_fact1,
    "fact2": verify_fact2,
    "duo1": verify_duo1,
    "duo2": verify_duo2,
    "lemma-rskjdt": verify_lemma_rskjdt,
    "lemma-ordering": verify_lemma_ordering,
    "lemma-z": verify_lemma_z,
}
