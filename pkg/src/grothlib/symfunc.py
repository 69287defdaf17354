"""Schur polynomials, Schur-basis expansion with z-polynomial coefficients,
the omega involution, the Hall pairing, and the flag-based expansions that
make the two duality statements finitely checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Tableau, flag_weight, left_weight, right_weight
from .enumeration import enum_OFT, enum_PT, enum_UFT
from .series import Monomial, Series, Truncation, monomial
from .shapes import (
    Part,
    SkewShape,
    check_partition,
    conjugate,
    strip_zeros,
    subpartitions_same_rows,
    superpartitions_same_rows,
)

ZExp = tuple[int, ...]


@dataclass(frozen=True)
class ZPoly:
    """Integer polynomial in the z variables; exponents are stripped tuples."""

    terms: tuple[tuple[ZExp, int], ...]

    def __post_init__(self):
        canon = tuple(sorted(
            ((strip_zeros(e), c) for e, c in self.terms if c)))
        merged: dict[ZExp, int] = {}
        for e, c in canon:
            merged[e] = merged.get(e, 0) + c
        object.__setattr__(self, "terms", tuple(
            sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_map(cls, m: dict[ZExp, int]) -> "ZPoly":
        return cls(tuple(m.items()))

    @classmethod
    def zero(cls) -> "ZPoly":
        return cls(())

    @classmethod
    def one(cls) -> "ZPoly":
        return cls((((), 1),))

    @classmethod
    def const(cls, c: int) -> "ZPoly":
        return cls((((), c),))

    @classmethod
    def z_monomial(cls, e, c: int = 1) -> "ZPoly":
        return cls(((tuple(e), c),))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "ZPoly") -> "ZPoly":
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return ZPoly.from_map(acc)

    def __neg__(self) -> "ZPoly":
        return ZPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "ZPoly") -> "ZPoly":
        return self + (-other)

    def __mul__(self, other: "ZPoly") -> "ZPoly":
        acc: dict[ZExp, int] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                a, b = (ea, eb) if len(ea) >= len(eb) else (eb, ea)
                e = tuple(x + y for x, y in zip(a, b + (0,) * (len(a) - len(b))))
                acc[e] = acc.get(e, 0) + ca * cb
        return ZPoly.from_map(acc)

    def scale(self, k: int) -> "ZPoly":
        return ZPoly(tuple((e, k * c) for e, c in self.terms))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.terms:
            body = "*".join(
                (f"z{i}" if p == 1 else f"z{i}^{p}")
                for i, p in enumerate(e, start=1) if p)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else ("+" if out else "")
            out.append(sign + piece)
        return "".join(out)

    def to_json_obj(self) -> list[dict]:
        return [{"e": list(e), "c": c} for e, c in self.terms]


def zpoly_from_json(data: list[dict]) -> ZPoly:
    return ZPoly(tuple((tuple(int(x) for x in d["e"]), int(d["c"])) for d in data))


@dataclass(frozen=True)
class SchurExpansion:
    """A finitely supported map partition -> ZPoly in a single alphabet."""

    terms: tuple[tuple[Part, ZPoly], ...]
    alphabet: str
    n: int

    def __post_init__(self):
        if self.alphabet not in ("x", "y"):
            raise ValueError("alphabet must be 'x' or 'y'")
        canon = tuple(sorted(
            ((check_partition(p), z) for p, z in self.terms if not z.is_zero()),
            key=lambda t: (sum(t[0]), t[0])))
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_map", dict(canon))

    @classmethod
    def from_map(cls, terms: dict[Part, ZPoly], alphabet: str, n: int) -> "SchurExpansion":
        return cls(tuple(terms.items()), alphabet, n)

    def coeff(self, p) -> ZPoly:
        return self._map.get(check_partition(p), ZPoly.zero())

    def support(self) -> tuple[Part, ...]:
        return tuple(p for p, _ in self.terms)

    def restrict(self, keep) -> "SchurExpansion":
        keep = set(check_partition(p) for p in keep)
        return SchurExpansion(
            tuple((p, z) for p, z in self.terms if p in keep), self.alphabet, self.n)

    def to_json_obj(self) -> dict:
        return {
            "basis": "schur",
            "alphabet": self.alphabet,
            "terms": [{"partition": list(p), "z": z.to_json_obj()}
                      for p, z in self.terms],
        }


def schur_expansion_from_json(data: dict) -> SchurExpansion:
    terms = tuple(
        (tuple(int(x) for x in t["partition"]), zpoly_from_json(t["z"]))
        for t in data["terms"])
    return SchurExpansion(terms, data.get("alphabet", "x"), int(data.get("n", 0)))


@dataclass(frozen=True)
class DoubleSchurExpansion:
    """Map (partition, partition) -> ZPoly over the basis s_mu(x) s_nu(y)."""

    terms: tuple[tuple[tuple[Part, Part], ZPoly], ...]
    n_x: int
    n_y: int

    def __post_init__(self):
        canon = tuple(sorted(
            (((check_partition(a), check_partition(b)), z)
             for (a, b), z in self.terms if not z.is_zero()),
            key=lambda t: (sum(t[0][0]) + sum(t[0][1]), t[0])))
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_map", dict(canon))

    def coeff(self, mu, nu) -> ZPoly:
        return self._map.get((check_partition(mu), check_partition(nu)), ZPoly.zero())

    def support(self) -> tuple[tuple[Part, Part], ...]:
        return tuple(k for k, _ in self.terms)


# --- Schur polynomials --------------------------------------------------------

def _ssyt_weights(shape: SkewShape, n: int) -> Iterator[tuple[int, ...]]:
    """Weights of semistandard fillings (rows weak, columns strict) <= n."""
    cells = list(shape.cells())
    fill: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> Iterator[tuple[int, ...]]:
        if idx == len(cells):
            counts: dict[int, int] = {}
            for v in fill.values():
                counts[v] = counts.get(v, 0) + 1
            yield strip_zeros(tuple(counts.get(i, 0) for i in range(1, n + 1)))
            return
        r, c = cells[idx]
        lo = 1
        if (r, c - 1) in fill:
            lo = max(lo, fill[(r, c - 1)])
        if (r - 1, c) in fill:
            lo = max(lo, fill[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            fill[(r, c)] = v
            yield from rec(idx + 1)
            del fill[(r, c)]

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_poly(lam: Part, n: int, alphabet: str = "x") -> Series:
    """Schur polynomial in n variables as the semistandard generating function."""
    lam = check_partition(lam)
    if alphabet == "x":
        trunc = Truncation(n, 0, 0, None)
        slot = 0
    else:
        trunc = Truncation(0, n, 0, None)
        slot = 1
    acc: dict[Monomial, int] = {}
    for w in _ssyt_weights(SkewShape(lam, ()), n):
        parts = [(), (), ()]
        parts[slot] = w
        m = (parts[0], parts[1], parts[2])
        acc[m] = acc.get(m, 0) + 1
    return Series.from_map(acc, trunc)


def skew_schur_poly(shape: SkewShape, n: int, alphabet: str = "x") -> Series:
    """Skew Schur polynomial; an independent oracle for LR-type checks."""
    slot = 0 if alphabet == "x" else 1
    trunc = Truncation(n, 0, 0, None) if slot == 0 else Truncation(0, n, 0, None)
    acc: dict[Monomial, int] = {}
    for w in _ssyt_weights(shape, n):
        parts = [(), (), ()]
        parts[slot] = w
        m = (parts[0], parts[1], parts[2])
        acc[m] = acc.get(m, 0) + 1
    return Series.from_map(acc, trunc)


# --- expansion ----------------------------------------------------------------

class ExpansionError(ValueError):
    """Input not symmetric, or leading-term elimination failed to terminate."""


def _exp_slot(alphabet: str) -> int:
    return 0 if alphabet == "x" else 1


def _pad(e: tuple[int, ...], n: int) -> tuple[int, ...]:
    return e + (0,) * (n - len(e))


def expand_schur(f: Series, alphabet: str = "x") -> SchurExpansion:
    """Write a symmetric polynomial as a Schur-basis combination with ZPoly
    coefficients by repeated leading-monomial elimination.

    The lexicographically greatest exponent of a symmetric polynomial is
    weakly decreasing, and the Schur polynomial of that partition is monic
    there, so subtracting coefficient * schur strictly shrinks the leader.
    """
    slot = _exp_slot(alphabet)
    other = 1 - slot
    n = (f.trunc.n_x, f.trunc.n_y)[slot]
    if any(m[other] for m, _ in f.terms):
        raise ExpansionError(f"series involves the non-{alphabet} alphabet")
    sym = f.is_symmetric_x() if alphabet == "x" else f.is_symmetric_y()
    if not sym:
        raise ExpansionError(f"series not symmetric in the {alphabet} alphabet")

    work: dict[tuple[tuple[int, ...], ZExp], int] = {
        (m[slot], m[2]): c for m, c in f.terms}
    out: dict[Part, ZPoly] = {}
    prev_lead: tuple[int, ...] | None = None
    while work:
        lead = max(_pad(e, n) for (e, _) in work)
        if prev_lead is not None and lead >= prev_lead:
            raise ExpansionError("leading term failed to decrease")
        prev_lead = lead
        rho = strip_zeros(lead)
        if any(rho[i] < rho[i + 1] for i in range(len(rho) - 1)):
            raise ExpansionError(f"leading exponent {rho} is not a partition")
        coeff = ZPoly.from_map({
            ze: c for (e, ze), c in work.items() if _pad(e, n) == lead})
        out[rho] = out.get(rho, ZPoly.zero()) + coeff
        s = schur_poly(rho, n, "x")
        for (se, _, _), sc in s.terms:
            for ze, zc in coeff.terms:
                key = (se, ze)
                work[key] = work.get(key, 0) - sc * zc
                if work[key] == 0:
                    del work[key]
    return SchurExpansion.from_map(out, alphabet, n)


def expand_schur_xy(f: Series) -> DoubleSchurExpansion:
    """Expand a doubly symmetric series over the basis s_mu(x) s_nu(y)."""
    if not f.is_symmetric_x():
        raise ExpansionError("series not symmetric in the x alphabet")
    if not f.is_symmetric_y():
        raise ExpansionError("series not symmetric in the y alphabet")
    n_x, n_y = f.trunc.n_x, f.trunc.n_y

    # expand in x first; coefficients are (y,z)-series
    work: dict[Monomial, int] = {m: c for m, c in f.terms}
    by_mu: dict[Part, dict[tuple[tuple[int, ...], ZExp], int]] = {}
    prev_lead = None
    while work:
        lead = max(_pad(m[0], n_x) for m in work)
        if prev_lead is not None and lead >= prev_lead:
            raise ExpansionError("leading term failed to decrease")
        prev_lead = lead
        mu = strip_zeros(lead)
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise ExpansionError(f"leading x-exponent {mu} is not a partition")
        coeff = {(m[1], m[2]): c for m, c in work.items() if _pad(m[0], n_x) == lead}
        acc = by_mu.setdefault(mu, {})
        for k, c in coeff.items():
            acc[k] = acc.get(k, 0) + c
        s = schur_poly(mu, n_x, "x")
        for (se, _, _), sc in s.terms:
            for (ye, ze), c in coeff.items():
                key = (se, ye, ze)
                work[key] = work.get(key, 0) - sc * c
                if work[key] == 0:
                    del work[key]

    # then expand every x-coefficient in y
    out: dict[tuple[Part, Part], ZPoly] = {}
    for mu, coeff in by_mu.items():
        sub = Series.from_map(
            {((), ye, ze): c for (ye, ze), c in coeff.items()},
            Truncation(0, n_y, f.trunc.n_z, None))
        inner = expand_schur(sub, "y")
        for nu, z in inner.terms:
            key = (mu, nu)
            out[key] = out.get(key, ZPoly.zero()) + z
    return DoubleSchurExpansion(tuple(out.items()), n_x, n_y)


def build_series(e: SchurExpansion, n_z: int = 0) -> Series:
    """Inverse direction of expand_schur: assemble sum coeff * schur."""
    nz = n_z or max(
        (len(ze) for _, z in e.terms for ze, _ in z.terms), default=0)
    slot = _exp_slot(e.alphabet)
    trunc = Truncation(e.n, 0, nz, None) if slot == 0 else Truncation(0, e.n, nz, None)
    acc: dict[Monomial, int] = {}
    for p, z in e.terms:
        s = schur_poly(p, e.n, e.alphabet)
        for m, sc in s.terms:
            for ze, zc in z.terms:
                key = (m[0], m[1], ze)
                acc[key] = acc.get(key, 0) + sc * zc
    return Series.from_map(acc, trunc)


# --- omega and the Hall pairing ------------------------------------------------

def omega(e: SchurExpansion) -> SchurExpansion:
    """Conjugate every index partition; coefficients unchanged."""
    terms = tuple((conjugate(p), z) for p, z in e.terms)
    new_n = max((p[0] for p, _ in e.terms if p), default=e.n)
    return SchurExpansion(terms, e.alphabet, max(new_n, 1))


def hall_pair(a: SchurExpansion, b: SchurExpansion) -> ZPoly:
    """Bilinear pairing with the Schur basis orthonormal over Z[z]."""
    if a.alphabet != b.alphabet:
        raise ValueError("pairing requires a common alphabet")
    out = ZPoly.zero()
    for p, z in a.terms:
        zb = b.coeff(p)
        if not zb.is_zero():
            out = out + z * zb
    return out


# --- flag-based expansions ------------------------------------------------------

def _flag_zpoly(tabs: Iterator[Tableau]) -> ZPoly:
    acc: dict[ZExp, int] = {}
    for t in tabs:
        e = flag_weight(t)
        acc[e] = acc.get(e, 0) + 1
    return ZPoly.from_map(acc)


def schur_expansion_via_flags(shape, which: str, conjugated: bool = False,
                              cap: int | None = None, n: int | None = None) -> SchurExpansion:
    """Schur expansion read off the flagged recording tableaux.

    which='G': coefficient of s_rho (rho >= the given shape, same row count,
    |rho| <= cap) is (-1)^{|rho|-|shape|} times the weight sum over the over
    flagged tableaux of rho/shape; an infinite expansion truncated at cap.
    which='Gdual': coefficient of s_sigma (sigma <= shape, same row count) is
    the weight sum over under flagged tableaux of shape/sigma; exact.
    conjugated=True reindexes every partition by its conjugate.
    """
    base = check_partition(shape)
    out: dict[Part, ZPoly] = {}
    if which == "G":
        if cap is None:
            raise ValueError("the 'G' expansion is infinite; a size cap is required")
        for rho in superpartitions_same_rows(base, cap):
            z = _flag_zpoly(enum_OFT(SkewShape(rho, base)))
            if z.is_zero():
                continue
            sign = -1 if (sum(rho) - sum(base)) % 2 else 1
            out[rho] = z.scale(sign)
    elif which == "Gdual":
        for sigma in subpartitions_same_rows(base):
            z = _flag_zpoly(enum_UFT(SkewShape(base, sigma)))
            if not z.is_zero():
                out[sigma] = z
        if not base:
            out[()] = ZPoly.one()
    else:
        raise ValueError("which must be 'G' or 'Gdual'")
    if conjugated:
        out = {conjugate(p): z for p, z in out.items()}
    if n is None:
        n = max((len(p) for p in out), default=1)
    return SchurExpansion.from_map(out, "x", n)


# --- the two-alphabet primed-tableau sum ----------------------------------------

def pt_double_series(lam, n: int, swapped: bool = False) -> Series:
    """Sum of x^lw y^rw (or y^lw x^rw when swapped) over primed tableaux."""
    lam = check_partition(lam)
    trunc = Truncation(n, n, 0, None)
    acc: dict[Monomial, int] = {}
    for t in enum_PT(lam, n):
        lw, rw = left_weight(t), right_weight(t)
        m = (rw, lw, ()) if swapped else (lw, rw, ())
        acc[m] = acc.get(m, 0) + 1
    return Series.from_map(acc, trunc)
