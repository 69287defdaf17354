"""Sparse exact-integer series in three variable families x, y, z, plus the
tableau generating functions for the symmetric and dual polynomials and their
four refined variants.

Truncation bounds the combined x,y total degree by D and the variable counts
by (n_x, n_y); z exponents are never truncated since they are structurally
bounded once the x,y degree is (by D - |shape| for the overfull sum and by
|shape| for the underfull one).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Tableau, left_weight, overweight, right_weight, underweight
from .enumeration import EnumBounds, enum_OT, enum_UT
from .shapes import Part, check_partition, conjugate, strip_zeros

Monomial = tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

INF = None  # spelled-out "no degree bound"


@dataclass(frozen=True)
class Truncation:
    """Variable counts for x, y, z and a combined x,y total degree bound."""

    n_x: int
    n_y: int
    n_z: int
    max_degree: int | None = None

    def __post_init__(self):
        if min(self.n_x, self.n_y, self.n_z) < 0:
            raise ValueError("variable counts must be nonnegative")
        if self.max_degree is not None and self.max_degree < 0:
            raise ValueError("degree bound must be nonnegative")

    def admits(self, m: Monomial) -> bool:
        xe, ye, ze = m
        if len(xe) > self.n_x or len(ye) > self.n_y or len(ze) > self.n_z:
            return False
        return self.max_degree is None or sum(xe) + sum(ye) <= self.max_degree

    def meet(self, other: "Truncation") -> "Truncation":
        if (self.n_x, self.n_y, self.n_z) != (other.n_x, other.n_y, other.n_z):
            raise ValueError("incompatible variable counts")
        if self.max_degree is None:
            d = other.max_degree
        elif other.max_degree is None:
            d = self.max_degree
        else:
            d = min(self.max_degree, other.max_degree)
        return Truncation(self.n_x, self.n_y, self.n_z, d)


def monomial(xe=(), ye=(), ze=()) -> Monomial:
    m = (strip_zeros(xe), strip_zeros(ye), strip_zeros(ze))
    if any(e < 0 for part in m for e in part):
        raise ValueError(f"negative exponent in {m}")
    return m


def _grlex_key(m: Monomial):
    # graded order; within a degree, earlier variables raised to higher
    # powers come first (x1 before x2)
    xe, ye, ze = m
    total = sum(xe) + sum(ye) + sum(ze)
    neg = lambda e: tuple(-v for v in e)
    return (total, neg(xe), neg(ye), neg(ze))


@dataclass(frozen=True)
class Series:
    """Sparse integer series; terms map monomials to nonzero coefficients."""

    terms: tuple[tuple[Monomial, int], ...]
    trunc: Truncation

    def __post_init__(self):
        canon = tuple(sorted(
            ((m, c) for m, c in self.terms if c and self.trunc.admits(m)),
            key=lambda t: _grlex_key(t[0])))
        object.__setattr__(self, "terms", canon)
        object.__setattr__(self, "_map", dict(canon))

    @classmethod
    def from_map(cls, terms: dict[Monomial, int], trunc: Truncation) -> "Series":
        return cls(tuple(terms.items()), trunc)

    @classmethod
    def zero(cls, trunc: Truncation) -> "Series":
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: Truncation) -> "Series":
        return cls(((monomial(), 1),), trunc)

    @classmethod
    def var(cls, family: str, index: int, trunc: Truncation) -> "Series":
        e = (0,) * (index - 1) + (1,)
        slot = {"x": 0, "y": 1, "z": 2}[family]
        parts = [(), (), ()]
        parts[slot] = e
        return cls(((monomial(*parts), 1),), trunc)

    def coeff(self, m: Monomial) -> int:
        return self._map.get(m, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Series") -> "Series":
        trunc = self.trunc.meet(other.trunc)
        acc = dict(self._map)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return Series.from_map(acc, trunc)

    def __neg__(self) -> "Series":
        return Series(tuple((m, -c) for m, c in self.terms), self.trunc)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, k: int) -> "Series":
        return Series(tuple((m, k * c) for m, c in self.terms), self.trunc)

    def __mul__(self, other: "Series") -> "Series":
        trunc = self.trunc.meet(other.trunc)
        acc: dict[Monomial, int] = {}
        for (xa, ya, za), ca in self.terms:
            for (xb, yb, zb), cb in other.terms:
                m = (_exp_add(xa, xb), _exp_add(ya, yb), _exp_add(za, zb))
                if not trunc.admits(m):
                    continue
                acc[m] = acc.get(m, 0) + ca * cb
        return Series.from_map(acc, trunc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def subs_z_one(self) -> "Series":
        """Set every z variable to 1, collapsing z exponents."""
        acc: dict[Monomial, int] = {}
        for (xe, ye, _), c in self.terms:
            m = (xe, ye, ())
            acc[m] = acc.get(m, 0) + c
        return Series.from_map(acc, self.trunc)

    def homogeneous_part(self, degree: int) -> "Series":
        """Terms of combined x,y total degree exactly `degree` (z ignored)."""
        kept = tuple((m, c) for m, c in self.terms
                     if sum(m[0]) + sum(m[1]) == degree)
        return Series(kept, self.trunc)

    def swap_xy(self) -> "Series":
        """Exchange the x and y exponent slots."""
        if self.trunc.n_x != self.trunc.n_y:
            raise ValueError("swap requires equal x and y variable counts")
        return Series(tuple(((ye, xe, ze), c) for (xe, ye, ze), c in self.terms),
                      self.trunc)

    def apply_x_transposition(self, i: int) -> "Series":
        """Swap x_i and x_{i+1}; used to check symmetry."""
        acc: dict[Monomial, int] = {}
        for (xe, ye, ze), c in self.terms:
            e = list(xe) + [0] * (i + 1 - len(xe))
            e[i - 1], e[i] = e[i], e[i - 1]
            m = (strip_zeros(e), ye, ze)
            acc[m] = acc.get(m, 0) + c
        return Series.from_map(acc, self.trunc)

    def is_symmetric_x(self) -> bool:
        return all(self.apply_x_transposition(i) == self
                   for i in range(1, self.trunc.n_x))

    def is_symmetric_y(self) -> bool:
        flipped = Series(
            tuple(((ye, xe, ze), c) for (xe, ye, ze), c in self.terms),
            Truncation(self.trunc.n_y, self.trunc.n_x, self.trunc.n_z,
                       self.trunc.max_degree))
        return flipped.is_symmetric_x()

    # --- rendering ---------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            body = _render_monomial(m, latex=False)
            parts.append(_join_coeff(c, body, first=not parts, latex=False))
        return "".join(parts)

    def to_latex(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            body = _render_monomial(m, latex=True)
            parts.append(_join_coeff(c, body, first=not parts, latex=True))
        return "".join(parts)

    def to_json_obj(self) -> list[dict]:
        return [{"xe": list(xe), "ye": list(ye), "ze": list(ze), "c": c}
                for (xe, ye, ze), c in self.terms]


def _exp_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b + (0,) * (len(a) - len(b))))


def _render_monomial(m: Monomial, latex: bool) -> str:
    xe, ye, ze = m
    out = []
    for name, vec in (("z", ze), ("x", xe), ("y", ye)):
        for i, e in enumerate(vec, start=1):
            if e == 0:
                continue
            if latex:
                var = f"{name}_{{{i}}}" if i > 9 else f"{name}_{i}"
                out.append(var if e == 1 else f"{var}^{{{e}}}" if e > 9 else f"{var}^{e}")
            else:
                out.append(f"{name}{i}" if e == 1 else f"{name}{i}^{e}")
    return ("" if latex else "*").join(out) if out else "1"


def _join_coeff(c: int, body: str, first: bool, latex: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    if body == "1":
        core = str(mag)
    elif mag == 1:
        core = body
    else:
        core = f"{mag}{body}" if latex else f"{mag}*{body}"
    return sign + core


# --- tableau generating functions -------------------------------------------

def groth(lam, trunc: Truncation) -> Series:
    """Signed sum of x^lw y^rw z^O over overfull tableaux of straight shape lam."""
    lam = check_partition(lam)
    if trunc.max_degree is None:
        raise ValueError("the overfull sum is infinite without a degree bound")
    budget = trunc.max_degree - sum(lam)
    if budget < 0:
        return Series.zero(trunc)
    bounds = EnumBounds(
        max(trunc.n_x, trunc.n_y), budget,
        max_unprimed=trunc.n_x, max_primed=trunc.n_y)
    acc: dict[Monomial, int] = {}
    for t in enum_OT(lam, bounds):
        ow = overweight(t)
        m = (left_weight(t), right_weight(t), ow)
        if not trunc.admits(m):
            continue
        sign = -1 if sum(ow) % 2 else 1
        acc[m] = acc.get(m, 0) + sign
    return Series.from_map(acc, trunc)


def groth_dual(lam, trunc: Truncation) -> Series:
    """Sum of x^lw y^rw z^U over underfull tableaux of straight shape lam."""
    lam = check_partition(lam)
    bounds = EnumBounds(
        max(trunc.n_x, trunc.n_y), 0,
        max_unprimed=trunc.n_x, max_primed=trunc.n_y)
    acc: dict[Monomial, int] = {}
    for t in enum_UT(lam, bounds):
        m = (left_weight(t), right_weight(t), underweight(t))
        if not trunc.admits(m):
            continue
        acc[m] = acc.get(m, 0) + 1
    return Series.from_map(acc, trunc)


VARIANTS = ("1A", "1B", "2A", "2B")


def refined(variant: str, lam, trunc: Truncation, z_one: bool = False) -> Series:
    """The four single-alphabet polynomials.

    1A: overfull sum at the conjugate shape with x set to zero, the surviving
    y alphabet relabeled x.  1B: overfull sum with y set to zero.  2A and 2B
    are the underfull counterparts.  z_one collapses z to 1 (the nonrefined
    versions).
    """
    lam = check_partition(lam)
    n = trunc.n_x
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if variant in ("1A", "2A"):
        inner = Truncation(0, n, trunc.n_z, trunc.max_degree)
        base = groth(conjugate(lam), inner) if variant == "1A" else \
            groth_dual(conjugate(lam), inner)
        out = Truncation(n, 0, trunc.n_z, trunc.max_degree)
        s = Series(tuple(((ye, (), ze), c) for ((_, ye, ze), c) in base.terms), out)
    else:
        inner = Truncation(n, 0, trunc.n_z, trunc.max_degree)
        s = groth(lam, inner) if variant == "1B" else groth_dual(lam, inner)
    return s.subs_z_one() if z_one else s
