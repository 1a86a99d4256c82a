"""Exact rational interval arithmetic and interval-Newton certification.

Endpoints are Fractions, so every enclosure is rigorous with no rounding
model; `dyadic_round` is available to cap endpoint bit growth (outward).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .realpoly import RealPolynomial


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    @staticmethod
    def make(a, b) -> "Interval":
        a, b = Fraction(a), Fraction(b)
        return Interval(min(a, b), max(a, b))

    def width(self) -> Fraction:
        return self.hi - self.lo

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def strictly_positive(self) -> bool:
        return self.lo > 0

    def strictly_negative(self) -> bool:
        return self.hi < 0

    def sign(self) -> Optional[int]:
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def subset_interior(self, other: "Interval") -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __add__(self, other):
        o = _coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        o = _coerce(other)
        c = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(c), max(c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o.contains_zero():
            raise ZeroDivisionError("interval division by interval containing zero")
        c = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(min(c), max(c))

    def power(self, k: int) -> "Interval":
        if k == 0:
            return Interval.point(1)
        if k == 1:
            return self
        if k % 2 == 1 or self.lo >= 0:
            return Interval(self.lo ** k, self.hi ** k)
        if self.hi <= 0:
            return Interval(self.hi ** k, self.lo ** k)
        return Interval(Fraction(0), max(self.lo ** k, self.hi ** k))

    def dyadic_round(self, bits: int = 64) -> "Interval":
        """Outward rounding of both endpoints to denominator 2^bits."""
        scale = 1 << bits
        lo = Fraction((self.lo * scale).__floor__(), scale)
        hi = Fraction(-((-self.hi * scale).__floor__()), scale)
        return Interval(lo, hi)

    def __repr__(self):
        return f"Interval({self.lo}, {self.hi})"


def _coerce(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(Fraction(x))


class BoxEvaluator:
    """Interval evaluation of a fixed RealPolynomial over rational boxes."""

    def __init__(self, p: RealPolynomial):
        self.vars = p.variables
        self.terms = list(p.terms.items())
        self.max_deg = [0] * len(self.vars)
        for e, _ in self.terms:
            for i, k in enumerate(e):
                if k > self.max_deg[i]:
                    self.max_deg[i] = k

    def eval(self, box: Sequence[Interval]) -> Interval:
        powers: List[List[Interval]] = []
        for i, iv in enumerate(box):
            row = [Interval.point(1)]
            for k in range(1, self.max_deg[i] + 1):
                row.append(iv.power(k))
            powers.append(row)
        lo = Fraction(0)
        hi = Fraction(0)
        for e, c in self.terms:
            t = Interval.point(c)
            for i, k in enumerate(e):
                if k:
                    t = t * powers[i][k]
            lo += t.lo
            hi += t.hi
        return Interval(lo, hi)


@dataclass
class NewtonResult:
    status: str          # "unique" | "empty" | "unknown"
    box: Optional[Tuple[Interval, Interval]] = None


class NewtonSystem2:
    """Interval Newton operator for a 2x2 polynomial system in named variables."""

    def __init__(self, f1: RealPolynomial, f2: RealPolynomial, names: Tuple[str, str]):
        self.names = names
        self.f1 = f1
        self.f2 = f2
        self.e_f1 = BoxEvaluator(f1)
        self.e_f2 = BoxEvaluator(f2)
        self.e_j = [[BoxEvaluator(f.derivative(n)) for n in names] for f in (f1, f2)]
        self.var_index = [f1.variables.index(n) for n in names]
        self.n_all = len(f1.variables)

    def _full_box(self, box2: Tuple[Interval, Interval],
                  fixed: Sequence[Interval]) -> List[Interval]:
        out = list(fixed)
        for idx, iv in zip(self.var_index, box2):
            out[idx] = iv
        return out

    def newton_step(self, box2: Tuple[Interval, Interval],
                    fixed: Sequence[Interval]) -> NewtonResult:
        """One interval Newton contraction test over box2 (other vars from `fixed`)."""
        full = self._full_box(box2, fixed)
        j11 = self.e_j[0][0].eval(full)
        j12 = self.e_j[0][1].eval(full)
        j21 = self.e_j[1][0].eval(full)
        j22 = self.e_j[1][1].eval(full)
        det = j11 * j22 - j12 * j21
        if det.contains_zero():
            return NewtonResult("unknown")
        mx, my = box2[0].mid(), box2[1].mid()
        mid_full = self._full_box((Interval.point(mx), Interval.point(my)), fixed)
        f1m = self.e_f1.eval(mid_full)
        f2m = self.e_f2.eval(mid_full)
        nx = Interval.point(mx) - (j22 * f1m - j12 * f2m) / det
        ny = Interval.point(my) - (j11 * f2m - j21 * f1m) / det
        if nx.subset_interior(box2[0]) and ny.subset_interior(box2[1]):
            return NewtonResult("unique", (nx, ny))
        if not nx.intersects(box2[0]) or not ny.intersects(box2[1]):
            return NewtonResult("empty")
        try:
            ix = Interval(max(nx.lo, box2[0].lo), min(nx.hi, box2[0].hi))
            iy = Interval(max(ny.lo, box2[1].lo), min(ny.hi, box2[1].hi))
            return NewtonResult("unknown", (ix, iy))
        except ValueError:
            return NewtonResult("empty")

    def certify(self, box2: Tuple[Interval, Interval],
                fixed: Sequence[Interval], max_iter: int = 60,
                width_floor: Fraction = Fraction(1, 1 << 60)) -> NewtonResult:
        """Iterate Newton contraction until unique/empty or the width floor."""
        cur = box2
        for _ in range(max_iter):
            res = self.newton_step(cur, fixed)
            if res.status in ("unique", "empty"):
                return res
            if res.box is not None:
                nxt = (res.box[0].dyadic_round(80), res.box[1].dyadic_round(80))
                if (nxt[0].width() >= cur[0].width() * Fraction(15, 16)
                        and nxt[1].width() >= cur[1].width() * Fraction(15, 16)):
                    # not contracting: bisect the wider direction
                    bi = 0 if cur[0].width() >= cur[1].width() else 1
                    if cur[bi].width() < width_floor:
                        return NewtonResult("unknown", cur)
                    lo, hi = cur[bi].lo, cur[bi].hi
                    mid = (lo + hi) / 2
                    halves = []
                    for part in (Interval(lo, mid), Interval(mid, hi)):
                        sub = list(cur)
                        sub[bi] = part
                        halves.append(tuple(sub))
                    results = [self.certify(hb, fixed, max_iter // 2, width_floor)
                               for hb in halves]
                    uniques = [r for r in results if r.status == "unique"]
                    if len(uniques) == 1 and all(r.status in ("unique", "empty") for r in results):
                        return uniques[0]
                    if all(r.status == "empty" for r in results):
                        return NewtonResult("empty")
                    return NewtonResult("unknown", cur)
                cur = nxt
            else:
                return NewtonResult("unknown", cur)
        return NewtonResult("unknown", cur)
