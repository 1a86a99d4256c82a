"""Certified real root isolation for univariate rational polynomials.

Sturm sequences over Z with primitive pseudo-remainders; evaluation uses
homogenized integer Horner so only integer signs are ever inspected.
Intervals are half-open on the left: a root interval (lo, hi] contains
exactly one real root, and intervals are pairwise disjoint and refinable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import List, Optional, Sequence, Tuple

from .realpoly import RealPolynomial

IntPoly = List[int]  # dense ascending integer coefficients


def to_int_poly(coeffs: Sequence[Fraction]) -> IntPoly:
    den = 1
    for c in coeffs:
        c = Fraction(c)
        den = den * c.denominator // int_gcd(den, c.denominator)
    out = [int(Fraction(c) * den) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def from_real_poly(p: RealPolynomial, name: str) -> IntPoly:
    return to_int_poly(p.to_dense(name))


def ip_content(p: IntPoly) -> int:
    g = 0
    for c in p:
        g = int_gcd(g, c)
        if g == 1:
            return 1
    return g


def ip_primitive(p: IntPoly) -> IntPoly:
    g = ip_content(p)
    if g in (0, 1):
        return list(p)
    return [c // g for c in p]


def ip_deriv(p: IntPoly) -> IntPoly:
    return [i * c for i, c in enumerate(p) if i]


def ip_eval_sign(p: IntPoly, x: Fraction) -> int:
    """Sign of p(x) for rational x, computed in integers."""
    if not p:
        return 0
    a, b = x.numerator, x.denominator
    # homogenized Horner: p(a/b) * b^deg = sum c_i a^i b^(deg-i)
    deg = len(p) - 1
    acc = 0
    bp = 1
    for i in range(deg, -1, -1):
        acc = acc * a + p[i] * bp
        bp *= b
    return (acc > 0) - (acc < 0)


def ip_eval_at_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ip_prem_neg(a: IntPoly, b: IntPoly) -> IntPoly:
    """Negated primitive pseudo-remainder, sign-consistent for Sturm chains.

    The remainder is scaled by lc(b)^k for the k reduction steps actually
    performed; when that factor is negative the sign is corrected, so the
    result is a positive multiple of -rem(a, b).
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    done = 0
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lr = r[-1]
        r = [c * lb for c in r]
        done += 1
        for i in range(db + 1):
            r[dr - db + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
    if lb < 0 and done % 2 == 1:
        r = [-c for c in r]
    return ip_primitive([-c for c in r])


def _chain_from(p: IntPoly) -> List[IntPoly]:
    chain = [p, ip_primitive(ip_deriv(p))]
    while len(chain[-1]) > 1:
        nxt = ip_prem_neg(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    if len(chain[-1]) == 0:
        chain.pop()
    return chain


def ip_pseudo_div(f: IntPoly, g: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """Integer pseudo-division: lc(g)^k f = Q g + R."""
    r = list(f)
    dg = len(g) - 1
    lg = g[-1]
    q = [0] * max(len(f) - dg, 1)
    while len(r) - 1 >= dg and r:
        dr = len(r) - 1
        lr = r[-1]
        q = [c * lg for c in q]
        r = [c * lg for c in r]
        q[dr - dg] += lr
        for j in range(dg + 1):
            r[dr - dg + j] -= lr * g[j]
        while r and r[-1] == 0:
            r.pop()
    return q, r


def sturm_chain(p: IntPoly) -> List[IntPoly]:
    """Sturm chain of the squarefree part of p (counts distinct roots)."""
    p = ip_primitive(p)
    if len(p) <= 1:
        return [p] if p else []
    chain = _chain_from(p)
    tail = chain[-1]
    if len(tail) > 1:
        # tail is (a multiple of) gcd(p, p'); replace p by its squarefree part
        q, r = ip_pseudo_div(p, tail)
        if r:
            raise RuntimeError("PRS tail does not divide its head")
        sq = ip_primitive(q)
        if sq[-1] < 0:
            sq = [-c for c in sq]
        chain = _chain_from(sq)
    return chain


def _variations(signs: Sequence[int]) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def sturm_count(chain: List[IntPoly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct real roots in (lo, hi] of the squarefree chain head."""
    va = _variations([ip_eval_sign(q, lo) for q in chain])
    vb = _variations([ip_eval_sign(q, hi) for q in chain])
    return va - vb


def sturm_count_all(chain: List[IntPoly]) -> int:
    """Total number of distinct real roots (variations at -inf minus +inf)."""
    sa = []
    sb = []
    for q in chain:
        lc = q[-1]
        deg = len(q) - 1
        s = (lc > 0) - (lc < 0)
        sb.append(s)
        sa.append(s if deg % 2 == 0 else -s)
    return _variations(sa) - _variations(sb)


def root_bound(p: IntPoly) -> Fraction:
    """Cauchy bound: all real roots lie in [-B, B]."""
    lc = abs(p[-1])
    m = max((abs(c) for c in p[:-1]), default=0)
    return Fraction(m, lc) + 1


@dataclass
class RootInterval:
    """Half-open isolating interval (lo, hi] holding exactly one real root."""

    lo: Fraction
    hi: Fraction
    poly: IntPoly
    chain: List[IntPoly]

    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width: Fraction | None = None, steps: int | None = None) -> "RootInterval":
        lo, hi = self.lo, self.hi
        n = 0
        while (width is not None and hi - lo > width) or (steps is not None and n < steps):
            mid = (lo + hi) / 2
            if sturm_count(self.chain, lo, mid) == 1:
                hi = mid
            else:
                lo = mid
            n += 1
            if width is None and steps is None:
                break
        return RootInterval(lo, hi, self.poly, self.chain)

    def refine_to(self, width: Fraction) -> "RootInterval":
        return self.refine(width=width)

    def contains_value(self, x: Fraction) -> bool:
        return self.lo < x <= self.hi

    def sample(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def approx(self) -> float:
        return float((self.lo + self.hi) / 2)

    def open_box(self) -> Tuple[Fraction, Fraction]:
        """Endpoints (a, b) with the root strictly inside and no other root in [a, b].

        Needed by interval Newton: a root sitting exactly on an endpoint of the
        half-open isolating interval can never be certified.
        """
        lo, hi = self.lo, self.hi
        if ip_eval_sign(self.poly, hi) == 0:
            w = (hi - lo) / 2 if hi > lo else Fraction(1, 2)
            while True:
                a, b = hi - w, hi + w
                if (sturm_count(self.chain, a, b) == 1
                        and ip_eval_sign(self.poly, a) != 0
                        and ip_eval_sign(self.poly, b) != 0):
                    return a, b
                w /= 2
        if ip_eval_sign(self.poly, lo) == 0:
            a = (lo + hi) / 2
            while True:
                if ip_eval_sign(self.poly, a) != 0 and sturm_count(self.chain, a, hi) == 1:
                    return a, hi
                a = (lo + a) / 2
        return lo, hi


def isolate_real_roots(p_in: IntPoly | Sequence[Fraction],
                       interval: Optional[Tuple[Fraction, Fraction]] = None) -> List[RootInterval]:
    """Disjoint isolating intervals for all distinct real roots in the range.

    The polynomial is replaced by its squarefree part internally; the returned
    intervals are sorted increasingly and each contains exactly one root.
    """
    p = list(p_in) if p_in and isinstance(p_in[0], int) else to_int_poly(p_in)  # type: ignore[arg-type]
    if not p:
        raise ValueError("zero polynomial")
    if len(p) == 1:
        return []
    chain = sturm_chain(p)
    sq = chain[0]
    if interval is None:
        b = root_bound(sq)
        lo, hi = -b, b
    else:
        lo, hi = Fraction(interval[0]), Fraction(interval[1])
    total = sturm_count(chain, lo, hi)
    # left endpoint may itself be a root (half-open convention misses it)
    if ip_eval_sign(sq, lo) == 0:
        total += 1
    out: List[RootInterval] = []

    def rec(a: Fraction, b: Fraction, count: int):
        if count == 0:
            return
        if count == 1:
            out.append(RootInterval(a, b, sq, chain))
            return
        mid = (a + b) / 2
        cl = sturm_count(chain, a, mid)
        rec(a, mid, cl)
        rec(mid, b, count - cl)

    if ip_eval_sign(sq, lo) == 0:
        # shift the window slightly left so the convention covers lo
        eps = Fraction(1, 2)
        while sturm_count(chain, lo - eps, lo) != 1:
            eps /= 2
        out.append(RootInterval(lo - eps, lo, sq, chain))
        total -= 1
    rec(lo, hi, total)
    out.sort(key=lambda r: (r.lo, r.hi))
    return out


def sturm_isolate(p: RealPolynomial, name: str,
                  interval: Optional[Tuple[Fraction, Fraction]] = None) -> List[RootInterval]:
    """Isolate the real roots of a univariate RealPolynomial."""
    return isolate_real_roots(from_real_poly(p, name), interval)
