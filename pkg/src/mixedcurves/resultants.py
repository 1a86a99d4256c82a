"""Resultants and discriminants: exact Sylvester/Bareiss for small systems and
a CRT-modular evaluate/interpolate engine for large bivariate eliminations.

The modular path is rigorous: the prime count is driven by a Hadamard-style
bound on the Sylvester determinant, and derived quantities (gcds, squarefree
parts) are verified by exact trial division afterwards.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, prod
from typing import List, Optional, Sequence, Tuple

from .isolate import IntPoly, ip_primitive, to_int_poly
from .realpoly import RealPolynomial

# -- exact path: Sylvester matrix + Bareiss ------------------------------------


def sylvester_matrix(p: RealPolynomial, q: RealPolynomial, var: str) -> List[List[RealPolynomial]]:
    cp = p.coeffs_in(var)
    cq = q.coeffs_in(var)
    dp, dq = len(cp) - 1, len(cq) - 1
    if dp < 0 or dq < 0:
        raise ValueError("resultant of zero polynomial")
    rest = cp[0].variables
    zero = RealPolynomial.zero(rest)
    n = dp + dq
    rows: List[List[RealPolynomial]] = []
    for i in range(dq):
        row = [zero] * n
        for k, c in enumerate(reversed(cp)):
            row[i + k] = c
        rows.append(row)
    for i in range(dp):
        row = [zero] * n
        for k, c in enumerate(reversed(cq)):
            row[i + k] = c
        rows.append(row)
    return rows


def bareiss_det(matrix: List[List[RealPolynomial]]) -> RealPolynomial:
    """Fraction-free determinant; entries must belong to a common context."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    ctx = matrix[0][0].variables
    m = [row[:] for row in matrix]
    one = RealPolynomial.const(ctx, 1)
    prev = one
    sign = 1
    for k in range(n - 1):
        if m[k][k].is_zero():
            found = None
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    found = r
                    break
            if found is None:
                return RealPolynomial.zero(ctx)
            m[k], m[found] = m[found], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = RealPolynomial.zero(ctx)
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def resultant(p: RealPolynomial, q: RealPolynomial, var: str) -> RealPolynomial:
    """Exact resultant eliminating `var`; result lives in the remaining variables."""
    if p.is_zero() or q.is_zero():
        rest = tuple(v for v in p.variables if v != var)
        return RealPolynomial.zero(rest)
    return bareiss_det(sylvester_matrix(p, q, var))


def discriminant(f: RealPolynomial, var: str) -> RealPolynomial:
    """Classical discriminant (-1)^(d(d-1)/2) Res(f, f') / lc."""
    d = f.degree_in(var)
    if d <= 0:
        raise ValueError("discriminant needs positive degree")
    lc = f.coeffs_in(var)[-1]
    if lc.is_zero():
        raise ValueError("leading coefficient vanishes identically")
    res = resultant(f, f.derivative(var), var)
    out = res.exact_div(lc)
    if (d * (d - 1) // 2) % 2 == 1:
        out = -out
    return out


# -- deterministic primes --------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_stream(start: int = (1 << 59) + 1):
    n = start | 1
    while True:
        if _is_prime(n):
            yield n
        n += 2


# -- dense arithmetic mod p ---------------------------------------------------------


def _poly_mod(p: IntPoly, m: int) -> List[int]:
    out = [c % m for c in p]
    while out and out[-1] == 0:
        out.pop()
    return out


def _resultant_mod(a: List[int], b: List[int], p: int) -> int:
    """Resultant of dense univariate polynomials over F_p."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, p) % p
        # r = a mod b
        r = a[:]
        inv = pow(b[-1], p - 2, p)
        for i in range(da, db - 1, -1):
            c = r[i]
            if c:
                c = c * inv % p
                for j in range(db + 1):
                    r[i - db + j] = (r[i - db + j] - c * b[j]) % p
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return 0
        dr = len(r) - 1
        res = res * pow(b[-1], da - dr, p) % p
        if (da * db) % 2 == 1:
            res = (p - res) % p
        a, b = b, r


def _interp_newton_mod(xs: List[int], ys: List[int], p: int) -> List[int]:
    """Newton interpolation over F_p, dense ascending coefficients."""
    n = len(xs)
    coef = ys[:]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            denom = (xs[i] - xs[i - j]) % p
            coef[i] = (coef[i] - coef[i - 1]) * pow(denom, p - 2, p) % p
    poly = [0] * n
    poly[0] = coef[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # poly = poly * (x - xs[k]) + coef[k]
        nxt = [0] * (deg + 2)
        for i in range(deg + 1):
            nxt[i + 1] = (nxt[i + 1] + poly[i]) % p
            nxt[i] = (nxt[i] - poly[i] * xs[k]) % p
        nxt[0] = (nxt[0] + coef[k]) % p
        poly = nxt
        deg += 1
    return [c % p for c in poly]


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    g, x = _inv_mod(m1 % m2, m2)
    t = (r2 - r1) % m2 * x % m2
    return r1 + m1 * t


def _inv_mod(a: int, m: int) -> Tuple[int, int]:
    return 1, pow(a, -1, m)


def _symmetric(r: int, m: int) -> int:
    return r - m if r > m // 2 else r


class BivariateInt:
    """Dense bivariate integer polynomial: coefficients[j] is the IntPoly in the
    outer variable multiplying inner^j."""

    def __init__(self, coeffs: List[IntPoly]):
        self.coeffs = coeffs
        while self.coeffs and not self.coeffs[-1]:
            self.coeffs.pop()

    @staticmethod
    def from_real(p: RealPolynomial, outer: str, inner: str) -> "BivariateInt":
        den = 1
        for c in p.terms.values():
            den = den * c.denominator // int_gcd(den, c.denominator)
        oi = p.variables.index(outer)
        ii = p.variables.index(inner)
        d_in = p.degree_in(inner)
        cols: List[dict] = [dict() for _ in range(d_in + 1)]
        for e, c in p.terms.items():
            for idx, x in enumerate(e):
                if x and idx not in (oi, ii):
                    raise ValueError("polynomial is not bivariate in the given variables")
            cols[e[ii]][e[oi]] = int(c * den)
        out = []
        for col in cols:
            if col:
                deg = max(col)
                out.append([col.get(i, 0) for i in range(deg + 1)])
            else:
                out.append([])
        return BivariateInt(out)

    def deg_inner(self) -> int:
        return len(self.coeffs) - 1

    def deg_outer(self) -> int:
        return max((len(c) - 1 for c in self.coeffs if c), default=-1)

    def norm_l1(self) -> int:
        return sum(sum(abs(x) for x in c) for c in self.coeffs)

    def eval_outer_mod(self, x: int, p: int) -> List[int]:
        """Specialize the outer variable to x mod p, returning inner-dense coeffs."""
        out = []
        for c in self.coeffs:
            acc = 0
            for cc in reversed(c):
                acc = (acc * x + cc) % p
            out.append(acc)
        while out and out[-1] == 0:
            out.pop()
        return out

    def to_real(self, outer: str, inner: str) -> RealPolynomial:
        terms = {}
        for j, col in enumerate(self.coeffs):
            for i, c in enumerate(col):
                if c:
                    terms[(i, j)] = Fraction(c)
        return RealPolynomial((outer, inner), terms)


def resultant_modular(P: BivariateInt, Q: BivariateInt) -> IntPoly:
    """Res_inner(P, Q) as an integer polynomial in the outer variable.

    Rigorous: the number of primes is chosen from a Hadamard-style bound
    (product of Sylvester row l1-norms), and evaluation nodes where either
    leading coefficient degenerates are skipped.
    """
    dp, dq = P.deg_inner(), Q.deg_inner()
    if dp < 0 or dq < 0:
        return []
    if dp == 0 and dq == 0:
        return [1]
    deg_bound = P.deg_outer() * dq + Q.deg_outer() * dp + 1
    np_, nq = P.norm_l1(), Q.norm_l1()
    bound = (np_ ** dq) * (nq ** dp)
    bound *= max(deg_bound, 1) ** (dp + dq)  # slack for polynomial entries
    need = 2 * bound + 1

    lc_p = P.coeffs[-1]
    lc_q = Q.coeffs[-1]

    residues: List[IntPoly] = []
    primes: List[int] = []
    acc = 1
    for p in prime_stream():
        # skip primes killing the leading coefficients entirely
        if all(c % p == 0 for c in lc_p) or all(c % p == 0 for c in lc_q):
            continue
        xs: List[int] = []
        ys: List[int] = []
        x = 0
        while len(xs) < deg_bound:
            for cand in ((x, -x) if x else (0,)):
                cm = cand % p
                if cm in xs:
                    continue
                la = 0
                for cc in reversed(lc_p):
                    la = (la * cm + cc) % p
                lb = 0
                for cc in reversed(lc_q):
                    lb = (lb * cm + cc) % p
                if la == 0 or lb == 0:
                    continue
                a = P.eval_outer_mod(cm, p)
                b = Q.eval_outer_mod(cm, p)
                xs.append(cm)
                ys.append(_resultant_mod(a, b, p))
                if len(xs) >= deg_bound:
                    break
            x += 1
            if x > deg_bound + 10 * (len(primes) + 4) + 100:
                break
        if len(xs) < deg_bound:
            continue  # unlucky prime (too many lc roots); try the next one
        residues.append(_interp_newton_mod(xs, ys, p))
        primes.append(p)
        acc *= p
        if acc >= need:
            break

    # CRT combine
    out: IntPoly = [0] * deg_bound
    m = 1
    combined = [0] * deg_bound
    for res, p in zip(residues, primes):
        res = res + [0] * (deg_bound - len(res))
        if m == 1:
            combined = [c % p for c in res]
            m = p
            continue
        inv = pow(m % p, p - 2, p)
        new = []
        for c_old, c_new in zip(combined, res):
            t = (c_new - c_old) % p * inv % p
            new.append(c_old + m * t)
        combined = new
        m *= p
    out = [_symmetric(c % m, m) for c in combined]
    while out and out[-1] == 0:
        out.pop()
    return out


def gcd_univariate_modular(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over Z via modular images, verified by exact division."""
    a = ip_primitive(a)
    b = ip_primitive(b)
    if not a:
        return b
    if not b:
        return a
    lc_g = int_gcd(a[-1], b[-1])
    best_deg = None
    images: List[Tuple[int, List[int]]] = []
    acc = 1
    for p in prime_stream((1 << 59) + 1):
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        am = _poly_mod(a, p)
        bm = _poly_mod(b, p)
        g = _gcd_mod(am, bm, p)
        dg = len(g) - 1
        if dg == 0:
            return [1]
        if best_deg is None or dg < best_deg:
            best_deg = dg
            images = []
            acc = 1
        if dg == best_deg:
            mon = [c * pow(g[-1], p - 2, p) % p for c in g]
            scaled = [c * lc_g % p for c in mon]
            images.append((p, scaled))
            acc *= p
            # verification by exact division makes early attempts safe
            cand = ip_primitive(_crt_poly(images))
            if cand and _divides_int(cand, a) and _divides_int(cand, b):
                return cand
        if len(images) > 80:
            raise RuntimeError("modular gcd failed to stabilize")


def _crt_poly(images: List[Tuple[int, List[int]]]) -> IntPoly:
    m = 1
    combined: List[int] = []
    deg = max(len(g) for _, g in images)
    for p, g in images:
        g = g + [0] * (deg - len(g))
        if m == 1:
            combined = [c % p for c in g]
            m = p
            continue
        inv = pow(m % p, p - 2, p)
        combined = [c0 + m * ((c1 - c0) % p * inv % p) for c0, c1 in zip(combined, g)]
        m *= p
    return [_symmetric(c % m, m) for c in combined]


def _gcd_mod(a: List[int], b: List[int], p: int) -> List[int]:
    while b:
        inv = pow(b[-1], p - 2, p)
        r = a[:]
        db = len(b) - 1
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                c = c * inv % p
                for j in range(db + 1):
                    r[i - db + j] = (r[i - db + j] - c * b[j]) % p
        while r and r[-1] == 0:
            r.pop()
        a, b = b, r
    return a


def _pseudo_divmod(f: IntPoly, g: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """Integer pseudo-division: returns (Q, R) with lc(g)^k f = Q g + R."""
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


def _divides_int(g: IntPoly, f: IntPoly) -> bool:
    """Does g divide f over Q?  (Gauss: pseudo-remainder vanishes.)"""
    _, r = _pseudo_divmod(f, g)
    return not r


def squarefree_big(p_in: IntPoly) -> IntPoly:
    """Squarefree part of a (possibly huge) integer polynomial, division-verified."""
    p = ip_primitive(p_in)
    if len(p) <= 2:
        return p
    d = ip_primitive([i * c for i, c in enumerate(p) if i])
    g = gcd_univariate_modular(p, d)
    if len(g) == 1:
        out = list(p)
    else:
        q, r = _pseudo_divmod(p, g)
        if r:
            raise RuntimeError("verified gcd failed to divide its argument")
        out = ip_primitive(q)
    if out and out[-1] < 0:
        out = [-c for c in out]
    return out
