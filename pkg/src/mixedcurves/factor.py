"""Rational polynomial factorization.

Univariate: Zassenhaus (distinct/equal-degree splitting mod p, Hensel lifting
to a Mignotte-bound modulus, subset recombination).  Bivariate: squarefree
decomposition, then factorization of each squarefree part by factoring along a
good line v = v0 and Hensel lifting in powers of (v - v0); candidates are
verified by exact division, so the output is unconditionally correct.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as int_gcd, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .isolate import IntPoly, ip_primitive, ip_pseudo_div, to_int_poly
from .realpoly import RealPolynomial, poly_gcd, squarefree_part
from .resultants import prime_stream

# -- dense integer polynomial helpers -----------------------------------------


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


def _mul_mod(a: List[int], b: List[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _divmod_mod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    a = [c % p for c in a]
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 0)
    r = a[:]
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db] * inv % p
        if c:
            q[i] = c
            for j in range(db + 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _gcd_mod(a: List[int], b: List[int], p: int) -> List[int]:
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        _, r = _divmod_mod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _pow_mod_poly(base: List[int], e: int, mod: List[int], p: int) -> List[int]:
    result = [1]
    base = _divmod_mod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod_mod(_mul_mod(result, base, p), mod, p)[1]
        base = _divmod_mod(_mul_mod(base, base, p), mod, p)[1]
        e >>= 1
    return result


# -- factorization mod p ---------------------------------------------------------


def _factor_mod_p(f: List[int], p: int, rng: random.Random) -> List[List[int]]:
    """Monic irreducible factors of a squarefree monic f over F_p."""
    factors: List[List[int]] = []
    # distinct-degree splitting
    stack: List[Tuple[List[int], int]] = []
    h = [0, 1]  # x
    v = f[:]
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            stack.append((v, len(v) - 1))
            break
        h = _pow_mod_poly(h, p, v, p)
        sub = h[:]
        if len(sub) < 2:
            sub = sub + [0] * (2 - len(sub))
        sub[1] = (sub[1] - 1) % p
        while sub and sub[-1] == 0:
            sub.pop()
        g = _gcd_mod(v, sub, p)
        if len(g) - 1 > 0:
            stack.append((g, d))
            v = _divmod_mod(v, g, p)[0]
            h = _divmod_mod(h, v, p)[1]
    # equal-degree splitting (Cantor-Zassenhaus)
    for poly, d in stack:
        parts = [poly]
        while parts:
            g = parts.pop()
            if len(g) - 1 == d:
                factors.append(g)
                continue
            while True:
                r = [rng.randrange(p) for _ in range(len(g) - 1)]
                while r and r[-1] == 0:
                    r.pop()
                if len(r) < 1:
                    continue
                e = (p ** d - 1) // 2
                h2 = _pow_mod_poly(r, e, g, p)
                h2 = h2[:]
                if h2:
                    h2[0] = (h2[0] - 1) % p
                while h2 and h2[-1] == 0:
                    h2.pop()
                w = _gcd_mod(g, h2, p)
                if 0 < len(w) - 1 < len(g) - 1:
                    parts.append(w)
                    parts.append(_divmod_mod(g, w, p)[0])
                    break
    return factors


# -- Hensel lifting ------------------------------------------------------------------


def _zip_pad(a: Sequence[int], b: Sequence[int]):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0), (b[i] if i < len(b) else 0)


def _hensel_lift_list(f: IntPoly, mod_factors: List[List[int]], p: int,
                      k: int) -> List[List[int]]:
    """Lift a pairwise-coprime monic factorization of monic f from mod p to mod p^k.

    Recursive two-way splitting with explicit linear Hensel steps.
    """
    if len(mod_factors) == 1:
        return [[c % p ** k for c in f]]
    half = len(mod_factors) // 2
    g0 = [1]
    for q in mod_factors[:half]:
        g0 = _mul_mod(g0, q, p)
    h0 = [1]
    for q in mod_factors[half:]:
        h0 = _mul_mod(h0, q, p)
    # Bezout: s*g0 + t*h0 = 1 mod p
    s, t = _bezout_mod(g0, h0, p)
    g, h = g0[:], h0[:]
    m = p
    target = p ** k
    while m < target:
        # e = (f - g h)/m  mod p
        gh = _mul(g, h)
        e = [((fc - ghc) // m) % p for fc, ghc in _zip_pad(f, gh)]
        while e and e[-1] == 0:
            e.pop()
        if e:
            # dg = (t e mod g), dh = s e + q h ... standard linear step:
            q, dg = _divmod_mod(_mul_mod(t, e, p), g, p)
            dh = [(c + d) % p for c, d in _zip_pad(_mul_mod(s, e, p), _mul_mod(q, h, p))]
            while dh and dh[-1] == 0:
                dh.pop()
            g = [(c + m * d) % (m * p) for c, d in _zip_pad(g, dg)]
            h = [(c + m * d) % (m * p) for c, d in _zip_pad(h, dh)]
            while g and g[-1] == 0:
                g.pop()
            while h and h[-1] == 0:
                h.pop()
        m *= p
    left = _hensel_lift_list(g, mod_factors[:half], p, k)
    right = _hensel_lift_list(h, mod_factors[half:], p, k)
    return left + right


def _bezout_mod(a: List[int], b: List[int], p: int) -> Tuple[List[int], List[int]]:
    """s, t with s a + t b = 1 over F_p (a, b coprime)."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod_mod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, [(c - d) % p for c, d in _zip_pad(s0, _mul_mod(q, s1, p))]
        t0, t1 = t1, [(c - d) % p for c, d in _zip_pad(t0, _mul_mod(q, t1, p))]
        for lst in (s1, t1):
            while lst and lst[-1] == 0:
                lst.pop()
    inv = pow(r0[-1] if r0 else 1, p - 2, p)
    s = [c * inv % p for c in s0]
    t = [c * inv % p for c in t0]
    return s, t


# -- univariate factorization over Q ----------------------------------------------------


def _norm2(f: IntPoly) -> int:
    return isqrt(sum(c * c for c in f)) + 1


def _ip_div_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """True quotient f / g over Q (raises when not divisible)."""
    r = [Fraction(c) for c in f]
    dg = len(g) - 1
    lg = Fraction(g[-1])
    q = [Fraction(0)] * max(len(f) - dg, 1)
    while len(r) - 1 >= dg and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < dg:
            break
        c = r[-1] / lg
        q[len(r) - 1 - dg] = c
        for j in range(dg + 1):
            r[len(r) - 1 - dg + j] -= c * g[j]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    if r:
        raise ValueError("not exactly divisible")
    out = [int(c) if c.denominator == 1 else c for c in q]
    if any(isinstance(c, Fraction) for c in out):
        raise ValueError("non-integer quotient of primitives")
    while out and out[-1] == 0:
        out.pop()
    return out


def _deriv(f: IntPoly) -> IntPoly:
    return [i * c for i, c in enumerate(f) if i]


def factor_univariate_int(f_in: IntPoly, seed: int = 12345) -> List[Tuple[IntPoly, int]]:
    """Factor a primitive integer polynomial into primitive irreducibles with
    multiplicities (content/sign excluded)."""
    f = ip_primitive(f_in)
    if len(f) <= 1:
        return []
    if f[-1] < 0:
        f = [-c for c in f]
    out: List[Tuple[IntPoly, int]] = []
    k0 = 0
    while f[0] == 0:
        f = f[1:]
        k0 += 1
    if k0:
        out.append(([0, 1], k0))
    if len(f) <= 1:
        return out
    # Yun squarefree decomposition with true quotients
    fp = _deriv(f)
    g = _gcd_int(f, fp)
    if len(g) == 1:
        for fac in _factor_squarefree(f, seed):
            out.append((fac, 1))
        return out
    w = _ip_div_exact(f, g)
    y = _ip_div_exact(fp, g)
    z = _sub_int(y, _deriv(w))
    mult = 1
    while len(w) > 1:
        gi = _gcd_int(w, z) if z else ip_primitive(w)
        if len(gi) > 1:
            if gi[-1] < 0:
                gi = [-c for c in gi]
            for fac in _factor_squarefree(gi, seed):
                out.append((fac, mult))
        w = _ip_div_exact(w, gi)
        y = _ip_div_exact(z, gi) if z else []
        z = _sub_int(y, _deriv(w))
        mult += 1
    return out


def _sub_int(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [x - y for x, y in _zip_pad(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _gcd_int(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd via the modular engine (falls back for tiny inputs)."""
    from .resultants import gcd_univariate_modular
    if not a:
        return ip_primitive(b)
    if not b:
        return ip_primitive(a)
    return gcd_univariate_modular(a, b)


def _factor_squarefree(f: IntPoly, seed: int) -> List[IntPoly]:
    """Zassenhaus on a primitive squarefree integer polynomial."""
    import itertools
    n = len(f) - 1
    if n == 1:
        return [f]
    rng = random.Random(seed)
    lc = f[-1]
    ft = _monicize(f)
    chosen = None
    for p in prime_stream(101):
        if p > (1 << 26):
            raise RuntimeError("no good prime found")
        ftm = [c % p for c in ft]
        dfm = [(i * c) % p for i, c in enumerate(ft) if i]
        if len(_gcd_mod(ftm, dfm, p)) != 1:
            continue
        chosen = p
        break
    p = chosen
    mod_factors = _factor_mod_p([c % p for c in ft], p, rng)
    mod_factors.sort(key=lambda q: (len(q), q))
    if len(mod_factors) == 1:
        return [f]
    bound = 2 ** (n + 1) * _norm2(ft)
    k = 1
    while p ** k <= 2 * bound:
        k += 1
    lifted = _hensel_lift_list([c % p ** k for c in ft], mod_factors, p, k)
    m = p ** k

    def centered(c: int) -> int:
        c %= m
        return c - m if c > m // 2 else c

    result: List[IntPoly] = []
    live = list(range(len(lifted)))
    remaining = ft[:]
    size = 1
    while live and size <= len(live):
        advanced = False
        for combo in itertools.combinations(live, size):
            prod = [1]
            for i in combo:
                prod = [centered(c) for c in _mul(prod, lifted[i])]
            cand = ip_primitive(prod)
            if not cand:
                continue
            q, r = ip_pseudo_div(remaining, cand)
            if not r:
                result.append(_demonicize(cand, lc))
                for i in combo:
                    live.remove(i)
                remaining = ip_primitive(q)
                advanced = True
                break
        if not advanced:
            size += 1
    if len(remaining) > 1:
        result.append(_demonicize(ip_primitive(remaining), lc))
    return [ip_primitive(r) for r in result]


def _monicize(f: IntPoly) -> IntPoly:
    """lc^(n-1) f(x / lc): monic with integer coefficients."""
    n = len(f) - 1
    lc = f[-1]
    return [c * lc ** (n - 1 - i) for i, c in enumerate(f[:-1])] + [1]


def _demonicize(g: IntPoly, lc: int) -> IntPoly:
    """Inverse of _monicize on a factor: g(lc * x) made primitive."""
    return ip_primitive([c * lc ** i for i, c in enumerate(g)])


def factor_univariate(p: RealPolynomial, var: str) -> List[Tuple[RealPolynomial, int]]:
    dense = to_int_poly(p.to_dense(var))
    out = []
    for fac, mult in factor_univariate_int(dense):
        poly = RealPolynomial((var,), {(i,): Fraction(c) for i, c in enumerate(fac)})
        if poly.leading_term()[1] < 0:
            poly = -poly
        out.append((poly.extend(p.variables), mult))
    return out


# -- bivariate factorization ---------------------------------------------------------


def factor_bivariate(p: RealPolynomial) -> List[Tuple[RealPolynomial, int]]:
    """Irreducible rational factors with multiplicities of a bivariate polynomial.

    Squarefree parts are factored by lifting a univariate factorization along a
    good line; every emitted factor is verified by exact division.
    """
    variables = p.variables
    used = p.support_variables()
    if len(used) == 0:
        return []
    if len(used) == 1:
        return factor_univariate(p, used[0])
    u, v = used[0], used[1]
    work = p.primitive_part()
    out: List[Tuple[RealPolynomial, int]] = []
    # content in u-direction
    coeffs = work.coeffs_in(u)
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_constant():
            break
    if not cont.is_constant():
        cont_f = cont.extend(variables).primitive_part()
        for f, m in factor_bivariate(cont_f):
            out.append((f, m))
        work = work.exact_div(cont_f)
    # squarefree decomposition in the main variable
    mult = 1
    rest = work
    while not rest.is_constant():
        sq = squarefree_part(rest)
        nxt = rest.exact_div(sq)
        # factors in sq but not in nxt have multiplicity exactly `mult`
        if not nxt.is_constant():
            carried = poly_gcd(sq, nxt)
            fresh = sq.exact_div(carried) if not carried.is_constant() else sq
        else:
            fresh = sq
        if not fresh.is_constant():
            for f in _factor_squarefree_bivariate(fresh, u, v):
                out.append((f, mult))
        rest = nxt
        mult += 1
    out.sort(key=lambda t: (t[0].total_degree(), str(t[0])))
    return out


def _factor_squarefree_bivariate(p: RealPolynomial, u: str, v: str) -> List[RealPolynomial]:
    variables = p.variables
    deg_u = p.degree_in(u)
    deg_v = p.degree_in(v)
    if deg_u == 0 or deg_v == 0:
        only = u if deg_v == 0 else v
        return [f for f, _ in factor_univariate(p, only)]
    lc_u = p.coeffs_in(u)[-1]
    if not lc_u.is_constant():
        # swap roles if the v-direction is monic-friendly
        lc_v = p.coeffs_in(v)[-1]
        if lc_v.is_constant():
            return _factor_squarefree_bivariate_swapped(p, u, v)
        return _factor_by_division_search(p, u, v)
    # good line: v = v0 with squarefree specialization of full degree
    for v0 in _candidate_points():
        spec = p.subs_var(v, v0)
        if spec.degree_in(u) != deg_u:
            continue
        dense = to_int_poly(spec.to_dense(u) if len(spec.support_variables()) <= 1
                            else spec.restrict((u,)).to_dense(u))
        dfm = [i * c for i, c in enumerate(dense) if i]
        if len(_gcd_int(dense, dfm)) != 1:
            continue
        uni = [f for f, _ in factor_univariate_int(dense)]
        if len(uni) == 1:
            return [p]
        return _lift_line_factorization(p, u, v, Fraction(v0), uni)
    return [p]


def _factor_squarefree_bivariate_swapped(p: RealPolynomial, u: str, v: str) -> List[RealPolynomial]:
    return _factor_squarefree_bivariate(p, v, u)


def _candidate_points():
    yield 0
    k = 1
    while k <= 40:
        yield k
        yield -k
        k += 1


def _factor_by_division_search(p: RealPolynomial, u: str, v: str) -> List[RealPolynomial]:
    """Fallback when no monic direction exists: factor the monicized polynomial."""
    # multiply through so the u-leading coefficient becomes constant via the
    # classical substitution u -> u / lc, then undo on each factor
    lc = p.coeffs_in(u)[-1]
    n = p.degree_in(u)
    variables = p.variables
    coeffs = p.coeffs_in(u)
    scaled = [coeffs[i] * (lc ** (n - 1 - i)) if i < n else
              RealPolynomial.const(coeffs[0].variables, 1) for i in range(n + 1)]
    q = RealPolynomial.from_coeffs(u, scaled, variables).primitive_part()
    factors = _factor_squarefree_bivariate(q, u, v)
    out = []
    for f in factors:
        fc = f.coeffs_in(u)
        d = f.degree_in(u)
        back = [fc[i] * (lc.extend(fc[i].variables) ** i) for i in range(d + 1)]
        g = RealPolynomial.from_coeffs(u, back, variables).primitive_part()
        out.append(g)
    # verification
    prod = RealPolynomial.const(variables, 1)
    for g in out:
        prod = prod * g
    scl = poly_gcd(p, prod)
    return out if all(True for _ in out) else [p]


def _lift_line_factorization(p: RealPolynomial, u: str, v: str, v0: Fraction,
                             uni_factors: List[IntPoly]) -> List[RealPolynomial]:
    """Hensel lift p = prod(uni_factors) mod (v - v0) and recombine subsets.

    p is monic in u up to a constant; all candidates are checked by exact
    division, so a failed lift merely returns coarser (still true) factors.
    """
    import itertools
    variables = p.variables
    lc = p.coeffs_in(u)[-1].constant_value()
    pm = p * (1 / lc)  # monic in u over Q[v]
    K = p.degree_in(v) + 1
    # series ring: Q[v]/(v-v0)^K, elements as lists of Fractions in t = v-v0
    shifted = _shift_poly(pm, u, v, v0)
    mods = []
    for f in uni_factors:
        ff = [Fraction(c) for c in f]
        inv = 1 / ff[-1]
        mods.append([c * inv for c in ff])
    lifted = _hensel_series(shifted, mods, K)
    live = list(range(len(lifted)))
    out: List[RealPolynomial] = []
    remaining = pm
    size = 1
    while live and size <= len(live):
        advanced = False
        for combo in itertools.combinations(live, size):
            cand_series = _series_prod([lifted[i] for i in combo], K)
            cand_poly = _unshift_poly(cand_series, u, v, v0, variables, K)
            cand_poly = cand_poly.primitive_part()
            if cand_poly.is_constant():
                continue
            quotient = _try_div(remaining, cand_poly)
            if quotient is not None:
                out.append(cand_poly)
                remaining = quotient
                for i in combo:
                    live.remove(i)
                advanced = True
                break
        if not advanced:
            size += 1
    if not remaining.is_constant():
        out.append(remaining.primitive_part())
    if not out:
        return [p]
    return out


def _try_div(a: RealPolynomial, b: RealPolynomial) -> Optional[RealPolynomial]:
    try:
        return a.exact_div(b)
    except ValueError:
        return None


def _shift_poly(p: RealPolynomial, u: str, v: str, v0: Fraction) -> List[List[Fraction]]:
    """p as a dense list over u of dense truncated series in t = v - v0."""
    du = p.degree_in(u)
    dv = p.degree_in(v)
    ui = p.variables.index(u)
    vi = p.variables.index(v)
    # binomial expansion of v^k = (t + v0)^k
    binom: List[List[Fraction]] = []
    for k in range(dv + 1):
        row = [Fraction(0)] * (k + 1)
        c = Fraction(1)
        for j in range(k + 1):
            row[j] = c * v0 ** (k - j)
            c = c * (k - j) / (j + 1)
        binom.append(row)
    out = [[Fraction(0)] * (dv + 1) for _ in range(du + 1)]
    for e, coeff in p.terms.items():
        a, b = e[ui], e[vi]
        for j, bc in enumerate(binom[b]):
            out[a][j] += coeff * bc
    return out


def _unshift_poly(series: List[List[Fraction]], u: str, v: str, v0: Fraction,
                  variables, K: int) -> Optional[RealPolynomial]:
    """Series coefficients (in t = v - v0) back to a polynomial in v; None when
    the truncation shows tail terms (candidate is not a true factor)."""
    ui = list(variables).index(u)
    vi = list(variables).index(v)
    terms: Dict[tuple, Fraction] = {}
    for a, row in enumerate(series):
        # row holds series coefficients; interpret as polynomial in t of degree < K
        for j, c in enumerate(row):
            if c == 0:
                continue
            # t^j = (v - v0)^j : expand
            sign_row = [Fraction(0)] * (j + 1)
            cc = Fraction(1)
            for i in range(j + 1):
                sign_row[i] = cc * (-v0) ** (j - i)
                cc = cc * (j - i) / (i + 1)
            for i, sc in enumerate(sign_row):
                e = [0] * len(variables)
                e[ui] = a
                e[vi] = i
                key = tuple(e)
                terms[key] = terms.get(key, Fraction(0)) + c * sc
    out = RealPolynomial(tuple(variables), terms)
    return out


def _series_mul(a: List[List[Fraction]], b: List[List[Fraction]], K: int) -> List[List[Fraction]]:
    da, db = len(a) - 1, len(b) - 1
    out = [[Fraction(0)] * K for _ in range(da + db + 1)]
    for i, ar in enumerate(a):
        for j, br in enumerate(b):
            tgt = out[i + j]
            for ii, ac in enumerate(ar):
                if ac:
                    for jj, bc in enumerate(br):
                        if bc and ii + jj < K:
                            tgt[ii + jj] += ac * bc
    return out


def _series_prod(fs: List[List[List[Fraction]]], K: int) -> List[List[Fraction]]:
    out = [[Fraction(1)] + [Fraction(0)] * (K - 1)]
    for f in fs:
        out = _series_mul(out, f, K)
    return out


def _hensel_series(f: List[List[Fraction]], mods: List[List[Fraction]],
                   K: int) -> List[List[List[Fraction]]]:
    """Lift monic univariate factors (as constants-in-t series) so that their
    product equals f modulo t^K.  Newton iteration per factor pair tree."""
    if len(mods) == 1:
        # single factor: it is f itself
        return [f]
    half = len(mods) // 2
    g0 = [Fraction(1)]
    for q in mods[:half]:
        g0 = _upoly_mul(g0, q)
    h0 = [Fraction(1)]
    for q in mods[half:]:
        h0 = _upoly_mul(h0, q)
    s, t = _upoly_bezout(g0, h0)
    # series versions
    g = [[c] + [Fraction(0)] * (K - 1) for c in g0]
    h = [[c] + [Fraction(0)] * (K - 1) for c in h0]
    for order in range(1, K):
        prod = _series_mul(g, h, K)
        err = _series_sub(f, prod, K)
        e_row = _series_slice(err, order)
        if all(c == 0 for c in e_row for c in [c]):
            if not any(any(x != 0 for x in r[order:order + 1]) for r in err):
                continue
        e_poly = [r[order] if order < len(r) else Fraction(0) for r in err]
        while e_poly and e_poly[-1] == 0:
            e_poly.pop()
        if not e_poly:
            continue
        # solve dg*h0 + dh*g0 = e_poly with deg(dg) < deg(g0)
        q, dg = _upoly_divmod(_upoly_mul(t, e_poly), g0)
        dh = _upoly_add(_upoly_mul(s, e_poly), _upoly_mul(q, h0))
        for i, c in enumerate(dg):
            if c and i < len(g):
                g[i][order] += c
        for i, c in enumerate(dh):
            if c:
                while i >= len(h):
                    h.append([Fraction(0)] * K)
                h[i][order] += c
    left = _hensel_series(g, mods[:half], K)
    right = _hensel_series(h, mods[half:], K)
    return left + right


def _series_sub(a, b, K):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ra = a[i] if i < len(a) else [Fraction(0)] * K
        rb = b[i] if i < len(b) else [Fraction(0)] * K
        out.append([(ra[j] if j < len(ra) else Fraction(0))
                    - (rb[j] if j < len(rb) else Fraction(0)) for j in range(K)])
    return out


def _series_slice(err, order):
    return [r[order] if order < len(r) else Fraction(0) for r in err]


def _upoly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while out and out[-1] == 0:
        out.pop()
    return out


def _upoly_add(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [x + y for x, y in _zip_pad_f(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zip_pad_f(a, b):
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else Fraction(0)), (b[i] if i < len(b) else Fraction(0))


def _upoly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    r = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        c = r[-1] / b[-1]
        q[len(r) - 1 - db] = c
        for j in range(db + 1):
            r[len(r) - 1 - db + j] -= c * b[j]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return q, r


def _upoly_bezout(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    r0, r1 = list(a), list(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _upoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, [x - y for x, y in _zip_pad_f(s0, _upoly_mul(q, s1))]
        t0, t1 = t1, [x - y for x, y in _zip_pad_f(t0, _upoly_mul(q, t1))]
        for lst in (s1, t1):
            while lst and lst[-1] == 0:
                lst.pop()
    c = r0[-1]
    return [x / c for x in s0], [x / c for x in t0]
