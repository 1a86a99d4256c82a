"""Buchberger's algorithm over Q with exact integer kernels.

Monomials are packed into single integers so that the packing is additive
(monomial product = integer sum) and the integer order realizes the monomial
order: plain most-significant-first fields for lex, and a subtractive encoding
deg*C^k - sum(e_i * C^pos) per block for graded-reverse-lex and for block
elimination orders.  Polynomials are primitive integer term lists; contents
are stripped after every reduction.  Pair selection is normal (smallest lcm in
the active order) and the pair set is maintained with the Gebauer-Moeller
product and chain criteria.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .realpoly import RealPolynomial

FIELD_BITS = 16
FIELD_CAP = 1 << FIELD_BITS
FIELD_MASK = FIELD_CAP - 1
MAX_EXP = FIELD_CAP >> 2


class GroebnerBudgetExceeded(RuntimeError):
    """Raised when the configured reduction-step budget is exhausted."""


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block elimination order (drop block >> keep block).

    For kind "elim", the first `n_drop` entries of variable_order form the
    eliminated block; both blocks are compared by graded reverse lex.
    """

    kind: str
    variable_order: Tuple[str, ...]
    n_drop: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise ValueError("order kind must be 'lex', 'grevlex' or 'elim'")
        if self.kind == "elim" and not (0 < self.n_drop < len(self.variable_order)):
            raise ValueError("elim order needs a proper drop block")

    @staticmethod
    def lex(variables: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder("lex", tuple(variables))

    @staticmethod
    def grevlex(variables: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder("grevlex", tuple(variables))

    @staticmethod
    def elim(drop: Sequence[str], keep: Sequence[str]) -> "MonomialOrder":
        return MonomialOrder("elim", tuple(drop) + tuple(keep), len(tuple(drop)))


@dataclass
class IdealBasis:
    generators: List[RealPolynomial]
    order: MonomialOrder
    is_groebner: bool = False


# -- packing -----------------------------------------------------------------


class _Packing:
    """Additive integer encoding of monomials realizing the order by int compare."""

    def __init__(self, order: MonomialOrder, variables: Tuple[str, ...]):
        self.order = order
        self.variables = variables
        self.perm = [variables.index(v) for v in order.variable_order]
        n = len(self.perm)
        self.n = n
        kind = order.kind
        if kind == "lex":
            self.blocks = [list(range(n))]  # positions into perm order
        elif kind == "grevlex":
            self.blocks = [list(range(n))]
        else:
            self.blocks = [list(range(order.n_drop)), list(range(order.n_drop, n))]
        guard = 0
        if kind == "lex":
            for i in range(n):
                guard |= (FIELD_CAP >> 1) << (i * FIELD_BITS)
        self.guard = guard

    def pack(self, exponents: Sequence[int]) -> int:
        es = [exponents[p] for p in self.perm]
        if any(e >= MAX_EXP for e in es):
            raise ValueError("exponent too large for packed monomials")
        if self.order.kind == "lex":
            m = 0
            for e in es:
                m = (m << FIELD_BITS) | e
            return m
        key = 0
        for block in self.blocks:
            bes = [es[i] for i in block]
            k = len(bes)
            val = sum(bes) << (k * FIELD_BITS)
            p = 0
            for i, e in enumerate(bes):  # last variable most significant
                p += e << (i * FIELD_BITS)
            key = (key << ((k + 1) * FIELD_BITS)) + (val - p)
        return key

    def unpack(self, m: int) -> Tuple[int, ...]:
        es = [0] * self.n
        if self.order.kind == "lex":
            for i in range(self.n - 1, -1, -1):
                es[i] = m & FIELD_MASK
                m >>= FIELD_BITS
        else:
            for block in reversed(self.blocks):
                k = len(block)
                width = (k + 1) * FIELD_BITS
                low = m & ((1 << width) - 1)
                m >>= width
                deg = (low + (1 << (k * FIELD_BITS)) - 1) >> (k * FIELD_BITS)
                p = (deg << (k * FIELD_BITS)) - low
                for i in block:
                    es[i] = p & FIELD_MASK
                    p >>= FIELD_BITS
        out = [0] * len(self.variables)
        for pos, e in zip(self.perm, es):
            out[pos] = e
        return tuple(out)

    def divides(self, a: int, b: int) -> bool:
        if self.order.kind == "lex":
            return ((b | self.guard) - a) & self.guard == self.guard
        ea, eb = self.unpack(a), self.unpack(b)
        return all(x <= y for x, y in zip(ea, eb))

    def divides_exps(self, ea: Sequence[int], eb: Sequence[int]) -> bool:
        return all(x <= y for x, y in zip(ea, eb))

    def lcm_exps(self, ea: Sequence[int], eb: Sequence[int]) -> int:
        return self.pack([max(x, y) for x, y in zip(ea, eb)])

    @staticmethod
    def coprime_exps(ea: Sequence[int], eb: Sequence[int]) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(ea, eb))

    @staticmethod
    def divmask(exps: Sequence[int]) -> int:
        """Bit signature: 4 threshold bits per variable; a|b needs mask_a subset of mask_b."""
        m = 0
        for i, e in enumerate(exps):
            if e:
                bits = 1
                if e >= 2:
                    bits |= 2
                if e >= 4:
                    bits |= 4
                if e >= 8:
                    bits |= 8
                m |= bits << (4 * i)
        return m


Term = Tuple[int, int]  # (packed monomial, integer coefficient)


def _strip_content(terms: List[Term]) -> List[Term]:
    if not terms:
        return terms
    g = 0
    for _, c in terms:
        g = int_gcd(g, c)
        if g == 1:
            break
    if terms[0][1] < 0:
        g = -g
    if g not in (0, 1):
        terms = [(m, c // g) for m, c in terms]
    return terms


def _to_int_terms(p: RealPolynomial, pk: _Packing) -> List[Term]:
    if p.is_zero():
        return []
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // int_gcd(den, c.denominator)
    items = [(pk.pack(e), int(c * den)) for e, c in p.terms.items()]
    items.sort(key=lambda t: t[0], reverse=True)
    return _strip_content(items)


def _from_int_terms(terms: List[Term], pk: _Packing, variables: Tuple[str, ...]) -> RealPolynomial:
    return RealPolynomial(variables, {pk.unpack(m): Fraction(c) for m, c in terms})


class _Elt:
    """Basis element with cached head data for fast reducer lookup."""

    __slots__ = ("terms", "lt", "lc", "exps", "mask", "sugar")

    def __init__(self, terms: List[Term], pk: _Packing, sugar: int = 0):
        self.terms = terms
        self.lt = terms[0][0]
        self.lc = terms[0][1]
        self.exps = pk.unpack(self.lt)
        self.mask = pk.divmask(self.exps)
        self.sugar = sugar


class _Engine:
    def __init__(self, order: MonomialOrder, variables: Tuple[str, ...], budget: int):
        self.pk = _Packing(order, variables)
        self.variables = variables
        self.budget = budget
        self.steps = 0

    def charge(self, n: int = 1):
        self.steps += n
        if self.steps > self.budget:
            raise GroebnerBudgetExceeded(
                f"work budget of {self.budget} reduction steps exhausted")

    def reduce_full(self, f: List[Term], reducers: List[_Elt],
                    sugar: int = 0) -> Tuple[List[Term], int]:
        """Full normal form of f modulo reducers; primitive, sorted descending.

        Integer pseudo-reduction: when a reducer's leading coefficient does not
        divide the working coefficient, the whole working polynomial is scaled.
        The accumulated scale is stripped adaptively (true coefficient values
        stay small; the growth is content), keeping every operation on small
        integers.
        """
        pk = self.pk
        unpack = pk.unpack
        divmask = pk.divmask
        work: Dict[int, int] = dict(f)
        heap = [-m for m in work]
        heapq.heapify(heap)
        out: List[Term] = []
        snaps: List[int] = []
        scale = 1

        def strip_now():
            nonlocal out, snaps, scale, work
            if scale > 1:
                out = [(mm, cc * (scale // sn)) for (mm, cc), sn in zip(out, snaps)]
            g2 = 0
            for _, cc in out:
                g2 = int_gcd(g2, cc)
                if g2 == 1:
                    break
            if g2 != 1:
                for cc in work.values():
                    g2 = int_gcd(g2, cc)
                    if g2 == 1:
                        break
            if g2 > 1:
                out = [(mm, cc // g2) for mm, cc in out]
                work = {k: v // g2 for k, v in work.items()}
            scale = 1
            snaps = [1] * len(out)

        while heap:
            m = -heapq.heappop(heap)
            c = work.pop(m, None)
            if not c:
                continue
            exps_m = unpack(m)
            mask_m = divmask(exps_m)
            red = None
            for e in reducers:
                if e.lt <= m and e.mask & ~mask_m == 0 and pk.divides_exps(e.exps, exps_m):
                    red = e
                    break
            if red is None:
                out.append((m, c))
                snaps.append(scale)
                continue
            self.charge()
            s_new = red.sugar + sum(unpack(m - red.lt))
            if s_new > sugar:
                sugar = s_new
            lc = red.lc
            g = int_gcd(c, lc)
            mult_f = lc // g
            mult_g = c // g
            if mult_f < 0:
                mult_f, mult_g = -mult_f, -mult_g
            if mult_f != 1:
                for k in work:
                    work[k] *= mult_f
                scale *= mult_f
            shift = m - red.lt
            terms = red.terms
            for idx in range(1, len(terms)):
                gm, gc = terms[idx]
                k = gm + shift
                s = work.get(k)
                if s is None:
                    work[k] = -mult_g * gc
                    heapq.heappush(heap, -k)
                else:
                    s -= mult_g * gc
                    if s:
                        work[k] = s
                    else:
                        del work[k]
            if scale.bit_length() > 256:
                strip_now()
        if scale != 1:
            out = [(mm, cc * (scale // sn)) for (mm, cc), sn in zip(out, snaps)]
        return _strip_content(out), sugar

    def spoly(self, f: _Elt, g: _Elt) -> Tuple[List[Term], int]:
        pk = self.pk
        l = pk.lcm_exps(f.exps, g.exps)
        sf = l - f.lt
        sg = l - g.lt
        gg = int_gcd(f.lc, g.lc)
        mf = g.lc // gg
        mg = f.lc // gg
        acc: Dict[int, int] = {}
        for m, c in f.terms:
            acc[m + sf] = mf * c
        for m, c in g.terms:
            k = m + sg
            s = acc.get(k, 0) - mg * c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        items = sorted(acc.items(), reverse=True)
        sugar = max(f.sugar + sum(pk.unpack(sf)), g.sugar + sum(pk.unpack(sg)))
        return _strip_content(items), sugar


def buchberger(generators: Sequence[RealPolynomial], order: MonomialOrder,
               budget: int = 10_000_000) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by `generators`."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise ValueError("empty generator list")
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError("generators must share a variable context")
    if set(order.variable_order) != set(variables):
        raise ValueError("order must mention exactly the generator variables")

    eng = _Engine(order, variables, budget)
    pk = eng.pk

    basis: List[_Elt] = []
    alive: List[bool] = []
    # pair selection follows the sugar strategy (homogenized degree first,
    # then the order key of the lcm); plain order-key selection dives into
    # high keep-block degrees on elimination orders
    pairs: List[Tuple[int, int, int, int]] = []  # (sugar, lcm_key, i, j)

    def active() -> List[_Elt]:
        return [b for b, a in zip(basis, alive) if a]

    def add_element(terms: List[Term], sugar: int = 0):
        h_idx = len(basis)
        h = _Elt(terms, pk, sugar)
        basis.append(h)
        alive.append(True)
        # Gebauer-Moeller update
        cand = sorted((pk.lcm_exps(h.exps, basis[j].exps), j)
                      for j in range(h_idx) if alive[j])
        kept: List[Tuple[int, int]] = []
        for idx, (l, j) in enumerate(cand):
            cop = pk.coprime_exps(h.exps, basis[j].exps)
            if not cop:
                dominated = any(pk.divides(l2, l) for l2, _ in kept)
                if not dominated:
                    dominated = any(l2 != l and pk.divides(l2, l)
                                    for l2, _ in cand[idx + 1:])
                if dominated:
                    continue
            kept.append((l, j))
        new_pairs = [(l, j) for l, j in kept
                     if not pk.coprime_exps(h.exps, basis[j].exps)]
        surviving = []
        while pairs:
            d, l, i, j = heapq.heappop(pairs)
            if (pk.divides(h.lt, l)
                    and pk.lcm_exps(basis[i].exps, h.exps) != l
                    and pk.lcm_exps(basis[j].exps, h.exps) != l):
                continue  # chain criterion
            surviving.append((d, l, i, j))
        for p in surviving:
            heapq.heappush(pairs, p)
        for l, j in new_pairs:
            other = basis[j]
            sug = max(other.sugar + sum(pk.unpack(l - other.lt)),
                      h.sugar + sum(pk.unpack(l - h.lt)))
            heapq.heappush(pairs, (sug, l, j, h_idx))
        for j in range(h_idx):
            if alive[j] and pk.divides_exps(h.exps, basis[j].exps):
                alive[j] = False

    for g in sorted(gens, key=lambda p: (p.total_degree(), len(p.terms))):
        t = _to_int_terms(g, pk)
        t, sug = eng.reduce_full(t, active(), g.total_degree())
        if t:
            add_element(t, sug)

    while pairs:
        psug, _, i, j = heapq.heappop(pairs)
        s, sug = eng.spoly(basis[i], basis[j])
        if not s:
            continue
        r, sug = eng.reduce_full(s, active(), sug)
        if r:
            add_element(r, sug)

    # minimalize (drop superseded heads), then autoreduce tails to the reduced basis
    final = active()
    while True:
        changed = False
        result: List[_Elt] = []
        for idx, b in enumerate(final):
            others = result + final[idx + 1:]
            r, _ = eng.reduce_full(b.terms, others)
            if not r:
                changed = True
                continue
            if r[0][0] != b.lt:
                changed = True
            result.append(_Elt(r, pk))
        final = sorted(result, key=lambda e: e.lt)
        if not changed:
            break

    gens_out = [_from_int_terms(e.terms, pk, variables).primitive_part() for e in final]
    return IdealBasis(generators=gens_out, order=order, is_groebner=True)


def reduce_mod(p: RealPolynomial, basis: IdealBasis, budget: int = 10_000_000) -> RealPolynomial:
    """Normal form of p modulo a (Groebner) basis, primitive up to sign."""
    variables = p.variables
    eng = _Engine(basis.order, variables, budget)
    elts = [_Elt(_to_int_terms(g, eng.pk), eng.pk) for g in basis.generators
            if not g.is_zero()]
    r, _ = eng.reduce_full(_to_int_terms(p, eng.pk), elts)
    return _from_int_terms(r, eng.pk, variables)


def verify_groebner(basis: IdealBasis, budget: int = 50_000_000) -> bool:
    """Buchberger criterion: every S-polynomial of the basis reduces to zero."""
    gens = [g for g in basis.generators if not g.is_zero()]
    if len(gens) <= 1:
        return True
    variables = gens[0].variables
    eng = _Engine(basis.order, variables, budget)
    elts = [_Elt(_to_int_terms(g, eng.pk), eng.pk) for g in gens]
    for i in range(len(elts)):
        for j in range(i + 1, len(elts)):
            s, _ = eng.spoly(elts[i], elts[j])
            if s and eng.reduce_full(s, elts)[0]:
                return False
    return True


def eliminate(basis: IdealBasis, keep: Sequence[str]) -> List[RealPolynomial]:
    """Basis elements supported on `keep`; these generate the elimination ideal.

    Requires an elimination-compatible basis: pure lex with every discarded
    variable ordered before every kept one, or an "elim" block order whose
    drop block is exactly the complement of `keep`.
    """
    keep = tuple(keep)
    order_vars = basis.order.variable_order
    drop = [v for v in order_vars if v not in keep]
    if basis.order.kind == "lex":
        keep_pos = [order_vars.index(v) for v in keep]
        drop_pos = [order_vars.index(v) for v in drop]
        if drop_pos and keep_pos and max(drop_pos) > min(keep_pos):
            raise ValueError("order incompatible with requested elimination")
    elif basis.order.kind == "elim":
        if set(order_vars[:basis.order.n_drop]) != set(drop):
            raise ValueError("order incompatible with requested elimination")
    else:
        raise ValueError("grevlex basis cannot be used for elimination")
    out = []
    for g in basis.generators:
        if set(g.support_variables()) <= set(keep):
            out.append(g)
    return out
