"""Sparse multivariate polynomials over the rationals.

A RealPolynomial maps exponent tuples (one entry per declared variable) to
nonzero Fraction coefficients.  The canonical term order used for printing and
for leading-term queries is graded lexicographic on the declared variable
order, ties broken lexicographically by exponent vector.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from typing import Dict, Iterable, List, Sequence, Tuple

Exponent = Tuple[int, ...]


def _grlex_key(e: Exponent):
    return (sum(e), e)


class RealPolynomial:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Exponent, Fraction] | None = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            n = len(self.variables)
            for e, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                e = tuple(int(x) for x in e)
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for {n} variables")
                clean[e] = clean.get(e, Fraction(0)) + c
                if clean[e] == 0:
                    del clean[e]
        self.terms = clean

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "RealPolynomial":
        return RealPolynomial(variables, {})

    @staticmethod
    def const(variables: Sequence[str], c) -> "RealPolynomial":
        return RealPolynomial(variables, {(0,) * len(variables): Fraction(c)})

    @staticmethod
    def var(variables: Sequence[str], name: str) -> "RealPolynomial":
        idx = list(variables).index(name)
        e = [0] * len(variables)
        e[idx] = 1
        return RealPolynomial(variables, {tuple(e): Fraction(1)})

    # -- basic queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in canonical (descending graded-lex) order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def leading_coeff_lex(self, order: Sequence[str] | None = None) -> Fraction:
        """Leading coefficient under pure lex for the given variable order."""
        if not self.terms:
            return Fraction(0)
        if order is None:
            perm = list(range(len(self.variables)))
        else:
            perm = [self.variables.index(v) for v in order]
        e = max(self.terms, key=lambda t: tuple(t[i] for i in perm))
        return self.terms[e]

    def support_variables(self) -> Tuple[str, ...]:
        used = [False] * len(self.variables)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    # -- ring operations -------------------------------------------------------

    def _check_same_context(self, other: "RealPolynomial"):
        if self.variables != other.variables:
            raise ValueError(f"variable contexts differ: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealPolynomial.const(self.variables, other)
        self._check_same_context(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return RealPolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return RealPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealPolynomial.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return RealPolynomial.zero(self.variables)
            return RealPolynomial(self.variables, {e: cc * c for e, cc in self.terms.items()})
        self._check_same_context(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return RealPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = RealPolynomial.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RealPolynomial.const(self.variables, other)
        if not isinstance(other, RealPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def exact_div(self, other: "RealPolynomial") -> "RealPolynomial":
        """Exact polynomial division; raises ValueError when not divisible."""
        if isinstance(other, (int, Fraction)):
            other = RealPolynomial.const(self.variables, other)
        self._check_same_context(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self.terms)
        quo: Dict[Exponent, Fraction] = {}
        le, lc = other.leading_term()
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            q = tuple(a - b for a, b in zip(e, le))
            if any(x < 0 for x in q):
                raise ValueError("polynomials are not exactly divisible")
            qc = c / lc
            quo[q] = quo.get(q, Fraction(0)) + qc
            for e2, c2 in other.terms.items():
                t = tuple(a + b for a, b in zip(q, e2))
                s = rem.get(t, Fraction(0)) - qc * c2
                if s == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = s
        return RealPolynomial(self.variables, quo)

    def divides(self, other: "RealPolynomial") -> bool:
        try:
            other.exact_div(self)
            return True
        except ValueError:
            return False

    # -- content / primitive part ----------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = int_gcd(num, c.numerator)
            den = den * c.denominator // int_gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_part(self) -> "RealPolynomial":
        """self / content, sign-fixed so the graded-lex leading coefficient is positive."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self * (1 / c)

    def derivative(self, name: str) -> "RealPolynomial":
        i = self.variables.index(name)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
        return RealPolynomial(self.variables, out)

    # -- evaluation / substitution ----------------------------------------------

    def eval(self, point: Sequence) -> Fraction:
        if len(point) != len(self.variables):
            raise ValueError("point arity mismatch")
        vals = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def subs_var(self, name: str, value) -> "RealPolynomial":
        """Substitute a rational value for one variable (variable stays declared)."""
        i = self.variables.index(name)
        val = Fraction(value)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            c2 = c * val ** e[i]
            if c2 == 0:
                continue
            e2 = list(e)
            e2[i] = 0
            k = tuple(e2)
            s = out.get(k, Fraction(0)) + c2
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return RealPolynomial(self.variables, out)

    def subs_poly(self, name: str, value: "RealPolynomial") -> "RealPolynomial":
        """Substitute a polynomial (same context) for one variable."""
        i = self.variables.index(name)
        out = RealPolynomial.zero(self.variables)
        powers = {0: RealPolynomial.const(self.variables, 1)}
        maxk = max((e[i] for e in self.terms), default=0)
        for k in range(1, maxk + 1):
            powers[k] = powers[k - 1] * value
        for e, c in self.terms.items():
            e2 = list(e)
            k = e2[i]
            e2[i] = 0
            out = out + RealPolynomial(self.variables, {tuple(e2): c}) * powers[k]
        return out

    def restrict(self, variables: Sequence[str]) -> "RealPolynomial":
        """Reinterpret over a smaller variable tuple; unused variables must not occur."""
        variables = tuple(variables)
        idx = [self.variables.index(v) for v in variables]
        drop = [i for i in range(len(self.variables)) if self.variables[i] not in variables]
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise ValueError("polynomial involves a dropped variable")
            out[tuple(e[i] for i in idx)] = c
        return RealPolynomial(variables, out)

    def extend(self, variables: Sequence[str]) -> "RealPolynomial":
        """Reinterpret over a larger variable tuple containing the current one."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        n = len(variables)
        out: Dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for p, x in zip(pos, e):
                e2[p] = x
            out[tuple(e2)] = c
        return RealPolynomial(variables, out)

    # -- univariate views --------------------------------------------------------

    def to_dense(self, name: str) -> List[Fraction]:
        """Dense ascending coefficient list; requires all other variables absent."""
        i = self.variables.index(name)
        for e, _ in self.terms.items():
            if any(x and j != i for j, x in enumerate(e)):
                raise ValueError("polynomial is not univariate in " + name)
        d = self.degree_in(name)
        out = [Fraction(0)] * (d + 1 if d >= 0 else 1)
        for e, c in self.terms.items():
            out[e[i]] = c
        return out

    def coeffs_in(self, name: str) -> List["RealPolynomial"]:
        """Coefficients (ascending) of powers of `name`, as polynomials in the others."""
        i = self.variables.index(name)
        rest = tuple(v for v in self.variables if v != name)
        d = self.degree_in(name)
        buckets: List[Dict[Exponent, Fraction]] = [dict() for _ in range(max(d + 1, 1))]
        for e, c in self.terms.items():
            k = e[i]
            e2 = tuple(x for j, x in enumerate(e) if j != i)
            buckets[k][e2] = c
        return [RealPolynomial(rest, b) for b in buckets]

    @staticmethod
    def from_coeffs(name: str, coeffs: Sequence["RealPolynomial"], variables: Sequence[str]) -> "RealPolynomial":
        variables = tuple(variables)
        i = variables.index(name)
        out: Dict[Exponent, Fraction] = {}
        for k, p in enumerate(coeffs):
            for e, c in p.extend(variables).terms.items():
                e2 = list(e)
                e2[i] += k
                out[tuple(e2)] = out.get(tuple(e2), Fraction(0)) + c
        return RealPolynomial(variables, out)

    # -- printing -----------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}")
                for v, k in zip(self.variables, e) if k
            )
            if not mono:
                body = _coeff_str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{_coeff_str(abs(c))}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self):
        return f"RealPolynomial({self.variables!r}, {str(self)!r})"


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# -- gcd machinery -------------------------------------------------------------


def gcd_univariate_dense(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    """Monic gcd of dense ascending univariate rational polynomials."""

    def strip(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a = strip([Fraction(c) for c in a])
    b = strip([Fraction(c) for c in b])
    while b:
        # remainder of a by b
        r = a[:]
        db, lb = len(b) - 1, b[-1]
        while len(r) - 1 >= db and strip(r):
            dr = len(r) - 1
            q = r[-1] / lb
            for i in range(db + 1):
                r[dr - db + i] -= q * b[i]
            r = strip(r)
            if not r:
                break
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def poly_gcd(p: RealPolynomial, q: RealPolynomial) -> RealPolynomial:
    """Primitive gcd over Q[vars] by recursive primitive PRS (fine through ~3 variables)."""
    if p.variables != q.variables:
        raise ValueError("variable contexts differ")
    if p.is_zero():
        return q.primitive_part()
    if q.is_zero():
        return p.primitive_part()
    used = tuple(sorted(set(p.support_variables()) | set(q.support_variables()),
                        key=p.variables.index))
    if not used:
        return RealPolynomial.const(p.variables, 1)
    if len(used) == 1:
        name = used[0]
        g = gcd_univariate_dense(
            p.restrict((name,)).to_dense(name), q.restrict((name,)).to_dense(name))
        out = RealPolynomial((name,), {(k,): c for k, c in enumerate(g)})
        return out.extend(p.variables).primitive_part()
    main = used[0]
    a = _PolyU(p, main)
    b = _PolyU(q, main)
    ca, pa = a.content_and_primitive()
    cb, pb = b.content_and_primitive()
    cont = poly_gcd(ca, cb)
    if pa.deg() < pb.deg():
        pa, pb = pb, pa
    while True:
        r = pa.prem(pb)
        if r.deg() < 0:
            break
        _, r = r.content_and_primitive()
        pa, pb = pb, r
        if pb.deg() == 0:
            return cont.extend(p.variables).primitive_part()
    g = pb.content_and_primitive()[1]
    result = cont.extend(p.variables) * g.to_poly()
    return result.primitive_part()


class _PolyU:
    """A polynomial viewed as univariate in `main` with RealPolynomial coefficients."""

    def __init__(self, p: RealPolynomial | None, main: str, coeffs=None, variables=None):
        if p is not None:
            self.variables = p.variables
            self.main = main
            self.coeffs = p.coeffs_in(main)
        else:
            self.variables = variables
            self.main = main
            self.coeffs = list(coeffs)
        while self.coeffs and self.coeffs[-1].is_zero():
            self.coeffs.pop()

    def deg(self) -> int:
        return len(self.coeffs) - 1

    def lc(self) -> RealPolynomial:
        return self.coeffs[-1]

    def content_and_primitive(self):
        rest = self.coeffs[0].variables if self.coeffs else ()
        if not self.coeffs:
            zero = RealPolynomial.zero(rest)
            return zero, self
        c = self.coeffs[0]
        for k in self.coeffs[1:]:
            c = poly_gcd(c, k)
            if c.is_constant() and not c.is_zero():
                break
        c = c.primitive_part() if not c.is_zero() else c
        if c.is_zero():
            return c, self
        prim = _PolyU(None, self.main, [k.exact_div(c) for k in self.coeffs], self.variables)
        return c, prim

    def prem(self, other: "_PolyU") -> "_PolyU":
        """Pseudo-remainder of self by other."""
        r = list(self.coeffs)
        d = other.deg()
        lo = other.lc()
        while len(r) - 1 >= d and r:
            dr = len(r) - 1
            lr = r[-1]
            r = [c * lo for c in r]
            for i in range(d + 1):
                r[dr - d + i] = r[dr - d + i] - lr * other.coeffs[i]
            while r and r[-1].is_zero():
                r.pop()
        return _PolyU(None, self.main, r, self.variables)

    def to_poly(self) -> RealPolynomial:
        return RealPolynomial.from_coeffs(self.main, self.coeffs, self.variables)


def squarefree_part(p: RealPolynomial) -> RealPolynomial:
    """Product of the distinct irreducible factors of p, primitive, positive lead."""
    if p.is_zero():
        return p
    p = p.primitive_part()
    used = p.support_variables()
    if not used:
        return RealPolynomial.const(p.variables, 1)
    g = p
    for v in used:
        g = poly_gcd(g, p.derivative(v))
        if g.is_constant():
            return p.primitive_part()
    return p.exact_div(g).primitive_part()
