"""Mixed polynomials: polynomials in complex variables and their conjugates.

A monomial is c * z^nu * conj(z)^mu with nu, mu exponent vectors over the
declared variables and c a Gaussian rational.  Evaluation binds the conjugate
slots to actual complex conjugates of the point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .gaussian import GaussianRational
from .realpoly import RealPolynomial

Key = Tuple[Tuple[int, ...], Tuple[int, ...]]


class MixedMonomial:
    __slots__ = ("nu", "mu", "coeff")

    def __init__(self, nu: Sequence[int], mu: Sequence[int], coeff: GaussianRational):
        self.nu = tuple(int(x) for x in nu)
        self.mu = tuple(int(x) for x in mu)
        self.coeff = GaussianRational.coerce(coeff)
        if any(x < 0 for x in self.nu) or any(x < 0 for x in self.mu):
            raise ValueError("negative exponents are not allowed")
        if self.coeff.is_zero():
            raise ValueError("zero coefficient monomial")

    def polar_degree(self) -> int:
        return sum(self.nu) - sum(self.mu)

    def radial_degree(self) -> int:
        return sum(self.nu) + sum(self.mu)

    def __repr__(self):
        return f"MixedMonomial({self.nu}, {self.mu}, {self.coeff})"


class MixedPolynomial:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Dict[Key, GaussianRational] | None = None):
        self.variables: Tuple[str, ...] = tuple(variables)
        n = len(self.variables)
        clean: Dict[Key, GaussianRational] = {}
        if terms:
            for (nu, mu), c in terms.items():
                c = GaussianRational.coerce(c)
                if c.is_zero():
                    continue
                nu = tuple(int(x) for x in nu)
                mu = tuple(int(x) for x in mu)
                if len(nu) != n or len(mu) != n:
                    raise ValueError("exponent arity mismatch")
                if any(x < 0 for x in nu + mu):
                    raise ValueError("negative exponent")
                key = (nu, mu)
                s = clean.get(key)
                s = c if s is None else s + c
                if s.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = s
        self.terms = clean

    # -- constructors ------------------------------------------------------------

    @staticmethod
    def zero(variables: Sequence[str]) -> "MixedPolynomial":
        return MixedPolynomial(variables, {})

    @staticmethod
    def const(variables: Sequence[str], c) -> "MixedPolynomial":
        n = len(variables)
        z = (0,) * n
        return MixedPolynomial(variables, {(z, z): GaussianRational.coerce(c)})

    @staticmethod
    def from_monomials(variables: Sequence[str], monomials: Sequence[MixedMonomial]) -> "MixedPolynomial":
        terms: Dict[Key, GaussianRational] = {}
        for m in monomials:
            key = (m.nu, m.mu)
            s = terms.get(key)
            s = m.coeff if s is None else s + m.coeff
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return MixedPolynomial(variables, terms)

    def monomials(self) -> List[MixedMonomial]:
        return [MixedMonomial(nu, mu, c) for (nu, mu), c in self.sorted_terms()]

    # -- queries -------------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        def key(item):
            (nu, mu), _ = item
            e = tuple(a + b for a, b in zip(nu, mu))
            return (sum(e), e, nu)
        return sorted(self.terms.items(), key=key, reverse=True)

    def coefficient(self, nu: Sequence[int], mu: Sequence[int]) -> GaussianRational:
        return self.terms.get((tuple(nu), tuple(mu)), GaussianRational(0))

    # -- arithmetic ------------------------------------------------------------------

    def _check(self, other: "MixedPolynomial"):
        if self.variables != other.variables:
            raise ValueError("variable contexts differ")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MixedPolynomial.const(self.variables, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return MixedPolynomial(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return MixedPolynomial(self.variables, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MixedPolynomial.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            if c.is_zero():
                return MixedPolynomial.zero(self.variables)
            return MixedPolynomial(self.variables, {k: cc * c for k, cc in self.terms.items()})
        self._check(other)
        out: Dict[Key, GaussianRational] = {}
        for (n1, m1), c1 in self.terms.items():
            for (n2, m2), c2 in other.terms.items():
                k = (tuple(a + b for a, b in zip(n1, n2)),
                     tuple(a + b for a, b in zip(m1, m2)))
                s = out.get(k)
                p = c1 * c2
                s = p if s is None else s + p
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
        return MixedPolynomial(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MixedPolynomial.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MixedPolynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset((k, (c.re, c.im)) for k, c in self.terms.items())))

    # -- the structure maps -------------------------------------------------------------

    def conj_poly(self) -> "MixedPolynomial":
        """Swap nu and mu and conjugate coefficients: the polynomial of conj(f)."""
        return MixedPolynomial(self.variables,
                               {(mu, nu): c.conj() for (nu, mu), c in self.terms.items()})

    def evaluate(self, point: Sequence[GaussianRational]) -> GaussianRational:
        if len(point) != len(self.variables):
            raise ValueError("point arity mismatch")
        pts = [GaussianRational.coerce(p) for p in point]
        conj = [p.conj() for p in pts]
        total = GaussianRational(0)
        for (nu, mu), c in self.terms.items():
            t = c
            for p, k in zip(pts, nu):
                if k:
                    t = t * p ** k
            for p, k in zip(conj, mu):
                if k:
                    t = t * p ** k
            total = total + t
        return total

    def subs_value(self, name: str, value: GaussianRational) -> "MixedPolynomial":
        """Substitute z_name = value (and its conjugate slot = conj(value))."""
        i = self.variables.index(name)
        val = GaussianRational.coerce(value)
        cval = val.conj()
        rest = tuple(v for j, v in enumerate(self.variables) if j != i)
        out: Dict[Key, GaussianRational] = {}
        for (nu, mu), c in self.terms.items():
            c2 = c * val ** nu[i] * cval ** mu[i]
            if c2.is_zero():
                continue
            k = (tuple(x for j, x in enumerate(nu) if j != i),
                 tuple(x for j, x in enumerate(mu) if j != i))
            s = out.get(k)
            s = c2 if s is None else s + c2
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return MixedPolynomial(rest, out)

    def realify_parts(self, real_names: Sequence[str]) -> Tuple[RealPolynomial, RealPolynomial]:
        """Write f(z, conj z) with z_j = x_j + i*y_j as g + i*h over the given 2n real names.

        real_names lists the substituted real variables in the order
        (x_1, y_1, x_2, y_2, ...).
        """
        n = len(self.variables)
        if len(real_names) != 2 * n:
            raise ValueError("need two real names per complex variable")
        vars_r = tuple(real_names)
        g: Dict[Tuple[int, ...], Fraction] = {}
        h: Dict[Tuple[int, ...], Fraction] = {}
        zero = (0,) * (2 * n)

        # cache powers of (x_j +- i y_j) as dicts exponent -> GaussianRational
        pow_cache: Dict[Tuple[int, int, int], Dict[Tuple[int, ...], GaussianRational]] = {}

        def binom_pow(j: int, k: int, conj: int) -> Dict[Tuple[int, ...], GaussianRational]:
            key = (j, k, conj)
            if key in pow_cache:
                return pow_cache[key]
            if k == 0:
                res = {zero: GaussianRational(1)}
            else:
                prev = binom_pow(j, k - 1, conj)
                res = {}
                ix, iy = 2 * j, 2 * j + 1
                im_unit = GaussianRational(0, -1 if conj else 1)
                for e, c in prev.items():
                    ex = list(e)
                    ex[ix] += 1
                    _acc(res, tuple(ex), c)
                    ey = list(e)
                    ey[iy] += 1
                    _acc(res, tuple(ey), c * im_unit)
            pow_cache[key] = res
            return res

        for (nu, mu), c in self.terms.items():
            parts = [{zero: c}]
            for j in range(n):
                if nu[j]:
                    parts.append(binom_pow(j, nu[j], 0))
                if mu[j]:
                    parts.append(binom_pow(j, mu[j], 1))
            prod = parts[0]
            for p in parts[1:]:
                nxt: Dict[Tuple[int, ...], GaussianRational] = {}
                for e1, c1 in prod.items():
                    for e2, c2 in p.items():
                        _acc(nxt, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
                prod = nxt
            for e, cc in prod.items():
                if cc.re:
                    g[e] = g.get(e, Fraction(0)) + cc.re
                if cc.im:
                    h[e] = h.get(e, Fraction(0)) + cc.im
        return RealPolynomial(vars_r, g), RealPolynomial(vars_r, h)

    # -- printing ----------------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (nu, mu), c in self.sorted_terms():
            factors = []
            for v, k in zip(self.variables, nu):
                if k:
                    factors.append(v if k == 1 else f"{v}^{k}")
            for v, k in zip(self.variables, mu):
                if k:
                    factors.append(f"~{v}" if k == 1 else f"~{v}^{k}")
            mono = "*".join(factors)
            neg, cs = _coeff_display(c)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            if not parts:
                parts.append(body if not neg else f"-{body}")
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"MixedPolynomial({self.variables!r}, {str(self)!r})"


def _acc(d, k, c):
    s = d.get(k)
    s = c if s is None else s + c
    if s.is_zero():
        d.pop(k, None)
    else:
        d[k] = s


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _coeff_display(c: GaussianRational) -> Tuple[bool, str]:
    """(negated, printable) with the sign pulled out for pure real/imaginary coefficients."""
    if c.im == 0:
        return c.re < 0, _frac_str(abs(c.re))
    if c.re == 0:
        mag = abs(c.im)
        return c.im < 0, "i" if mag == 1 else f"{_frac_str(mag)}*i"
    re_s = _frac_str(c.re)
    im_mag = _frac_str(abs(c.im)) + "*i" if abs(c.im) != 1 else "i"
    op = "+" if c.im > 0 else "-"
    return False, f"({re_s}{op}{im_mag})"
