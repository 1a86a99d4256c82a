"""Degree structure of mixed polynomials, chart affinization, and realification."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .gaussian import GaussianRational
from .mixedpoly import MixedPolynomial
from .realpoly import RealPolynomial


@dataclass
class DegreeReport:
    polar_degree: Optional[int]
    radial_degree: Optional[int]
    r: Optional[int]
    is_strongly_homogeneous: bool
    is_1_convenient: bool
    is_monic_in: Tuple[str, ...]
    polar_range: Tuple[int, int]
    radial_range: Tuple[int, int]


def degree_report(F: MixedPolynomial) -> DegreeReport:
    """Polar/radial degrees, homogeneity, 1-convenience and per-variable monicity."""
    if F.is_zero():
        raise ValueError("zero polynomial has no degree report")
    polar = {m.polar_degree() for m in F.monomials()}
    radial = {m.radial_degree() for m in F.monomials()}
    homogeneous = len(polar) == 1 and len(radial) == 1
    q = polar.pop() if len(polar) == 1 else None
    d = radial.pop() if len(radial) == 1 else None
    r = None
    if homogeneous and q is not None and d is not None:
        if (d - q) % 2 != 0 or d < q:
            homogeneous = False
        else:
            r = (d - q) // 2

    n = len(F.variables)
    convenient = True
    for i in range(n):
        if not any(nu[i] == 0 and mu[i] == 0 for (nu, mu) in F.terms):
            convenient = False
            break

    monic: List[str] = []
    if homogeneous and r is not None and q is not None:
        for i, v in enumerate(F.variables):
            nu = tuple((q + r) if j == i else 0 for j in range(n))
            mu = tuple(r if j == i else 0 for j in range(n))
            if (nu, mu) in F.terms:
                monic.append(v)

    pol = sorted(m.polar_degree() for m in F.monomials())
    rad = sorted(m.radial_degree() for m in F.monomials())
    return DegreeReport(
        polar_degree=q if homogeneous else None,
        radial_degree=d if homogeneous else None,
        r=r if homogeneous else None,
        is_strongly_homogeneous=homogeneous,
        is_1_convenient=convenient,
        is_monic_in=tuple(monic),
        polar_range=(pol[0], pol[-1]),
        radial_range=(rad[0], rad[-1]),
    )


def action_check(F: MixedPolynomial, trials: int = 10, seed: int = 0):
    """Exact test of the C*-equivariance f(lambda . z) = (lambda*conj(lambda))^r lambda^q f(z).

    Returns (True, None) or (False, witness) with witness = (lambda, point).
    """
    rep = degree_report(F)
    if not rep.is_strongly_homogeneous:
        raise ValueError("polynomial is not strongly mixed homogeneous")
    q, r = rep.polar_degree, rep.r
    rng = random.Random(seed)

    def rand_g():
        return GaussianRational(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
                                Fraction(rng.randint(-6, 6), rng.randint(1, 4)))

    lambdas = [GaussianRational(2), GaussianRational(Fraction(3, 2)),
               GaussianRational(Fraction(3, 5), Fraction(4, 5))]
    while len(lambdas) < max(3, trials // 2):
        lam = rand_g()
        if not lam.is_zero():
            lambdas.append(lam)
    for _ in range(trials):
        pt = [rand_g() for _ in F.variables]
        for lam in lambdas:
            scaled = [lam * p for p in pt]
            lhs = F.evaluate(scaled)
            factor = (lam * lam.conj()) ** r * lam ** q
            rhs = factor * F.evaluate(pt)
            if lhs != rhs:
                return False, (lam, pt)
    return True, None


def affinize(F: MixedPolynomial, chart: int = 3,
             affine_names: Sequence[str] = ("z", "w")) -> MixedPolynomial:
    """Restrict a strongly homogeneous 3-variable F to the chart {z_chart != 0}.

    Chart 3 sets (z, w) = (z1/z3, z2/z3) and divides by z3^(q+r) conj(z3)^r;
    charts 1 and 2 are the cyclic analogues.
    """
    if len(F.variables) != 3:
        raise ValueError("affinize expects a 3-variable polynomial")
    if chart not in (1, 2, 3):
        raise ValueError("chart index out of range")
    rep = degree_report(F)
    if not rep.is_strongly_homogeneous:
        raise ValueError("polynomial is not strongly mixed homogeneous")
    keep = [i for i in range(3) if i != chart - 1]
    out = {}
    for (nu, mu), c in F.terms.items():
        nu2 = tuple(nu[i] for i in keep)
        mu2 = tuple(mu[i] for i in keep)
        out[(nu2, mu2)] = c
    return MixedPolynomial(tuple(affine_names), out)


def homogenize(f: MixedPolynomial, q: int, r: int,
               names: Sequence[str] = ("z1", "z2", "z3"),
               chart: int = 3) -> MixedPolynomial:
    """Inverse of affinize: re-insert the chart variable to polar degree q, radial q+2r."""
    if len(f.variables) != 2:
        raise ValueError("homogenize expects a 2-variable polynomial")
    out = {}
    for (nu, mu), c in f.terms.items():
        a = (q + r) - sum(nu)
        b = r - sum(mu)
        if a < 0 or b < 0:
            raise ValueError("affine polynomial exceeds the target degrees")
        nu3 = list(nu)
        mu3 = list(mu)
        nu3.insert(chart - 1, a)
        mu3.insert(chart - 1, b)
        out[(tuple(nu3), tuple(mu3))] = c
    return MixedPolynomial(tuple(names), out)


@dataclass
class RealifiedSystem:
    g: RealPolynomial
    h: RealPolynomial
    J: RealPolynomial
    variables: Tuple[str, str, str, str] = ("x", "y", "u", "v")


def realify(f: MixedPolynomial,
            names: Tuple[str, str, str, str] = ("x", "y", "u", "v")) -> RealifiedSystem:
    """Split a two-variable mixed polynomial into real and imaginary parts.

    With z = x + iy and w = u + iv, returns g, h with f = g + ih, together with
    the pencil Jacobian J = g_x h_y - g_y h_x.
    """
    if len(f.variables) != 2:
        raise ValueError("realify expects exactly two complex variables")
    g, h = f.realify_parts(names)
    x, y = names[0], names[1]
    J = g.derivative(x) * h.derivative(y) - g.derivative(y) * h.derivative(x)
    return RealifiedSystem(g=g, h=h, J=J, variables=tuple(names))


def realify_univariate(f: MixedPolynomial,
                       names: Tuple[str, str] = ("x", "y")) -> Tuple[RealPolynomial, RealPolynomial]:
    """Re/Im split for a one-variable mixed polynomial (z = x + iy)."""
    if len(f.variables) != 1:
        raise ValueError("expected a univariate mixed polynomial")
    return f.realify_parts(names)


def contract(F: MixedPolynomial, r: Sequence[int] | int) -> MixedPolynomial:
    """Apply the contraction z_i^{r_i} conj(z_i)^{r_i} -> 1 monomial by monomial.

    In a monomial where variable i carries a full conjugate pair (min(nu_i, mu_i)
    >= r_i) the pair is removed; where the variable carries no pair at all
    (min = 0) the monomial is untouched; anything in between is an error.
    """
    n = len(F.variables)
    rs = [int(r)] * n if isinstance(r, int) else [int(x) for x in r]
    if len(rs) != n:
        raise ValueError("one contraction exponent per variable required")
    out = {}
    for (nu, mu), c in F.terms.items():
        nu2, mu2 = list(nu), list(mu)
        for i, ri in enumerate(rs):
            if ri == 0:
                continue
            m = min(nu2[i], mu2[i])
            if m >= ri:
                nu2[i] -= ri
                mu2[i] -= ri
            elif m == 0:
                continue
            else:
                raise ValueError(
                    f"contraction exponent {ri} exceeds available conjugate pair "
                    f"min({nu2[i]},{mu2[i]}) in variable {F.variables[i]}")
        out[(tuple(nu2), tuple(mu2))] = c
    return MixedPolynomial(F.variables, out)
