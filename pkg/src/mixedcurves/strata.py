"""The gamma-division of the parameter plane: a certified cell decomposition of
P^1 adapted to the branching-locus curve {R(u,v) = 0}.

Strips between critical u-values carry sorted stacks of curve arcs (exact
Sturm data at rational sample lines).  On each critical line the special
points (vertical tangents, singular points, isolated points) are enclosed in
"no-escape" rectangles: interval arithmetic excludes the curve from the top
and bottom edges, so arcs can only enter through the sides, and the exact
side counts (L, R) determine the local gluing.  Faces are merged across
critical lines through the open gaps between consecutive on-line objects, and
a vertex at infinity closes the sphere.

All three worked curves are even in v (conjugation symmetry), which halves
every eliminating resultant via R(u, v) = A(u, v^2); the general path keeps
the same pipeline with full-size resultants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .gaussian import GaussianRational
from .intervals import BoxEvaluator, Interval
from .isolate import (IntPoly, RootInterval, from_real_poly, ip_eval_sign,
                      ip_primitive, isolate_real_roots, sturm_chain,
                      sturm_count, to_int_poly)
from .mixedpoly import MixedPolynomial
from .realpoly import RealPolynomial, poly_gcd, squarefree_part
from .resultants import (BivariateInt, gcd_univariate_modular,
                         resultant_modular, squarefree_big)


class DecompositionError(RuntimeError):
    pass


@dataclass
class Cell:
    id: int
    dim: int                       # 0, 1, 2
    gamma: Optional[int] = None
    gamma_status: str = ""         # "sample" | "cluster-certified" | "cluster-stable" | "projective" | ""
    sample: Optional[Tuple[Fraction, Fraction]] = None
    is_unbounded: bool = False
    is_infinity: bool = False
    is_isolated_point: bool = False
    positive_dimensional_fiber: bool = False
    boundary: Set[int] = field(default_factory=set)    # ids of lower-dim cells
    label: str = ""


@dataclass
class GammaDivision:
    R: RealPolynomial
    cells: Dict[int, Cell]
    faces: List[int]
    edges: List[int]
    vertices: List[int]
    incidence: Dict[int, Set[int]]          # cell id -> incident cell ids (all dims)
    infinity_id: int
    meta: dict = field(default_factory=dict)

    def cell(self, cid: int) -> Cell:
        return self.cells[cid]

    def face_boundary_components(self, fid: int) -> int:
        """Connected components of the face's boundary in the incidence graph
        (isolated points and a bare infinity vertex count as components)."""
        nodes = set(self.cells[fid].boundary)
        adj = {c: set() for c in nodes}
        for c in nodes:
            if self.cells[c].dim == 1:
                for vtx in self.cells[c].boundary:
                    if vtx in nodes:
                        adj[c].add(vtx)
                        adj[vtx].add(c)
        comps = 0
        seen = set()
        for c in nodes:
            if c in seen:
                continue
            comps += 1
            stack = [c]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(adj[x] - seen)
        return comps

    def cell_chi_c(self, cid: int) -> int:
        """Euler characteristic with compact supports of the open cell."""
        cell = self.cells[cid]
        if cell.dim == 0:
            return 1
        if cell.dim == 1:
            return 0 if not cell.boundary else -1
        return 2 - self.face_boundary_components(cid)

    def chi_total(self) -> int:
        """Sum of chi_c over all cells; equals chi(S^2) = 2 for a valid division."""
        return sum(self.cell_chi_c(c) for c in self.cells)

    def gamma_table(self) -> Dict[str, List[int]]:
        out = {"faces": [], "edges": [], "vertices": []}
        for cid in self.faces:
            out["faces"].append(self.cells[cid].gamma)
        for cid in self.edges:
            out["edges"].append(self.cells[cid].gamma)
        for cid in self.vertices:
            out["vertices"].append(self.cells[cid].gamma)
        return out


# -- helper: rational sqrt enclosure -------------------------------------------


def _sqrt_bounds(x: Fraction, bits: int = 40) -> Tuple[Fraction, Fraction]:
    """lo <= sqrt(x) <= hi with dyadic outward rounding (x >= 0)."""
    from math import isqrt
    if x < 0:
        raise ValueError("negative radicand")
    scale = 1 << (2 * bits)
    n = (x.numerator * scale) // x.denominator
    r = isqrt(n)
    lo = Fraction(r, 1 << bits)
    hi = Fraction(r + 2, 1 << bits)
    return lo, hi


# -- critical data ---------------------------------------------------------------


@dataclass
class _SpecialPoint:
    """A candidate on-line special point above one critical u-value."""
    v_lo: Fraction
    v_hi: Fraction
    kind: str          # "tangent" | "vertex" | "isolated" | "axis"
    w_root: Optional[RootInterval] = None   # for the even path
    on_axis: bool = False


class _CriticalData:
    """Critical u-values and the special points above each, exact and refinable."""

    def __init__(self, R: RealPolynomial):
        self.R = R
        uv = ("u", "v")
        if R.variables != uv:
            R = R.restrict(uv) if set(R.support_variables()) <= set(uv) else R
        self.even = all(e[1] % 2 == 0 for e in R.terms)
        self.Rchain = None
        self._build()

    def _build(self):
        R = self.R
        if self.even:
            # R(u, v) = A(u, w), w = v^2
            terms = {(e[0], e[1] // 2): c for e, c in R.terms.items()}
            A = RealPolynomial(("u", "w"), terms)
            self.A = A
            self.B = A.derivative("w")
            self.Au = A.derivative("u")
            self.r0 = to_int_poly(A.subs_var("w", 0).restrict(("u",)).to_dense("u"))
            PA = BivariateInt.from_real(A, "u", "w")
            PB = BivariateInt.from_real(self.B, "u", "w")
            PAu = BivariateInt.from_real(self.Au, "u", "w")
            res_ab = resultant_modular(PA, PB) if self.B.degree_in("w") >= 0 and not self.B.is_zero() else [1]
            if not res_ab:
                raise DecompositionError("curve has a one-dimensional critical locus")
            self.res_ab_u = squarefree_big(res_ab)
            # w-side projection of {A = B = 0}
            PAw = BivariateInt.from_real(A, "w", "u")
            PBw = BivariateInt.from_real(self.B, "w", "u")
            res_ab_w = resultant_modular(PAw, PBw) if not self.B.is_zero() else [1]
            self.res_ab_w = squarefree_big(res_ab_w) if res_ab_w else [1]
            # vertex coordinate polynomials: common zeros of {A, Au, B}
            res_aub = resultant_modular(PAu, PB) if not self.B.is_zero() and not self.Au.is_zero() else [1]
            res_aau = resultant_modular(PA, PAu) if not self.Au.is_zero() else [1]
            gu = gcd_univariate_modular(self.res_ab_u, squarefree_big(res_aub) if res_aub else [1])
            gu = gcd_univariate_modular(gu, squarefree_big(res_aau) if res_aau else [1])
            self.vertex_u = gu
            PAuw = BivariateInt.from_real(self.Au, "w", "u")
            res_aub_w = resultant_modular(PAuw, PBw) if not self.B.is_zero() and not self.Au.is_zero() else [1]
            res_aau_w = resultant_modular(PAw, PAuw) if not self.Au.is_zero() else [1]
            gw = gcd_univariate_modular(self.res_ab_w, squarefree_big(res_aub_w) if res_aub_w else [1])
            gw = gcd_univariate_modular(gw, squarefree_big(res_aau_w) if res_aau_w else [1])
            self.vertex_w = gw
            lcw = to_int_poly(A.coeffs_in("w")[-1].restrict(("u",)).to_dense("u")) \
                if A.degree_in("w") > 0 else [1]
            crit = _poly_mul_int(self.r0, self.res_ab_u)
            crit = _poly_mul_int(crit, lcw)
            self.crit_poly = squarefree_big(crit)
            # on-axis vertex polynomial: double roots of r0
            d0 = [i * c for i, c in enumerate(self.r0) if i]
            self.axis_vertex = gcd_univariate_modular(self.r0, d0) if len(self.r0) > 2 else [1]
        else:
            Rv = self.R.derivative("v")
            Ru = self.R.derivative("u")
            P = BivariateInt.from_real(self.R, "u", "v")
            Pv = BivariateInt.from_real(Rv, "u", "v")
            Pu = BivariateInt.from_real(Ru, "u", "v")
            res = resultant_modular(P, Pv)
            if not res:
                raise DecompositionError("curve has a one-dimensional critical locus")
            self.res_ab_u = squarefree_big(res)
            Pw = BivariateInt.from_real(self.R, "v", "u")
            Pvw = BivariateInt.from_real(Rv, "v", "u")
            Puw = BivariateInt.from_real(Ru, "v", "u")
            self.res_ab_w = squarefree_big(resultant_modular(Pw, Pvw))
            gu = gcd_univariate_modular(self.res_ab_u,
                                        squarefree_big(resultant_modular(Pu, Pv)))
            gu = gcd_univariate_modular(gu, squarefree_big(resultant_modular(P, Pu)))
            self.vertex_u = gu
            gv = gcd_univariate_modular(self.res_ab_w,
                                        squarefree_big(resultant_modular(Puw, Pvw)))
            gv = gcd_univariate_modular(gv, squarefree_big(resultant_modular(Pw, Puw)))
            self.vertex_w = gv
            lcv = to_int_poly(self.R.coeffs_in("v")[-1].restrict(("u",)).to_dense("u")) \
                if self.R.degree_in("v") > 0 else [1]
            self.crit_poly = squarefree_big(_poly_mul_int(self.res_ab_u, lcv))
            self.r0 = None
            self.axis_vertex = [1]

        self.crit_roots = isolate_real_roots(self.crit_poly) if len(self.crit_poly) > 1 else []
        self.w_roots = isolate_real_roots(self.res_ab_w) if len(self.res_ab_w) > 1 else []


def _poly_mul_int(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


# -- stacks --------------------------------------------------------------------------


class _Stack:
    """Sorted real roots of R(s, v) at a rational sample line u = s."""

    def __init__(self, R: RealPolynomial, s: Fraction):
        self.s = Fraction(s)
        spec = R.subs_var("u", self.s)
        dense = to_int_poly(spec.restrict(("v",)).to_dense("v")) if not spec.is_zero() else []
        if not dense:
            raise DecompositionError(f"R vanishes identically on the line u = {s}")
        self.poly = dense
        self.roots = isolate_real_roots(dense)

    def refine_all(self, width: Fraction):
        self.roots = [r.refine_to(width) for r in self.roots]

    def separate(self):
        """Refine until the isolating intervals are pairwise disjoint."""
        changed = True
        while changed:
            changed = False
            for i in range(len(self.roots) - 1):
                if self.roots[i].hi > self.roots[i + 1].lo:
                    self.roots[i] = self.roots[i].refine(steps=2)
                    self.roots[i + 1] = self.roots[i + 1].refine(steps=2)
                    changed = True


# -- the decomposition --------------------------------------------------------------


def decompose(R_in: RealPolynomial, max_refine: int = 60) -> GammaDivision:
    """Cell decomposition of P^1 adapted to {R = 0} (gamma labels unfilled)."""
    if R_in.is_zero():
        raise ValueError("zero polynomial has no division")
    uv = ("u", "v")
    R = R_in if R_in.variables == uv else R_in.restrict(uv)
    R = squarefree_part(R) if not _squarefree_certificate(R) else R.primitive_part()
    # vertical-line components break the stack model
    vcoeffs = R.coeffs_in("v")
    cont = vcoeffs[0]
    for c in vcoeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_constant():
            break
    if not cont.is_constant():
        raise DecompositionError("R has vertical-line components; pencil is degenerate there")

    crit = _CriticalData(R)
    bound = _global_root_bound(R)

    # strip sample values; critical roots are kept strictly interior to their
    # (open) boxes so that stack lines never hit a critical value exactly
    intervals = list(crit.crit_roots)
    boxes = [r.open_box() for r in intervals]
    for k in range(max_refine):
        ok = all(boxes[i][1] < boxes[i + 1][0] for i in range(len(boxes) - 1))
        if ok:
            break
        intervals = [r.refine(steps=1) for r in intervals]
        boxes = [r.open_box() for r in intervals]
    samples: List[Fraction] = []
    if intervals:
        samples.append(boxes[0][0] - 1)
        for i in range(len(boxes) - 1):
            samples.append((boxes[i][1] + boxes[i + 1][0]) / 2)
        samples.append(boxes[-1][1] + 1)
    else:
        samples.append(Fraction(0))

    stacks = [_Stack(R, s) for s in samples]
    for st in stacks:
        st.separate()

    builder = _Builder(R, crit, intervals, samples, stacks, bound)
    return builder.build()


def _squarefree_certificate(R: RealPolynomial) -> bool:
    """Cheap exact proof of squarefreeness: a degree-preserving line restriction
    with squarefree image plus trivial content in the main variable."""
    u, v = "u", "v"
    du = R.degree_in(u)
    lc = R.coeffs_in(u)[-1]
    coeffs = R.coeffs_in(u)
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = poly_gcd(cont, c)
        if cont.is_constant():
            break
    if not cont.is_constant():
        return False
    for v0 in range(0, 12):
        for val in (v0, -v0):
            if lc.is_constant() or lc.eval([Fraction(val)]) != 0:
                spec = R.subs_var(v, Fraction(val))
                if spec.degree_in(u) != du:
                    continue
                dense = to_int_poly(spec.restrict((u,)).to_dense(u))
                der = [i * c for i, c in enumerate(dense) if i]
                g = gcd_univariate_modular(dense, der)
                if len(g) == 1:
                    return True
            if v0 == 0:
                break
    return False


def _global_root_bound(R: RealPolynomial) -> Fraction:
    """B such that every on-curve point with |u| <= max-sample has |v| < B, via
    the Cauchy bound of the v-polynomial with interval coefficients; simplified
    to a coarse but sound coefficient bound."""
    # bound over each stack is computed per stack; this global value is only a
    # fallback for plotting windows
    m = max((abs(c) for c in R.terms.values()), default=Fraction(1))
    return m + 2


class _Builder:
    def __init__(self, R, crit: _CriticalData, intervals, samples, stacks, bound):
        self.R = R
        self.crit = crit
        self.intervals = intervals
        self.samples = samples
        self.stacks = stacks
        self.bound = bound
        self.Rint = BivariateInt.from_real(R, "u", "v")
        self.Rchain_cache: Dict[Fraction, Tuple[IntPoly, list]] = {}
        self.ev_R = BoxEvaluator(R)

    # -- exact counting helpers ---------------------------------------------------

    def _roots_between(self, s: Fraction, vlo: Fraction, vhi: Fraction) -> int:
        """Number of roots of R(s, .) in (vlo, vhi] (endpoints must be non-roots)."""
        key = s
        if key not in self.Rchain_cache:
            spec = self.R.subs_var("u", s)
            dense = to_int_poly(spec.restrict(("v",)).to_dense("v"))
            self.Rchain_cache[key] = (dense, sturm_chain(dense))
        dense, chain = self.Rchain_cache[key]
        if ip_eval_sign(chain[0], vlo) == 0 or ip_eval_sign(chain[0], vhi) == 0:
            raise DecompositionError("rectangle edge hits the curve exactly")
        return sturm_count(chain, vlo, vhi)

    def _edge_clear(self, ulo: Fraction, uhi: Fraction, vval: Fraction) -> bool:
        """Is R nonzero on the whole segment [ulo, uhi] x {vval}? (interval proof)"""
        seg = self.R.subs_var("v", vval)
        dense = seg.restrict(("u",)).to_dense("u")
        iv = Interval(ulo, uhi)
        total = Interval.point(0)
        powc = Interval.point(1)
        acc_lo = Fraction(0)
        acc_hi = Fraction(0)
        val = Interval.point(0)
        # Horner on the interval
        res = Interval.point(0)
        for c in reversed(dense):
            res = res * iv + Interval.point(c)
        return res.sign() is not None

    # -- special points per critical line -------------------------------------------

    def _specials_above(self, idx: int) -> List[_SpecialPoint]:
        crit = self.crit
        iu = self.intervals[idx]
        ia, ib = iu.open_box()
        out: List[_SpecialPoint] = []
        if crit.even:
            # axis point?
            if crit.r0 and len(crit.r0) > 1:
                c0 = sturm_chain(crit.r0)
                if sturm_count(c0, ia, ib) > 0:
                    vert = False
                    if len(crit.axis_vertex) > 1:
                        cv = sturm_chain(crit.axis_vertex)
                        vert = sturm_count(cv, ia, ib) > 0
                    out.append(_SpecialPoint(Fraction(0), Fraction(0),
                                             "vertex" if vert else "axis", on_axis=True))
            # off-axis: w-roots paired with this u-interval
            for wr in crit.w_roots:
                wr2 = wr
                # only positive w gives real v
                for _ in range(40):
                    if wr2.hi <= 0 or wr2.lo >= 0:
                        break
                    wr2 = wr2.refine(steps=1)
                if wr2.hi <= 0:
                    continue
                if wr2.lo < 0:
                    # straddles zero persistently: the root is w = 0 exactly?
                    if ip_eval_sign(wr2.poly, Fraction(0)) == 0:
                        continue  # axis case, already handled
                    continue
                # interval filter: does {A = B = 0} meet iu x wr2?
                if not self._pair_alive_even(iu, wr2):
                    continue
                vert = self._is_vertex_even(iu, wr2)
                vlo, _ = _sqrt_bounds(wr2.lo)
                _, vhi = _sqrt_bounds(wr2.hi)
                out.append(_SpecialPoint(vlo, vhi, "vertex" if vert else "tangent",
                                         w_root=wr2))
                out.append(_SpecialPoint(-vhi, -vlo, "vertex" if vert else "tangent",
                                         w_root=wr2))
        else:
            for wr in crit.w_roots:
                if not self._pair_alive_general(iu, wr):
                    continue
                vert = self._is_vertex_general(iu, wr)
                out.append(_SpecialPoint(wr.lo, wr.hi, "vertex" if vert else "tangent",
                                         w_root=wr))
        out.sort(key=lambda sp: (sp.v_lo, sp.v_hi))
        return out

    def _pair_alive_even(self, iu, wr, rounds: int = 18) -> bool:
        evA = BoxEvaluator(self.crit.A)
        evB = BoxEvaluator(self.crit.B)
        u2, w2 = iu, wr
        for _ in range(rounds):
            box = [Interval(u2.lo, u2.hi), Interval(w2.lo, w2.hi)]
            if evA.eval(box).sign() is not None or evB.eval(box).sign() is not None:
                return False
            u2 = u2.refine(steps=1)
            w2 = w2.refine(steps=1)
        return True

    def _pair_alive_general(self, iu, vr, rounds: int = 18) -> bool:
        evR = self.ev_R
        evV = BoxEvaluator(self.R.derivative("v"))
        u2, v2 = iu, vr
        for _ in range(rounds):
            box = [Interval(u2.lo, u2.hi), Interval(v2.lo, v2.hi)]
            if evR.eval(box).sign() is not None or evV.eval(box).sign() is not None:
                return False
            u2 = u2.refine(steps=1)
            v2 = v2.refine(steps=1)
        return True

    def _is_vertex_even(self, iu, wr) -> bool:
        crit = self.crit
        if len(crit.vertex_u) <= 1 or len(crit.vertex_w) <= 1:
            return False
        cu = sturm_chain(crit.vertex_u)
        cw = sturm_chain(crit.vertex_w)
        return (sturm_count(cu, iu.lo, iu.hi) > 0
                and sturm_count(cw, wr.lo, wr.hi) > 0)

    def _is_vertex_general(self, iu, vr) -> bool:
        crit = self.crit
        if len(crit.vertex_u) <= 1 or len(crit.vertex_w) <= 1:
            return False
        cu = sturm_chain(crit.vertex_u)
        cw = sturm_chain(crit.vertex_w)
        return (sturm_count(cu, iu.lo, iu.hi) > 0
                and sturm_count(cw, vr.lo, vr.hi) > 0)

    # -- rectangles ---------------------------------------------------------------

    def _rectangles(self, idx: int, specials: List[_SpecialPoint],
                    max_rounds: int = 50):
        """No-escape rectangles around the special points of critical line idx.

        Returns (a, b, rects) where rects are (v_lo, v_hi, special) with
        pairwise-disjoint v-ranges, R nonzero on the horizontal edges over
        [a, b], and [a, b] free of other critical values.
        """
        iu = self.intervals[idx]
        for _ in range(max_rounds):
            a, b = iu.open_box()
            pads: List[Tuple[Fraction, Fraction, _SpecialPoint]] = []
            ok = True
            for k, sp in enumerate(specials):
                w = max(sp.v_hi - sp.v_lo, Fraction(1, 1 << 10))
                vlo = sp.v_lo - w / 2
                vhi = sp.v_hi + w / 2
                pads.append((vlo, vhi, sp))
            pads.sort(key=lambda t: t[0])
            for i in range(len(pads) - 1):
                if pads[i][1] >= pads[i + 1][0]:
                    ok = False
                    break
            if ok:
                for vlo, vhi, _ in pads:
                    if not (self._edge_clear(a, b, vlo) and self._edge_clear(a, b, vhi)):
                        ok = False
                        break
            if ok:
                return a, b, pads
            iu = iu.refine(steps=1)
            specials = self._refine_specials(specials)
        raise DecompositionError("could not certify no-escape rectangles")

    def _refine_specials(self, specials: List[_SpecialPoint]) -> List[_SpecialPoint]:
        out = []
        for sp in specials:
            if sp.on_axis:
                out.append(sp)
                continue
            wr = sp.w_root.refine(steps=2) if sp.w_root is not None else None
            if wr is not None and self.crit.even:
                vlo, _ = _sqrt_bounds(wr.lo)
                _, vhi = _sqrt_bounds(wr.hi)
                if sp.v_lo < 0:
                    out.append(_SpecialPoint(-vhi, -vlo, sp.kind, w_root=wr))
                else:
                    out.append(_SpecialPoint(vlo, vhi, sp.kind, w_root=wr))
            elif wr is not None:
                out.append(_SpecialPoint(wr.lo, wr.hi, sp.kind, w_root=wr))
            else:
                out.append(sp)
        return out

    # -- assembly --------------------------------------------------------------------

    def build(self) -> GammaDivision:
        n_strips = len(self.samples)
        arcs_per_strip = [len(st.roots) for st in self.stacks]

        # node naming: arc (strip, k); slice (strip, k) = region between arc k-1 and k;
        # slice index runs 0..n_arcs (0 = below all arcs)
        arc_parent: Dict[Tuple[int, int], Tuple[int, int]] = {}
        face_parent: Dict[Tuple[int, int], Tuple[int, int]] = {}

        def find(parent, x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(parent, x, y):
            rx, ry = find(parent, x), find(parent, y)
            if rx != ry:
                parent[rx] = ry

        for s in range(n_strips):
            for k in range(arcs_per_strip[s]):
                find(arc_parent, (s, k))
            for k in range(arcs_per_strip[s] + 1):
                find(face_parent, (s, k))

        # per critical line: structure
        vertex_points: List[dict] = []       # {'u':(a,b), 'v':(lo,hi), 'isolated':bool, 'line':idx}
        arc_end_at_vertex: Dict[Tuple[int, int], List[int]] = {}
        pinch_info: List[Tuple[int, int, int]] = []   # (vertex_id, line, gapless contacts)
        line_meta = []

        for idx in range(len(self.intervals)):
            specials = self._specials_above(idx)
            a, b, rects = self._rectangles(idx, specials)
            lst, rst = self.stacks[idx], self.stacks[idx + 1]
            # roots of R(a, .) and R(b, .): use fresh stacks at a, b (same strips)
            sa = _Stack(self.R, a)
            sb = _Stack(self.R, b)
            sa.separate()
            sb.separate()
            if len(sa.roots) != len(lst.roots) or len(sb.roots) != len(rst.roots):
                raise DecompositionError("stack count changed inside a strip")
            # match arcs of the strip sample to roots at a (order preserved)
            la = [r for r in sa.roots]
            rb = [r for r in sb.roots]

            def in_range(r: RootInterval, vlo, vhi, stack: _Stack):
                # decide root position vs [vlo, vhi] by refinement
                rr = r
                for _ in range(60):
                    if rr.hi <= vlo or rr.lo >= vhi:
                        return False, rr
                    if vlo < rr.lo and rr.hi <= vhi:
                        return True, rr
                    rr = rr.refine(steps=1)
                raise DecompositionError("root vs rectangle comparison stalled")

            # assign arcs to rectangles
            rect_L: List[List[int]] = [[] for _ in rects]
            rect_R: List[List[int]] = [[] for _ in rects]
            free_left = []
            for k, r in enumerate(la):
                placed = False
                for j, (vlo, vhi, sp) in enumerate(rects):
                    inside, la[k] = in_range(la[k], vlo, vhi, sa)
                    if inside:
                        rect_L[j].append(k)
                        placed = True
                        break
                if not placed:
                    free_left.append(k)
            free_right = []
            for k, r in enumerate(rb):
                placed = False
                for j, (vlo, vhi, sp) in enumerate(rects):
                    inside, rb[k] = in_range(rb[k], vlo, vhi, sb)
                    if inside:
                        rect_R[j].append(k)
                        placed = True
                        break
                if not placed:
                    free_right.append(k)
            if len(free_left) != len(free_right):
                raise DecompositionError("unmatched pass-through arcs at a critical line")
            # exact (L,R) checks against the Sturm counts
            for j, (vlo, vhi, sp) in enumerate(rects):
                cl = self._roots_between(a, vlo, vhi)
                cr = self._roots_between(b, vlo, vhi)
                if cl != len(rect_L[j]) or cr != len(rect_R[j]):
                    raise DecompositionError("(L,R) attachment counts inconsistent")

            # pass-through arcs converge to distinct simple on-line points in order
            for kl, kr in zip(free_left, free_right):
                union(arc_parent, (idx, kl), (idx + 1, kr))

            # rectangles: tangents glue same-side arcs; vertices terminate arcs
            line_objects = []  # (v-position key, kind, payload) in v-order
            fl = 0
            # interleave: walk all on-line objects bottom-up: rect or crossing
            events = []
            for j, (vlo, vhi, sp) in enumerate(rects):
                events.append((vlo, "rect", j))
            for i, kl in enumerate(free_left):
                events.append((la[kl].lo, "cross", i))
            events.sort(key=lambda e: e[0])

            for ev in events:
                if ev[1] == "rect":
                    j = ev[2]
                    vlo, vhi, sp = rects[j]
                    Lk, Rk = rect_L[j], rect_R[j]
                    if sp.kind in ("tangent", "axis"):
                        if len(Lk) + len(Rk) != 2:
                            raise DecompositionError(
                                f"smooth critical point with {len(Lk)}+{len(Rk)} arcs")
                        arcs = [(idx, k) for k in Lk] + [(idx + 1, k) for k in Rk]
                        union(arc_parent, arcs[0], arcs[1])
                        line_objects.append(("rect", j, None))
                    else:
                        vid = len(vertex_points)
                        vertex_points.append({
                            "u": (a, b), "v": (vlo, vhi),
                            "isolated": not Lk and not Rk,
                            "line": idx, "on_axis": sp.on_axis,
                        })
                        for k in Lk:
                            arc_end_at_vertex.setdefault((idx, k), []).append(vid)
                        for k in Rk:
                            arc_end_at_vertex.setdefault((idx + 1, k), []).append(vid)
                        line_objects.append(("rect", j, vid))
                else:
                    line_objects.append(("cross", ev[2], None))

            # face gluing through gaps between consecutive non-isolated objects
            # objects in v-order with their arc-slots on each side
            def slot_of_arc_left(k):               # slice below arc k is slot k
                return k

            # build ordered lists of "separators" per side
            sep_left = []   # (v-order position, left-arc indices it consumes)
            sep_right = []
            for ev in line_objects:
                if ev[0] == "cross":
                    i = ev[1]
                    sep_left.append([free_left[i]])
                    sep_right.append([free_right[i]])
                else:
                    j = ev[1]
                    vid = ev[2]
                    Lk, Rk = rect_L[j], rect_R[j]
                    if vertexish := (vid is not None):
                        if not Lk and not Rk:
                            # isolated point: not a separator
                            continue
                    sep_left.append(sorted(Lk))
                    sep_right.append(sorted(Rk))
            # gaps: below first separator, between consecutive, above last
            # left slice touching a gap: determined by arcs consumed so far
            lpos = 0
            rpos = 0
            union(face_parent, (idx, 0), (idx + 1, 0))
            for sl, sr in zip(sep_left, sep_right):
                lpos = (max(sl) + 1) if sl else lpos
                rpos = (max(sr) + 1) if sr else rpos
                union(face_parent, (idx, lpos), (idx + 1, rpos))
            # top gap merge happens via the last union when all arcs consumed
            union(face_parent, (idx, arcs_per_strip[idx]),
                  (idx + 1, arcs_per_strip[idx + 1]))

            line_meta.append({
                "a": a, "b": b, "rects": rects,
                "rect_L": rect_L, "rect_R": rect_R,
                "objects": line_objects, "free_left": free_left,
                "free_right": free_right,
            })

        # -- instantiate cells -------------------------------------------------------
        cells: Dict[int, Cell] = {}
        incidence: Dict[int, Set[int]] = {}
        next_id = 0

        def new_cell(**kw) -> Cell:
            nonlocal next_id
            c = Cell(id=next_id, **kw)
            cells[next_id] = c
            incidence[next_id] = set()
            next_id += 1
            return c

        # vertices from vertex_points
        vertex_cells: List[Cell] = []
        for vp in vertex_points:
            c = new_cell(dim=0, is_isolated_point=vp["isolated"],
                         sample=(Fraction(vp["u"][0] + vp["u"][1]) / 2,
                                 Fraction(vp["v"][0] + vp["v"][1]) / 2))
            c.label = "isolated" if vp["isolated"] else "vertex"
            vertex_cells.append(c)

        inf_cell = new_cell(dim=0, is_infinity=True, label="infinity")

        # edges: connected arc components
        comp: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for s in range(n_strips):
            for k in range(arcs_per_strip[s]):
                comp.setdefault(find(arc_parent, (s, k)), []).append((s, k))
        edge_cells: Dict[Tuple[int, int], Cell] = {}
        arc_to_edge: Dict[Tuple[int, int], int] = {}
        for root, arcs in comp.items():
            endpoints: List[int] = []
            for arc in arcs:
                for vid in arc_end_at_vertex.get(arc, []):
                    endpoints.append(vid)
                s, k = arc
                if s == 0 or s == n_strips - 1:
                    endpoints.append(-1)  # reaches infinity
            c = new_cell(dim=1)
            if not endpoints:
                c.label = "circle"
            else:
                c.label = "arc"
            for vid in endpoints:
                target = inf_cell.id if vid == -1 else vertex_cells[vid].id
                c.boundary.add(target)
                incidence[c.id].add(target)
                incidence[target].add(c.id)
            edge_cells[root] = c
            for arc in arcs:
                arc_to_edge[arc] = c.id
            # representative sample arc: prefer an inner strip
            arcs_sorted = sorted(arcs, key=lambda a: abs(2 * a[0] - n_strips + 1))
            s0, k0 = arcs_sorted[0]
            c.sample = (self.samples[s0], None)
            c.label += f"@strip{s0}:{k0}"

        # faces
        fcomp: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for s in range(n_strips):
            for k in range(arcs_per_strip[s] + 1):
                fcomp.setdefault(find(face_parent, (s, k)), []).append((s, k))
        face_cells: Dict[Tuple[int, int], Cell] = {}
        slice_to_face: Dict[Tuple[int, int], int] = {}
        for root, slices in fcomp.items():
            c = new_cell(dim=2)
            unbounded = any(k == 0 or k == arcs_per_strip[s] for s, k in slices) \
                or any(s == 0 or s == n_strips - 1 for s, k in slices)
            c.is_unbounded = unbounded
            face_cells[root] = c
            for sl in slices:
                slice_to_face[sl] = c.id
            if unbounded:
                incidence[c.id].add(inf_cell.id)
                incidence[inf_cell.id].add(c.id)
                c.boundary.add(inf_cell.id)

        # face-edge incidence via arcs bounding slices
        for s in range(n_strips):
            for k in range(arcs_per_strip[s]):
                eid = arc_to_edge[(s, k)]
                below = slice_to_face[(s, k)]
                above = slice_to_face[(s, k + 1)]
                for fid in (below, above):
                    incidence[fid].add(eid)
                    incidence[eid].add(fid)
                    cells[fid].boundary.add(eid)
                # vertices of the edge are boundary of the faces too
                for vid0 in cells[eid].boundary:
                    incidence[fid].add(vid0)
                    incidence[vid0].add(fid)
                    cells[fid].boundary.add(vid0)

        # isolated points and pinch contacts: locate containing/touching faces
        for vid, vp in enumerate(vertex_points):
            cell = vertex_cells[vid]
            li = vp["line"]
            meta = line_meta[li]
            a, b = meta["a"], meta["b"]
            vlo, vhi = vp["v"]
            # faces touching: the slices at the left/right stacks adjacent in v
            for side, stack_idx, uval in (("L", li, a), ("R", li + 1, b)):
                st = self.stacks[stack_idx]
                below = 0
                for k, r in enumerate(st.roots):
                    rr = r
                    decided = False
                    for _ in range(60):
                        if rr.hi <= vlo:
                            below = k + 1
                            decided = True
                            break
                        if rr.lo >= vhi:
                            decided = True
                            break
                        rr = rr.refine(steps=1)
                        st.roots[k] = rr
                    if decided and rr.lo >= vhi:
                        break
                fid = slice_to_face[(stack_idx, below)]
                incidence[fid].add(cell.id)
                incidence[cell.id].add(fid)
                cells[fid].boundary.add(cell.id)

        faces = sorted(c.id for c in face_cells.values())
        edges = sorted(c.id for c in edge_cells.values())
        vertices = sorted([c.id for c in vertex_cells] + [inf_cell.id])

        div = GammaDivision(R=self.R, cells=cells, faces=faces, edges=edges,
                            vertices=vertices, incidence=incidence,
                            infinity_id=inf_cell.id,
                            meta={"samples": self.samples,
                                  "stacks": self.stacks,
                                  "intervals": self.intervals,
                                  "line_meta": line_meta,
                                  "arc_to_edge": arc_to_edge,
                                  "slice_to_face": slice_to_face,
                                  "arcs_per_strip": arcs_per_strip,
                                  "vertex_points": vertex_points})
        chi = div.chi_total()
        if chi != 2:
            raise DecompositionError(
                f"cell-complex Euler characteristic {chi} != 2; decomposition bug")
        return div


# -- gamma labels -----------------------------------------------------------------


def _simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator in [lo, hi] (Stern-Brocot walk)."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_rational_in(-hi, -lo)
    # now 0 < lo <= hi
    la, lb = lo.numerator, lo.denominator
    ha, hb = hi.numerator, hi.denominator
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = la // lb
        if ha // hb > a:
            return Fraction(p1 * (a + 1) + p0, q1 * (a + 1) + q0)
        p0, q0, p1, q1 = p1, q1, p1 * a + p0, q1 * a + q0
        la, lb, ha, hb = hb, ha - a * hb, lb, la - a * lb
        if lb == 0:
            return Fraction(p1, q1)
        if la == 0:
            return Fraction(p1, q1)


def _face_sample(div: GammaDivision, fid: int) -> Tuple[Fraction, Fraction]:
    meta = div.meta
    stacks = meta["stacks"]
    slice_to_face = meta["slice_to_face"]
    arcs_per_strip = meta["arcs_per_strip"]
    candidates = [sl for sl, f in slice_to_face.items() if f == fid]
    # prefer a slice in a strip with few arcs for cheap gaps
    candidates.sort(key=lambda sl: (arcs_per_strip[sl[0]], abs(sl[0] - len(stacks) // 2)))
    s_idx, k = candidates[0]
    st = stacks[s_idx]
    n = len(st.roots)
    if n == 0:
        return st.s, Fraction(0)
    if k == 0:
        v = st.roots[0].lo - 1
    elif k == n:
        v = st.roots[-1].hi + 1
    else:
        lo_r, hi_r = st.roots[k - 1], st.roots[k]
        for _ in range(80):
            if lo_r.hi < hi_r.lo:
                break
            lo_r = lo_r.refine(steps=1)
            hi_r = hi_r.refine(steps=1)
        st.roots[k - 1], st.roots[k] = lo_r, hi_r
        v = _simplest_rational_in(lo_r.hi, hi_r.lo)
        if ip_eval_sign(st.poly, v) == 0:
            v = (lo_r.hi + hi_r.lo) / 2
    return st.s, v


def label_gamma(div: GammaDivision, f: MixedPolynomial,
                F_projective: Optional[MixedPolynomial] = None,
                chart: int = 3) -> GammaDivision:
    """Fill in gamma for every cell: faces by a rational sample fiber, edges and
    vertices by certified cluster limit counts (rational special points solve
    directly), infinity from the projective polynomial when provided."""
    from .fibers import (FiberError, edge_limit_count, solve_fiber,
                         vertex_limit_count)
    meta = div.meta
    stacks = meta["stacks"]
    arc_to_edge = meta["arc_to_edge"]
    vertex_points = meta["vertex_points"]

    for fid in div.faces:
        s, v = _face_sample(div, fid)
        cell = div.cells[fid]
        cell.sample = (s, v)
        rs = solve_fiber(f, GaussianRational(s, v))
        cell.gamma = rs.gamma if not rs.positive_dimensional else None
        cell.positive_dimensional_fiber = rs.positive_dimensional
        cell.gamma_status = "sample"

    # representative arc per edge
    edge_rep: Dict[int, Tuple[int, int]] = {}
    for arc, eid in arc_to_edge.items():
        cur = edge_rep.get(eid)
        if cur is None or (len(stacks[arc[0]].roots), arc) < (len(stacks[cur[0]].roots), cur):
            edge_rep[eid] = arc
    for eid in div.edges:
        s_idx, k = edge_rep[eid]
        st = stacks[s_idx]
        cc = edge_limit_count(f, st.s, st.roots[k])
        cell = div.cells[eid]
        cell.gamma = cc.count
        cell.gamma_status = ("cluster-" + cc.status) if cc.count is not None else "unknown"
        cell.sample = (st.s, (st.roots[k].lo + st.roots[k].hi) / 2)

    # vertices (finite)
    vid_cells = [cid for cid in div.vertices if cid != div.infinity_id]
    for cell_id, vp in zip(vid_cells, vertex_points):
        cell = div.cells[cell_id]
        a, b = vp["u"]
        vlo, vhi = vp["v"]
        pu = _simplest_rational_in(Fraction(a), Fraction(b))
        pv = _simplest_rational_in(Fraction(vlo), Fraction(vhi))
        exact = (div.R.eval([pu, pv]) == 0
                 and div.R.derivative("u").eval([pu, pv]) == 0
                 and div.R.derivative("v").eval([pu, pv]) == 0)
        if exact:
            rs = solve_fiber(f, GaussianRational(pu, pv))
            if rs.positive_dimensional:
                cell.gamma = None
                cell.positive_dimensional_fiber = True
                cell.gamma_status = "positive-dimensional"
            else:
                cell.gamma = rs.gamma
                cell.gamma_status = "sample"
            cell.sample = (pu, pv)
        else:
            cc = vertex_limit_count(f, Interval(Fraction(a), Fraction(b)),
                                    Interval(Fraction(vlo), Fraction(vhi)))
            cell.gamma = cc.count
            cell.gamma_status = ("cluster-" + cc.status) if cc.count is not None else "unknown"

    # infinity
    inf_cell = div.cells[div.infinity_id]
    if F_projective is not None:
        inf_cell.gamma = gamma_at_infinity(F_projective, chart)
        inf_cell.gamma_status = "projective"
    return div


def gamma_at_infinity(F: MixedPolynomial, chart: int = 3) -> int:
    """Cardinality of the fiber of the pencil over the point at infinity.

    For the chart-3 pencil w = z2/z3 this is the intersection of the curve
    with the line z3 = 0, counted as a set."""
    from .analysis import realify_univariate
    from .fibers import solve_real_system
    from .gaussian import GaussianRational as G
    if len(F.variables) != 3:
        raise ValueError("projective polynomial required")
    # the line at infinity for the pencil in chart `chart` is z_chart = 0
    names = list(F.variables)
    kill = names[chart - 1]
    rest = [n for n in names if n != kill]
    g = F.subs_value(kill, G(0))
    # count projective solutions [rest0 : rest1]: affine part rest1 = 1, plus [1:0]
    aff = g.subs_value(rest[1], G(1))
    count = 0
    if aff.is_zero():
        raise ValueError("line at infinity lies in the curve; pencil degenerate")
    if len(aff.terms) > 0 and not aff.is_zero():
        f1, f2 = realify_univariate(aff, ("x", "y"))
        if f1.is_zero() and f2.is_zero():
            raise ValueError("degenerate fiber at infinity")
        from .realpoly import poly_gcd as _pg
        if f1.is_zero() or f2.is_zero():
            raise ValueError("positive-dimensional fiber at infinity")
        shared = _pg(f1, f2)
        if not shared.is_constant():
            raise ValueError("positive-dimensional fiber at infinity")
        jac = (f1.derivative("x") * f2.derivative("y")
               - f1.derivative("y") * f2.derivative("x"))
        roots = solve_real_system(f1, f2, ("x", "y"), jacobian=jac)
        count += len(roots)
    # the point [1:0] on the infinity line
    pure = g.subs_value(rest[1], G(0))
    only = pure.subs_value(rest[0], G(1))
    if only.is_zero():
        count += 1
    return count


# -- regularity and the surjectivity conditions ------------------------------------


@dataclass
class RegularityReport:
    condition1: bool
    condition2: bool
    regular_edges: Dict[int, bool]
    regular_vertices: Dict[int, bool]
    regular_faces: Dict[int, bool]
    merged_face_gamma: Dict[int, int]
    gamma_max: Optional[int]
    notes: List[str] = field(default_factory=list)


def _merge_division(div: GammaDivision):
    """Collapse non-branching cells: the division by the true branching locus.

    An edge whose gamma equals both adjacent face gammas witnesses no
    branching; vertices whose gamma matches their merged surroundings merge
    too.  Returns (face_root map, surviving edge ids, surviving vertex ids)."""
    parent: Dict[int, int] = {fid: fid for fid in div.faces}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    surviving_edges = []
    for eid in div.edges:
        cell = div.cells[eid]
        nbf = sorted(c for c in div.incidence[eid] if div.cells[c].dim == 2)
        gammas = [div.cells[c].gamma for c in nbf]
        if (cell.gamma is not None and len(set(gammas)) == 1
                and gammas[0] == cell.gamma):
            if len(nbf) == 2:
                ra, rb = find(nbf[0]), find(nbf[1])
                if ra != rb:
                    parent[ra] = rb
        else:
            surviving_edges.append(eid)
    surviving_vertices = []
    for vid in div.vertices:
        cell = div.cells[vid]
        inc_edges = [c for c in div.incidence[vid]
                     if div.cells[c].dim == 1 and c in surviving_edges]
        inc_faces = {find(c) for c in div.incidence[vid] if div.cells[c].dim == 2}
        face_gammas = {div.cells[r].gamma for r in inc_faces}
        if (not inc_edges and cell.gamma is not None
                and len(face_gammas) == 1 and cell.gamma in face_gammas):
            continue  # absorbed into the ambient face
        surviving_vertices.append(vid)
    return find, surviving_edges, surviving_vertices


def regularity(div: GammaDivision) -> RegularityReport:
    """Per-cell regularity and the two surjectivity conditions, evaluated on the
    merged (true branching locus) division."""
    notes: List[str] = []
    if any(div.cells[c].gamma is None for c in div.faces):
        raise ValueError("division has unlabeled faces")
    find, sedges, sverts = _merge_division(div)

    merged_faces: Dict[int, List[int]] = {}
    for fid in div.faces:
        merged_faces.setdefault(find(fid), []).append(fid)
    face_gamma = {root: div.cells[root].gamma for root in merged_faces}
    for root, members in merged_faces.items():
        gs = {div.cells[m].gamma for m in members}
        if len(gs) != 1:
            notes.append(f"merged face {root} has inconsistent sample gammas {gs}")
        face_gamma[root] = max(g for g in gs if g is not None)

    all_gammas = [g for g in face_gamma.values() if g is not None]
    all_gammas += [div.cells[c].gamma for c in sedges + sverts
                   if div.cells[c].gamma is not None]
    gmax = max(all_gammas) if all_gammas else None

    # condition (1): the maximum is attained by exactly one merged face
    top_faces = [r for r, g in face_gamma.items() if g == gmax]
    top_cells = [c for c in sedges + sverts if div.cells[c].gamma == gmax]
    condition1 = len(top_faces) == 1 and not top_cells

    # boundary structure of merged faces
    def merged_boundary(root: int) -> Tuple[Set[int], Set[int]]:
        edges = set()
        verts = set()
        for m in merged_faces[root]:
            for c in div.cells[m].boundary:
                if c in sedges:
                    edges.add(c)
                elif div.cells[c].dim == 0 and c in sverts:
                    verts.add(c)
        for e in list(edges):
            for c in div.cells[e].boundary:
                if c in sverts:
                    verts.add(c)
        return edges, verts

    # condition (2): for each merged face with gamma < gmax the high part of its
    # boundary is connected in the incidence graph
    condition2 = True
    for root, g in face_gamma.items():
        if g is None or g == gmax:
            continue
        edges, verts = merged_boundary(root)
        keep = {c for c in edges | verts
                if div.cells[c].gamma is not None and div.cells[c].gamma >= g}
        if not keep:
            condition2 = False
            notes.append(f"face {root}: empty upper boundary")
            continue
        # connectivity via edge-vertex incidence
        adj = {c: set() for c in keep}
        for e in keep:
            if div.cells[e].dim != 1:
                continue
            for vtx in div.cells[e].boundary:
                if vtx in keep:
                    adj[e].add(vtx)
                    adj[vtx].add(e)
        seen = set()
        stack = [next(iter(keep))]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(adj[c] - seen)
        if seen != keep:
            condition2 = False
            notes.append(f"face {root}: upper boundary disconnected")

    # per-cell regularity
    regular_edges = {}
    for e in sedges:
        nbf = {find(c) for c in div.incidence[e] if div.cells[c].dim == 2}
        ge = div.cells[e].gamma
        if len(nbf) == 2 and ge is not None:
            g1, g2 = [face_gamma[r] for r in nbf]
            regular_edges[e] = (g1 is not None and g2 is not None
                                and 2 * ge == g1 + g2)
        else:
            regular_edges[e] = False
    regular_vertices = {}
    for vtx in sverts:
        nbf = {find(c) for c in div.incidence[vtx] if div.cells[c].dim == 2}
        regular_vertices[vtx] = len(nbf) <= 2
    regular_faces = {}
    for root in merged_faces:
        edges, verts = merged_boundary(root)
        # boundary components on the edge/vertex incidence graph
        nodes = set(edges) | set(verts)
        adj = {c: set() for c in nodes}
        for e in edges:
            for vtx in div.cells[e].boundary:
                if vtx in nodes:
                    adj[e].add(vtx)
                    adj[vtx].add(e)
        comps: List[Set[int]] = []
        seen: Set[int] = set()
        for c in nodes:
            if c in seen:
                continue
            comp = set()
            stack = [c]
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adj[x] - comp)
            seen |= comp
            comps.append(comp)
        ok = True
        for comp in comps:
            ce = [c for c in comp if div.cells[c].dim == 1]
            cv = [c for c in comp if div.cells[c].dim == 0]
            if not ce:
                ok = False   # bare point in the boundary (puncture)
                continue
            if not cv:
                # then the component must be a single closed edge
                if not (len(ce) == 1 and not div.cells[ce[0]].boundary):
                    ok = False
                continue
            # simple cycle: every vertex meets exactly two edge-endpoints here
            for vtx in cv:
                deg = 0
                for e in ce:
                    ends = [b for b in div.cells[e].boundary if b == vtx]
                    both = div.cells[e].boundary
                    if vtx in both:
                        # count loops twice
                        deg += 2 if len(both) == 1 else 1
                if deg != 2:
                    ok = False
                    break
            if len(ce) != len(cv) and ok:
                # cycle needs equal counts unless loops shorten it
                loops = sum(1 for e in ce if len(div.cells[e].boundary) == 1)
                if len(ce) != len(cv) + loops:
                    ok = False
        regular_faces[root] = ok

    return RegularityReport(condition1=condition1, condition2=condition2,
                            regular_edges=regular_edges,
                            regular_vertices=regular_vertices,
                            regular_faces=regular_faces,
                            merged_face_gamma=face_gamma,
                            gamma_max=gmax, notes=notes)
