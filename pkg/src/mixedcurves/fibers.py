"""Certified solving of mixed-polynomial fibers f(z, eta) = 0.

The fiber over a rational parameter is split into real and imaginary parts,
projected by resultants onto each axis, and every candidate box is either
excluded by interval arithmetic or certified by the interval Newton operator.
Signs come from interval evaluation of the pencil Jacobian, never from floats.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .analysis import realify, realify_univariate
from .gaussian import GaussianRational
from .intervals import BoxEvaluator, Interval, NewtonSystem2
from .isolate import RootInterval, sturm_isolate
from .mixedpoly import MixedPolynomial
from .realpoly import RealPolynomial, poly_gcd
from .resultants import resultant

WIDTH_DEFAULT = Fraction(1, 1 << 30)
WIDTH_FLOOR = Fraction(1, 1 << 60)


@dataclass
class IsolatingBox:
    x_interval: Interval
    y_interval: Interval

    def width(self) -> Fraction:
        return max(self.x_interval.width(), self.y_interval.width())

    def center(self) -> Tuple[Fraction, Fraction]:
        return self.x_interval.mid(), self.y_interval.mid()

    def approx(self) -> complex:
        return float(self.x_interval.mid()) + 1j * float(self.y_interval.mid())


@dataclass
class SignedRoot:
    box: IsolatingBox
    sign: Optional[int]  # +1, -1, or None when undetermined
    approx: complex


@dataclass
class RootSet:
    eta: Optional[GaussianRational]
    roots: List[SignedRoot]
    positive_dimensional: bool = False
    witness: Optional[RealPolynomial] = None
    skipped: bool = False
    note: str = ""

    @property
    def gamma(self) -> int:
        return len(self.roots)

    @property
    def signed_count(self) -> Optional[int]:
        if any(r.sign is None for r in self.roots):
            return None
        return sum(r.sign for r in self.roots)


class FiberError(RuntimeError):
    pass


def solve_real_system(f1: RealPolynomial, f2: RealPolynomial,
                      names: Tuple[str, str] = ("x", "y"),
                      width: Fraction = WIDTH_DEFAULT,
                      jacobian: Optional[RealPolynomial] = None) -> List[SignedRoot]:
    """All real solutions of {f1 = f2 = 0}, certified simple, as signed roots.

    Raises FiberError when the system shares a curve component (caller should
    test the gcd first) or when certification hits the width floor.
    """
    xn, yn = names
    if set(f1.variables) != {xn, yn} or f1.variables != f2.variables:
        raise ValueError("system must live in exactly the two named variables")
    px = resultant(f1, f2, yn)
    py = resultant(f1, f2, xn)
    if px.is_zero() or py.is_zero():
        raise FiberError("system is not zero-dimensional")
    xroots = sturm_isolate(px.restrict((xn,)), xn)
    yroots = sturm_isolate(py.restrict((yn,)), yn)
    ev1 = BoxEvaluator(f1)
    ev2 = BoxEvaluator(f2)
    newton = NewtonSystem2(f1, f2, names)
    xi = f1.variables.index(xn)
    evj = BoxEvaluator(jacobian) if jacobian is not None else None

    def full_box(bx: Interval, by: Interval) -> List[Interval]:
        return [bx, by] if xi == 0 else [by, bx]

    roots: List[SignedRoot] = []
    for rx in xroots:
        for ry in yroots:
            cx, cy = rx, ry
            status = None
            result_box = None
            for _ in range(80):
                bx = Interval(*cx.open_box())
                by = Interval(*cy.open_box())
                full = full_box(bx, by)
                if ev1.eval(full).sign() is not None or ev2.eval(full).sign() is not None:
                    status = "empty"
                    break
                res = newton.certify((bx, by), full)
                if res.status == "unique":
                    status = "unique"
                    result_box = res.box
                    break
                if res.status == "empty":
                    status = "empty"
                    break
                if cx.width() <= WIDTH_FLOOR and cy.width() <= WIDTH_FLOOR:
                    raise FiberError(
                        "certification failed at the width floor near "
                        f"x~{float(cx.sample()):.6g}, y~{float(cy.sample()):.6g}")
                cx = cx.refine(steps=2)
                cy = cy.refine(steps=2)
            else:
                raise FiberError("certification did not converge")
            if status != "unique":
                continue
            bx, by = result_box
            # tighten to the requested width by Newton iteration
            guard = 0
            while max(bx.width(), by.width()) > width and guard < 200:
                step = newton.newton_step((bx, by), full_box(bx, by))
                if step.box is None:
                    break
                nbx, nby = step.box
                nbx = Interval(max(nbx.lo, bx.lo), min(nbx.hi, bx.hi)).dyadic_round(140)
                nby = Interval(max(nby.lo, by.lo), min(nby.hi, by.hi)).dyadic_round(140)
                if nbx.width() >= bx.width() and nby.width() >= by.width():
                    break
                bx, by = nbx, nby
                guard += 1
            sign = None
            if evj is not None:
                tb = (bx, by)
                for _ in range(40):
                    s = evj.eval(full_box(*tb)).sign()
                    if s is not None:
                        sign = s
                        break
                    step = newton.newton_step(tb, full_box(*tb))
                    if step.box is None:
                        break
                    tb = step.box
                    if max(tb[0].width(), tb[1].width()) < WIDTH_FLOOR:
                        break
            box = IsolatingBox(bx, by)
            roots.append(SignedRoot(box, sign, box.approx()))
    roots.sort(key=lambda r: (r.box.x_interval.lo, r.box.y_interval.lo))
    return roots


def solve_fiber(f: MixedPolynomial, eta: GaussianRational,
                width: Fraction = WIDTH_DEFAULT) -> RootSet:
    """Isolate L_eta  ∩ C:  all solutions of f(z, eta) = 0 with certified boxes.

    Detects positive-dimensional fibers through the gcd of the realified pair
    and returns the common factor as a witness.
    """
    if len(f.variables) != 2:
        raise ValueError("solve_fiber expects a two-variable mixed polynomial")
    eta = GaussianRational.coerce(eta)
    fz = f.subs_value(f.variables[1], eta)
    f1, f2 = realify_univariate(fz, ("x", "y"))
    if f1.is_zero() and f2.is_zero():
        return RootSet(eta, [], positive_dimensional=True,
                       witness=RealPolynomial.zero(("x", "y")), note="fiber is the whole plane")
    if f1.is_zero() or f2.is_zero():
        only = f2 if f1.is_zero() else f1
        if only.is_constant():
            return RootSet(eta, [])
        return RootSet(eta, [], positive_dimensional=True, witness=only,
                       note="fiber defined by a single real equation")
    g = poly_gcd(f1, f2)
    extra_points: List[SignedRoot] = []
    if not g.is_constant():
        kind, data = _classify_real_locus(g, _fiber_bound(fz))
        if kind == "curve":
            return RootSet(eta, [], positive_dimensional=True, witness=g,
                           note="realified parts share a curve component")
        if kind == "unknown":
            raise FiberError("shared factor with undecided real locus")
        if kind == "points":
            extra_points = data
        f1 = f1.exact_div(g)
        f2 = f2.exact_div(g)
        if f1.is_constant() and f2.is_constant():
            return RootSet(eta, extra_points)
    jac = (f1.derivative("x") * f2.derivative("y")
           - f1.derivative("y") * f2.derivative("x"))
    roots = solve_real_system(f1, f2, ("x", "y"), width, jacobian=jac)
    if extra_points:
        evg = BoxEvaluator(g)
        for r in roots:
            iv = evg.eval([r.box.x_interval, r.box.y_interval])
            if iv.contains_zero():
                raise FiberError("reduced-system root may coincide with a "
                                 "shared-factor point; refine unsupported")
        roots = sorted(roots + extra_points,
                       key=lambda r: (r.box.x_interval.lo, r.box.y_interval.lo))
    return RootSet(eta, roots)


def _fiber_bound(fz: MixedPolynomial) -> Fraction:
    """Bound on |z| for solutions of the univariate mixed fiber polynomial."""
    best = None
    for (nu, mu), c in fz.terms.items():
        d = nu[0] + mu[0]
        if best is None or d > best[0]:
            best = (d, (nu, mu), c, 1)
        elif d == best[0]:
            best = (d, best[1], best[2], best[3] + 1)
    if best is None or best[3] != 1:
        return Fraction(10 ** 6)
    lead_mag = abs(best[2].re) + abs(best[2].im)
    total = Fraction(0)
    for key, c in fz.terms.items():
        if key == best[1]:
            continue
        total += abs(c.re) + abs(c.im)
    return max(Fraction(1), total / lead_mag) + 1


def _classify_real_locus(g: RealPolynomial, bound: Fraction):
    """Classify the real zero set of the (bounded) shared factor g.

    Returns ("empty", None), ("curve", None), ("points", [SignedRoot...]) or
    ("unknown", None).  Soundness: a sign change along a vertical line that
    persists over a rational x-interval certifies a one-dimensional locus; a
    subdivision of the bounding box with no surviving cell certifies
    emptiness; the finite case is certified point by point.
    """
    from .isolate import sturm_isolate
    gx = g.derivative("x") if "x" in g.variables else None
    B = bound + 1
    # 1. curve certificate: a persistent sign change along vertical lines
    cols = [Fraction(k, 7) for k in range(-7 * int(B) - 7, 7 * int(B) + 8, 3)]
    for x0 in cols:
        col = g.subs_var("x", x0).restrict(("y",))
        if col.is_zero():
            return "curve", None
        if col.is_constant():
            continue
        dense = col.to_dense("y")
        vals = []
        from .isolate import to_int_poly, ip_eval_sign
        ip = to_int_poly(dense)
        ys = [Fraction(-B), Fraction(B)]
        roots = sturm_isolate(col.extend(("y",)) if col.variables != ("y",) else col, "y")
        for r in roots:
            a, b = r.open_box()
            sa, sb = ip_eval_sign(ip, a), ip_eval_sign(ip, b)
            if sa * sb < 0:
                # persistence: the signs at the two endpoints survive on an
                # x-interval around x0 (interval evaluation)
                ev = BoxEvaluator(g)
                for w in (Fraction(1, 64), Fraction(1, 1024)):
                    xiv = Interval(x0 - w, x0 + w)
                    s1 = ev.eval([xiv, Interval.point(a)]).sign()
                    s2 = ev.eval([xiv, Interval.point(b)]).sign()
                    if s1 is not None and s2 is not None and s1 * s2 < 0:
                        return "curve", None
    # 2. emptiness by subdivision
    ev = BoxEvaluator(g)
    region = Interval(-B, B)
    queue = [(region, region, 0)]
    survivors = []
    while queue:
        bx, by, d = queue.pop()
        if ev.eval([bx, by]).sign() is not None:
            continue
        if d >= 7:
            survivors.append((bx, by))
            continue
        mx, my = bx.mid(), by.mid()
        for nx in (Interval(bx.lo, mx), Interval(mx, bx.hi)):
            for ny in (Interval(by.lo, my), Interval(my, by.hi)):
                queue.append((nx, ny, d + 1))
    if not survivors:
        return "empty", None
    # 3. isolated points: critical system with exact membership
    try:
        crit = solve_real_system(g.derivative("x"), g.derivative("y"), ("x", "y"))
    except FiberError:
        return "unknown", None
    points = []
    for r in crit:
        cx, cy = r.box.center()
        sx = _simplest_in(r.box.x_interval.lo, r.box.x_interval.hi)
        sy = _simplest_in(r.box.y_interval.lo, r.box.y_interval.hi)
        if g.eval([sx, sy]) == 0:
            box = IsolatingBox(Interval.point(sx), Interval.point(sy))
            points.append(SignedRoot(box, None, box.approx()))
        else:
            iv = BoxEvaluator(g).eval([r.box.x_interval, r.box.y_interval])
            if iv.contains_zero():
                return "unknown", None
    # verify the survivors are all near the certified points
    for bx, by in survivors:
        near = any(p.box.x_interval.lo - 1 <= bx.mid() <= p.box.x_interval.hi + 1
                   and p.box.y_interval.lo - 1 <= by.mid() <= p.box.y_interval.hi + 1
                   for p in points)
        if not near:
            return "unknown", None
    return ("points", points) if points else ("unknown", None)


def _simplest_in(lo: Fraction, hi: Fraction) -> Fraction:
    from .strata import _simplest_rational_in
    return _simplest_rational_in(lo, hi)


def signed_count_check(f: MixedPolynomial, samples: Sequence[GaussianRational],
                       expected: Optional[int] = None,
                       width: Fraction = WIDTH_DEFAULT):
    """Check that every sampled regular fiber has the same signed root count.

    Returns (ok, reports): samples with undecidable signs (branch-locus hits)
    are skipped with a note, as are positive-dimensional fibers.
    """
    from .analysis import degree_report
    rep = degree_report(f)
    target = expected
    reports: List[RootSet] = []
    ok = True
    for s in samples:
        try:
            rs = solve_fiber(f, GaussianRational.coerce(s), width)
        except FiberError as exc:
            rs = RootSet(GaussianRational.coerce(s), [], skipped=True, note=str(exc))
            reports.append(rs)
            continue
        if rs.positive_dimensional:
            rs.skipped = True
            rs.note = rs.note or "positive-dimensional fiber"
            reports.append(rs)
            continue
        sc = rs.signed_count
        if sc is None:
            rs.skipped = True
            rs.note = "undetermined sign (sample may lie on the branching locus)"
            reports.append(rs)
            continue
        if target is None:
            target = sc
        if sc != target:
            ok = False
        reports.append(rs)
    return ok, target, reports


# -- Rhie lens-equation zero counting ---------------------------------------------


def rhie_numerator(n: int, a: Fraction, eps: Fraction) -> MixedPolynomial:
    """Numerator of the lens equation conj(z) - z^(n-2)/(z^(n-1) - a^(n-1)) - eps/z."""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = Fraction(a)
    eps = Fraction(eps)
    an = a ** (n - 1)
    terms = {
        ((n, 0), (1, 0)): GaussianRational(1),          # conj(z) z^n
        ((1, 0), (1, 0)): GaussianRational(-an),        # -a^(n-1) conj(z) z
        ((n - 1, 0), (0, 0)): GaussianRational(-(1 + eps)),
        ((0, 0), (0, 0)): GaussianRational(eps * an),
    }
    # exponents above use a 1-variable layout; rebuild with proper tuples
    out = {}
    for (nu, mu), c in terms.items():
        out[((nu[0],), (mu[0],))] = c
    return MixedPolynomial(("z",), out)


def rhie_zero_count(n: int, a: Fraction, eps: Fraction,
                    width: Fraction = WIDTH_DEFAULT) -> RootSet:
    """Isolate all zeros of the Rhie numerator; the expected count is 5(n-1)."""
    g = rhie_numerator(n, a, eps)
    f1, f2 = realify_univariate(g, ("x", "y"))
    shared = poly_gcd(f1, f2)
    if not shared.is_constant():
        return RootSet(None, [], positive_dimensional=True, witness=shared,
                       note="degenerate parameters: shared component")
    jac = (f1.derivative("x") * f2.derivative("y")
           - f1.derivative("y") * f2.derivative("x"))
    roots = solve_real_system(f1, f2, ("x", "y"), width, jacobian=jac)
    # zeros of the numerator at the poles of the lens map would be spurious;
    # the numerator is nonzero there (checked exactly), so no filtering needed
    pole_vals = [g.evaluate([GaussianRational(0)])]
    pole_vals.append(g.evaluate([GaussianRational(a)]))
    if any(v.is_zero() for v in pole_vals):
        return RootSet(None, roots, skipped=True,
                       note="numerator vanishes at a pole; parameters non-generic")
    return RootSet(None, roots)


# -- certified limit counts over edges and vertices of the branching locus --------


@dataclass
class ClusterCount:
    count: Optional[int]          # number of fiber points at the limit parameter
    status: str                   # "certified" | "stable" | "unknown"
    side_counts: Tuple[int, ...] = ()
    note: str = ""


def _grid_clusters(ev1: BoxEvaluator, ev2: BoxEvaluator, region: Tuple[Interval, Interval],
                   params: List[Interval], depth: int) -> Optional[List[List[Tuple[int, int]]]]:
    """4-connected components of grid cells not excluded by interval arithmetic.

    The system is (ev1, ev2) over (x, y, *params); cells are closed, so paths
    of solutions cannot cross between diagonally adjacent excluded cells.
    """
    n = 1 << depth
    bx, by = region
    wx = bx.width() / n
    wy = by.width() / n
    alive = {}
    for i in range(n):
        xs = Interval(bx.lo + i * wx, bx.lo + (i + 1) * wx)
        for j in range(n):
            ys = Interval(by.lo + j * wy, by.lo + (j + 1) * wy)
            box = [xs, ys] + params
            if ev1.eval(box).sign() is not None:
                continue
            if ev2.eval(box).sign() is not None:
                continue
            alive[(i, j)] = None
    # union-find over 4-adjacency
    parent = {c: c for c in alive}

    def find(c):
        while parent[c] != c:
            parent[c] = parent[parent[c]]
            c = parent[c]
        return c

    for (i, j) in alive:
        for d in ((1, 0), (0, 1)):
            nb = (i + d[0], j + d[1])
            if nb in alive:
                ra, rb = find((i, j)), find(nb)
                if ra != rb:
                    parent[ra] = rb
    groups: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for c in alive:
        groups.setdefault(find(c), []).append(c)
    return list(groups.values())


def _locate_cluster(cell_groups, region, depth, pt: Tuple[Fraction, Fraction]) -> Optional[int]:
    n = 1 << depth
    bx, by = region
    if not (bx.lo <= pt[0] <= bx.hi and by.lo <= pt[1] <= by.hi):
        return None
    i = min(int((pt[0] - bx.lo) / (bx.width() / n)), n - 1)
    j = min(int((pt[1] - by.lo) / (by.width() / n)), n - 1)
    for gid, cells in enumerate(cell_groups):
        if (i, j) in cells:
            return gid
    # the point may sit exactly on a cell boundary; try neighbors
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            for gid, cells in enumerate(cell_groups):
                if (i + di, j + dj) in cells:
                    return gid
    return None


def _root_region(f: MixedPolynomial, param_boxes: List[Interval]) -> Tuple[Interval, Interval]:
    """Uniform bound on |z| for solutions of monic f(z, w) = 0 with w in a box."""
    from .analysis import degree_report
    rep = degree_report_affine(f)
    lead_key, lead_coeff = rep
    wmax = max(Fraction(1), *[max(abs(b.lo), abs(b.hi)) for b in param_boxes]) \
        if param_boxes else Fraction(1)
    total = Fraction(0)
    for (nu, mu), c in f.terms.items():
        if (nu, mu) == lead_key:
            continue
        mag = abs(c.re) + abs(c.im)
        wdeg = (nu[1] + mu[1]) if len(nu) > 1 else 0
        total += mag * wmax ** wdeg
    lead_mag = abs(lead_coeff.re) + abs(lead_coeff.im)
    bound = max(Fraction(1), total / lead_mag) + 1
    iv = Interval(-bound, bound)
    return iv, iv


def degree_report_affine(f: MixedPolynomial):
    """Leading z-monomial (unique top z-degree term) of a monic-in-z mixed poly."""
    best = None
    for (nu, mu), c in f.terms.items():
        zdeg = nu[0] + mu[0]
        if best is None or zdeg > best[0]:
            best = (zdeg, (nu, mu), c, 1)
        elif zdeg == best[0]:
            best = (best[0], best[1], best[2], best[3] + 1)
    if best[3] != 1:
        raise FiberError("fiber polynomial is not monic in z (top z-degree not unique)")
    return best[1], best[2]


def edge_limit_count(f: MixedPolynomial, u0: Fraction, v_root,
                     max_levels: int = 7) -> ClusterCount:
    """Number of fiber points over the on-curve parameter (u0, v*) where v* is
    the isolated root of R(u0, .) captured by `v_root` (a RootInterval).

    Clusters of non-excluded cells enclose all solutions over the two-sided
    parameter interval; a cluster hit by a one-sided regular fiber contains a
    limit point (solutions cannot escape through excluded cells and cannot
    collide off the branching locus), so the hit-cluster count is exact once
    clusters separate.
    """
    sys4 = realify(f)
    g1 = sys4.g.subs_var("u", u0).restrict(("x", "y", "v"))
    h1 = sys4.h.subs_var("u", u0).restrict(("x", "y", "v"))
    ev1 = BoxEvaluator(g1)
    ev2 = BoxEvaluator(h1)
    counts = []
    vr = v_root
    depth = 3
    last = None
    for level in range(max_levels):
        vr = vr.refine(steps=2)
        a, b = vr.open_box()
        J = Interval(a, b)
        region = _root_region(f, [Interval.point(u0), J])
        groups = _grid_clusters(ev1, ev2, region, [J], depth)
        if groups is None:
            depth += 1
            continue
        # open_box endpoints are exactly off the curve and bracket the root
        left = solve_fiber(f, GaussianRational(u0, a))
        right = solve_fiber(f, GaussianRational(u0, b))
        if left.positive_dimensional or right.positive_dimensional:
            return ClusterCount(None, "unknown", note="positive-dimensional side fiber")
        lcount = [0] * len(groups)
        rcount = [0] * len(groups)
        ok = True
        for rs, tally in ((left, lcount), (right, rcount)):
            for root in rs.roots:
                gid = _locate_cluster(groups, region, depth, root.box.center())
                if gid is None:
                    ok = False
                else:
                    tally[gid] += 1
        if ok:
            # A cluster provably holds exactly one limit point when its side
            # path counts are one of (1,1), (2,0), (0,2), (2,1), (1,2): a lone
            # one-sided path cannot terminate at a regular point, collisions
            # consume same-side pairs, and the decompositions of these counts
            # into limit points are unique.  Ghost clusters must be excluded.
            good = {(1, 1), (2, 0), (0, 2), (2, 1), (1, 2)}
            if all((l, r) in good for l, r in zip(lcount, rcount)):
                return ClusterCount(len(groups), "certified",
                                    side_counts=(left.gamma, right.gamma))
            counts.append((sum(1 for l, r in zip(lcount, rcount) if l or r),
                           len(groups), left.gamma, right.gamma))
        depth += 1
    if counts:
        return ClusterCount(counts[-1][0], "stable",
                            side_counts=(counts[-1][2], counts[-1][3]),
                            note="cluster configurations unresolved; lower bound")
    return ClusterCount(None, "unknown")


def vertex_limit_count(f: MixedPolynomial, u_box: Interval, v_box: Interval,
                       max_levels: int = 7) -> ClusterCount:
    """Number of fiber points over an isolated special parameter point (vertex
    of the division) enclosed in u_box x v_box.  Same cluster argument as for
    edges, with one sample parameter per off-curve corner of the box."""
    sys4 = realify(f)
    ev1 = BoxEvaluator(sys4.g)
    ev2 = BoxEvaluator(sys4.h)
    ub, vb = u_box, v_box
    depth = 3
    last = None
    sysR = None
    for level in range(max_levels):
        region = _root_region(f, [ub, vb])
        groups = _grid_clusters(ev1, ev2, region, [ub, vb], depth)
        # corner-ish rational samples inside the parameter box, off the curve
        du = ub.width() / 4
        dv = vb.width() / 4
        samples = [
            (ub.lo + du, vb.lo + dv), (ub.hi - du, vb.lo + dv),
            (ub.lo + du, vb.hi - dv), (ub.hi - du, vb.hi - dv),
            (ub.mid(), vb.lo + dv), (ub.mid(), vb.hi - dv),
            (ub.lo + du, vb.mid()), (ub.hi - du, vb.mid()),
        ]
        hit = set()
        per_sample_ok = True
        ok = True
        gammas = []
        for (us, vs) in samples:
            try:
                rs = solve_fiber(f, GaussianRational(us, vs))
            except FiberError:
                ok = False
                break
            if rs.positive_dimensional:
                return ClusterCount(None, "unknown", note="positive-dimensional sample fiber")
            gammas.append(rs.gamma)
            located = {}
            for root in rs.roots:
                gid = _locate_cluster(groups, region, depth, root.box.center())
                if gid is None:
                    ok = False
                else:
                    hit.add(gid)
                    located[gid] = located.get(gid, 0) + 1
            if any(v > 1 for v in located.values()):
                per_sample_ok = False
        if ok and groups is not None and len(hit) == len(groups):
            if per_sample_ok and last == len(hit):
                return ClusterCount(len(hit), "certified", side_counts=tuple(gammas))
            last = len(hit)
        depth += 1
        ub = Interval(ub.mid() - ub.width() / 4, ub.mid() + ub.width() / 4)
        vb = Interval(vb.mid() - vb.width() / 4, vb.mid() + vb.width() / 4)
    if last is not None:
        return ClusterCount(last, "stable", note="count stabilized without the per-sample certificate")
    return ClusterCount(None, "unknown")
