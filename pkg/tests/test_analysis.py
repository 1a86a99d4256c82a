"""Degree reports, the C*-action identity, affinization, realification, contraction."""

import random
from fractions import Fraction

import pytest

from mixedcurves import (GaussianRational, action_check, affinize, contract,
                         degree_report, homogenize, parse_mixed, parse_real,
                         realify)

P3 = ("z1", "z2", "z3")


def ex11_projective():
    return parse_mixed(
        "z1^2*~z1 + z2^2*~z2 + z3^2*~z3 - 4*z1*z2*~z3", P3)


def ex12_projective():
    return parse_mixed(
        "z1^2*~z1 + z2^2*~z2 + z3^2*~z3 - 4*z2*z3*~z3 - 2*z3^2*~z1", P3)


def ex2_projective():
    return parse_mixed(
        "z1^3*~z1 + z2^3*~z2 + z3^3*~z3 - 4*z1^2*~z2*z3", P3)


class TestDegreeReport:
    def test_example_1_1(self):
        rep = degree_report(ex11_projective())
        assert rep.polar_degree == 1 and rep.radial_degree == 3
        assert rep.is_strongly_homogeneous and rep.r == 1

    def test_example_2(self):
        rep = degree_report(ex2_projective())
        assert rep.polar_degree == 2 and rep.radial_degree == 4
        assert rep.is_strongly_homogeneous and rep.r == 1

    def test_inhomogeneous(self):
        rep = degree_report(parse_mixed("z1 + ~z1", P3))
        assert not rep.is_strongly_homogeneous
        assert rep.polar_range == (-1, 1)

    def test_monic_detection(self):
        rep = degree_report(ex11_projective())
        assert set(rep.is_monic_in) == {"z1", "z2", "z3"}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            degree_report(parse_mixed("0", P3))


class TestActionCheck:
    def test_brieskorn(self):
        fb = parse_mixed("z1^3*~z1 + z2^3*~z2 + z3^3*~z3", P3)
        ok, witness = action_check(fb, trials=10)
        assert ok and witness is None

    def test_example_1_1(self):
        ok, _ = action_check(ex11_projective(), trials=10)
        assert ok

    def test_constant(self):
        ok, _ = action_check(parse_mixed("1", P3), trials=3)
        assert ok

    def test_real_scaling_by_hand(self):
        # F(2z) = 2^d F(z) for real lambda=2
        F = ex11_projective()
        rng = random.Random(3)
        for _ in range(10):
            pt = [GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in P3]
            doubled = [GaussianRational(2) * p for p in pt]
            assert F.evaluate(doubled) == GaussianRational(8) * F.evaluate(pt)


class TestAffinize:
    def test_example_1_1(self):
        f = affinize(ex11_projective(), 3)
        assert f == parse_mixed("z^2*~z + w^2*~w + 1 - 4*z*w", ("z", "w"))

    def test_example_1_2(self):
        f = affinize(ex12_projective(), 3)
        assert f == parse_mixed("z^2*~z + w^2*~w + 1 - 4*w - 2*~z", ("z", "w"))

    def test_example_2(self):
        f = affinize(ex2_projective(), 3)
        assert f == parse_mixed("z^3*~z + w^3*~w + 1 - 4*z^2*~w", ("z", "w"))

    def test_roundtrip_homogenize(self):
        F = ex2_projective()
        f = affinize(F, 3)
        back = homogenize(f, q=2, r=1)
        assert back == F

    def test_bad_chart(self):
        with pytest.raises(ValueError):
            affinize(ex11_projective(), 4)


class TestRealify:
    def test_z2zbar(self):
        f = parse_mixed("z^2*~z", ("z", "w"))
        sys = realify(f)
        assert sys.g == parse_real("x^3 + x*y^2", ("x", "y", "u", "v"))
        assert sys.h == parse_real("x^2*y + y^3", ("x", "y", "u", "v"))

    def test_example_1_1(self):
        f = parse_mixed("z^2*~z + w^2*~w + 1 - 4*z*w", ("z", "w"))
        sys = realify(f)
        vars4 = ("x", "y", "u", "v")
        assert sys.g == parse_real(
            "x^3 + x*y^2 + u^3 + u*v^2 + 1 - 4*x*u + 4*y*v", vars4)
        assert sys.h == parse_real(
            "x^2*y + y^3 + u^2*v + v^3 - 4*x*v - 4*y*u", vars4)

    def test_constant(self):
        sys = realify(parse_mixed("1", ("z", "w")))
        assert sys.g == 1 and sys.h.is_zero() and sys.J.is_zero()

    def test_evaluation_identity(self):
        rng = random.Random(11)
        f = affinize(ex2_projective(), 3)
        sys = realify(f)
        for _ in range(100):
            x0, y0, u0, v0 = (Fraction(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(4))
            val = f.evaluate([GaussianRational(x0, y0), GaussianRational(u0, v0)])
            assert val.re == sys.g.eval([x0, y0, u0, v0])
            assert val.im == sys.h.eval([x0, y0, u0, v0])

    def test_jacobian_vs_independent_partials(self):
        f = affinize(ex11_projective(), 3)
        sys = realify(f)
        gx = sys.g.derivative("x")
        gy = sys.g.derivative("y")
        hx = sys.h.derivative("x")
        hy = sys.h.derivative("y")
        assert sys.J == gx * hy - gy * hx


class TestContract:
    def test_brieskorn(self):
        q, r = 2, 1
        fb = parse_mixed("z1^3*~z1 + z2^3*~z2 + z3^3*~z3", P3)
        assert contract(fb, r) == parse_mixed("z1^2 + z2^2 + z3^2", P3)

    def test_identity_on_r0(self):
        F = ex11_projective()
        assert contract(F, 0) == F

    def test_tree_type_q3(self):
        # f_I at q=3, r=1
        fI = parse_mixed("z1^3*~z1*z2 + z2^3*~z2*z3 + z3^4*~z3", P3)
        assert contract(fI, 1) == parse_mixed("z1^2*z2 + z2^2*z3 + z3^3", P3)

    def test_error_on_partial_pair(self):
        with pytest.raises(ValueError):
            contract(parse_mixed("z1*~z1", P3), 2)
