"""Core kernel tests: Gaussian rationals, sparse polynomials, parser, gcd."""

import random
from fractions import Fraction

import pytest

from mixedcurves import (GaussianRational, MixedPolynomial, RealPolynomial,
                         ParseError, parse_mixed, parse_real, poly_gcd,
                         squarefree_part)


class TestGaussianRational:
    def test_field_ops(self):
        a = GaussianRational(Fraction(1, 2), 3)
        b = GaussianRational(-2, Fraction(1, 3))
        assert (a + b) - b == a
        assert (a * b) / b == a
        assert a * (1 / a) == GaussianRational(1)

    def test_conjugation_involution(self):
        a = GaussianRational(Fraction(3, 7), Fraction(-5, 2))
        assert a.conj().conj() == a
        assert (a * a.conj()).im == 0

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            GaussianRational(1) / GaussianRational(0)


class TestRealPolynomial:
    def test_difference_of_squares(self):
        x = RealPolynomial.var(("x", "y"), "x")
        y = RealPolynomial.var(("x", "y"), "y")
        assert (x + y) * (x - y) == x * x - y * y

    def test_content(self):
        p = parse_real("6*x^2 + 9*y", ("x", "y"))
        assert p.content() == 3

    def test_primitive_part_positive_lead(self):
        p = parse_real("-6*x^2 - 9*y", ("x", "y"))
        pp = p.primitive_part()
        assert pp == parse_real("2*x^2 + 3*y", ("x", "y"))

    def test_exact_div(self):
        vars_ = ("x", "y")
        a = parse_real("x^2 - y^2", vars_)
        b = parse_real("x - y", vars_)
        assert a.exact_div(b) == parse_real("x + y", vars_)
        with pytest.raises(ValueError):
            parse_real("x^2 + 1", vars_).exact_div(b)

    def test_gcd_bivariate(self):
        vars_ = ("x", "y")
        circle = parse_real("x^2 + y^2 - 1", vars_)
        a = circle * parse_real("x - 2", vars_)
        b = circle * parse_real("y - 3", vars_)
        g = poly_gcd(a, b)
        # equality up to scalar: both inputs exactly divisible, degree matches
        assert g.total_degree() == 2
        a.exact_div(g)
        b.exact_div(g)

    def test_squarefree_part(self):
        vars_ = ("x", "y")
        p = parse_real("x - y", vars_) ** 3 * parse_real("x + 1", vars_)
        s = squarefree_part(p)
        assert s == parse_real("x - y", vars_) * parse_real("x + 1", vars_)


def _naive_dense_mul(a, b, nvars, deg):
    """Dense-array multiplication oracle over small exponent grids."""
    size = 2 * deg + 1
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c != 0}


class TestArithmeticAgainstOracle:
    def test_randomized_mul_add(self):
        rng = random.Random(20240)
        vars_ = ("x", "y", "z")
        for _ in range(1000):
            terms_a = {}
            terms_b = {}
            for _ in range(rng.randint(0, 5)):
                e = tuple(rng.randint(0, 4) for _ in range(3))
                terms_a[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            for _ in range(rng.randint(0, 5)):
                e = tuple(rng.randint(0, 4) for _ in range(3))
                terms_b[e] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            pa = RealPolynomial(vars_, terms_a)
            pb = RealPolynomial(vars_, terms_b)
            expected = _naive_dense_mul(
                {e: c for e, c in pa.terms.items()},
                {e: c for e, c in pb.terms.items()}, 3, 4)
            assert (pa * pb).terms == expected


class TestParser:
    def test_example_affine_polynomial(self):
        f = parse_mixed("z^2*~z + w^2*~w + 1 - 4*z*w", ("z", "w"))
        assert f.coefficient((2, 0), (1, 0)) == GaussianRational(1)
        assert f.coefficient((0, 2), (0, 1)) == GaussianRational(1)
        assert f.coefficient((0, 0), (0, 0)) == GaussianRational(1)
        assert f.coefficient((1, 1), (0, 0)) == GaussianRational(-4)
        assert len(f.terms) == 4

    def test_zero(self):
        f = parse_mixed("0", ("z",))
        assert f.is_zero()
        assert str(f) == "0"

    def test_complex_coefficient(self):
        f = parse_mixed("(1+2*i)*z*~w", ("z", "w"))
        assert len(f.terms) == 1
        assert f.coefficient((1, 0), (0, 1)) == GaussianRational(1, 2)

    def test_conj_alias(self):
        assert parse_mixed("conj(z)", ("z",)) == parse_mixed("~z", ("z",))

    def test_errors(self):
        with pytest.raises(ParseError):
            parse_mixed("z +", ("z",))
        with pytest.raises(ParseError):
            parse_mixed("q^2", ("z",))
        with pytest.raises(ParseError):
            parse_mixed("z^2 @", ("z",))

    def test_roundtrip_random(self):
        rng = random.Random(99)
        vars_ = ("z", "w")
        for _ in range(1000):
            terms = {}
            for _ in range(rng.randint(0, 6)):
                nu = (rng.randint(0, 3), rng.randint(0, 3))
                mu = (rng.randint(0, 3), rng.randint(0, 3))
                c = GaussianRational(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                                     Fraction(rng.randint(-9, 9), rng.randint(1, 4)))
                if not c.is_zero():
                    terms[(nu, mu)] = c
            p = MixedPolynomial(vars_, terms)
            assert parse_mixed(str(p), vars_) == p


class TestEvaluation:
    def test_norm_square(self):
        f = parse_mixed("z*~z", ("z",))
        assert f.evaluate([GaussianRational(3, 4)]) == GaussianRational(25)

    def test_affine_origin(self):
        f = parse_mixed("z^2*~z + w^2*~w + 1 - 4*z*w", ("z", "w"))
        assert f.evaluate([GaussianRational(0), GaussianRational(0)]) == GaussianRational(1)

    def test_z2zbar(self):
        f = parse_mixed("z^2*~z", ("z",))
        assert f.evaluate([GaussianRational(1, 1)]) == GaussianRational(2, 2)

    def test_conj_poly_identity(self):
        rng = random.Random(7)
        vars_ = ("z", "w")
        for _ in range(50):
            terms = {}
            for _ in range(rng.randint(1, 5)):
                nu = (rng.randint(0, 2), rng.randint(0, 2))
                mu = (rng.randint(0, 2), rng.randint(0, 2))
                terms[(nu, mu)] = GaussianRational(rng.randint(-4, 4), rng.randint(-4, 4))
            f = MixedPolynomial(vars_, terms)
            pt = [GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in vars_]
            assert f.conj_poly().evaluate(pt) == f.evaluate(pt).conj()
