"""mixedcurves: exact computation with smooth mixed projective plane curves."""

from .gaussian import GaussianRational
from .mixedpoly import MixedMonomial, MixedPolynomial
from .realpoly import RealPolynomial, poly_gcd, squarefree_part
from .parse import ParseError, parse_mixed, parse_real
from .analysis import (DegreeReport, RealifiedSystem, action_check, affinize,
                       contract, degree_report, homogenize, realify,
                       realify_univariate)

__all__ = [
    "GaussianRational", "MixedMonomial", "MixedPolynomial", "RealPolynomial",
    "poly_gcd", "squarefree_part", "ParseError", "parse_mixed", "parse_real",
    "DegreeReport", "RealifiedSystem", "action_check", "affinize", "contract",
    "degree_report", "homogenize", "realify", "realify_univariate",
]
