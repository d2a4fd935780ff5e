"""Exact power sums, Faulhaber polynomials and reciprocal Bernoulli polynomials."""

from .bernoulli_sums import bernoulli_poly, power_sum_poly
from .evaluate import power_sum
from .exact_core import Rational, bernoulli_number, genocchi, parse_rational, format_rational
from .faulhaber import FaulhaberPoly
from .polynomial import LaurentPoly, Poly, SubstitutionBasis, TruncatedSeries

__all__ = [
    "Rational",
    "Poly",
    "LaurentPoly",
    "TruncatedSeries",
    "SubstitutionBasis",
    "bernoulli_number",
    "genocchi",
    "parse_rational",
    "format_rational",
    "bernoulli_poly",
    "power_sum_poly",
    "power_sum",
    "FaulhaberPoly",
]

__version__ = "0.1.0"
