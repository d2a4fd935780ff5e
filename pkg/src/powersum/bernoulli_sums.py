"""Bernoulli polynomials, power sums in both conventions, and the
symmetry apparatus around x = 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import RaabeViolation
from .exact_core import bernoulli_half, bernoulli_number
from .polynomial import Poly, SubstitutionBasis, X, rebase_quadratic

__all__ = [
    "bernoulli_poly",
    "power_sum_poly",
    "power_sum_eval_brute",
    "old_convention",
    "b_diamond",
    "b_hat",
    "HalfExpansion",
    "half_expansion",
    "omega_form",
    "stern_check",
]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Poly:
    """B_n(x) = sum_k binom(n, k) B_(n-k) x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly(comb(n, k) * bernoulli_number(n - k) for k in range(n + 1))


@lru_cache(maxsize=None)
def power_sum_poly(n: int) -> Poly:
    """S_n(x), the polynomial with S_n(m) = 0^n + 1^n + ... + (m-1)^n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (bernoulli_poly(n + 1) - bernoulli_number(n + 1)) / (n + 1)


def power_sum_eval_brute(n: int, m: int) -> int:
    """Literal sum of nu^n for 0 <= nu < m (with 0^0 = 1)."""
    return sum(nu**n for nu in range(m))


@lru_cache(maxsize=None)
def old_convention(n: int) -> Poly:
    """S_n(x + 1), i.e. 1^n + ... + m^n at x = m (for n >= 1)."""
    return power_sum_poly(n).shift(1)


def b_diamond(n: int) -> Poly:
    """B_n(x) + (n/2) x^(n-1): the B_1 term removed, leaving an odd or even function."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return bernoulli_poly(n) + Poly.monomial(n - 1, Fraction(n, 2))


def b_hat(n: int, k: int) -> Poly:
    """k^(1-n) B_n(kx) - B_n(x), cross-checked against sum_{nu=1}^{k-1} B_n(x + nu/k)."""
    if n < 1 or k < 1:
        raise ValueError("n, k must be >= 1")
    bn = bernoulli_poly(n)
    scaled = bn.compose(Poly([0, k]))
    direct = scaled * Fraction(k) ** (1 - n) - bn
    shifted = Poly()
    for nu in range(1, k):
        shifted = shifted + bn.shift(Fraction(nu, k))
    if direct != shifted:
        raise RaabeViolation(f"multiplication formula fails for n={n}, k={k}")
    return direct


@dataclass(frozen=True)
class HalfExpansion:
    """B_n(x) written in powers of (x - 1/2); ``terms`` maps even nu to the
    coefficient of (x - 1/2)^(n - nu)."""

    n: int
    terms: tuple[tuple[int, Fraction], ...]

    def to_poly(self) -> Poly:
        centre = X - Fraction(1, 2)
        out = Poly()
        for nu, c in self.terms:
            out = out + centre ** (self.n - nu) * c
        return out


def half_expansion(n: int) -> HalfExpansion:
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = tuple((nu, comb(n, nu) * bernoulli_half(nu)) for nu in range(0, n + 1, 2))
    return HalfExpansion(n, terms)


def omega_form(n: int) -> Poly:
    """W with S_n(x) = W((2x - 1)^2), for odd n >= 3.

    The overall scale (e.g. 1/(10 * 2^10) for n = 9) stays inside W.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("omega form needs odd n >= 3")
    return rebase_quadratic(power_sum_poly(n), SubstitutionBasis.OMEGA)


def stern_check(l: int) -> Poly:
    """S_1^l - 2^(1-l) sum_{odd nu <= l} binom(l, nu) S_(2l-nu); zero when the identity holds."""
    if l < 1:
        raise ValueError("l must be >= 1")
    rhs = Poly()
    for nu in range(1, l + 1, 2):
        rhs = rhs + power_sum_poly(2 * l - nu) * comb(l, nu)
    return power_sum_poly(1) ** l - rhs * Fraction(2) ** (1 - l)
