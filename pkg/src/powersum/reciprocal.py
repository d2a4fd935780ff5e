"""Reciprocal Bernoulli polynomials x^k B_n(1/x), their derivatives, and the
number triangles and central coefficients built from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .bernoulli_sums import bernoulli_poly
from .errors import (
    BridgeMismatch,
    ClosedFormMismatch,
    HoppeMismatch,
    LambdaRecurrenceViolation,
    RecurrenceMismatch,
    RouteMismatch,
    SymmetryViolation,
)
from .exact_core import (
    bernoulli_number,
    binomial,
    falling_factorial,
    format_rational,
    genocchi,
    lah,
)
from .polynomial import (
    LaurentPoly,
    PalindromeClass,
    Poly,
    TruncatedSeries,
    palindrome_class,
)

__all__ = [
    "RecipBernoulli",
    "recip_bernoulli",
    "recip_reflect_check",
    "hoppe_derivative",
    "recip_derivative_hoppe",
    "recip_derivative_leibniz",
    "recip_derivative_closed",
    "recip_derivative_value_at_1",
    "b_frak_small",
    "lambda_poly",
    "lambda_recurrence_residual",
    "umbral_bernoulli",
    "BFrakNumbers",
    "B_frak_numbers",
    "B_frak_series",
    "CentralCoeffs",
    "central_coeffs",
    "zero_sum_checks",
    "bridge_to_faulhaber",
    "reciprocity_check",
    "anti_palindromy_chain",
]


@dataclass(frozen=True)
class RecipBernoulli:
    n: int
    k: int
    laurent: LaurentPoly

    def __call__(self, x0):
        return self.laurent(x0)


def recip_bernoulli(n: int, k: int) -> RecipBernoulli:
    """B_{n,k}(x) = x^k B_n(1/x), exponents k-n .. k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    laurent = LaurentPoly.from_reciprocal(bernoulli_poly(n), k)
    if laurent(1) != (-1) ** n * bernoulli_number(n):
        raise ClosedFormMismatch(f"B_{{{n},{k}}}(1) != (-1)^n B_n")
    if k >= n and laurent(0) != (1 if k == n else 0):
        raise ClosedFormMismatch(f"B_{{{n},{k}}}(0) has the wrong boundary value")
    return RecipBernoulli(n, k, laurent)


def recip_reflect_check(n: int, k: int) -> LaurentPoly:
    """B(-x) - (-1)^(n+k) (B(x) + n x^(k-n+1)); zero when the identity holds."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = recip_bernoulli(n, k).laurent
    sign = -1 if (n + k) % 2 else 1
    return b.reflect() - (b + LaurentPoly.monomial(k - n + 1, n)) * sign


def hoppe_derivative(g: Poly, h: Poly, n: int) -> Poly:
    """D^n g(h(t)) = sum_k g^(k)(h)/k! psi_{n,k}(h), cross-checked against direct differentiation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = Poly()
    for k in range(1, n + 1):
        psi = Poly()
        for j in range(k + 1):
            psi = psi + h ** (k - j) * (h**j).derivative(n) * (comb(k, j) * (-1) ** (k - j))
        total = total + g.derivative(k).compose(h) * psi / factorial(k)
    direct = g.compose(h).derivative(n)
    if total != direct:
        raise HoppeMismatch(f"Hoppe formula disagrees with direct derivative (n={n})")
    return total


def _g_of_reciprocal(g: Poly, shift: int = 0) -> LaurentPoly:
    return LaurentPoly.from_reciprocal(g, shift)


@lru_cache(maxsize=None)
def recip_derivative_hoppe(n: int, l: int) -> LaurentPoly:
    """D^l B_n(1/x) = sum_nu L_{l,nu} x^-(l+nu) B_n^(nu)(1/x)."""
    if l < 1:
        raise ValueError("l must be >= 1")
    bn = bernoulli_poly(n)
    total = LaurentPoly(0, ())
    gnu = bn
    for nu in range(1, l + 1):
        gnu = gnu.derivative()
        if gnu.is_zero():
            break
        total = total + _g_of_reciprocal(gnu) * LaurentPoly.monomial(-(l + nu), lah(l, nu))
    return total


def recip_derivative_leibniz(n: int, k: int, l: int) -> LaurentPoly:
    """D^l (x^k B_n(1/x)) assembled by Leibniz from the Lah-route derivatives.

    The j = l term uses B_n(1/x) itself; the factor (k)_j vanishes on its own
    when 0 <= k < j, so no convention for binom(a, -1) is needed here.
    """
    base = _g_of_reciprocal(bernoulli_poly(n))
    total = LaurentPoly(0, ())
    for j in range(l + 1):
        coeff = comb(l, j) * falling_factorial(k, j)
        if coeff == 0:
            continue
        inner = base if j == l else recip_derivative_hoppe(n, l - j)
        total = total + inner * LaurentPoly.monomial(k - j, coeff)
    return total


def recip_derivative_closed(n: int, k: int, l: int) -> LaurentPoly:
    """D^l B_{n,k}(x) = l! sum_nu (-1)^nu binom(k-nu, k-l) binom(n, nu) B_{n-nu, k-l-nu}(x),
    checked against direct differentiation and the Leibniz/Lah assembly."""
    if not (n >= l >= 0 and k >= l):
        raise ValueError("need n, k >= l >= 0")
    total = LaurentPoly(0, ())
    for nu in range(l + 1):
        c = (-1) ** nu * comb(k - nu, k - l) * comb(n, nu)
        if c:
            total = total + recip_bernoulli(n - nu, k - l - nu).laurent * c
    total = total * factorial(l)
    direct = recip_bernoulli(n, k).laurent.derivative(l)
    if total != direct:
        raise ClosedFormMismatch(f"closed form of D^{l} B_{{{n},{k}}} disagrees with direct derivative")
    if l >= 1 and recip_derivative_leibniz(n, k, l) != direct:
        raise ClosedFormMismatch(f"Leibniz/Lah route disagrees for (n, k, l) = ({n}, {k}, {l})")
    return total


def recip_derivative_value_at_1(n: int, k: int, l: int) -> Fraction:
    """(-1)^n l! sum_nu binom(k-nu, k-l) binom(n, nu) B_(n-nu)."""
    s = sum(comb(k - nu, k - l) * comb(n, nu) * bernoulli_number(n - nu) for nu in range(l + 1))
    return (-1) ** n * factorial(l) * s


def _b_frak_sum(n: int, k: int) -> Fraction:
    s = sum(comb(2 * k - nu, k) * comb(n, nu) * bernoulli_number(n - nu) for nu in range(k + 1))
    return (-1) ** n * factorial(k) * s


@lru_cache(maxsize=None)
def b_frak_small(n: int, k: int) -> Fraction:
    """b_{n,k} = D^k B_{n,2k}(1), defined for 0 <= k <= n."""
    if not 0 <= k <= n:
        raise ValueError(f"b_frak({n}, {k}) needs 0 <= k <= n")
    value = _b_frak_sum(n, k)
    if n >= 2 and k >= 2:
        rec = 2 * (2 * k - 1) * _b_frak_sum(n, k - 1) + n * (n - 1) * _b_frak_sum(n - 2, k - 2)
        if rec != value:
            raise RecurrenceMismatch(f"recurrence fails for b_frak({n}, {k})")
    return value


def lambda_poly(n: int, k: int) -> Poly:
    """Lambda_{n,k}(x) = sum_nu binom(n, nu) (2k - nu)_k x^(n - nu)."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    out = _lambda_raw(n, k)
    if k >= 2 and lambda_recurrence_residual(n, k - 2) is not None:
        raise LambdaRecurrenceViolation(f"recurrence fails at n={n}, k={k - 2}")
    return out


def _lambda_raw(n: int, k: int) -> Poly:
    coeffs = [Fraction(0)] * (n + 1)
    for nu in range(min(k, n) + 1):
        coeffs[n - nu] = comb(n, nu) * falling_factorial(2 * k - nu, k)
    return Poly(coeffs)


def lambda_recurrence_residual(n: int, k: int) -> Poly | None:
    """n(n-1) L_{n-2,k} - L_{n,k+2} + 2(2k+3) L_{n,k+1}; None when it vanishes."""
    lhs = _lambda_raw(n - 2, k) * (n * (n - 1)) if n >= 2 else Poly()
    resid = lhs - _lambda_raw(n, k + 2) + _lambda_raw(n, k + 1) * (2 * (2 * k + 3))
    return None if resid.is_zero() else resid


def umbral_bernoulli(p: Poly) -> Fraction:
    """Replace x^j by B_j."""
    return sum((c * bernoulli_number(j) for j, c in enumerate(p.coeffs)), Fraction(0))


@dataclass(frozen=True)
class BFrakNumbers:
    n: int
    values: tuple[Fraction, ...]

    def poly(self) -> Poly:
        return Poly(self.values)

    def to_json(self) -> dict:
        return {"n": self.n, "values": [format_rational(v) for v in self.values]}


@lru_cache(maxsize=None)
def B_frak_numbers(n: int) -> BFrakNumbers:
    """BF_{n,k} = sum_{nu>=k} binom(n, nu) binom(nu, k) B_nu with its symmetries checked."""
    if n < 0:
        raise ValueError("n must be >= 0")
    vals = tuple(
        sum(
            (comb(n, nu) * comb(nu, k) * bernoulli_number(nu) for nu in range(k, n + 1)),
            Fraction(0),
        )
        for k in range(n + 1)
    )
    out = BFrakNumbers(n, vals)
    bn = bernoulli_number(n)

    def fail(what):
        raise SymmetryViolation(f"{what} (n={n})")

    for k in range(n + 1):
        if vals[k] != (-1) ** n * vals[n - k]:
            fail(f"reflection at k={k}")
    if vals[0] != (-1) ** n * bn or vals[n] != bn:
        fail("endpoint values")
    p = out.poly()
    if p(-1) != 1:
        fail("value at -1")
    if p(1) != bn + genocchi(n) / 2:
        fail("value at 1")
    if sum(vals[:n], Fraction(0)) != genocchi(n) / 2:
        fail("Genocchi sum")
    if recip_bernoulli(n, n).laurent.to_poly().shift(1) != p:
        fail("shifted reciprocal polynomial")
    return out


@lru_cache(maxsize=None)
def B_frak_series(n: int, k: int, order: int = 0) -> Poly | TruncatedSeries:
    """BF_{n,k}(x) = BF_n(x) (x+1)^(k-n): a polynomial when k >= n, else a series to ``order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    base = B_frak_numbers(n).poly()
    if k >= n:
        p = base * Poly([1, 1]) ** (k - n)
        if recip_bernoulli(n, k).laurent.to_poly().shift(1) != p:
            raise SymmetryViolation(f"BF_{{{n},{k}}} != B_{{{n},{k}}}(x+1)")
        if not palindrome_class(p, k).is_quasi:
            raise SymmetryViolation(f"BF_{{{n},{k}}} is not quasi-palindromic")
        return p
    return TruncatedSeries.from_poly(base, order) * TruncatedSeries.binomial_series(k - n, order)


@dataclass(frozen=True)
class CentralCoeffs:
    n: int
    values: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def central_coeffs(n: int) -> CentralCoeffs:
    """Central coefficients for odd n by three routes that must agree."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    bf = B_frak_numbers(n).values
    vals = []
    for k in range(n + 1):
        a = B_frak_series(n, 2 * k, k).coeff(k)
        bk = b_frak_small(n, k)
        if recip_derivative_value_at_1(n, 2 * k, k) != bk:
            raise RouteMismatch(f"derivative value and b_frak differ at k={k}")
        b = bk / factorial(k)
        c = sum((binomial(2 * k - n, k - nu) * bf[nu] for nu in range(k + 1)), Fraction(0))
        if not a == b == c:
            raise RouteMismatch(f"central coefficient routes disagree at n={n}, k={k}: {a}, {b}, {c}")
        vals.append(a)
    half = (n - 1) // 2
    sign = (-1) ** half
    for k, v in enumerate(vals):
        if (k == 0 or k > half) and v != 0:
            raise RouteMismatch(f"central coefficient {k} should vanish")
        if 1 <= k <= half and sign * v <= 0:
            raise RouteMismatch(f"sign law fails at k={k}")
    return CentralCoeffs(n, tuple(vals))


def zero_sum_checks(n: int) -> list[tuple[int, Fraction, Fraction]]:
    """(k, Bernoulli-number sum, BF sum) for (n+1)/2 <= k <= n; both entries vanish."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and >= 1")
    bf = B_frak_numbers(n).values
    out = []
    for k in range((n + 1) // 2, n + 1):
        s1 = sum(
            (comb(2 * k - nu, k) * comb(n, nu) * bernoulli_number(n - nu) for nu in range(k + 1)),
            Fraction(0),
        )
        s2 = sum((binomial(2 * k - n, k - nu) * bf[nu] for nu in range(k + 1)), Fraction(0))
        out.append((k, s1, s2))
    return out


def bridge_to_faulhaber(n: int):
    """F_n rebuilt from the b_frak numbers and compared with the faulhaber module."""
    from .faulhaber import FaulhaberPoly, faulhaber, faulhaber_degree

    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    d = faulhaber_degree(n)
    upper = tuple(
        (-1) ** (k + 1) * Fraction(2 ** (k + 2), factorial(k + 2)) * b_frak_small(n, k + 1)
        for k in range(d + 1)
    )
    F = FaulhaberPoly(n, upper)
    if F != faulhaber(n):
        raise BridgeMismatch(f"F_{n} from b_frak differs")
    lower = tuple(
        (-1) ** (k + 1) * Fraction(3, n) * Fraction(2 ** (k + 1), factorial(k + 1)) * b_frak_small(n, k + 1)
        for k in range(faulhaber_degree(n - 1) + 1)
    )
    if FaulhaberPoly(n - 1, lower) != faulhaber(n - 1):
        raise BridgeMismatch(f"F_{n - 1} from b_frak differs")
    Fp = F.poly
    for k in range(d + 1):
        value = recip_derivative_closed(n, 2 * (k + 1), k + 1)(1)
        expected = (-1) ** (k + 1) * Fraction(2 ** (k + 2), (k + 1) * (k + 2)) * value
        if Fp.derivative(k)(0) != expected:
            raise BridgeMismatch(f"F_{n}^({k})(0) differs")
    return F


def reciprocity_check(r: int, s: int) -> Fraction:
    """(-1)^r sum binom(r,nu) B_(s+nu) - (-1)^s sum binom(s,nu) B_(r+nu)."""
    if r < 0 or s < 0:
        raise ValueError("r, s must be >= 0")
    left = sum((comb(r, nu) * bernoulli_number(s + nu) for nu in range(r + 1)), Fraction(0))
    right = sum((comb(s, nu) * bernoulli_number(r + nu) for nu in range(s + 1)), Fraction(0))
    return (-1) ** r * left - (-1) ** s * right


def anti_palindromy_chain(n: int) -> list[int]:
    """For odd n, the k >= (n+1)/2 where every link of the vanishing chain holds."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd")
    good = []
    for k in range((n + 1) // 2, n + 1):
        p = B_frak_series(n, 2 * k)
        if palindrome_class(p, 2 * k) is not PalindromeClass.ANTI_PALINDROMIC:
            continue
        if p.coeff(k) != 0 or recip_derivative_value_at_1(n, 2 * k, k) != 0:
            continue
        if n >= 3 and central_coeffs(n).values[k] != 0:
            continue
        good.append(k)
    return good

