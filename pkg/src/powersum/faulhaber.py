"""Faulhaber polynomials F_n with S_n(x) = f_n(x) F_n(S_1(x)).

Four independent constructions for odd n (factor-and-rebase, the
Gessel-Viennot closed form, a triangular solve of the Bernoulli-number
recurrence, and the upward chain in n), the step-down map to even n, and the
historical coefficient systems of Jacobi and Schroeder. Even n is always
reached through :func:`faulhaber_step_down`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .bernoulli_sums import bernoulli_poly, old_convention, power_sum_poly
from .errors import (
    AppellViolation,
    BnFpViolation,
    ChainInconsistency,
    JacobiRecurrenceViolation,
    MethodDisagreement,
    SchroederIdentityViolation,
)
from .exact_core import bernoulli_number, format_rational, parse_rational
from .polynomial import (
    Poly,
    SubstitutionBasis,
    X,
    exact_divide,
    rebase_quadratic,
    summation_operator,
    theta,
)

__all__ = [
    "FaulhaberPoly",
    "faulhaber_degree",
    "faulhaber_factor",
    "faulhaber_by_substitution",
    "faulhaber_gv",
    "faulhaber_triangular",
    "faulhaber_chain",
    "faulhaber_step_down",
    "faulhaber",
    "clear_cache",
    "METHODS",
    "check_invariants",
    "theta_recurrence_check",
    "second_order_recurrence_check",
    "knuth_residuals",
    "JacobiCoeffs",
    "jacobi_coeffs",
    "SchroederCoeffs",
    "schroeder_coeffs",
    "bold_F",
    "frak_F_pair",
    "RFoldSum",
    "rfold",
    "CompanionForm",
    "companion_form",
]

HALF = Fraction(1, 2)
Y_POLY = SubstitutionBasis.Y.quadratic


def faulhaber_degree(n: int) -> int:
    """d_n = floor(n/2) - 1."""
    return n // 2 - 1


@dataclass(frozen=True)
class FaulhaberPoly:
    """F_n(y) = sum_k coeffs[k] y^k, with exactly d_n + 1 coefficients."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("Faulhaber polynomials start at n = 2")
        if len(self.coeffs) != faulhaber_degree(self.n) + 1:
            raise ValueError(
                f"F_{self.n} needs {faulhaber_degree(self.n) + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, n: int, p: Poly) -> FaulhaberPoly:
        d = faulhaber_degree(n)
        if p.degree > d:
            raise ValueError(f"degree {p.degree} exceeds d_{n} = {d}")
        return cls(n, tuple(p.coeff(k) for k in range(d + 1)))

    @property
    def degree(self) -> int:
        return faulhaber_degree(self.n)

    @property
    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def __call__(self, y):
        return self.poly(y)

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> FaulhaberPoly:
        return cls(int(data["n"]), tuple(parse_rational(s) for s in data["coeffs"]))


def faulhaber_factor(n: int) -> Poly:
    """f_n(x): S_2(x) for even n, S_1(x)^2 for odd n."""
    if n % 2 == 0:
        return power_sum_poly(2)
    return power_sum_poly(1) ** 2


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")


def faulhaber_by_substitution(n: int) -> FaulhaberPoly:
    """Divide S_n by f_n and rewrite the quotient in y = x(x-1)/2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    quotient = exact_divide(power_sum_poly(n), faulhaber_factor(n))
    return FaulhaberPoly.from_poly(n, rebase_quadratic(quotient, SubstitutionBasis.Y))


def faulhaber_gv(n: int) -> FaulhaberPoly:
    """Closed form
    f_{n,k} = (-1)^k 2^(k+2)/(k+2) sum_{nu<=k+1} binom(2(k+1)-nu, k+1) binom(n, nu) B_(n-nu).
    """
    _require_odd(n)
    coeffs = []
    for k in range(faulhaber_degree(n) + 1):
        s = sum(
            comb(2 * (k + 1) - nu, k + 1) * comb(n, nu) * bernoulli_number(n - nu)
            for nu in range(k + 2)
        )
        coeffs.append((-1) ** k * Fraction(2 ** (k + 2), k + 2) * s)
    return FaulhaberPoly(n, tuple(coeffs))


def faulhaber_triangular(n: int) -> FaulhaberPoly:
    """Solve binom(n, l+1) B_(n-l-1) = (l+2) sum_{k<=l} binom(k+2, l-k) 2^-(k+2) f_{n,k}
    for l = 0, 1, ..., d_n in turn; f_{n,l} enters the l-th row with the
    nonzero factor (l+2) 2^-(l+2)."""
    _require_odd(n)
    f: list[Fraction] = []
    for l in range(faulhaber_degree(n) + 1):
        lhs = comb(n, l + 1) * bernoulli_number(n - l - 1)
        known = sum(
            (comb(k + 2, l - k) * HALF ** (k + 2) * f[k] for k in range(l)), Fraction(0)
        )
        pivot = HALF ** (l + 2)
        f.append((lhs / (l + 2) - known) / pivot)
    return FaulhaberPoly(n, tuple(f))


def faulhaber_step_down(F: FaulhaberPoly) -> FaulhaberPoly:
    """f_{n-1,k} = (3/(2n)) (k+2) f_{n,k} for odd n."""
    _require_odd(F.n)
    n = F.n
    return FaulhaberPoly(
        n - 1, tuple(Fraction(3, 2 * n) * (k + 2) * c for k, c in enumerate(F.coeffs))
    )


def _chain_step(n: int, lower: FaulhaberPoly) -> FaulhaberPoly:
    """F_n from F_(n-2) via
    binom(n,2) f_{n-2,k} = (1/2) binom(2(k+3),2) f_{n,k+1} + (1/4) binom(k+4,2) f_{n,k+2}.
    """
    d = faulhaber_degree(n)
    f = [Fraction(0)] * (d + 2)
    f[d] = Fraction(2 ** ((n + 1) // 2), n + 1)
    for k in range(d - 1, -1, -1):
        rhs = comb(n, 2) * lower.coeffs[k] - Fraction(comb(k + 4, 2), 4) * f[k + 2]
        solved = rhs / (Fraction(comb(2 * (k + 3), 2), 2))
        if k == d - 1:
            if solved != f[d]:
                raise ChainInconsistency(
                    f"leading coefficient of F_{n}: recurrence gives {solved}, closed form {f[d]}"
                )
        else:
            f[k + 1] = solved
    # the recurrence never reaches f_{n,0}; it is fixed by F_n(0) = 2n B_(n-1)
    f[0] = 2 * n * bernoulli_number(n - 1)
    coeffs = tuple(f[: d + 1])
    if sum(coeffs) != 1:
        raise ChainInconsistency(f"F_{n}(1) = {sum(coeffs)} instead of 1")
    return FaulhaberPoly(n, coeffs)


def faulhaber_chain(n: int) -> FaulhaberPoly:
    """Build F_3, F_5, ..., F_n upward with the three-term coefficient recurrence."""
    _require_odd(n)
    F = FaulhaberPoly(3, (Fraction(1),))
    for m in range(5, n + 1, 2):
        F = _chain_step(m, F)
    return F


_ODD_METHODS = {
    "substitution": faulhaber_by_substitution,
    "gv": faulhaber_gv,
    "triangular": faulhaber_triangular,
    "chain": faulhaber_chain,
}
METHODS = tuple(_ODD_METHODS)

_cache: dict[int, FaulhaberPoly] = {}
_cache_lock = threading.Lock()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def faulhaber(n: int, method: str = "auto") -> FaulhaberPoly:
    """F_n by the named method; ``auto`` runs all four and insists they agree.

    Even n goes through the odd n+1 construction and the step-down map,
    except for ``substitution`` which handles even n directly.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if method == "auto":
        cached = _cache.get(n)
        if cached is not None:
            return cached
        results = {m: faulhaber(n, m) for m in METHODS}
        distinct = set(results.values())
        if len(distinct) != 1:
            raise MethodDisagreement(f"methods disagree on F_{n}: {results}")
        F = results["substitution"]
        with _cache_lock:
            _cache.setdefault(n, F)
        return F
    if method not in _ODD_METHODS:
        raise ValueError(f"unknown method {method!r}")
    if n % 2 == 1:
        return _ODD_METHODS[method](n)
    if method == "substitution":
        return faulhaber_by_substitution(n)
    return faulhaber_step_down(_ODD_METHODS[method](n + 1))


def check_invariants(F: FaulhaberPoly) -> list[str]:
    """Names of violated invariants (empty when all hold)."""
    n, d, f = F.n, F.degree, F.coeffs
    problems = []
    if sum(f) != 1:
        problems.append("F_n(1) != 1")
    for k, c in enumerate(f):
        if c == 0 or (c > 0) != ((d - k) % 2 == 0):
            problems.append(f"sign of f_{{{n},{k}}}")
    expected0 = 6 * bernoulli_number(n) if n % 2 == 0 else 2 * n * bernoulli_number(n - 1)
    if f[0] != expected0:
        problems.append("F_n(0)")
    if n % 2 == 1 and f[d] != Fraction(2 ** ((n + 1) // 2), n + 1):
        problems.append("leading coefficient")
    return problems


def theta_recurrence_check(n: int) -> Poly:
    """Residual of the first-order recurrence linking F_n and F_(n-1)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    y = X
    Fn = faulhaber(n).poly
    Fm = faulhaber(n - 1).poly if n - 1 >= 2 else Poly()
    if n % 2 == 1:
        return Fm * n - theta(Fn, HALF) * 3
    return (
        y * y * Fm * n
        - theta(Fn - Fn.coeff(0), 1) * Fraction(1, 6)
        - y * theta(Fn, Fraction(2, 3)) * 2
    )


def second_order_recurrence_check(n: int) -> Poly:
    """Residual of n(n-1) y^2 F_(n-2) = 1/2 th_1/2 th_1 (F_n - F_n(0)) + 6y th_1/2 th_2/3 F_n, odd n >= 5."""
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and >= 5")
    y = X
    Fn = faulhaber(n).poly
    lower = faulhaber(n - 2).poly
    rhs = theta(theta(Fn - Fn.coeff(0), 1), HALF) * HALF + y * theta(
        theta(Fn, Fraction(2, 3)), HALF
    ) * 6
    return y * y * lower * (n * (n - 1)) - rhs


def knuth_residuals(n: int) -> list[Fraction]:
    """sum_{k=l}^{d_n} binom(k+2, 2(k-l)+1) 2^-(k-l) f_{n,k} for 0 <= l < d_n; all zero."""
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and >= 5")
    f = faulhaber(n).coeffs
    d = faulhaber_degree(n)
    out = []
    for l in range(d):
        total = Fraction(0)
        for k in range(l, d + 1):
            b = comb(k + 2, 2 * (k - l) + 1)
            if k > 2 * l + 1 and b != 0:
                raise AssertionError(f"support claim fails at l={l}, k={k}")
            total += b * HALF ** (k - l) * f[k]
        out.append(total)
    return out


@dataclass(frozen=True)
class JacobiCoeffs:
    """S_n(x) = (A_0 u^m + ... + A_(m-1) u)/(n+1) with u = x(x-1), m = (n+1)/2."""

    m: int
    A: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return 2 * self.m - 1

    def u_poly(self) -> Poly:
        """sum_k A_k u^(m-k), without the 1/(n+1) factor."""
        return Poly([0] + list(reversed(self.A)))


def _jacobi_from_faulhaber(m: int) -> tuple[Fraction, ...]:
    n = 2 * m - 1
    f = faulhaber(n).coeffs
    d = faulhaber_degree(n)
    A = [Fraction(n + 1, 2 ** (m - k)) * f[d - k] for k in range(m - 1)]
    A.append(Fraction(0))
    return tuple(A)


def jacobi_coeffs(m: int) -> JacobiCoeffs:
    """Jacobi's A_k^(m), checked against both Jacobi's and Knuth's recurrences."""
    if m < 2:
        raise ValueError("m must be >= 2")
    A = _jacobi_from_faulhaber(m)
    if A[0] != 1 or A[m - 1] != 0:
        raise JacobiRecurrenceViolation(f"A_0 or A_(m-1) wrong for m={m}")
    if m >= 3:
        prev = _jacobi_from_faulhaber(m - 1)
        for k in range(m - 1):
            lhs = comb(2 * m, 2) * prev[k]
            rhs = comb(2 * m - 2 * k, 2) * A[k] + (comb(m - k + 1, 2) * A[k - 1] if k else 0)
            if lhs != rhs:
                raise JacobiRecurrenceViolation(f"Jacobi recurrence fails at m={m}, k={k}")
    for k in range(1, m):
        total = sum(comb(m - j, 2 * k + 1 - 2 * j) * A[j] for j in range(k + 1))
        if total != 0:
            raise JacobiRecurrenceViolation(f"Knuth recurrence fails at m={m}, k={k}")
    expanded = JacobiCoeffs(m, A).u_poly().compose(SubstitutionBasis.U.quadratic) / (2 * m)
    if expanded != power_sum_poly(2 * m - 1):
        raise JacobiRecurrenceViolation(f"u-form does not reproduce S_{2 * m - 1}")
    return JacobiCoeffs(m, A)


@dataclass(frozen=True)
class SchroederCoeffs:
    m: int
    beta: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]

    def odd_xi_poly(self) -> Poly:
        """P_(2m+1)(x) as a polynomial in xi."""
        m = self.m
        c = Fraction((-1) ** (m + 1), factorial(2 * m + 2))
        coeffs = [Fraction(0)] * (m + 2)
        for k in range(2, m + 2):
            coeffs[k] = c * self.beta[m - k + 1]
        return Poly(coeffs)

    def even_xi_poly(self) -> Poly:
        """P_(2m)(x)/(x - 1/2) as a polynomial in xi."""
        m = self.m
        c = Fraction((-1) ** m, factorial(2 * m + 1))
        coeffs = [Fraction(0)] * (m + 1)
        for k in range(1, m + 1):
            coeffs[k] = c * self.gamma[m - k]
        return Poly(coeffs)


def _beta(m: int, k: int) -> Fraction:
    s = sum(
        comb(2 * m + 2, 2 * nu) * comb(m - nu + 1, k - nu) * (4**nu - 2) * bernoulli_number(2 * nu)
        for nu in range(k + 1)
    )
    return Fraction((-1) ** (k + 1), 4**k) * s


def _gamma(m: int, k: int) -> Fraction:
    s = sum(
        comb(2 * m + 1, 2 * nu) * comb(m - nu, k - nu) * (4**nu - 2) * bernoulli_number(2 * nu)
        for nu in range(k + 1)
    )
    return Fraction((-1) ** (k + 1), 4**k) * s


def schroeder_coeffs(m: int) -> SchroederCoeffs:
    """Schroeder's beta/gamma systems with every stated identity checked."""
    if m < 1:
        raise ValueError("m must be >= 1")
    beta = tuple(_beta(m, k) for k in range(m))
    gamma = tuple(_gamma(m, k) for k in range(m))
    out = SchroederCoeffs(m, beta, gamma)

    def fail(what):
        raise SchroederIdentityViolation(f"{what} (m={m})")

    if any(b <= 0 for b in beta) or any(g <= 0 for g in gamma):
        fail("non-positive coefficient")
    for k in range(m):
        if (m + 1) * gamma[k] != (m - k + 1) * beta[k]:
            fail(f"gamma/beta proportionality at k={k}")
    if beta[0] != 1:
        fail("beta_0 != 1")
    if beta[m - 1] != comb(2 * m + 2, 2) * abs(bernoulli_number(2 * m)):
        fail("beta_(m-1) special value")
    if m >= 2:
        if 2 * beta[m - 1] != beta[m - 2]:
            fail("beta_(m-1) = beta_(m-2)/2")
        prev = tuple(_beta(m - 1, k) for k in range(m - 1))
        for k in range(m):
            lhs = comb(2 * m - 2 * k + 2, 2) * beta[k]
            rhs = (comb(m - k + 2, 2) * beta[k - 1] if k else 0) + (
                comb(2 * m + 2, 2) * prev[k] if k < m - 1 else 0
            )
            if lhs != rhs:
                fail(f"Schroeder recurrence at k={k}")
    A = _jacobi_from_faulhaber(m + 1)
    for k in range(m):
        if A[k] != (-1) ** k * beta[k]:
            fail(f"A_k^(m+1) = (-1)^k beta_k at k={k}")
    xi = SubstitutionBasis.XI.quadratic
    if out.odd_xi_poly().compose(xi) * factorial(2 * m + 1) != power_sum_poly(2 * m + 1):
        fail(f"P_{2 * m + 1} reconstruction")
    even = out.even_xi_poly().compose(xi) * (X - HALF) * factorial(2 * m)
    if even != power_sum_poly(2 * m):
        fail(f"P_{2 * m} reconstruction")
    return out


def bold_F(n: int) -> Poly:
    """F_n(u) = sum_k (-1)^k f_{n,k} u^k built from central coefficients,
    checked via (2x-1) F_n(x(x-1)) = B_n(x)."""
    from .reciprocal import central_coeffs

    _require_odd(n)
    cc = central_coeffs(n).values
    F = Poly([(-1) ** k * c for k, c in enumerate(cc)])
    u = SubstitutionBasis.U.quadratic
    if (X * 2 - 1) * F.compose(u) != bernoulli_poly(n):
        raise BnFpViolation(f"(2x-1) F_{n}(u) != B_{n}(x)")
    if exact_divide(bernoulli_poly(n), X - HALF) * HALF != F.compose(u):
        raise BnFpViolation(f"B_{n}(x)/(2(x-1/2)) != F_{n}(u)")
    if F.degree != (n - 1) // 2 or F.coeff(0) != 0:
        raise BnFpViolation(f"degree or constant term of F_{n}")
    return F


def frak_F_pair(n: int) -> tuple[Poly, Poly]:
    """(y^2 F_n(y), (2/3) y F_(n-1)(y)) with the Appell property checked."""
    _require_odd(n)
    y = X
    big = y * y * faulhaber(n).poly
    small = y * faulhaber(n - 1).poly * Fraction(2, 3)
    if big.derivative() != small * n:
        raise AppellViolation(f"derivative of frak F_{n} != {n} frak F_{n - 1}")
    if big.compose(Y_POLY) != power_sum_poly(n):
        raise AppellViolation(f"frak F_{n}(y) != S_{n}(x)")
    # S_(n-1)(x) = y' * frakF_(n-1)(y) with y' = x - 1/2
    if (X - HALF) * small.compose(Y_POLY) != power_sum_poly(n - 1):
        raise AppellViolation(f"y' frak F_{n - 1}(y) != S_{n - 1}(x)")
    return big, small


@dataclass(frozen=True)
class RFoldSum:
    """S_{n,r}(x) = g(x(x+r)) * S_{d,r}(x) in the old (1..m) convention."""

    n: int
    r: int
    poly: Poly
    g: Poly
    d: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "d": self.d,
            "sum": self.poly.to_json(),
            "g": self.g.to_json(),
        }


def _iterated_sum(n: int, r: int) -> Poly:
    p = Poly.monomial(n)
    for _ in range(r):
        p = summation_operator(p)
    return p


def rfold(n: int, r: int) -> RFoldSum:
    """Iterated sums of n-th powers factored as g_{n,r}(x(x+r)) S_{d,r}(x)."""
    if n < 1 or r < 1:
        raise ValueError("n, r must be >= 1")
    total = old_convention(n) if r == 1 else _iterated_sum(n, r)
    d = 1 if n % 2 else 2
    base = _iterated_sum(d, r)
    quotient = exact_divide(total, base)
    g = rebase_quadratic(quotient, Poly([0, r, 1]))
    return RFoldSum(n, r, total, g, d)


@dataclass(frozen=True)
class CompanionForm:
    """S_n(x) written in a quadratic basis q(x).

    For odd n, S_n(x) = poly(q(x)). For even n, S_n(x) = (x - 1/2) poly(q(x)).
    """

    n: int
    basis: SubstitutionBasis
    poly: Poly

    @property
    def half_factor(self) -> bool:
        return self.n % 2 == 0

    def to_poly(self) -> Poly:
        p = self.poly.compose(self.basis.quadratic)
        return p * (X - HALF) if self.half_factor else p


def companion_form(n: int, basis: SubstitutionBasis) -> CompanionForm:
    """S_n rebased in u, xi or omega; the omega basis only takes odd n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if basis is SubstitutionBasis.Y:
        raise ValueError("the y basis is served by faulhaber(n)")
    if basis is SubstitutionBasis.OMEGA and n % 2 == 0:
        raise ValueError("omega basis requires odd n")
    s = power_sum_poly(n)
    if n % 2 == 0:
        s = exact_divide(s, X - HALF)
    return CompanionForm(n, basis, rebase_quadratic(s, basis))

