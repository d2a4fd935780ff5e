"""Dense univariate polynomials, Laurent polynomials and truncated series
over the rationals, plus the calculus operators used by the constructions.

All three carriers are immutable. Coefficients are stored lowest power first.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import NonzeroRemainder, NotInBasis
from .exact_core import binomial, format_rational, parse_rational

__all__ = [
    "Poly",
    "LaurentPoly",
    "TruncatedSeries",
    "SubstitutionBasis",
    "PalindromeClass",
    "X",
    "forward_difference",
    "summation_operator",
    "theta",
    "exact_divide",
    "rebase_quadratic",
    "expand_in_quadratic",
    "palindrome_class",
    "divmod_poly",
    "render",
]

Scalar = Union[int, Fraction]


def _exact(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError(f"inexact coefficient {c!r}; use int or Fraction")
    return Fraction(c)


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [_exact(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class Poly:
    """Polynomial with ``coeffs[i]`` the coefficient of x^i.

    Trailing zeros are trimmed, so the zero polynomial has empty ``coeffs``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> Poly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([ai + (b[i] if i < len(b) else 0) for i, ai in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        # convolve over the integers, dividing once per coefficient at the end
        da = lcm(*(c.denominator for c in a))
        db = lcm(*(c.denominator for c in b))
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(ia):
            if not ai:
                continue
            for j, bj in enumerate(ib):
                out[i + j] += ai * bj
        den = da * db
        return Poly([Fraction(c, den) for c in out])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c / other for c in self.coeffs])
        return NotImplemented

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return render(self, "x")

    # -- evaluation and calculus -------------------------------------------

    def __call__(self, x0):
        """Horner evaluation; ``x0`` may be a scalar or another Poly."""
        if isinstance(x0, Poly):
            return self.compose(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def evaluate(self, x0: Scalar) -> Fraction:
        return self(Fraction(x0))

    def derivative(self, times: int = 1) -> Poly:
        p = self
        for _ in range(times):
            p = Poly([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def antiderivative(self) -> Poly:
        return Poly([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def compose(self, q: Poly) -> Poly:
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, c: Scalar) -> Poly:
        """p(x + c)."""
        return self.compose(Poly([c, 1]))

    def reflect(self) -> Poly:
        """p(-x)."""
        return Poly([(-c if i % 2 else c) for i, c in enumerate(self.coeffs)])

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> Poly:
        return cls(parse_rational(s) for s in data)


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


X = Poly([0, 1])


class LaurentPoly:
    """Finite sum of c_i x^(min_exp + i) with integer (possibly negative) exponents."""

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs: Iterable[Scalar]) -> None:
        cs = list(_trim(coeffs))
        lead = 0
        while lead < len(cs) and not cs[lead]:
            lead += 1
        cs = cs[lead:]
        object.__setattr__(self, "min_exp", min_exp + lead if cs else 0)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly, shift: int = 0) -> LaurentPoly:
        """x^shift * p(x)."""
        return cls(shift, p.coeffs)

    @classmethod
    def from_reciprocal(cls, p: Poly, shift: int = 0) -> LaurentPoly:
        """x^shift * p(1/x)."""
        if p.is_zero():
            return cls(0, ())
        return cls(shift - p.degree, reversed(p.coeffs))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> LaurentPoly:
        return cls(k, [c])

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, e: int) -> Fraction:
        i = e - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def terms(self) -> dict[int, Fraction]:
        return {self.min_exp + i: c for i, c in enumerate(self.coeffs) if c}

    def __add__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.max_exp, other.max_exp)
        return LaurentPoly(lo, [self.coeff(e) + other.coeff(e) for e in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.min_exp, [c * other for c in self.coeffs])
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly(0, ())
        prod = Poly(self.coeffs) * Poly(other.coeffs)
        return LaurentPoly(self.min_exp + other.min_exp, prod.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_laurent(other)
        if other is NotImplemented:
            return other
        return (self.min_exp, self.coeffs) == (other.min_exp, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.min_exp, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"LaurentPoly({self.min_exp}, [{body}])"

    def __call__(self, x0: Scalar) -> Fraction:
        x0 = Fraction(x0)
        if x0 == 0:
            if self.min_exp < 0:
                raise ZeroDivisionError("Laurent polynomial with negative exponents at x = 0")
            return self.coeff(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc * x0**self.min_exp

    evaluate = __call__

    def derivative(self, times: int = 1) -> LaurentPoly:
        p = self
        for _ in range(times):
            p = LaurentPoly(
                p.min_exp - 1, [(p.min_exp + i) * c for i, c in enumerate(p.coeffs)]
            )
        return p

    def reflect(self) -> LaurentPoly:
        """f(-x)."""
        return LaurentPoly(
            self.min_exp,
            [(-c if (self.min_exp + i) % 2 else c) for i, c in enumerate(self.coeffs)],
        )

    def to_poly(self) -> Poly:
        if self.min_exp < 0:
            raise ValueError("Laurent polynomial has negative exponents")
        return Poly([0] * self.min_exp + list(self.coeffs))

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentPoly:
        return cls(int(data["min_exp"]), [parse_rational(s) for s in data["coeffs"]])


def _as_laurent(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, Poly):
        return LaurentPoly.from_poly(value)
    if isinstance(value, (int, Fraction)):
        return LaurentPoly(0, [value])
    return NotImplemented


class TruncatedSeries:
    """Power series known through x^order; explicit zeros are kept."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[Scalar]) -> None:
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [_exact(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> TruncatedSeries:
        return cls(order, p.coeffs)

    @classmethod
    def binomial_series(cls, alpha: int, order: int) -> TruncatedSeries:
        """(1 + x)^alpha = sum_nu binom(alpha, nu) x^nu for integer alpha."""
        return cls(order, [binomial(alpha, nu) for nu in range(order + 1)])

    def coeff(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient x^{i} beyond series order {self.order}")
        return self.coeffs[i]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(order, [self.coeffs[i] + other.coeffs[i] for i in range(order + 1)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(order, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order, self.coeffs) == (other.order, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries({self.order}, [{body}])"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}


class SubstitutionBasis(enum.Enum):
    """Quadratic substitutions used by the historical normal forms."""

    Y = "y"  # x(x-1)/2
    U = "u"  # x(x-1)
    XI = "xi"  # -x(x-1)
    OMEGA = "omega"  # (2x-1)^2

    @property
    def quadratic(self) -> Poly:
        return _QUADRATICS[self]


_QUADRATICS = {
    SubstitutionBasis.Y: Poly([0, Fraction(-1, 2), Fraction(1, 2)]),
    SubstitutionBasis.U: Poly([0, -1, 1]),
    SubstitutionBasis.XI: Poly([0, 1, -1]),
    SubstitutionBasis.OMEGA: Poly([1, -4, 4]),
}


def forward_difference(p: Poly) -> Poly:
    """p(x+1) - p(x)."""
    return p.shift(1) - p


def summation_operator(p: Poly) -> Poly:
    """P with P(m) = p(1) + ... + p(m) for every integer m >= 0."""
    from .bernoulli_sums import old_convention

    total = Poly([0, p.coeff(0)])
    for j in range(1, len(p.coeffs)):
        if p.coeffs[j]:
            total = total + old_convention(j) * p.coeffs[j]
    return total


def theta(p: Poly, alpha: Scalar) -> Poly:
    """p + alpha * t * p'."""
    alpha = Fraction(alpha)
    return Poly([(1 + alpha * k) * c for k, c in enumerate(p.coeffs)])


def divmod_poly(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dd = d.degree
    lead = d.leading
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if not c:
            continue
        c = c / lead
        quot[i - dd] = c
        for j, dj in enumerate(d.coeffs):
            rem[i - dd + j] -= c * dj
    return Poly(quot), Poly(rem)


def exact_divide(p: Poly, d: Poly) -> Poly:
    """Quotient p / d; raises NonzeroRemainder unless d divides p."""
    q, r = divmod_poly(p, d)
    if not r.is_zero():
        raise NonzeroRemainder(f"remainder {r!r} dividing by {d!r}")
    return q


def _basis_poly(basis: SubstitutionBasis | Poly) -> Poly:
    q = basis.quadratic if isinstance(basis, SubstitutionBasis) else basis
    if q.degree != 2:
        raise ValueError("substitution must be a quadratic polynomial")
    return q


def rebase_quadratic(p: Poly, basis: SubstitutionBasis | Poly) -> Poly:
    """Coefficients c with p(x) = sum_k c_k q(x)^k, returned as a Poly in the new variable.

    q^k has degree exactly 2k, so peeling off leading terms from the top is a
    triangular elimination; anything left over means p is not a polynomial in q.
    """
    q = _basis_poly(basis)
    if p.is_zero():
        return Poly()
    if p.degree % 2:
        raise NotInBasis(f"odd degree {p.degree} is not a polynomial in a quadratic")
    top = p.degree // 2
    powers = [Poly([1])]
    for _ in range(top):
        powers.append(powers[-1] * q)
    out = [Fraction(0)] * (top + 1)
    rest = p
    for k in range(top, -1, -1):
        if rest.degree > 2 * k:
            raise NotInBasis(f"stray x^{rest.degree} term left after eliminating q^{k + 1}")
        c = rest.coeff(2 * k) / powers[k].leading
        out[k] = c
        if c:
            rest = rest - powers[k] * c
    if not rest.is_zero():
        raise NotInBasis(f"nonzero residual {rest!r}")
    return Poly(out)


def expand_in_quadratic(c: Poly, basis: SubstitutionBasis | Poly) -> Poly:
    """Inverse of :func:`rebase_quadratic`: sum_k c_k q(x)^k."""
    return c.compose(_basis_poly(basis))


class PalindromeClass(enum.Enum):
    PALINDROMIC = "palindromic"
    ANTI_PALINDROMIC = "anti-palindromic"
    QUASI_PALINDROMIC = "quasi-palindromic"
    NONE = "none"

    @property
    def is_quasi(self) -> bool:
        return self is not PalindromeClass.NONE


def palindrome_class(p: Poly, n: int) -> PalindromeClass:
    """Classify a_nu against a_(n-nu) for 0 <= nu <= n; strongest class wins."""
    if n < p.degree:
        raise ValueError(f"classification length {n} below degree {p.degree}")
    pairs = [(p.coeff(nu), p.coeff(n - nu)) for nu in range(n + 1)]
    if all(a == b for a, b in pairs):
        return PalindromeClass.PALINDROMIC
    if all(a == -b for a, b in pairs):
        return PalindromeClass.ANTI_PALINDROMIC
    if all(abs(a) == abs(b) for a, b in pairs):
        return PalindromeClass.QUASI_PALINDROMIC
    return PalindromeClass.NONE


def _term(c: Fraction, k: int, var: str) -> tuple[str, str]:
    sign = "-" if c < 0 else "+"
    c = abs(c)
    if k == 0:
        body = format_rational(c)
    else:
        power = var if k == 1 else f"{var}^{k}"
        body = power if c == 1 else f"{format_rational(c)}*{power}"
    return sign, body


def render(p: Poly, var: str = "x") -> str:
    """Human-readable form, highest power first."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign, body = _term(c, k, var)
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)
