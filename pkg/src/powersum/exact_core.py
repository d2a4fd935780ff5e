"""Exact scalars: rationals, binomials, Lah, Bernoulli and Genocchi numbers.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator, so ``==`` is structural.
"""

from __future__ import annotations

import re
import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "falling_factorial",
    "lah",
    "bernoulli_number",
    "bernoulli_numbers",
    "genocchi",
    "bernoulli_half",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else is rejected."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def binomial(x: int, k: int) -> int:
    """Generalized binomial coefficient (x)_k / k! for any integer x.

    A negative upper argument follows binom(-x, k) = (-1)^k binom(x+k-1, k);
    a negative lower argument gives 0.
    """
    if k < 0:
        return 0
    if x >= 0:
        return comb(x, k)
    return (-1) ** k * comb(-x + k - 1, k)


def falling_factorial(x: Fraction | int, n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be >= 0")
    result = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        result *= x - i
    return result


def lah(n: int, k: int) -> int:
    """Signed Lah number (-1)^n (n!/k!) binom(n-1, k-1) for 1 <= k <= n."""
    if not 1 <= k <= n:
        raise ValueError(f"lah({n}, {k}) requires 1 <= k <= n")
    return (-1) ** n * (factorial(n) // factorial(k)) * comb(n - 1, k - 1)


class BernoulliCache:
    """Growable table of Bernoulli numbers with B_1 = -1/2.

    Filled from sum_{k=0}^{m} binom(m+1, k) B_k = 0. Reads of populated
    entries need no lock; growth is serialized.
    """

    def __init__(self) -> None:
        self._values: list[Fraction] = [Fraction(1), Fraction(-1, 2)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be >= 0")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            self._extend(n)
            return self._values[n]

    def _extend(self, n: int) -> None:
        values = self._values
        for m in range(len(values), n + 1):
            if m % 2 == 1:
                values.append(Fraction(0))
                continue
            total = Fraction(0)
            for k in range(m):
                if values[k]:
                    total += comb(m + 1, k) * values[k]
            values.append(-total / (m + 1))


_CACHE = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """B_n with the B_1 = -1/2 convention."""
    return _CACHE.get(n)


def bernoulli_numbers(n: int) -> list[Fraction]:
    """[B_0, ..., B_n]."""
    _CACHE.get(n)
    return [_CACHE.get(i) for i in range(n + 1)]


def genocchi(n: int) -> Fraction:
    """G_n = 2 (1 - 2^n) B_n."""
    return 2 * (1 - 2**n) * bernoulli_number(n)


def bernoulli_half(n: int) -> Fraction:
    """B_n(1/2) = (2^(1-n) - 1) B_n."""
    return (Fraction(2) ** (1 - n) - 1) * bernoulli_number(n)
