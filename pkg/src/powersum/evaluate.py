"""Exact evaluation of S_n(m) by several strategies, with multiplication counts."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .bernoulli_sums import power_sum_poly
from .errors import StrategyDisagreement
from .faulhaber import faulhaber
from .polynomial import Poly, SubstitutionBasis, X, exact_divide, rebase_quadratic

DEFAULT_NAIVE_LIMIT = 10**7
STRATEGIES = ("naive", "bernoulli", "faulhaber", "omega")


def naive_limit() -> int:
    raw = os.environ.get("FAULHABER_NAIVE_LIMIT")
    return int(raw) if raw else DEFAULT_NAIVE_LIMIT


class Counter:
    def __init__(self):
        self.mults = 0


def _int_horner(p: Poly, x0: int, counter: Counter) -> Fraction:
    """p(x0) for integer x0 using integer Horner on the denominator-cleared polynomial."""
    if p.is_zero():
        return Fraction(0)
    den = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * den) for c in p.coeffs]
    acc = ints[-1]
    for c in reversed(ints[:-1]):
        acc = acc * x0 + c
        counter.mults += 1
    return Fraction(acc, den)


def _as_int(value: Fraction) -> int:
    if value.denominator != 1:
        raise StrategyDisagreement(f"non-integral power sum {value}")
    return value.numerator


def by_naive(n: int, m: int, counter: Counter, limit: int | None = None) -> int:
    limit = naive_limit() if limit is None else limit
    if m > limit:
        raise ValueError(f"naive strategy refused for m = {m} > {limit}")
    total = 0
    for nu in range(m):
        total += nu**n
    counter.mults += m
    return total


def by_bernoulli(n: int, m: int, counter: Counter) -> int:
    return _as_int(_int_horner(power_sum_poly(n), m, counter))


def by_faulhaber(n: int, m: int, counter: Counter) -> int:
    if n == 0:
        return m
    y = m * (m - 1) // 2
    counter.mults += 1
    if n == 1:
        return y
    inner = _int_horner(faulhaber(n).poly, y, counter)
    if n % 2:
        prefactor = y * y
        counter.mults += 1
    else:
        prefactor = Fraction(m * (m - 1) * (2 * m - 1), 6)
        counter.mults += 2
    counter.mults += 1
    return _as_int(prefactor * inner)


_omega_cache: dict[int, Poly] = {}


def _omega_poly(n: int) -> Poly:
    """W with S_n = W(omega) (odd n) or S_n = (x - 1/2) W(omega) (even n)."""
    w = _omega_cache.get(n)
    if w is None:
        s = power_sum_poly(n)
        if n % 2 == 0:
            s = exact_divide(s, X - Fraction(1, 2))
        w = _omega_cache.setdefault(n, rebase_quadratic(s, SubstitutionBasis.OMEGA))
    return w


def by_omega(n: int, m: int, counter: Counter) -> int:
    if n == 0:
        return m
    omega = (2 * m - 1) ** 2
    counter.mults += 1
    value = _int_horner(_omega_poly(n), omega, counter)
    if n % 2 == 0:
        value = value * Fraction(2 * m - 1, 2)
        counter.mults += 1
    return _as_int(value)


_DISPATCH = {
    "naive": by_naive,
    "bernoulli": by_bernoulli,
    "faulhaber": by_faulhaber,
    "omega": by_omega,
}


def power_sum(n: int, m: int, strategy: str = "faulhaber", limit: int | None = None) -> int:
    """0^n + 1^n + ... + (m-1)^n exactly.

    ``limit`` caps m for the naive strategy; None means ``naive_limit()``.
    """
    if n < 0 or m < 0:
        raise ValueError("n, m must be >= 0")
    limit = naive_limit() if limit is None else limit
    if strategy == "all":
        results = {s: power_sum(n, m, s, limit) for s in STRATEGIES if s != "naive" or m <= limit}
        if len(set(results.values())) != 1:
            raise StrategyDisagreement(f"strategies disagree: {results}")
        return next(iter(results.values()))
    try:
        fn = _DISPATCH[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}") from None
    if strategy == "naive":
        return by_naive(n, m, Counter(), limit)
    return fn(n, m, Counter())


@dataclass
class BenchResult:
    strategy: str
    value: int
    seconds: float
    mults: int


def bench(n: int, m: int, reps: int = 1, strategies=None) -> list[BenchResult]:
    """Time each strategy; values are compared before any timing is reported."""
    if strategies is None:
        strategies = [s for s in STRATEGIES if s != "naive" or m <= naive_limit()]
    # warm the polynomial caches so timings measure evaluation only
    values = {}
    for s in strategies:
        values[s] = _DISPATCH[s](n, m, Counter())
    if len(set(values.values())) != 1:
        raise StrategyDisagreement(f"strategies disagree: {values}")
    out = []
    for s in strategies:
        counter = Counter()
        start = time.perf_counter()
        for _ in range(reps):
            counter.mults = 0
            value = _DISPATCH[s](n, m, counter)
        elapsed = (time.perf_counter() - start) / max(reps, 1)
        out.append(BenchResult(s, value, elapsed, counter.mults))
    return out
