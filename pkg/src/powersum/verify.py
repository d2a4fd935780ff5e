"""Identity suites behind ``powersum verify``.

Each family is a list of named checks; a check passes when it returns
without raising and its residuals are all zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import bernoulli_sums as bs
from . import faulhaber as fh
from . import reciprocal as rc
from .errors import IdentityViolation
from .polynomial import LaurentPoly, Poly, SubstitutionBasis

SUITES = ("all", "recurrences", "symmetry", "zero-sums", "stern", "rfold", "historical")


@dataclass
class FamilyResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures


def _zero(value) -> bool:
    if value is None:
        return True
    if isinstance(value, (Poly, LaurentPoly)):
        return value.is_zero()
    if isinstance(value, (list, tuple)):
        return all(_zero(v) for v in value)
    return value == 0


def _runs(fn, *args) -> bool:
    fn(*args)
    return True


def _odd(lo: int, hi: int) -> range:
    return range(lo | 1, hi + 1, 2)


def _methods_agree(n: int) -> bool:
    if n == 2:
        fh.clear_cache()
    fh.faulhaber(n)
    if n % 2 == 1:
        return True
    return fh.faulhaber_step_down(fh.faulhaber(n + 1)) == fh.faulhaber_by_substitution(n)


def _leibniz_block(n: int) -> bool:
    for k in range(0, 13):
        for l in range(0, min(n, k) + 1):
            rc.recip_derivative_closed(n, k, l)
    return True


def _b_frak_row(n: int) -> bool:
    for k in range(n + 1):
        rc.b_frak_small(n, k)
    return True


def _lambda_row(n: int) -> bool:
    return all(rc.lambda_recurrence_residual(n, k) is None for k in range(0, n - 1))


def _recurrences(max_n: int):
    yield "faulhaber methods", [(f"n={n}", lambda n=n: _methods_agree(n)) for n in range(2, max_n + 1)]
    yield "theta first order", [
        (f"n={n}", lambda n=n: fh.theta_recurrence_check(n)) for n in range(3, max_n + 1)
    ]
    yield "theta second order", [
        (f"n={n}", lambda n=n: fh.second_order_recurrence_check(n)) for n in _odd(5, max_n)
    ]
    yield "appell", [(f"n={n}", lambda n=n: _runs(fh.frak_F_pair, n)) for n in _odd(3, max_n)]
    yield "b_frak recurrence", [(f"n={n}", lambda n=n: _b_frak_row(n)) for n in range(0, max_n + 1)]
    yield "lambda recurrence", [
        (f"n={n}", lambda n=n: _lambda_row(n)) for n in range(2, min(max_n, 20) + 1)
    ]
    yield "derivative routes", [
        (f"n={n}", lambda n=n: _leibniz_block(n)) for n in range(1, min(max_n, 12) + 1)
    ]


def _faulhaber_invariants(n: int) -> bool:
    return not fh.check_invariants(fh.faulhaber(n))


def _bf_palindromes(n: int) -> bool:
    for k in range(n, 2 * n + 1):
        rc.B_frak_series(n, k)
    return True


def _anti_chain(n: int) -> bool:
    return rc.anti_palindromy_chain(n) == list(range((n + 1) // 2, n + 1))


def _raabe(n: int) -> bool:
    for k in range(1, 5):
        bs.b_hat(n, k)
    return True


def _reflect(n: int) -> list:
    return [rc.recip_reflect_check(n, k) for k in range(-2, 2 * n + 2)]


def _symmetry(max_n: int):
    yield "faulhaber invariants", [
        (f"n={n}", lambda n=n: _faulhaber_invariants(n)) for n in range(2, max_n + 1)
    ]
    yield "B_frak numbers", [(f"n={n}", lambda n=n: _runs(rc.B_frak_numbers, n)) for n in range(0, max_n + 1)]
    yield "B_frak palindromy", [(f"n={n}", lambda n=n: _bf_palindromes(n)) for n in range(0, min(max_n, 20) + 1)]
    yield "reciprocal reflection", [(f"n={n}", lambda n=n: _reflect(n)) for n in range(1, max_n + 1)]
    yield "anti-palindromy chain", [(f"n={n}", lambda n=n: _anti_chain(n)) for n in _odd(1, min(max_n, 15))]
    yield "central coefficients", [(f"n={n}", lambda n=n: _runs(rc.central_coeffs, n)) for n in _odd(3, max_n)]
    yield "bold F", [(f"n={n}", lambda n=n: _runs(fh.bold_F, n)) for n in _odd(3, max_n)]
    yield "bridge", [(f"n={n}", lambda n=n: _runs(rc.bridge_to_faulhaber, n)) for n in _odd(3, max_n)]
    yield "raabe", [(f"n={n}", lambda n=n: _raabe(n)) for n in range(1, min(max_n, 12) + 1)]


def _zero_sums(max_n: int):
    yield "zero sums", [
        (f"n={n}", lambda n=n: [(a, b) for _, a, b in rc.zero_sum_checks(n)]) for n in _odd(1, max_n)
    ]
    top = min(max_n, 10)
    yield "reciprocity", [
        (f"r={r},s={s}", lambda r=r, s=s: rc.reciprocity_check(r, s))
        for r in range(top + 1)
        for s in range(top + 1)
    ]


def _stern(max_n: int):
    yield "stern", [(f"l={l}", lambda l=l: bs.stern_check(l)) for l in range(1, max(1, (max_n + 1) // 2) + 1)]


def _rfold(max_n: int):
    yield "rfold", [
        (f"n={n},r={r}", lambda n=n, r=r: _runs(fh.rfold, n, r))
        for n in range(1, min(max_n, 10) + 1)
        for r in range(1, 5)
    ]


def _historical(max_n: int):
    yield "knuth residuals", [(f"n={n}", lambda n=n: fh.knuth_residuals(n)) for n in _odd(5, max_n)]
    yield "jacobi", [
        (f"m={m}", lambda m=m: _runs(fh.jacobi_coeffs, m)) for m in range(2, (max_n + 1) // 2 + 1)
    ]
    yield "schroeder", [
        (f"m={m}", lambda m=m: _runs(fh.schroeder_coeffs, m)) for m in range(1, (max_n - 1) // 2 + 1)
    ]
    yield "omega form", [(f"n={n}", lambda n=n: _omega_roundtrip(n)) for n in _odd(3, max_n)]


def _omega_roundtrip(n: int) -> bool:
    form = fh.companion_form(n, SubstitutionBasis.OMEGA)
    return form.to_poly() == bs.power_sum_poly(n) and form.poly == bs.omega_form(n)


_SUITE_BUILDERS: dict[str, Callable] = {
    "recurrences": _recurrences,
    "symmetry": _symmetry,
    "zero-sums": _zero_sums,
    "stern": _stern,
    "rfold": _rfold,
    "historical": _historical,
}


def run_suite(suite: str, max_n: int) -> list[FamilyResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if max_n < 3:
        raise ValueError("max_n must be >= 3")
    names = [s for s in SUITES[1:]] if suite == "all" else [suite]
    results = []
    for name in names:
        for family, checks in _SUITE_BUILDERS[name](max_n):
            res = FamilyResult(family)
            for label, check in checks:
                try:
                    value = check()
                except (IdentityViolation, AssertionError) as exc:
                    res.failures.append(f"{label}: {exc}")
                    continue
                if value is False or not _zero(value if value is not True else None):
                    res.failures.append(f"{label}: nonzero residual")
                else:
                    res.passed += 1
            results.append(res)
    return results


def format_report(results: list[FamilyResult]) -> str:
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status} {r.name}: {r.passed}/{r.total}")
        lines.extend(f"  {f}" for f in r.failures)
    ok = all(r.ok for r in results)
    lines.append(f"{'all identities hold' if ok else 'FAILURES present'}")
    return "\n".join(lines)


__all__ = ["SUITES", "FamilyResult", "run_suite", "format_report"]
