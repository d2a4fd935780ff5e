"""The thirteen acceptance criteria, each checked exactly (no tolerance)."""

from fractions import Fraction
from math import factorial

import pytest

from known_values import (
    B7,
    B_FRAK,
    B_SMALL,
    BF7_8,
    BF7_SERIES,
    BOLD_F,
    BOLD_F_LATEX,
    F_LATEX,
    F_POLYS,
    RECIP_13_10_5,
    U_FORMS,
    U_LATEX,
    XI_FORMS,
    XI_LATEX,
)
from powersum import bernoulli_sums as bs
from powersum import faulhaber as fh
from powersum import reciprocal as rc
from powersum import tables
from powersum.evaluate import power_sum
from powersum.exact_core import binomial
from powersum.polynomial import LaurentPoly, PalindromeClass, Poly, SubstitutionBasis, X, palindrome_class

criterion = pytest.mark.criterion


def desc(coeffs, scale=Fraction(1)):
    return Poly(scale * Fraction(c) for c in reversed(coeffs))


@criterion(1, "Faulhaber polynomials F_2..F_13 match the transcribed values")
def test_criterion_01_faulhaber_fixtures():
    for n, (den, coeffs) in F_POLYS.items():
        F = fh.faulhaber_by_substitution(n)
        assert F.poly == desc(coeffs, Fraction(1, den)), n
    for n, row in F_LATEX.items():
        assert tables.faulhaber_latex_row(fh.faulhaber_by_substitution(n)) == row


@criterion(2, "all constructions agree for odd n <= 101; step-down matches for even n <= 100")
def test_criterion_02_cross_method():
    for n in range(3, 102, 2):
        results = [fh.faulhaber_by_substitution(n), fh.faulhaber_gv(n), fh.faulhaber_triangular(n)]
        results.append(fh.faulhaber_chain(n))
        assert len(set(results)) == 1, n
    for n in range(2, 101, 2):
        assert fh.faulhaber_step_down(fh.faulhaber_gv(n + 1)) == fh.faulhaber_by_substitution(n), n


@criterion(3, "u-forms for odd n = 3..13 and xi-forms for even n = 2..12")
def test_criterion_03_u_and_xi_forms():
    for n, inner in U_FORMS.items():
        form = fh.companion_form(n, SubstitutionBasis.U)
        assert form.poly == Poly([0, 0] + [Fraction(c) / (n + 1) for c in reversed(inner)])
        assert form.to_poly() == bs.power_sum_poly(n)
    for n, (sign, inner) in XI_FORMS.items():
        form = fh.companion_form(n, SubstitutionBasis.XI)
        assert form.half_factor
        assert form.poly == Poly([0] + [Fraction(sign, n + 1) * c for c in reversed(inner)])
        assert (X - Fraction(1, 2)) * form.poly.compose(SubstitutionBasis.XI.quadratic) == bs.power_sum_poly(n)
    for n, row in U_LATEX.items():
        assert tables.companion_latex_row(fh.companion_form(n, SubstitutionBasis.U)) == row
    for n, row in XI_LATEX.items():
        assert tables.companion_latex_row(fh.companion_form(n, SubstitutionBasis.XI)) == row


@criterion(4, "b-number triangle (8 rows) and BF-number triangle (9 rows)")
def test_criterion_04_triangles():
    for n, row in enumerate(B_SMALL):
        assert [rc.b_frak_small(n, k) for k in range(n + 1)] == row
    for n, row in enumerate(B_FRAK):
        assert list(rc.B_frak_numbers(n).values) == row


@criterion(5, "bold F_n(u) for odd n = 3..13")
def test_criterion_05_bold_f():
    for n, coeffs in BOLD_F.items():
        assert fh.bold_F(n) == desc(coeffs + [0])
    for n, row in BOLD_F_LATEX.items():
        assert tables.bold_F_latex_row(n, fh.bold_F(n)) == row


@criterion(6, "n = 7 worked case: series, f_{7,k}, and B_7 reconstruction")
def test_criterion_06_seven():
    for k2, coeffs in BF7_SERIES.items():
        assert list(rc.B_frak_series(7, k2, 5).coeffs) == coeffs
    assert rc.B_frak_series(7, 8) == Poly(BF7_8)
    f7 = [
        (-1) ** (k + 1) * Fraction(2 ** (k + 2), factorial(k + 2)) * rc.b_frak_small(7, k + 1)
        for k in range(4)
    ]
    assert f7 == [Fraction(1, 3), Fraction(-4, 3), 2, 0]
    assert list(fh.faulhaber(7).coeffs) == f7[:3]
    F = fh.bold_F(7)
    assert (2 * X - 1) * F.compose(SubstitutionBasis.U.quadratic) == Poly(B7)
    assert bs.bernoulli_poly(7) == Poly(B7)


@criterion(7, "three routes to the (13, 10, 5) derivative value 300, and f_{13,4} = -80/3")
def test_criterion_07_three_routes():
    laurent = rc.recip_bernoulli(13, 10).laurent.derivative(5)
    expected = sum((LaurentPoly.monomial(e, -12 * c) for e, c in RECIP_13_10_5.items()), LaurentPoly(0, []))
    assert laurent == expected
    route1 = laurent(1)
    route2 = rc.b_frak_small(13, 5)
    bf = rc.B_frak_numbers(13).values
    route3 = factorial(5) * sum(binomial(10 - 13, 5 - nu) * bf[nu] for nu in range(6))
    assert route1 == route2 == route3 == 300
    assert rc.recip_derivative_closed(13, 10, 5)(1) == 300
    assert -Fraction(2**6, factorial(6)) * route1 == Fraction(-80, 3)
    assert fh.faulhaber(13).coeffs[4] == Fraction(-80, 3)
    assert rc.bridge_to_faulhaber(13).coeffs[4] == Fraction(-80, 3)


@criterion(8, "f_n(m) F_n(S_1(m)) equals the literal power sum, n <= 30, m <= 40")
def test_criterion_08_brute_force():
    checks = 0
    for n in range(0, 31):
        for m in range(1, 41):
            brute = sum(nu**n for nu in range(m))
            if n >= 2:
                y = Fraction(m * (m - 1), 2)
                value = fh.faulhaber_factor(n)(m) * fh.faulhaber(n)(y)
            else:
                value = power_sum(n, m, "faulhaber")
            assert value == brute, (n, m)
            checks += 1
    assert checks >= 1200


@criterion(9, "both zero-sum recurrences vanish for odd n <= 21")
def test_criterion_09_zero_sums():
    for n in range(1, 22, 2):
        rows = rc.zero_sum_checks(n)
        assert [k for k, _, _ in rows] == list(range((n + 1) // 2, n + 1))
        assert all(a == 0 and b == 0 for _, a, b in rows)


@criterion(10, "recurrence, Stern, Appell, Raabe and reciprocity residuals vanish")
def test_criterion_10_residuals():
    for n in range(5, 42, 2):
        assert all(r == 0 for r in fh.knuth_residuals(n))
        assert fh.second_order_recurrence_check(n).is_zero()
    for n in range(3, 42):
        assert fh.theta_recurrence_check(n).is_zero()
    for m in range(2, 21):
        fh.jacobi_coeffs(m)
    for m in range(1, 21):
        fh.schroeder_coeffs(m)
    for l in range(1, 9):
        assert bs.stern_check(l).is_zero()
    for n in range(3, 42, 2):
        fh.frak_F_pair(n)
    for n in range(1, 13):
        for k in range(1, 5):
            bs.b_hat(n, k)
    for r in range(11):
        for s in range(11):
            assert rc.reciprocity_check(r, s) == 0


@criterion(11, "iterated-sum factorization for n <= 10, r <= 4")
def test_criterion_11_rfold():
    for n in range(1, 11):
        for r in range(1, 5):
            res = fh.rfold(n, r)
            base = fh.rfold(res.d, r).poly
            assert res.g.compose(X * (X + r)) * base == res.poly


@criterion(12, "F_n invariants for n <= 101 and the anti-palindromy chain for odd n <= 15")
def test_criterion_12_properties():
    for n in range(2, 102):
        assert fh.check_invariants(fh.faulhaber_by_substitution(n)) == [], n
    for n in range(1, 16, 2):
        for k in range((n + 1) // 2, n + 1):
            p = rc.B_frak_series(n, 2 * k)
            assert palindrome_class(p, 2 * k) is PalindromeClass.ANTI_PALINDROMIC
            assert p.coeff(k) == 0
            assert rc.recip_bernoulli(n, 2 * k).laurent.derivative(k)(1) == 0
            if n >= 3:
                assert rc.central_coeffs(n).values[k] == 0


@criterion(13, "n = 101, m = 10^6: faulhaber, bernoulli and omega strategies agree")
def test_criterion_13_benchmark_sanity():
    values = {s: power_sum(101, 10**6, s) for s in ("faulhaber", "bernoulli", "omega")}
    assert len(set(values.values())) == 1
    v = values["faulhaber"]
    assert v % (10**6 * (10**6 - 1) // 2) == 0  # x(x-1)/2 divides S_n for odd n
