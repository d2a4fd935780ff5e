from fractions import Fraction

import pytest

from known_values import F_POLYS, U_FORMS, XI_FORMS
from powersum import faulhaber as fh
from powersum.bernoulli_sums import power_sum_poly
from powersum.errors import ChainInconsistency
from powersum.polynomial import Poly, SubstitutionBasis, X


def poly_from_desc(den, coeffs):
    return Poly(Fraction(c, den) for c in reversed(coeffs))


@pytest.mark.parametrize("n", sorted(F_POLYS))
def test_known_faulhaber_polys(n):
    den, coeffs = F_POLYS[n]
    assert fh.faulhaber_by_substitution(n).poly == poly_from_desc(den, coeffs)


@pytest.mark.parametrize("n", range(3, 60, 2))
def test_four_odd_constructions_agree(n):
    results = {m: fh.faulhaber(n, m) for m in fh.METHODS}
    assert len(set(results.values())) == 1


@pytest.mark.parametrize("n", range(2, 60, 2))
def test_step_down_matches_substitution(n):
    assert fh.faulhaber_step_down(fh.faulhaber_gv(n + 1)) == fh.faulhaber_by_substitution(n)


def test_faulhaber_reconstructs_power_sum():
    y = SubstitutionBasis.Y.quadratic
    for n in range(2, 25):
        assert fh.faulhaber_factor(n) * fh.faulhaber(n).poly.compose(y) == power_sum_poly(n)


def test_brute_force_small():
    for n in range(2, 12):
        F = fh.faulhaber(n)
        for m in range(0, 15):
            y = Fraction(m * (m - 1), 2)
            assert fh.faulhaber_factor(n)(m) * F(y) == sum(nu**n for nu in range(m))


@pytest.mark.parametrize("n", range(2, 40))
def test_invariants(n):
    assert fh.check_invariants(fh.faulhaber(n)) == []


def test_invariant_checker_catches_damage():
    F = fh.faulhaber(9)
    broken = fh.FaulhaberPoly(9, F.coeffs[:-1] + (F.coeffs[-1] + 1,))
    assert "F_n(1) != 1" in fh.check_invariants(broken)
    assert "leading coefficient" in fh.check_invariants(broken)


def test_faulhaber_poly_shape_and_json():
    F = fh.faulhaber(13)
    assert F.degree == 5
    assert fh.FaulhaberPoly.from_json(F.to_json()) == F
    with pytest.raises(ValueError):
        fh.FaulhaberPoly(9, (Fraction(1),))
    with pytest.raises(ValueError):
        fh.faulhaber(1)


def test_gv_example():
    assert fh.faulhaber_gv(13).coeffs[4] == Fraction(-80, 3)
    assert fh.faulhaber_gv(7).coeffs == (Fraction(1, 3), Fraction(-4, 3), 2)


def test_chain_detects_corruption(monkeypatch):
    real = fh.bernoulli_number
    monkeypatch.setattr(fh, "bernoulli_number", lambda n: real(n) + (1 if n == 10 else 0))
    with pytest.raises(ChainInconsistency):
        fh.faulhaber_chain(11)


@pytest.mark.parametrize("n", range(3, 30))
def test_theta_recurrence(n):
    assert fh.theta_recurrence_check(n).is_zero()


@pytest.mark.parametrize("n", range(5, 30, 2))
def test_second_order_theta_recurrence(n):
    assert fh.second_order_recurrence_check(n).is_zero()


@pytest.mark.parametrize("n", range(5, 40, 2))
def test_knuth_residuals(n):
    assert all(r == 0 for r in fh.knuth_residuals(n))


def test_jacobi_example():
    j = fh.jacobi_coeffs(5)
    assert j.A == (1, Fraction(-5, 2), 3, Fraction(-3, 2), 0)
    for m in range(2, 15):
        fh.jacobi_coeffs(m)


def test_jacobi_rows_match_u_forms():
    for n, inner in U_FORMS.items():
        m = (n + 1) // 2
        assert list(fh.jacobi_coeffs(m).A[: m - 1]) == inner


def test_schroeder_systems():
    s = fh.schroeder_coeffs(5)
    assert s.beta == (1, 4, Fraction(17, 2), 10, 5)
    for m in range(1, 15):
        fh.schroeder_coeffs(m)


def test_schroeder_gamma_matches_xi_forms():
    for n, (sign, inner) in XI_FORMS.items():
        m = n // 2
        g = fh.schroeder_coeffs(m).gamma
        assert list(g) == inner
        assert sign == (-1) ** m


def test_companion_forms():
    for n, inner in U_FORMS.items():
        form = fh.companion_form(n, SubstitutionBasis.U)
        expected = Poly([0, 0] + [Fraction(c, n + 1) for c in reversed(inner)])
        assert form.poly == expected
        assert form.to_poly() == power_sum_poly(n)
    for n, (sign, inner) in XI_FORMS.items():
        form = fh.companion_form(n, SubstitutionBasis.XI)
        expected = Poly([0] + [Fraction(sign, n + 1) * c for c in reversed(inner)])
        assert form.half_factor
        assert form.poly == expected
        assert form.to_poly() == power_sum_poly(n)
    with pytest.raises(ValueError):
        fh.companion_form(8, SubstitutionBasis.OMEGA)


@pytest.mark.parametrize("n", range(3, 30, 2))
def test_bold_f_recovers_bernoulli(n):
    F = fh.bold_F(n)
    assert F.degree == (n - 1) // 2


@pytest.mark.parametrize("n", range(3, 30, 2))
def test_appell_pair(n):
    big, small = fh.frak_F_pair(n)
    assert big.derivative() == small * n


def test_rfold_examples():
    r = fh.rfold(3, 1)
    assert r.g == Poly([0, Fraction(1, 2)]) and r.d == 1
    assert fh.rfold(1, 1).g == Poly([1])
    r64 = fh.rfold(6, 4)
    assert r64.d == 2
    assert r64.poly.degree == 10


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("r", range(1, 5))
def test_rfold_against_iterated_brute_force(n, r):
    res = fh.rfold(n, r)
    vals = [nu**n for nu in range(1, 9)]
    for _ in range(r):
        acc, out = 0, []
        for v in vals:
            acc += v
            out.append(acc)
        vals = out
    for m in range(1, 9):
        assert res.poly(m) == vals[m - 1]
    v = X * (X + r)
    base = fh.rfold(res.d, r).poly if res.d != n else res.poly
    assert res.g.compose(v) * base == res.poly
