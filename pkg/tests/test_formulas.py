# -*- coding: utf-8 -*-
import pytest
from sympy import Symbol

from errors import InvalidParameters, InvariantViolation
from exact_linalg import det_exact
from formulas import (AXIS_CENTRAL_ALL_ODD_ZERO, C_MAXIMAL, C_ZERO, CONJECTURE, DET_N_FAMILY, GAMMA_ZERO,
                      M_ZERO, NONE, SYMMETRIC_ODD_ZERO, IntPolynomial, a_t_verdict, axis_central_wlp,
                      binomial_matrix_T, closed_det, det_n_family, det_poly_interpolate, even_factors, f_even,
                      f_factors, f_odd, f_poly, format_factors, gamma_zero_unique, hyper_even, hyper_even_closed,
                      hyper_odd, hyperfactorial, level_conjecture, mac, mac_via_f, nonlinear_bound_closed_form,
                      nonlinear_family_params, nonlinear_family_polynomial, odd_factors, split_binom_det,
                      symmetric_instances, symmetry_conjecture, validate_symmetry, validate_symmetry_example)
from matrices import build_N
from params_core import AciParams, derive_stats
from tilings import count_tilings


@pytest.mark.parametrize("n, value", [(0, 1), (1, 1), (2, 1), (3, 2), (4, 12), (6, 34560)])
def test_hyperfactorial(n, value):
    assert hyperfactorial(n) == value


def test_hyperfactorial_parts():
    assert hyper_even(4) == 4
    assert hyper_odd(4) == 3
    for n in range(1, 12):
        assert hyper_even_closed(n) == hyper_even(n)
        assert hyper_even(n) * hyper_odd(n) == hyperfactorial(n)
    with pytest.raises(InvalidParameters):
        hyperfactorial(-1)


@pytest.mark.parametrize("sides, value", [
    ((2, 2, 2), 20),
    ((1, 1, 5), 6),
    ((1, 1, 1), 2),
    ((2, 2, 0), 1),
    ((7, 4, 1), 330),
])
def test_mac(sides, value):
    assert mac(*sides) == value


def test_mac_via_f():
    for sides in [(2, 2, 2), (3, 2, 4), (1, 5, 3), (4, 4, 1)]:
        assert mac_via_f(*sides) == mac(*sides)


def test_f_factors():
    assert format_factors(f_factors(3, 3)) == "(c+1)(c+2)^2(c+3)^3(c+4)^2(c+5)"
    assert format_factors(f_factors(1, 3)) == "(c+1)(c+2)(c+3)"
    assert format_factors([]) == "1"
    assert format_factors([(-3, 2), (0, 1)], var="t") == "(t-3)^2t"
    with pytest.raises(InvalidParameters):
        f_factors(3, 2)


def test_f_values():
    assert f_poly(3, 3, 1) == 172800
    assert f_even(3, 3, 1) == 225
    assert f_odd(3, 3, 1) == 768
    assert even_factors(3, 3) == [(2, 2), (4, 2)]
    assert odd_factors(3, 3) == [(1, 1), (3, 3), (5, 1)]


@pytest.mark.parametrize("a, b, c", [(2, 3, 2), (2, 3, 3), (3, 4, 5), (1, 1, 6), (4, 4, 4)])
def test_f_parity_split_multiplies_back(a, b, c):
    assert f_even(a, b, c) * f_odd(a, b, c) == f_poly(a, b, c)


def test_split_binom_det():
    assert split_binom_det(3, 1, 1, 1, 2) == 8
    for args in [(3, 1, 1, 1, 2), (5, 2, 1, 2, 3), (6, 2, 2, 1, 4), (7, 3, 2, 3, 5)]:
        assert split_binom_det(*args) == det_exact(binomial_matrix_T(*args))
    with pytest.raises(InvalidParameters):
        split_binom_det(3, 1, 1, 0, 2)
    with pytest.raises(InvalidParameters):
        split_binom_det(2, 2, 1, 1, 2)


@pytest.mark.parametrize("values, tag, value", [
    ((2, 2, 4, 1, 1, 2), M_ZERO, 1),
    ((4, 4, 4, 2, 2, 2), M_ZERO, 20),
    ((3, 3, 5, 0, 1, 3), DET_N_FAMILY, 3),
    ((3, 3, 1, 1, 1, 0), GAMMA_ZERO, 1),
    ((2, 2, 3, 1, 1, 0), GAMMA_ZERO, 1),
    ((2, 2, 3, 0, 1, 1), C_ZERO, 1),
    ((4, 4, 6, 1, 1, 2), C_ZERO, 3),
    ((4, 4, 3, 1, 1, 2), C_MAXIMAL, 4),
    ((7, 7, 7, 3, 3, 3), SYMMETRIC_ODD_ZERO, 0),
    ((5, 5, 3, 2, 2, 1), SYMMETRIC_ODD_ZERO, 0),
    ((5, 7, 9, 2, 3, 4), AXIS_CENTRAL_ALL_ODD_ZERO, 0),
])
def test_closed_det(values, tag, value):
    p = AciParams(*values)
    result = closed_det(p)
    assert result.case_tag == tag
    assert result.value == value
    det = det_exact(build_N(p))
    assert abs(det) == abs(value)
    if result.sign_certain:
        assert det == value


def test_closed_det_sign_is_only_claimed_when_known():
    assert closed_det(AciParams(3, 3, 5, 0, 1, 3)).sign_certain
    assert closed_det(AciParams(2, 2, 4, 1, 1, 2)).sign_certain
    # det N is -1 here
    assert not closed_det(AciParams(3, 3, 1, 1, 1, 0)).sign_certain
    assert not closed_det(AciParams(4, 4, 3, 1, 1, 2)).sign_certain


def test_closed_det_without_a_case(det_eleven):
    result = closed_det(det_eleven)
    assert result.case_tag == NONE
    assert result.value is None
    assert result.to_dict()["value"] is None


@pytest.mark.parametrize("values, value", [((2, 2, 4, 1, 1, 2), 1), ((4, 4, 4, 2, 2, 2), 20)])
def test_symmetry_conjecture(values, value):
    p = AciParams(*values)
    assert symmetry_conjecture(p) == value
    found = validate_symmetry(p)
    assert found["status"] == "match"
    assert found["marker"] == CONJECTURE


def test_symmetry_conjecture_range(det_eleven):
    with pytest.raises(InvalidParameters):
        symmetry_conjecture(det_eleven)
    with pytest.raises(InvalidParameters):
        symmetry_conjecture(AciParams(7, 7, 7, 3, 3, 3))


def test_symmetric_instances():
    found = symmetric_instances(4)
    assert AciParams(2, 2, 4, 1, 1, 2) in found
    for p in found:
        assert p.a == p.b and p.alpha == p.beta
        assert p.c % 2 == 0 or p.gamma % 2 == 0
        assert derive_stats(p).hexagonal


def test_validate_symmetry_example_reports_every_value():
    findings = validate_symmetry_example((0, 2))
    assert [f["M"] for f in findings] == [0, 2]
    assert all(f["status"] in ("match", "sign_mismatch", "mismatch") for f in findings)


def test_det_poly_interpolate_recovers_a_linear_family():
    # C = 0, A = B = 2, alpha = beta = 1 gives det N = M + 1
    result = det_poly_interpolate(2, 2, 0, 1, 1, parity=0, degree_bound=1, extra=2)
    assert result.samples == [(0, 1), (2, 3)]
    assert result.held_out == [(4, 5), (6, 7)]
    assert result.polynomial.degree == 1
    assert result.polynomial(10) == 11
    odd = det_poly_interpolate(2, 2, 0, 1, 1, parity=1, degree_bound=1, extra=1)
    assert odd.polynomial(5) == 6


def test_det_poly_interpolate_detects_a_low_degree_bound():
    with pytest.raises(InvariantViolation):
        det_poly_interpolate(2, 2, 0, 1, 1, parity=0, degree_bound=0, extra=2)


def test_int_polynomial():
    x = Symbol("x")
    poly = IntPolynomial(x ** 2 - 1, x)
    assert poly.degree == 2
    assert poly.divisible_by(x - 1)
    assert not poly.divisible_by(x - 2)
    assert poly.substitute(x + 1, x)(0) == 0
    assert poly.to_dict()["coefficients"] == [["-1", "1"], ["0", "1"], ["1", "1"]]


def test_nonlinear_family_closed_form():
    p = nonlinear_family_params(4)
    assert p == AciParams(5, 8, 11, 1, 4, 7)
    assert nonlinear_bound_closed_form(4) == 330
    assert abs(det_exact(build_N(p))) == 330
    with pytest.raises(InvalidParameters):
        nonlinear_bound_closed_form(3)


@pytest.mark.slow
def test_nonlinear_family_polynomial_passes_through_the_samples():
    poly = nonlinear_family_polynomial(0)
    for t in (4, 6, 8):
        assert poly(t) == det_exact(build_N(nonlinear_family_params(t)))


@pytest.mark.parametrize("values, predicted, proved, reason", [
    ((7, 7, 7, 3, 3, 3), False, True, "symmetric odd puncture"),
    ((6, 6, 6, 2, 2, 2), True, True, "t and alpha+beta+gamma share parity"),
    ((5, 5, 5, 2, 2, 2), True, True, "equal even mixed exponents"),
    ((4, 5, 6, 1, 2, 3), True, False, "open"),
    ((11, 18, 22, 2, 9, 13), False, False, "exceptional"),
])
def test_level_conjecture(values, predicted, proved, reason):
    verdict = level_conjecture(AciParams(*values))
    assert verdict["predicted_wlp"] is predicted
    assert verdict["proved"] is proved
    assert verdict["reason"] == reason
    assert verdict["marker"] == CONJECTURE


def test_level_conjecture_needs_a_level_puncture(det_eleven):
    with pytest.raises(InvalidParameters):
        level_conjecture(det_eleven)


def test_a_t_verdict():
    assert not a_t_verdict(3, 4)
    assert a_t_verdict(3, 3)
    assert a_t_verdict(2, 4)
    with pytest.raises(InvalidParameters):
        a_t_verdict(0, 1)


def test_axis_central_wlp(always_fails):
    assert axis_central_wlp(always_fails) == {"always_fails": True, "characteristic_bound": None}
    assert axis_central_wlp(AciParams(6, 6, 6, 2, 2, 2)) == {"always_fails": False, "characteristic_bound": 8}
    with pytest.raises(InvalidParameters):
        axis_central_wlp(AciParams(4, 6, 6, 1, 1, 3))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_det_n_family(n):
    p = det_n_family(n, 1, n + 4)
    assert det_exact(build_N(p)) == n
    assert closed_det(p).case_tag == DET_N_FAMILY


def test_det_n_family_range():
    with pytest.raises(InvalidParameters):
        det_n_family(0, 1, 5)


@pytest.mark.parametrize("args", [(1, 1, 1), (2, 1, 2)])
def test_gamma_zero_unique_has_one_tiling(args):
    assert count_tilings(gamma_zero_unique(*args)) == 1


@pytest.mark.slow
def test_split_binom_det_on_every_small_matrix():
    for n in range(1, 6):
        for m in range(1, n + 1):
            for p in range(9):
                for q in range(p + 1):
                    for r in range(p - q + 1):
                        args = (p, q, r, m, n)
                        assert split_binom_det(*args) == det_exact(binomial_matrix_T(*args)), args


@pytest.mark.slow
def test_hyperfactorial_identities_up_to_twelve():
    for n in range(1, 13):
        assert hyper_even(n) * hyper_odd(n) == hyperfactorial(n)
        assert hyper_even_closed(n) == hyper_even(n)


@pytest.mark.slow
def test_f_polynomials_on_every_small_box():
    # f_poly, f_even and f_odd compare themselves with their hyperfactorial quotients for c >= 1
    for b in range(7):
        for a in range(b + 1):
            for c in range(1, 9):
                assert f_even(a, b, c) * f_odd(a, b, c) == f_poly(a, b, c)
                assert mac_via_f(a, b, c) == mac(a, b, c)
                assert mac_via_f(b, a, c) == mac(b, a, c)


@pytest.mark.slow
def test_det_n_family_on_a_grid():
    for n in range(1, 7):
        for beta in range(4):
            for c in range(n + beta + 1, n + beta + 5):
                if beta == 0 and c == n + 1:
                    # alpha and beta would both vanish
                    continue
                p = det_n_family(n, beta, c)
                assert det_exact(build_N(p)) == n, p.label()
                result = closed_det(p)
                assert result.case_tag == DET_N_FAMILY and result.value == n


@pytest.mark.slow
def test_gamma_zero_family_has_determinant_one():
    for alpha in range(1, 4):
        for beta in range(1, 4):
            for c in range(1, 5):
                p = gamma_zero_unique(alpha, beta, c)
                assert abs(det_exact(build_N(p))) == 1, p.label()
