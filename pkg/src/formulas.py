# -*- coding: utf-8 -*-
"""
Hyperfactorial calculus and the closed determinant evaluations of N.

All hyperfactorial quotients are assembled as prime exponent vectors, so a
quotient that is not an integer is noticed instead of being rounded.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from scipy.special import factorial
from sympy import Poly, Rational, Symbol, factor_list, factorint, interpolate, rem

from errors import InvalidParameters, InvariantViolation
from exact_linalg import det_exact
from matrices import IntMatrix, build_N
from params_core import (RELABELINGS, AciParams, classify_puncture, hexagon_to_params,
                         relabel, require_hexagonal)
from read_config import model_parameters
from utils import binom, decimal

logger = logging.getLogger(__name__)

CONJECTURE = "CONJECTURE"

M_ZERO = "M_ZERO"
C_ZERO = "C_ZERO"
C_MAXIMAL = "C_MAXIMAL"
GAMMA_ZERO = "GAMMA_ZERO"
SYMMETRIC_ODD_ZERO = "SYMMETRIC_ODD_ZERO"
AXIS_CENTRAL_ALL_ODD_ZERO = "AXIS_CENTRAL_ALL_ODD_ZERO"
DET_N_FAMILY = "DET_N_FAMILY"
NONE = "NONE"


@lru_cache(maxsize=None)
def _hyper_exponents(n: int) -> Tuple[Tuple[int, int], ...]:
    if n < 0:
        raise InvalidParameters(f"hyperfactorial of a negative argument {n}")
    exponents = Counter()
    # H(n) = prod_{k=1}^{n-1} k^(n-k)
    for k in range(2, n):
        for q, e in factorint(k).items():
            exponents[q] += e * (n - k)
    return tuple(sorted(exponents.items()))


class HyperRatio:
    """A product of hyperfactorials and integers, kept as prime exponents."""

    def __init__(self):
        self.exponents = Counter()

    def mul(self, n: int, power: int = 1) -> "HyperRatio":
        for q, e in _hyper_exponents(n):
            self.exponents[q] += power * e
        return self

    def div(self, n: int, power: int = 1) -> "HyperRatio":
        return self.mul(n, -power)

    def mul_int(self, v: int, power: int = 1) -> "HyperRatio":
        if v == 0:
            raise InvalidParameters("zero factor in a hyperfactorial ratio")
        for q, e in factorint(abs(v)).items():
            self.exponents[q] += power * e
        return self

    def value(self) -> Rational:
        num = den = 1
        for q, e in self.exponents.items():
            if e > 0:
                num *= q ** e
            elif e < 0:
                den *= q ** (-e)
        return Rational(num, den)

    def integer(self) -> int:
        v = self.value()
        if v.q != 1:
            raise InvariantViolation(f"hyperfactorial quotient {v} is not an integer")
        return int(v.p)


def hyperfactorial(n: int) -> int:
    """

    :param n: int, n >= 0.
    :return: int of H(n) = 0! 1! ... (n-1)!.
    """
    if n < 0:
        raise InvalidParameters(f"hyperfactorial of a negative argument {n}")
    value = 1
    for i in range(2, n):
        value *= int(factorial(i, exact=True))
    return value


def hyper_even(n: int) -> int:
    """

    :param n: int, n >= 0.
    :return: int of the even part, the product over i < n of the even numbers up to i.
    """
    if n < 0:
        raise InvalidParameters(f"hyperfactorial of a negative argument {n}")
    value = 1
    for i in range(n):
        for j in range(1, i // 2 + 1):
            value *= 2 * j
    return value


def hyper_odd(n: int) -> int:
    full, even = hyperfactorial(n), hyper_even(n)
    if full % even:
        raise InvariantViolation(f"H_e({n}) does not divide H({n})")
    return full // even


def hyper_even_closed(n: int) -> int:
    """

    :param n: int, n >= 1.
    :return: int of 2^(C(floor(n/2),2) + C(ceil(n/2),2)) H(floor(n/2)) H(ceil(n/2)).
    """
    low, high = n // 2, n - n // 2
    return 2 ** (binom(low, 2) + binom(high, 2)) * hyperfactorial(low) * hyperfactorial(high)


def mac(A: int, B: int, C: int) -> int:
    """

    :param A, B, C: int, non-negative.
    :return: int, MacMahon's count of plane partitions in an A x B x C box.
    """
    if min(A, B, C) < 0:
        raise InvalidParameters(f"Mac({A},{B},{C}) needs non-negative sides")
    ratio = HyperRatio().mul(A).mul(B).mul(C).mul(A + B + C)
    return ratio.div(A + B).div(A + C).div(B + C).integer()


def f_factors(a: int, b: int) -> List[Tuple[int, int]]:
    """

    :param a, b: int with 0 <= a <= b.
    :return: list of (offset, exponent) pairs of f_{a,b}(c) = prod (c + offset)^exponent.
    """
    if not 0 <= a <= b:
        raise InvalidParameters(f"f_(a,b) needs 0 <= a <= b, got ({a},{b})")
    factors = [(i, i) for i in range(1, a + 1)]
    factors += [(a + i, a) for i in range(1, b - a + 1)]
    factors += [(b + i, a - i) for i in range(1, a + 1)]
    return [(offset, e) for offset, e in factors if e > 0]


def even_factors(a: int, b: int) -> List[Tuple[int, int]]:
    return [(offset, e) for offset, e in f_factors(a, b) if offset % 2 == 0]


def odd_factors(a: int, b: int) -> List[Tuple[int, int]]:
    return [(offset, e) for offset, e in f_factors(a, b) if offset % 2 == 1]


def format_factors(factors: Sequence[Tuple[int, int]], var: str = "c") -> str:
    """

    :param factors: sequence of (offset, exponent).
    :param var: str variable name.
    :return: str such as "(c+1)(c+2)^2".
    """
    parts = []
    for offset, e in factors:
        base = f"({var}+{offset})" if offset > 0 else (f"({var}{offset})" if offset < 0 else var)
        parts.append(base if e == 1 else f"{base}^{e}")
    return "".join(parts) or "1"


def _evaluate(factors: Sequence[Tuple[int, int]], c: int) -> int:
    value = 1
    for offset, e in factors:
        value *= (c + offset) ** e
    return value


def _parity_ratio(a: int, b: int, c: int, part: Callable[[int], int]) -> Rational:
    return Rational(part(a + b + c) * part(c), part(a + c) * part(b + c))


def f_poly(a: int, b: int, c: int) -> int:
    """

    :param a, b: int with 0 <= a <= b.
    :param c: int.
    :return: int of f_{a,b}(c); for c >= 1 the value is checked against H(a+b+c)H(c)/(H(a+c)H(b+c)).
    """
    value = _evaluate(f_factors(a, b), c)
    if c >= 1:
        expected = HyperRatio().mul(a + b + c).mul(c).div(a + c).div(b + c).integer()
        if value != expected:
            raise InvariantViolation(f"f_({a},{b})({c}) = {value} but the hyperfactorial quotient is {expected}")
    return value


def f_even(a: int, b: int, c: int) -> int:
    """

    :return: int of f^e_{a,b}(c), the factors with even offset; for c >= 1 it equals the quotient of
    even parts when c is even and of odd parts when c is odd.
    """
    value = _evaluate(even_factors(a, b), c)
    if c >= 1:
        expected = _parity_ratio(a, b, c, hyper_even if c % 2 == 0 else hyper_odd)
        if value != expected:
            raise InvariantViolation(f"f^e_({a},{b})({c}) = {value} but the parity quotient is {expected}")
    return value


def f_odd(a: int, b: int, c: int) -> int:
    value = _evaluate(odd_factors(a, b), c)
    if c >= 1:
        if value * f_even(a, b, c) != f_poly(a, b, c):
            raise InvariantViolation(f"f^o_({a},{b})({c}) f^e_({a},{b})({c}) != f_({a},{b})({c})")
        expected = _parity_ratio(a, b, c, hyper_odd if c % 2 == 0 else hyper_even)
        if value != expected:
            raise InvariantViolation(f"f^o_({a},{b})({c}) = {value} but the parity quotient is {expected}")
    return value


def f_expression(factors: Sequence[Tuple[int, int]], var: Symbol = None):
    """Sympy product of (var + offset)^exponent, left unexpanded."""
    var = Symbol("c") if var is None else var
    expr = 1
    for offset, e in factors:
        expr *= (var + offset) ** e
    return expr


def mac_via_f(a: int, b: int, c: int) -> int:
    """Mac(a,b,c) as H(a)H(b)/H(a+b) times the polynomial f_{a,b}(c)."""
    low, high = min(a, b), max(a, b)
    prefactor = HyperRatio().mul(a).mul(b).div(a + b).value()
    value = prefactor * f_poly(low, high, c)
    if value.q != 1:
        raise InvariantViolation(f"Mac({a},{b},{c}) via f_({low},{high}) is not an integer")
    return int(value.p)


def binomial_matrix_T(p: int, q: int, r: int, m: int, n: int) -> IntMatrix:
    """

    :return: IntMatrix of size n with entries C(p, q+j-i) in the first m columns and C(p, q+r+j-i) after.
    """
    rows = []
    for i in range(1, n + 1):
        rows.append([binom(p, q + j - i) if j <= m else binom(p, q + r + j - i) for j in range(1, n + 1)])
    return IntMatrix(rows, cols=n)


def split_binom_det(p: int, q: int, r: int, m: int, n: int) -> int:
    """

    :param p, q, r, m, n: int, non-negative with 1 <= m <= n.
    :return: int of det T by its hyperfactorial evaluation.
    """
    if min(p, q, r, m) < 0 or not 1 <= m <= n:
        raise InvalidParameters("split binomial determinant needs p,q,r,m >= 0 and 1 <= m <= n")
    if p - q - r < 0:
        raise InvalidParameters(f"p-q-r = {p - q - r} is negative")
    ratio = HyperRatio()
    ratio.mul(m).mul(q).mul(r).mul(m + q + r).div(m + q).div(m + r).div(q + r)
    ratio.mul(n - m).mul(p - q - r).mul(r).mul(n - m + p - q).div(n - m + p - q - r).div(n - m + r).div(p - q)
    ratio.mul(q + r).mul(p - q).mul(n + r).mul(n + p)
    ratio.div(n + p - q).div(n + q + r).div(p).div(r)
    return ratio.integer()


@dataclass
class ClosedDetResult:
    value: Optional[int]
    case_tag: str
    relabeling: Tuple[int, int, int]
    sign_certain: bool
    characteristic_bound: Optional[int]

    def to_dict(self) -> dict:
        return {"value": None if self.value is None else decimal(self.value),
                "case_tag": self.case_tag,
                "relabeling": list(self.relabeling),
                "sign_certain": self.sign_certain,
                "characteristic_bound": self.characteristic_bound}


def gamma_zero_value(q: AciParams) -> int:
    s2, A, B, C, M = require_hexagonal(q)
    ratio = HyperRatio()
    ratio.mul(q.beta - A).mul(A).mul(M).mul(q.beta + M).div(q.beta).div(q.beta - A + M).div(A + M)
    ratio.mul(q.alpha - B).mul(B).mul(M).mul(q.alpha + M).div(q.alpha).div(q.alpha - B + M).div(B + M)
    ratio.mul(A + M).mul(B + M).mul(C + M).mul(A + B + C + M)
    ratio.div(q.a).div(q.b).div(q.c).div(M)
    return ratio.integer()


def _is_det_n_family(q: AciParams) -> bool:
    return q.gamma >= 1 and q.b == q.beta + 2 and q.a == q.c - q.beta - 1 and q.alpha == q.a - q.gamma


def _dispatch(q: AciParams) -> Optional[Tuple[str, int, Optional[int]]]:
    s2, A, B, C, M = require_hexagonal(q)
    if M == 0:
        return M_ZERO, mac(A, B, C), A + B + C
    if _is_det_n_family(q):
        return DET_N_FAMILY, q.gamma, None
    if q.gamma == 0:
        return GAMMA_ZERO, gamma_zero_value(q), A + B + C + M
    if C == 0:
        return C_ZERO, mac(M, A - q.beta, B - q.alpha), q.c - q.alpha - q.beta
    if C == q.alpha + q.beta:
        return C_MAXIMAL, mac(A, B, C + M), s2
    if q.a == q.b and q.alpha == q.beta and q.c % 2 == 1 and q.gamma % 2 == 1:
        return SYMMETRIC_ODD_ZERO, 0, None
    if 0 not in q.mixed and M % 2 == 1 and A % 2 == 1 and B % 2 == 1 and C % 2 == 1 \
            and classify_puncture(q).axis_central:
        return AXIS_CENTRAL_ALL_ODD_ZERO, 0, None
    return None


def closed_det(p: AciParams) -> ClosedDetResult:
    """

    :param p: AciParams, hexagonal.
    :return: ClosedDetResult of the first closed evaluation that applies to some relabelling.

    The value equals det N of the relabelled instance up to sign; `sign_certain` marks the results
    whose sign also matches det N in the given labelling.

    Within each relabelling the cases are tried in the order M = 0, det-n family, gamma = 0, C = 0,
    C maximal, then the two vanishing cases. Trying C = 0 first would file (2,2,3,1,1,0), which
    satisfies both, under C_ZERO instead of GAMMA_ZERO, and would catch every det-n instance, all
    of which have C = 0, before DET_N_FAMILY.
    """
    _, _, _, _, M = require_hexagonal(p)
    for sigma in RELABELINGS:
        hit = _dispatch(relabel(p, sigma))
        if hit is None:
            continue
        tag, value, bound = hit
        certain = value == 0 or M % 2 == 0 or (sigma == RELABELINGS[0] and tag in (C_ZERO, DET_N_FAMILY))
        logger.debug("closed determinant of %s: %s via %s", p.label(), tag, sigma)
        return ClosedDetResult(value=value, case_tag=tag, relabeling=sigma, sign_certain=certain,
                               characteristic_bound=bound)
    return ClosedDetResult(value=None, case_tag=NONE, relabeling=RELABELINGS[0], sign_certain=False,
                           characteristic_bound=None)


def _is_symmetric(p: AciParams) -> bool:
    return p.a == p.b and p.alpha == p.beta


def symmetry_conjecture(p: AciParams) -> int:
    """

    :param p: AciParams, hexagonal with a = b, alpha = beta and c or gamma even.
    :return: int of the conjectured signed value of det N.
    """
    _, A, _, C, M = require_hexagonal(p)
    g = p.gamma
    if not _is_symmetric(p):
        raise InvalidParameters(f"{p.label()} is not symmetric (a = b and alpha = beta)")
    if p.c % 2 == 1 and g % 2 == 1:
        raise InvalidParameters(f"{p.label()} has c and gamma odd; the determinant vanishes")
    half_sum, half_diff = (C + g) // 2, (C - g) // 2
    ratio = HyperRatio()
    ratio.mul(M + C).mul(M + g).mul(M + A + C // 2).mul(M + A + (C + 1) // 2).mul(M + 2 * A + C)
    ratio.div(M + 2 * A).div(M + A + C, 2).div(M + half_sum, 2)
    # one pass with floors of the halves, one with ceilings
    for up in (0, 1):
        half = (M + up) // 2
        plus_c, plus_g, minus_g = (M + C + up) // 2, (M + g + up) // 2, (M - g + up) // 2
        ratio.mul(half).mul(half + A).mul(half + half_sum).mul(half + A + half_diff)
        ratio.div(plus_c).div(plus_g).div(plus_c + A).div(minus_g + A)
    ratio.mul(A - g // 2).mul(C // 2).mul(g // 2).mul(A - (g + 1) // 2).mul((C + 1) // 2).mul((g + 1) // 2)
    ratio.div(g).div(A + half_diff, 2)
    sign = -1 if (M * ((C + 1) // 2)) % 2 else 1
    return sign * ratio.integer()


def validate_symmetry(p: AciParams) -> dict:
    """

    :param p: AciParams within the range of `symmetry_conjecture`.
    :return: dict with the conjectured value, det N and a status among match, sign_mismatch, mismatch.
    """
    conjectured = symmetry_conjecture(p)
    actual = det_exact(build_N(p))
    if conjectured == actual:
        status = "match"
    elif abs(conjectured) == abs(actual):
        status = "sign_mismatch"
    else:
        status = "mismatch"
    if status != "match":
        logger.warning("symmetry conjecture %s at %s: conjectured %d, det N %d", status, p.label(), conjectured, actual)
    return {"params": list(p.as_tuple()), "conjectured": decimal(conjectured), "det_N": decimal(actual),
            "status": status, "marker": CONJECTURE}


def symmetric_instances(max_size: int) -> List[AciParams]:
    """

    :param max_size: int bound on 2A+C+M.
    :return: list of the hexagonal symmetric sextuples with c or gamma even.
    """
    found = []
    for A in range(max_size // 2 + 1):
        for C in range(max_size - 2 * A + 1):
            for M in range(max_size - 2 * A - C + 1):
                for alpha in range(1, A + C + 1):
                    gamma = 2 * A + C - 2 * alpha
                    if gamma < 0:
                        continue
                    try:
                        p = hexagon_to_params(A, A, C, M, alpha, alpha)
                    except InvalidParameters:
                        continue
                    if p.c % 2 == 0 or p.gamma % 2 == 0:
                        found.append(p)
    return sorted(found, key=AciParams.as_tuple)


SYMMETRY_EXAMPLE_FACTORS = ((1, 1), (3, 3), (4, 2), (5, 3), (7, 1), (12, 2), (13, 4), (14, 6), (15, 5),
                            (16, 6), (17, 3), (18, 4), (19, 1), (20, 2))
SYMMETRY_EXAMPLE_DENOMINATOR = -(2 ** 34) * 3 ** 16 * 5 ** 6 * 7 ** 6


def symmetry_example_params(M: int) -> AciParams:
    return AciParams(14 + M, 14 + M, 16 + M, 10, 10, 2)


def symmetry_example_polynomial(M: int) -> Rational:
    """

    :param M: int, even.
    :return: Rational value of the displayed degree 43 product for (14+M, 14+M, 16+M, 10, 10, 2).
    """
    return Rational(_evaluate(SYMMETRY_EXAMPLE_FACTORS, M), SYMMETRY_EXAMPLE_DENOMINATOR)


def validate_symmetry_example(values: Sequence[int] = (0, 2, 4)) -> List[dict]:
    """

    :param values: sequence of even M.
    :return: list of findings comparing the displayed product, the conjecture and det N.
    """
    findings = []
    for M in values:
        p = symmetry_example_params(M)
        displayed = symmetry_example_polynomial(M)
        actual = det_exact(build_N(p))
        conjectured = symmetry_conjecture(p)
        if displayed == actual:
            status = "match"
        elif abs(displayed) == abs(actual):
            status = "sign_mismatch"
        else:
            status = "mismatch"
        if status != "match":
            logger.warning("displayed symmetry example at M=%d: %s (product %s, det N %d)", M, status, displayed, actual)
        findings.append({"M": M, "displayed": str(displayed), "conjectured": decimal(conjectured),
                         "det_N": decimal(actual), "status": status, "marker": CONJECTURE})
    return findings


class IntPolynomial:
    """A polynomial with rational coefficients in one variable."""

    def __init__(self, expr, var: Symbol):
        self.var = var
        self.poly = Poly(expr, var, domain="QQ")

    def __call__(self, value: int) -> Rational:
        return Rational(self.poly.eval(value))

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def divisible_by(self, divisor) -> bool:
        return rem(self.poly.as_expr(), divisor, self.var) == 0

    def substitute(self, expr, var: Symbol) -> "IntPolynomial":
        return IntPolynomial(self.poly.as_expr().subs(self.var, expr), var)

    def factored(self) -> str:
        content, parts = factor_list(self.poly.as_expr(), self.var)
        text = "".join(f"({base})" if e == 1 else f"({base})^{e}" for base, e in parts)
        return f"{content}*{text}" if content != 1 else text

    def to_dict(self) -> dict:
        coefficients = [Rational(v) for v in reversed(self.poly.all_coeffs())]
        return {"variable": str(self.var),
                "coefficients": [[decimal(v.p), decimal(v.q)] for v in coefficients],
                "factored": self.factored()}


@dataclass
class InterpolationResult:
    polynomial: IntPolynomial
    samples: List[Tuple[int, int]]
    held_out: List[Tuple[int, int]]


def det_poly_interpolate(A: int, B: int, C: int, alpha: int, beta: int, parity: int,
                         degree_bound: int, extra: int = None) -> InterpolationResult:
    """

    :param A, B, C, alpha, beta: int fixed hexagon data; the puncture side M varies.
    :param parity: int, 0 or 1, parity of the sampled M.
    :param degree_bound: int.
    :param extra: int number of held-out samples checked against the fitted polynomial.
    :return: InterpolationResult of det N as a polynomial in M.
    """
    extra = model_parameters["interpolation_extra_samples"] if extra is None else extra
    var = Symbol("M")
    points = []
    M = parity % 2
    attempts = 0
    while len(points) < degree_bound + 1 + extra:
        try:
            p = hexagon_to_params(A, B, C, M, alpha, beta)
            points.append((M, det_exact(build_N(p))))
        except InvalidParameters:
            attempts += 1
            if attempts > 4 * (degree_bound + extra + 2):
                raise InvalidParameters("family has too few valid members of this parity")
        M += 2
    fit, held_out = points[:degree_bound + 1], points[degree_bound + 1:]
    polynomial = IntPolynomial(interpolate(fit, var), var)
    for m_value, det in held_out:
        if polynomial(m_value) != det:
            raise InvariantViolation(f"interpolated polynomial misses det N = {det} at M = {m_value}; "
                                     f"degree bound {degree_bound} is too small")
    return InterpolationResult(polynomial=polynomial, samples=fit, held_out=held_out)


NONLINEAR_ODD = ((-3, 1), (-2, 1), (-1, 3), (0, 3), (1, 2), (2, 1), (4, 1), (6, 1))
NONLINEAR_EVEN = ((-2, 2), (-1, 2), (0, 4), (1, 2), (2, 1), (5, 1), (7, 1))


def nonlinear_family_params(t: int) -> AciParams:
    return AciParams(1 + t, 4 + t, 7 + t, 1, 4, 7)


def nonlinear_bound_closed_form(t: int) -> int:
    """

    :param t: int, t >= 4.
    :return: int of the displayed parity-split evaluation of |det N| for (1+t, 4+t, 7+t, 1, 4, 7).
    """
    if t < 4:
        raise InvalidParameters(f"family needs t >= 4, got {t}")
    if t % 2:
        value = _evaluate(NONLINEAR_ODD, t) * (t * t + 6 * t - 1)
    else:
        value = _evaluate(NONLINEAR_EVEN, t) * (t * t + 2 * t - 9)
    numerator, h7 = 4 * value, hyperfactorial(7)
    if numerator % h7:
        raise InvariantViolation(f"closed form at t={t} is not an integer")
    return numerator // h7


def nonlinear_family_polynomial(parity: int, extra: int = None) -> IntPolynomial:
    """

    :param parity: int parity of t.
    :return: IntPolynomial in t of det N for (1+t, 4+t, 7+t, 1, 4, 7), fitted from exact determinants.
    """
    result = det_poly_interpolate(7, 4, 1, 1, 4, parity=parity, degree_bound=15, extra=extra)
    t = Symbol("t")
    return result.polynomial.substitute(t - 4, t)


def level_conjecture(p: AciParams) -> dict:
    """

    :param p: AciParams, gravity-central (level of type 3) and hexagonal.
    :return: dict with the predicted characteristic zero WLP verdict and whether it is proved.
    """
    puncture = classify_puncture(p)
    if not puncture.gravity_central:
        raise InvalidParameters(f"{p.label()} is not level of type 3")
    alpha, beta, gamma = sorted(p.mixed)
    t = puncture.gravity_t
    total = alpha + beta + gamma
    symmetric = alpha == beta or beta == gamma
    if gamma > 2 * (alpha + beta):
        return {"predicted_wlp": None, "proved": False, "reason": "outside range", "marker": CONJECTURE}
    if (alpha, beta, gamma, t) in ((2, 9, 13, 9), (3, 7, 14, 9)):
        return {"predicted_wlp": False, "proved": False, "reason": "exceptional", "marker": CONJECTURE}
    if t % 2 == 0 and total % 2 == 1 and symmetric:
        return {"predicted_wlp": False, "proved": True, "reason": "symmetric odd puncture", "marker": CONJECTURE}
    if t % 2 == total % 2:
        return {"predicted_wlp": True, "proved": True, "reason": "t and alpha+beta+gamma share parity", "marker": CONJECTURE}
    if t % 2 == 1 and alpha == beta == gamma and alpha % 2 == 0:
        return {"predicted_wlp": True, "proved": True, "reason": "equal even mixed exponents", "marker": CONJECTURE}
    return {"predicted_wlp": True, "proved": False, "reason": "open", "marker": CONJECTURE}


def a_t_verdict(alpha: int, t: int) -> bool:
    """

    :return: bool, whether R/(x^(alpha+t), y^(alpha+t), z^(alpha+t), x^alpha y^alpha z^alpha) has the WLP in
    characteristic zero; it fails exactly when alpha is odd and t is even.
    """
    if alpha < 1 or t < alpha:
        raise InvalidParameters(f"needs 1 <= alpha <= t, got alpha={alpha}, t={t}")
    return not (alpha % 2 == 1 and t % 2 == 0)


def axis_central_wlp(p: AciParams) -> dict:
    """

    :param p: AciParams with an axis-central puncture.
    :return: dict with the verdict: fails everywhere when a, b, c and M are odd, otherwise holds in
    characteristic zero and from A+B+C+M on.
    """
    s2, A, B, C, M = require_hexagonal(p)
    if not classify_puncture(p).axis_central:
        raise InvalidParameters(f"{p.label()} does not have an axis-central puncture")
    if all(v % 2 == 1 for v in (p.a, p.b, p.c, M)):
        return {"always_fails": True, "characteristic_bound": None}
    return {"always_fails": False, "characteristic_bound": A + B + C + M}


def det_n_family(n: int, beta: int, c: int) -> AciParams:
    """

    :return: AciParams (c-beta-1, beta+2, c, c-n-beta-1, beta, n) whose determinant is n.
    """
    if n < 1 or beta < 0 or c < n + beta + 1:
        raise InvalidParameters("needs n >= 1, beta >= 0, c >= n+beta+1")
    return AciParams(c - beta - 1, beta + 2, c, c - n - beta - 1, beta, n)


def gamma_zero_unique(alpha: int, beta: int, c: int) -> AciParams:
    """

    :return: AciParams (alpha+beta+c, alpha+beta+c, c, alpha, beta, 0), a region with a single tiling.
    """
    return AciParams(alpha + beta + c, alpha + beta + c, c, alpha, beta, 0)
