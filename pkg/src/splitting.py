# -*- coding: utf-8 -*-
"""
Restriction of R/I to the line x+y+z = 0: the ideal J of S = K[x,y], its
regularity, the generic splitting type of the syzygy bundle of I, the
splitting on the two special lines, and the equivalence report that ties
these to det N.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import isprime

from errors import InvalidParameters, InvariantViolation
from exact_linalg import det_exact, rank_exact, wlp_report
from hilbert import h_vector
from matrices import build_N
from params_core import AciParams, derive_stats, relabel, require_hexagonal
from read_config import model_parameters
from utils import binom

logger = logging.getLogger(__name__)

# a generator x^i y^j (x+y)^w of an ideal of S
Generator = Tuple[int, int, int]


@dataclass(frozen=True)
class SplittingType:
    p: int
    q: int
    r: int
    conditional: bool = False

    @classmethod
    def of(cls, values: Sequence[int], conditional: bool = False) -> "SplittingType":
        p, q, r = sorted(int(v) for v in values)
        return cls(p, q, r, conditional)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.p, self.q, self.r)

    @property
    def total(self) -> int:
        return self.p + self.q + self.r

    def to_dict(self) -> dict:
        return {"type": list(self.as_tuple()), "conditional": self.conditional}


def check_characteristic(characteristic: int) -> int:
    if characteristic < 0 or (characteristic and not isprime(characteristic)):
        raise InvalidParameters(f"characteristic must be 0 or a prime, got {characteristic}")
    return characteristic


def reg_two_var(a: int, b: int, alpha: int, beta: int, gamma: int) -> int:
    """

    :param a, b, alpha, beta, gamma: int, non-negative with alpha+beta+gamma < a+b.
    :return: int, reg (x^a, y^b, x^alpha y^beta (x+y)^gamma) in K[x,y], char 0.
    """
    if min(a, b, alpha, beta, gamma) < 0 or alpha + beta + gamma >= a + b:
        raise InvalidParameters(f"two-variable regularity needs alpha+beta+gamma < a+b, "
                                f"got ({a},{b},{alpha},{beta},{gamma})")
    if alpha + beta + gamma == 0:
        raise InvalidParameters("the mixed generator is a unit")
    if a - alpha > b - beta:
        a, b, alpha, beta = b, a, beta, alpha
    if a - alpha <= 0:
        raise InvalidParameters("needs alpha < a and beta < b")
    bound = -(-(a + b + alpha + beta + gamma) // 2) - 1
    if alpha == 0 and gamma <= b - beta - a:
        return a + beta + gamma - 1
    if alpha > 0 and gamma <= b - beta + alpha - a:
        return alpha + b - 1
    if gamma > b - beta + alpha - a:
        return bound
    raise InvalidParameters(f"no regularity case covers ({a},{b},{alpha},{beta},{gamma})")


def _multiples(gen: Generator, d: int) -> List[List[int]]:
    """Coefficient rows of the degree d multiples of a generator in the basis x^(d-e) y^e."""
    i, j, w = gen
    degree = i + j + w
    rows = []
    for v in range(d - degree + 1):
        shift = j + v
        rows.append([binom(w, e - shift) if e >= shift else 0 for e in range(d + 1)])
    return rows


def _quotient_dims(generators: Sequence[Generator], characteristic: int, limit: int) -> Tuple[int, ...]:
    dims = []
    for d in range(limit + 1):
        rows = []
        for gen in generators:
            if sum(gen) <= d:
                rows.extend(_multiples(gen, d))
        dim = d + 1 - rank_exact(rows, characteristic)
        if dim == 0:
            break
        dims.append(dim)
    return tuple(dims)


def restricted_generators(p: AciParams) -> List[Generator]:
    return [(p.a, 0, 0), (0, p.b, 0), (0, 0, p.c), (p.alpha, p.beta, p.gamma)]


def quotient_dimensions(p: AciParams, characteristic: int = 0) -> Tuple[int, ...]:
    """

    :param p: AciParams.
    :param characteristic: int, 0 or a prime.
    :return: tuple of dim [S/J]_d for d = 0, 1, ... up to the last non-zero degree.

    J = (x^a, y^b, (x+y)^c, x^alpha y^beta (x+y)^gamma) is the image of I under z -> -(x+y); the signs do
    not change the spans.
    """
    check_characteristic(characteristic)
    return _quotient_dims(restricted_generators(p), characteristic, p.a + p.b - 1)


def restricted_ideal_regularity(p: AciParams, characteristic: int = 0) -> int:
    """The least d with [S/J]_d = 0."""
    return len(quotient_dimensions(p, characteristic))


def two_variable_regularity(a: int, b: int, alpha: int, beta: int, gamma: int, characteristic: int = 0) -> int:
    check_characteristic(characteristic)
    dims = _quotient_dims([(a, 0, 0), (0, b, 0), (alpha, beta, gamma)], characteristic, a + b - 1)
    return len(dims)


def wlp_by_restriction(p: AciParams, characteristic: int = 0) -> bool:
    """

    :param p: AciParams, any valid sextuple.
    :param characteristic: int, 0 or a prime.
    :return: bool, whether multiplication by x+y+z has maximal rank in every degree.

    The cokernel of x+y+z from degree d-1 to d is [S/J]_d, so maximal rank means its dimension is
    max(0, h_d - h_{d-1}).
    """
    h = h_vector(p).h
    dims = quotient_dimensions(p, characteristic)
    for d in range(max(len(h), len(dims)) + 1):
        h_d = h[d] if d < len(h) else 0
        h_prev = h[d - 1] if 0 < d <= len(h) else 0
        dim = dims[d] if d < len(dims) else 0
        if dim != max(0, h_d - h_prev):
            logger.debug("%s: x+y+z fails maximal rank into degree %d in characteristic %d",
                         p.label(), d, characteristic)
            return False
    return True


def _sorted_by_pure(p: AciParams) -> AciParams:
    order = sorted(range(3), key=lambda axis: p.pure[axis])
    return relabel(p, tuple(order))


def generic_splitting_type(p: AciParams, characteristic: int = 0) -> SplittingType:
    """

    :param p: AciParams.
    :param characteristic: int, 0 or a prime; only the hexagonal case is recomputed from det N modulo it.
    :return: SplittingType of the syzygy bundle of I on a general line, conditional in positive characteristic.
    """
    check_characteristic(characteristic)
    # outside characteristic zero every case below assumes the WLP behaviour it has over Q
    conditional = characteristic != 0
    stats = derive_stats(p)
    total = p.triple_sum
    mixed_sum = sum(p.mixed)
    if stats.M < 0:
        big = max(p.pure)
        rest = sum(p.pure) - big
        if big >= rest:
            return SplittingType.of((rest, big, mixed_sum), conditional=conditional)
        return SplittingType.of((sum(p.pure) // 2, sum(p.pure) - sum(p.pure) // 2, mixed_sum), conditional=conditional)
    q = _sorted_by_pure(p)
    if stats.s_plus_2 - q.c < 0:
        if q.alpha + q.beta + q.gamma >= q.a + q.b:
            # the mixed generator restricts into (x^a, y^b)
            r = q.a + q.b - 1
        else:
            r = reg_two_var(q.a, q.b, q.alpha, q.beta, q.gamma)
        return SplittingType.of((q.a + q.b + q.alpha + q.beta + q.gamma - r - 1, r + 1, q.c), conditional=conditional)
    for axis in range(3):
        side = stats.s_plus_2 - p.pure[axis]
        if side > mixed_sum - p.mixed[axis]:
            sigma = (axis,) + tuple(i for i in range(3) if i != axis)
            t = relabel(p, sigma)
            rest = t.alpha + t.b + t.c
            return SplittingType.of((rest // 2, rest - rest // 2, t.a + t.beta + t.gamma), conditional=conditional)
    if not stats.hexagonal:
        k = total // 3
        return SplittingType.of((k, k, k + 1) if total % 3 == 1 else (k, k + 1, k + 1), conditional=conditional)
    s2 = int(stats.s_plus_2)
    det_n = det_exact(build_N(p))
    wlp = det_n % characteristic != 0 if characteristic else det_n != 0
    values = (s2, s2, s2) if wlp else (s2 - 1, s2, s2 + 1)
    return SplittingType.of(values, conditional=conditional)


def jumping_lines(p: AciParams) -> Dict[str, Optional[SplittingType]]:
    """

    :param p: AciParams.
    :return: dict with the splitting type on z = 0 under "z_line" and on y+z = 0 under "yz_line"; the
    latter is None when neither of its two cases applies.
    """
    a, b, c, alpha, beta, gamma = p.as_tuple()
    if gamma == 0:
        z_line = SplittingType.of((c, alpha + b, a + beta))
    else:
        z_line = SplittingType.of((c, alpha + beta + gamma, a + b))
    yz_line = None
    if beta + gamma < b <= c:
        yz_line = SplittingType.of((c, a + beta + gamma, alpha + b))
    elif b <= min(c, beta + gamma):
        yz_line = SplittingType.of((c, alpha + beta + gamma, a + b))
    else:
        logger.debug("splitting on y+z=0 not covered for %s", p.label())
    return {"z_line": z_line, "yz_line": yz_line}


@dataclass
class EquivalenceReport:
    wlp: bool
    reg_J: int
    det_nonzero_mod_char: bool
    splitting: SplittingType
    characteristic: int
    conditions: Dict[str, Optional[bool]]

    def to_dict(self) -> dict:
        return {"wlp": self.wlp, "reg_J": self.reg_J,
                "det_nonzero_mod_char": self.det_nonzero_mod_char,
                "splitting": self.splitting.to_dict(),
                "characteristic": self.characteristic,
                "conditions": dict(self.conditions)}


def equivalence_report(p: AciParams, characteristic: int = 0, oracle: bool = None) -> EquivalenceReport:
    """

    :param p: AciParams, hexagonal.
    :param characteristic: int, 0 or a prime.
    :param oracle: bool, also compute reg J and the WLP from ranks on S/J; defaults to the config switch.
    :return: EquivalenceReport.

    The WLP, reg J = s+1, det N and det Z non-zero modulo the characteristic, and in characteristic
    zero the balanced splitting type must all agree.
    """
    check_characteristic(characteristic)
    s2, _, _, _, _ = require_hexagonal(p)
    oracle = bool(model_parameters["oracle_checks"]) if oracle is None else oracle
    report = wlp_report(p)
    det_n_ok = report.wlp_in(characteristic)
    det_z_ok = report.det_Z % characteristic != 0 if characteristic else report.det_Z != 0
    wlp = det_n_ok
    reg_j = s2 - 1 if wlp else s2
    splitting = generic_splitting_type(p, characteristic)
    balanced = splitting.as_tuple() == (s2, s2, s2)
    conditions = {"wlp": wlp,
                  "reg_J_is_s_plus_1": reg_j == s2 - 1,
                  "det_N_nonzero": det_n_ok,
                  "det_Z_nonzero": det_z_ok,
                  "balanced_splitting": balanced if characteristic == 0 else None}
    if oracle:
        measured = restricted_ideal_regularity(p, characteristic)
        if measured != reg_j:
            raise InvariantViolation(f"reg J of {p.label()} in characteristic {characteristic} is {measured}, "
                                     f"expected {reg_j}")
        if wlp_by_restriction(p, characteristic) != wlp:
            raise InvariantViolation(f"restriction verdict of {p.label()} disagrees with det N")
        if characteristic == 0 and splitting.r != measured + 1:
            raise InvariantViolation(f"max splitting entry {splitting.r} != reg J + 1 for {p.label()}")
    decided = [v for v in conditions.values() if v is not None]
    if len(set(decided)) != 1:
        raise InvariantViolation(f"equivalent conditions disagree for {p.label()}: {conditions}")
    if splitting.total != p.triple_sum:
        raise InvariantViolation(f"splitting type {splitting.as_tuple()} does not sum to {p.triple_sum}")
    return EquivalenceReport(wlp=wlp, reg_J=reg_j, det_nonzero_mod_char=det_n_ok, splitting=splitting,
                             characteristic=characteristic, conditions=conditions)
