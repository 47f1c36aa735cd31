# -*- coding: utf-8 -*-
"""
Hilbert function of R/I, computed twice: by counting the monomials outside
the ideal, and from the alternating binomial sum over the shifts of the
minimal free resolution.
"""
import logging
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Tuple

from errors import InvalidParameters, InvariantViolation
from params_core import AciParams, derive_stats, relabel, require_hexagonal, socle_info
from utils import binom

logger = logging.getLogger(__name__)


class Monomial(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.i + other.i, self.j + other.j, self.k + other.k)

    def divides(self, other: "Monomial") -> bool:
        return self.i <= other.i and self.j <= other.j and self.k <= other.k

    def __str__(self) -> str:
        parts = []
        for var, e in zip("xyz", self):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "".join(parts) or "1"


X, Y, Z = Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1)


@dataclass(frozen=True)
class HilbertData:
    h: Tuple[int, ...]
    s: Optional[int]
    multiplicity: int

    def to_dict(self) -> dict:
        return {"h_vector": list(self.h), "s": self.s, "multiplicity": self.multiplicity}


def in_quotient(p: AciParams, m: Monomial) -> bool:
    if m.i >= p.a or m.j >= p.b or m.k >= p.c:
        return False
    return not (m.i >= p.alpha and m.j >= p.beta and m.k >= p.gamma)


def monomial_basis(p: AciParams, d: int) -> List[Monomial]:
    """

    :param p: AciParams.
    :param d: int degree.
    :return: list of the degree d monomials outside I, lexicographic with x > y > z, largest first.
    """
    if d < 0:
        raise InvalidParameters(f"degree must be non-negative, got {d}")
    basis = []
    for i in range(min(d, p.a - 1), -1, -1):
        for j in range(min(d - i, p.b - 1), -1, -1):
            m = Monomial(i, j, d - i - j)
            if in_quotient(p, m):
                basis.append(m)
    return basis


def _top_degree(p: AciParams) -> int:
    return max(socle_info(p).socle_degrees)


def h_by_counting(p: AciParams) -> Tuple[int, ...]:
    return tuple(len(monomial_basis(p, d)) for d in range(_top_degree(p) + 1))


def resolution_shifts(p: AciParams) -> List[Tuple[int, int]]:
    """

    :param p: AciParams.
    :return: list of (sign, shift) pairs of the minimal free resolution of R/I, free module R first.

    The resolution is written with the smallest mixed exponent in the x position, so a vanishing
    mixed exponent always sits at alpha and drops the two shifts carried with multiplicity n.
    """
    order = sorted(range(3), key=lambda axis: p.mixed[axis])
    q = relabel(p, tuple(order))
    a, b, c, alpha, beta, gamma = q.as_tuple()
    n = socle_info(q).resolution_n
    shifts = [(1, 0),
              (-1, alpha + beta + gamma), (-1, a), (-1, b), (-1, c),
              (1, a + beta + gamma), (1, alpha + b + gamma), (1, alpha + beta + c),
              (1, a + b), (1, a + c)]
    shifts += [(1, b + c)] * n
    shifts += [(-1, a + b + gamma), (-1, a + beta + c)]
    shifts += [(-1, alpha + b + c)] * n
    return shifts


def h_by_resolution(p: AciParams) -> Tuple[int, ...]:
    shifts = resolution_shifts(p)
    return tuple(sum(sign * binom(d - shift + 2, 2) for sign, shift in shifts)
                 for d in range(_top_degree(p) + 1))


def h_vector(p: AciParams) -> HilbertData:
    """

    :param p: AciParams.
    :return: HilbertData of R/I.

    A function computes the h-vector by monomial counting and checks it against the resolution route.
    """
    counted = h_by_counting(p)
    resolved = h_by_resolution(p)
    if counted != resolved:
        raise InvariantViolation(f"h-vector routes disagree for {p.label()}: {counted} != {resolved}")
    h = counted
    while len(h) > 1 and h[-1] == 0:
        h = h[:-1]
    stats = derive_stats(p)
    s = int(stats.s_plus_2) - 2 if stats.hexagonal else None
    return HilbertData(h=h, s=s, multiplicity=sum(h))


def twin_peaks(p: AciParams) -> Tuple[int, bool]:
    """

    :param p: AciParams, hexagonal.
    :return: tuple of h_s and whether h_s = h_{s+1}.
    """
    s2, A, B, C, M = require_hexagonal(p)
    s = s2 - 2
    h = h_vector(p).h
    h_s = h[s] if s < len(h) else 0
    h_next = h[s + 1] if s + 1 < len(h) else 0
    if s2 - (A + B + C + M) != 0:
        raise InvariantViolation(f"s+2 != A+B+C+M for {p.label()}")
    if min(socle_info(p).socle_degrees) < s + 1:
        raise InvariantViolation(f"a socle degree of {p.label()} lies below s+1")
    if h_s != h_next:
        raise InvariantViolation(f"twin peaks fail for {p.label()}: h_s={h_s}, h_s+1={h_next}")
    return h_s, True
