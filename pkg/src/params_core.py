# -*- coding: utf-8 -*-
"""
Parameters of the monomial almost complete intersection

    I = (x^a, y^b, z^c, x^alpha y^beta z^gamma)

together with the rational invariants s+2, A, B, C, M of its peak degrees,
the socle data of R/I, the two centring conditions of the puncture and the
bijection between hexagonal sextuples and punctured hexagons.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Tuple

from sympy import Rational

from errors import InvalidParameters

logger = logging.getLogger(__name__)

# identity first, then the transpositions, then the 3-cycles
RELABELINGS = ((0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1))


@dataclass(frozen=True)
class AciParams:
    a: int
    b: int
    c: int
    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        for name, value in zip(("a", "b", "c", "alpha", "beta", "gamma"), self.as_tuple()):
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidParameters(f"{name} must be an integer, got {value!r}")
        if min(self.pure) < 1:
            raise InvalidParameters(f"pure exponents must be positive: {self.as_tuple()}")
        for name, e, m in zip("abc", self.pure, self.mixed):
            if not 0 <= m < e:
                raise InvalidParameters(f"mixed exponent on {name} must satisfy 0 <= {m} < {e}")
        if sum(1 for m in self.mixed if m == 0) > 1:
            raise InvalidParameters(f"at most one mixed exponent may vanish: {self.as_tuple()}")

    @property
    def pure(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def mixed(self) -> Tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)

    @property
    def triple_sum(self) -> int:
        return self.a + self.b + self.c + self.alpha + self.beta + self.gamma

    def as_tuple(self) -> Tuple[int, ...]:
        return (self.a, self.b, self.c, self.alpha, self.beta, self.gamma)

    def label(self) -> str:
        return ",".join(str(v) for v in self.as_tuple())

    @classmethod
    def parse(cls, text: str) -> "AciParams":
        """

        :param text: str of six comma or space separated integers.
        :return: AciParams.
        """
        parts = text.replace(",", " ").split()
        if len(parts) != 6:
            raise InvalidParameters(f"expected six exponents, got {text!r}")
        try:
            values = [int(v) for v in parts]
        except ValueError:
            raise InvalidParameters(f"exponents must be integers: {text!r}")
        return cls(*values)


@dataclass(frozen=True)
class DerivedStats:
    triple_sum: int
    s_plus_2: Rational
    A: Rational
    B: Rational
    C: Rational
    M: Rational
    semistable: bool
    hexagonal: bool

    def integral(self) -> Tuple[int, int, int, int, int]:
        """

        :return: tuple of the integers (s+2, A, B, C, M).

        Only hexagonal parameters carry integral invariants.
        """
        if not self.hexagonal:
            raise InvalidParameters("parameters are not hexagonal")
        return tuple(int(v) for v in (self.s_plus_2, self.A, self.B, self.C, self.M))

    def to_dict(self) -> dict:
        return {"triple_sum": self.triple_sum,
                "s_plus_2": str(self.s_plus_2),
                "A": str(self.A), "B": str(self.B), "C": str(self.C), "M": str(self.M),
                "semistable": self.semistable,
                "hexagonal": self.hexagonal}


@dataclass(frozen=True)
class SocleInfo:
    cm_type: int
    socle_degrees: Tuple[int, ...]
    level: bool
    resolution_n: int

    def to_dict(self) -> dict:
        return {"type": self.cm_type, "socle_degrees": list(self.socle_degrees),
                "level": self.level, "resolution_n": self.resolution_n}


@dataclass(frozen=True)
class PunctureClass:
    axis_central: bool
    gravity_central: bool
    gravity_t: Optional[int]

    def to_dict(self) -> dict:
        return {"axis_central": self.axis_central, "gravity_central": self.gravity_central,
                "gravity_t": self.gravity_t}


def relabel(p: AciParams, sigma: Tuple[int, int, int]) -> AciParams:
    """

    :param p: AciParams.
    :param sigma: tuple, new axis i takes the (exponent, mixed exponent) pair of old axis sigma[i].
    :return: AciParams of the relabelled ideal.
    """
    pure, mixed = p.pure, p.mixed
    return AciParams(*(pure[i] for i in sigma), *(mixed[i] for i in sigma))


def derive_stats(p: AciParams) -> DerivedStats:
    """

    :param p: AciParams.
    :return: DerivedStats holding s+2, A, B, C, M exactly and the semistable and hexagonal flags.
    """
    total = p.triple_sum
    s2 = Rational(total, 3)
    A, B, C = (s2 - e for e in p.pure)
    M = s2 - sum(p.mixed)
    semistable = bool(0 <= M and 0 <= A <= p.beta + p.gamma and 0 <= B <= p.alpha + p.gamma
                      and 0 <= C <= p.alpha + p.beta)
    return DerivedStats(total, s2, A, B, C, M, semistable, semistable and total % 3 == 0)


def require_hexagonal(p: AciParams) -> Tuple[int, int, int, int, int]:
    """

    :param p: AciParams.
    :return: tuple of the integers (s+2, A, B, C, M); rejects parameters outside the hexagonal family.
    """
    return derive_stats(p).integral()


def socle_info(p: AciParams) -> SocleInfo:
    """

    :param p: AciParams.
    :return: SocleInfo of R/I.

    The socle degree attached to an axis is the sum of the other two pure exponents plus the axis' own
    mixed exponent, minus three; an axis with vanishing mixed exponent contributes no socle generator.
    The rule does not depend on the axis order, so no caller needs to sort first.
    """
    total_pure = sum(p.pure)
    degrees = tuple(sorted(total_pure - e + m - 3 for e, m in zip(p.pure, p.mixed) if m > 0))
    cm_type = len(degrees)
    return SocleInfo(cm_type=cm_type,
                     socle_degrees=degrees,
                     level=len(set(degrees)) == 1,
                     resolution_n=1 if cm_type == 3 else 0)


def hexagon_to_params(A: int, B: int, C: int, M: int, alpha: int, beta: int) -> AciParams:
    """

    :param A, B, C, M: int non-negative side data of the punctured hexagon.
    :param alpha, beta: int puncture offsets.
    :return: AciParams of the ideal whose region is this hexagon.
    """
    if min(A, B, C, M, alpha, beta) < 0:
        raise InvalidParameters("hexagon data must be non-negative")
    gamma = A + B + C - alpha - beta
    if gamma < 0:
        raise InvalidParameters(f"puncture offsets {alpha},{beta} exceed A+B+C")
    p = AciParams(B + C + M, A + C + M, A + B + M, alpha, beta, gamma)
    if not derive_stats(p).hexagonal:
        raise InvalidParameters(f"{p.label()} is not semistable")
    return p


def classify_puncture(p: AciParams) -> PunctureClass:
    """

    :param p: AciParams, hexagonal and of type 3.
    :return: PunctureClass.
    """
    _, _, _, _, M = require_hexagonal(p)
    if 0 in p.mixed:
        raise InvalidParameters("puncture classes need three non-zero mixed exponents")
    gaps = {e - m for e, m in zip(p.pure, p.mixed)}
    gravity = len(gaps) == 1
    axis = False
    for sigma in RELABELINGS:
        q = relabel(p, sigma)
        if (q.a, q.b, q.c) == (2 * q.alpha + M, 2 * q.beta + M, 2 * q.gamma + M) or \
                (q.a, q.b, q.c) == (2 * q.alpha + M - 1, 2 * q.beta + M + 1, 2 * q.gamma + M):
            axis = True
            break
    return PunctureClass(axis_central=axis, gravity_central=gravity,
                         gravity_t=gaps.pop() if gravity else None)


def ci_embed(a: int, b: int, c: int) -> AciParams:
    """

    :param a, b, c: int exponents of the complete intersection (x^a, y^b, z^c).
    :return: AciParams whose region has no puncture and whose peaks agree with the complete intersection.
    """
    if (a + b + c) % 2:
        raise InvalidParameters(f"a+b+c must be even, got {a + b + c}")
    alpha, beta, gamma = (-a + b + c) // 2, (a - b + c) // 2, (a + b - c) // 2
    if min(alpha, beta, gamma) < 0:
        raise InvalidParameters(f"({a},{b},{c}) violates the triangle inequalities")
    return AciParams(a, b, c, alpha, beta, gamma)


def iter_sextuples(triple_sum: int) -> Iterator[AciParams]:
    """

    :param triple_sum: int.
    :return: iterator over every valid sextuple with that sum, in lexicographic order.
    """
    for a, b in product(range(1, triple_sum + 1), repeat=2):
        for c in range(1, triple_sum - a - b + 1):
            rest = triple_sum - a - b - c
            for alpha in range(min(a, rest + 1)):
                for beta in range(min(b, rest - alpha + 1)):
                    gamma = rest - alpha - beta
                    if gamma >= c or (alpha == 0) + (beta == 0) + (gamma == 0) > 1:
                        continue
                    yield AciParams(a, b, c, alpha, beta, gamma)


def iter_hexagonal(s_plus_2: int) -> Iterator[AciParams]:
    """

    :param s_plus_2: int.
    :return: iterator over every hexagonal sextuple with A+B+C+M = s_plus_2, in lexicographic order.
    """
    found = []
    for A, B, C in product(range(s_plus_2 + 1), repeat=3):
        M = s_plus_2 - A - B - C
        if M < 0:
            continue
        for alpha in range(A + B + C + 1):
            for beta in range(A + B + C - alpha + 1):
                try:
                    found.append(hexagon_to_params(A, B, C, M, alpha, beta))
                except InvalidParameters:
                    continue
    yield from sorted(found, key=AciParams.as_tuple)
