# -*- coding: utf-8 -*-
"""
Exact linear algebra over the integers and prime fields: fraction-free
determinants and ranks, Ryser permanents, integer factorization and the
consolidated WLP verdict of a punctured hexagon.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint, isprime, primerange
from sympy.ntheory import pollard_rho

from errors import InvalidParameters, InvariantViolation
from matrices import IntMatrix, build_N, build_Z
from params_core import AciParams, require_hexagonal
from read_config import model_parameters
from utils import decimal

logger = logging.getLogger(__name__)


def det_exact(m: IntMatrix) -> int:
    """

    :param m: IntMatrix, square.
    :return: int of the exact determinant.

    Bareiss elimination: every division is exact, so the working matrix only ever holds integers.
    """
    if not m.is_square:
        raise InvalidParameters(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return 1
    work = np.array(m.entries, dtype=object)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k, k] == 0:
            nonzero = [i for i in range(k + 1, n) if work[i, k] != 0]
            if not nonzero:
                return 0
            i = nonzero[0]
            work[[k, i], :] = work[[i, k], :]
            sign = -sign
        pivot = work[k, k]
        lower = work[k + 1:, k + 1:] * pivot - np.outer(work[k + 1:, k], work[k, k + 1:])
        work[k + 1:, k + 1:] = lower // prev
        work[k + 1:, k] = 0
        prev = pivot
    return sign * int(work[n - 1, n - 1])


def permanent_exact(m: IntMatrix, size_cap: int = None) -> Optional[int]:
    """

    :param m: IntMatrix, square.
    :param size_cap: int, matrices with more rows are skipped.
    :return: int of the exact permanent or None when skipped.

    Ryser's inclusion-exclusion over column subsets, visiting the subsets in Gray code order so that
    each step adds or removes a single column from the running row sums.
    """
    if not m.is_square:
        raise InvalidParameters(f"permanent of a {m.rows}x{m.cols} matrix")
    size_cap = model_parameters["permanent_cap"] if size_cap is None else size_cap
    n = m.rows
    if n > size_cap:
        logger.info("permanent skipped: size %d above cap %d", n, size_cap)
        return None
    if n == 0:
        return 1
    rowsums = np.zeros(n, dtype=object)
    in_subset = [False] * n
    total = 0
    for step in range(1, 1 << n):
        column = (step & -step).bit_length() - 1
        if in_subset[column]:
            rowsums -= m.entries[:, column]
        else:
            rowsums += m.entries[:, column]
        in_subset[column] = not in_subset[column]
        # the Gray code subset of `step` has popcount parity equal to that of step ^ (step >> 1)
        size = bin(step ^ (step >> 1)).count("1")
        term = int(np.prod(rowsums))
        total += term if size % 2 == n % 2 else -term
    return total


def rank_exact(rows: Sequence[Sequence[int]], characteristic: int = 0) -> int:
    """

    :param rows: sequence of integer rows.
    :param characteristic: int, 0 for the rationals or a prime.
    :return: int of the rank over that field.
    """
    work = [list(map(int, row)) for row in rows if any(row)]
    if not work:
        return 0
    if characteristic:
        if not isprime(characteristic):
            raise InvalidParameters(f"characteristic must be 0 or a prime, got {characteristic}")
        work = [[v % characteristic for v in row] for row in work]
    ncols = len(work[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        if characteristic:
            inverse = pow(pivot, -1, characteristic)
            work[rank] = [v * inverse % characteristic for v in work[rank]]
            for r in range(rank + 1, len(work)):
                factor = work[r][col]
                if factor:
                    work[r] = [(v - factor * w) % characteristic for v, w in zip(work[r], work[rank])]
        else:
            for r in range(rank + 1, len(work)):
                factor = work[r][col]
                work[r] = [(pivot * v - factor * w) // prev for v, w in zip(work[r], work[rank])]
            prev = pivot
        rank += 1
        if rank == len(work):
            break
    return rank


@dataclass
class FactoredInt:
    sign: int
    factors: Dict[int, int] = field(default_factory=dict)
    unfactored_cofactor: Optional[int] = None

    def value(self) -> int:
        v = self.sign
        for prime, exponent in self.factors.items():
            v *= prime ** exponent
        if self.unfactored_cofactor is not None:
            v *= self.unfactored_cofactor
        return v

    @property
    def primes(self) -> List[int]:
        return sorted(self.factors)

    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        parts = [f"{q}^{e}" if e > 1 else str(q) for q, e in sorted(self.factors.items())]
        if self.unfactored_cofactor is not None:
            parts.append(f"[{self.unfactored_cofactor}]")
        text = " * ".join(parts) or "1"
        return f"-{text}" if self.sign < 0 else text

    def to_dict(self) -> dict:
        return {"sign": self.sign,
                "factors": [[decimal(q), e] for q, e in sorted(self.factors.items())],
                "unfactored_cofactor": None if self.unfactored_cofactor is None
                else decimal(self.unfactored_cofactor),
                "text": str(self)}


def factor_integer(v: int, trial_limit: int = None, rho_iterations: int = None,
                   seeds: Sequence[int] = None) -> FactoredInt:
    """

    :param v: int.
    :param trial_limit: int, primes up to it are removed by trial division.
    :param rho_iterations: int step budget per rho attempt.
    :param seeds: sequence of int, constants a of the rho map x -> x^2 + a, tried in order.
    :return: FactoredInt; a composite remainder beyond the budget is kept as cofactor.
    """
    trial_limit = trial_limit or model_parameters["trial_division_limit"]
    rho_iterations = rho_iterations or model_parameters["rho_iterations"]
    seeds = seeds or model_parameters["rho_seeds"]
    if v == 0:
        return FactoredInt(sign=0)
    result = FactoredInt(sign=1 if v > 0 else -1)
    # past the limit factorint hands back the remainder as one, possibly composite, key
    pending = list(factorint(abs(v), limit=trial_limit, use_rho=False, use_pm1=False).items())
    cofactor = 1
    while pending:
        n, exponent = pending.pop()
        if isprime(n):
            result.factors[n] = result.factors.get(n, 0) + exponent
            continue
        d = None
        for seed in seeds:
            d = pollard_rho(n, a=seed, retries=0, max_steps=rho_iterations)
            if d:
                break
        if d is None:
            logger.warning("could not split composite %d within the factoring budget", n)
            cofactor *= n ** exponent
        else:
            pending.extend([(d, exponent), (n // d, exponent)])
    if cofactor > 1:
        result.unfactored_cofactor = cofactor
    result.factors = dict(sorted(result.factors.items()))
    return result


def forced_primes(p: AciParams) -> List[int]:
    """

    :param p: AciParams, hexagonal.
    :return: list of the primes q with some power q^m in [max(a,b,c), s+1].
    """
    s2, _, _, _, _ = require_hexagonal(p)
    low, high = max(p.pure), s2 - 1
    found = []
    for q in primerange(2, high + 1):
        power = q
        while power < low:
            power *= q
        if power <= high:
            found.append(q)
    return found


@dataclass
class WlpReport:
    det_N: int
    det_Z: int
    wlp_char0: bool
    bad_primes: Tuple[int, ...]
    forced_primes: Tuple[int, ...]
    always_fails: bool
    factorization: FactoredInt

    def wlp_in(self, characteristic: int) -> bool:
        """

        :param characteristic: int, 0 or a prime.
        :return: bool, whether R/I has the WLP over a field of that characteristic.
        """
        if characteristic == 0:
            return self.wlp_char0
        return self.det_N % characteristic != 0

    def to_dict(self) -> dict:
        return {"det_N": decimal(self.det_N), "det_Z": decimal(self.det_Z),
                "wlp_char0": self.wlp_char0,
                "bad_primes": [decimal(q) for q in self.bad_primes],
                "forced_primes": list(self.forced_primes),
                "always_fails": self.always_fails,
                "factorization": self.factorization.to_dict()}


def wlp_report(p: AciParams) -> WlpReport:
    """

    :param p: AciParams, hexagonal.
    :return: WlpReport.

    R/I has the WLP in characteristic q exactly when q does not divide det N; det Z decides the same
    question and must agree with det N up to sign.
    """
    _, _, _, _, M = require_hexagonal(p)
    det_n = det_exact(build_N(p))
    det_z = det_exact(build_Z(p))
    if abs(det_n) != abs(det_z):
        raise InvariantViolation(f"|det N| = {abs(det_n)} but |det Z| = {abs(det_z)} for {p.label()}")
    if M % 2 == 0 and det_n == 0:
        raise InvariantViolation(f"even puncture but det N = 0 for {p.label()}")
    factored = factor_integer(det_n)
    forced = forced_primes(p)
    if det_n != 0:
        missing = [q for q in forced if det_n % q]
        if missing:
            raise InvariantViolation(f"forced primes {missing} do not divide det N of {p.label()}")
    if factored.unfactored_cofactor is not None:
        logger.warning("bad primes of %s are incomplete: cofactor %d", p.label(), factored.unfactored_cofactor)
    return WlpReport(det_N=det_n, det_Z=det_z, wlp_char0=det_n != 0,
                     bad_primes=tuple(factored.primes) if det_n else (),
                     forced_primes=tuple(forced),
                     always_fails=det_n == 0,
                     factorization=factored)
