# -*- coding: utf-8 -*-
import logging
from typing import Iterable, List, NamedTuple, Sequence, Tuple

import numpy as np

from errors import InvalidParameters
from hilbert import monomial_basis
from params_core import AciParams, require_hexagonal
from utils import binom, decimal

logger = logging.getLogger(__name__)


class IntMatrix:
    """Dense matrix of exact Python integers held in a numpy object array."""

    def __init__(self, entries: Iterable[Sequence[int]], cols: int = None):
        rows = [[int(v) for v in row] for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise InvalidParameters("matrix rows have different lengths")
        self.entries = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            self.entries[i, :] = row

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        m = cls.__new__(cls)
        m.entries = np.array(array, dtype=object)
        return m

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        return self.entries[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"

    def tolist(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def to_json(self) -> List[List[str]]:
        return [[decimal(v) for v in row] for row in self.entries]


class LatticePoint(NamedTuple):
    x: int
    y: int


def build_Z(p: AciParams) -> IntMatrix:
    """

    :param p: AciParams, hexagonal.
    :return: IntMatrix of size h_s; entry 1 when the column monomial of degree s+1 is a multiple of the row monomial of degree s.
    """
    s2, _, _, _, _ = require_hexagonal(p)
    rows = monomial_basis(p, s2 - 2)
    cols = monomial_basis(p, s2 - 1)
    return IntMatrix([[1 if m.divides(n) else 0 for n in cols] for m in rows], cols=len(cols))


def build_N(p: AciParams) -> IntMatrix:
    """

    :param p: AciParams, hexagonal.
    :return: IntMatrix of size C+M with binomial entries; hexagon side rows first, then puncture rows.
    """
    _, A, _, C, M = require_hexagonal(p)
    size = C + M
    entries = []
    for i in range(1, size + 1):
        if i <= C:
            entries.append([binom(p.c, A + j - i) for j in range(1, size + 1)])
        else:
            entries.append([binom(p.gamma, A + C - p.beta + j - i) for j in range(1, size + 1)])
    return IntMatrix(entries, cols=size)


def nilp_endpoints(p: AciParams) -> Tuple[List[LatticePoint], List[LatticePoint]]:
    """

    :param p: AciParams, hexagonal.
    :return: tuple of the start points A_i and end points E_j of the non-intersecting lattice paths.
    """
    _, A, B, C, M = require_hexagonal(p)
    starts = [LatticePoint(i - 1, B + M + i - 1) for i in range(1, C + 1)]
    starts += [LatticePoint(p.beta + i - C - 1, B - p.alpha + i - 1) for i in range(C + 1, C + M + 1)]
    ends = [LatticePoint(A + j - 1, j - 1) for j in range(1, C + M + 1)]
    return starts, ends


def count_paths(start: LatticePoint, end: LatticePoint) -> int:
    """Right and down unit steps only."""
    (u, v), (x, y) = start, end
    if u <= x and v >= y:
        return binom(x - u + v - y, x - u)
    return 0


def path_count_matrix(p: AciParams) -> IntMatrix:
    starts, ends = nilp_endpoints(p)
    return IntMatrix([[count_paths(s, e) for e in ends] for s in starts], cols=len(ends))
