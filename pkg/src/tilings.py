# -*- coding: utf-8 -*-
"""
Punctured hexagon of a hexagonal sextuple and its lozenge tilings.

Every unit triangle of the region carries a monomial outside I: a down
triangle m of degree s, an up triangle n of degree s+1, and two triangles
share an edge exactly when m divides n.  A lozenge is therefore a pair
(m, m*v) with v one of x, y, z, a tiling is a perfect matching of the
bi-adjacency graph (whose matrix is Z), and the lozenges of kind x and y are
the steps of the non-intersecting lattice paths counted by N.

Path labels are monomials of degree s+1 placed at lattice point
(u, v) = (j, a-1-i).  A path starts at a label with k = c (side starts) or
k = gamma (puncture starts), and each step removes one z: from label n the
down triangle n/z is matched to n/z*y (a step right) or to n/z*x (a step
down).  The path ends when k reaches 0.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional, Tuple

from sympy.combinatorics import Permutation

from errors import BudgetExceeded, InvalidParameters, InvariantViolation
from hilbert import X, Y, Z, Monomial, monomial_basis
from matrices import IntMatrix, LatticePoint, build_Z
from params_core import AciParams, require_hexagonal
from read_config import model_parameters

logger = logging.getLogger(__name__)

KINDS = (("x", X), ("y", Y), ("z", Z))


class Region:
    """The punctured hexagon of a hexagonal sextuple, cells indexed like the rows and columns of Z."""

    def __init__(self, p: AciParams):
        self.params = p
        self.s_plus_2, self.A, self.B, self.C, self.M = require_hexagonal(p)
        self.down = monomial_basis(p, self.s_plus_2 - 2)
        self.up = monomial_basis(p, self.s_plus_2 - 1)
        self.down_index = {m: r for r, m in enumerate(self.down)}
        self.up_index = {n: c for c, n in enumerate(self.up)}
        self.neighbours: List[List[int]] = []
        self.kinds: Dict[Tuple[int, int], str] = {}
        for r, m in enumerate(self.down):
            cols = []
            for kind, v in KINDS:
                col = self.up_index.get(m.times(v))
                if col is not None:
                    cols.append(col)
                    self.kinds[(r, col)] = kind
            self.neighbours.append(sorted(cols))

    @property
    def size(self) -> int:
        return len(self.down)

    def biadjacency(self) -> IntMatrix:
        return IntMatrix([[1 if c in cols else 0 for c in range(len(self.up))] for cols in self.neighbours],
                         cols=len(self.up))

    def side_lengths(self) -> Tuple[int, ...]:
        return (self.A, self.B + self.M, self.C, self.A + self.M, self.B, self.C + self.M)

    def puncture_corners(self) -> List[Monomial]:
        p = self.params
        return [Monomial(p.alpha + self.M, p.beta, p.gamma),
                Monomial(p.alpha, p.beta + self.M, p.gamma),
                Monomial(p.alpha, p.beta, p.gamma + self.M)]

    def start_labels(self) -> List[Monomial]:
        p = self.params
        side = [Monomial(self.C - i, i - 1, p.c) for i in range(1, self.C + 1)]
        puncture = [Monomial(self.s_plus_2 - p.gamma - p.beta - i, p.beta + i - 1, p.gamma)
                    for i in range(1, self.M + 1)]
        return side + puncture

    def point(self, label: Monomial) -> LatticePoint:
        return LatticePoint(label.j, self.params.a - 1 - label.i)

    def label(self, point: LatticePoint) -> Monomial:
        i = self.params.a - 1 - point.y
        return Monomial(i, point.x, self.s_plus_2 - 1 - i - point.x)


@dataclass(frozen=True)
class Tiling:
    partner: Tuple[int, ...]
    region: Region = field(compare=False, repr=False)

    @property
    def lozenges(self) -> List[Tuple[int, int]]:
        return list(enumerate(self.partner))

    def kind(self, row: int) -> str:
        return self.region.kinds[(row, self.partner[row])]


@dataclass(frozen=True)
class PathFamily:
    paths: Tuple[Tuple[LatticePoint, ...], ...]
    lam: Tuple[int, ...]
    k: int
    sign: int


@dataclass(frozen=True)
class Matching:
    pi: Tuple[int, ...]

    @property
    def sign(self) -> int:
        if len(self.pi) < 2:
            return 1
        return Permutation(list(self.pi)).signature()


@dataclass
class EnumerationSummary:
    per_lambda_counts: Dict[int, int]
    signed_total_paths: int
    signed_total_matchings: int
    unsigned_total: int
    sign_constant: Optional[int]

    def to_dict(self) -> dict:
        return {"per_lambda_counts": {str(k): str(v) for k, v in sorted(self.per_lambda_counts.items())},
                "signed_total_paths": str(self.signed_total_paths),
                "signed_total_matchings": str(self.signed_total_matchings),
                "unsigned_total": str(self.unsigned_total),
                "sign_constant": self.sign_constant}


def build_region(p: AciParams) -> Region:
    """

    :param p: AciParams, hexagonal.
    :return: Region whose bi-adjacency matrix is Z.
    """
    region = Region(p)
    if region.biadjacency() != build_Z(p):
        raise InvariantViolation(f"cell adjacency of {p.label()} differs from Z")
    return region


def enumerate_tilings(region: Region, node_budget: int = None, worker: int = 0,
                      workers: int = 1) -> Iterator[Tiling]:
    """

    :param region: Region.
    :param node_budget: int, maximal number of matching extensions.
    :param worker: int, index of this share of the search.
    :param workers: int, number of shares; a share keeps the first-level branches congruent to `worker`.
    :return: iterator over the tilings in a deterministic order.

    Backtracking over perfect matchings that always extends the unmatched down cell with the fewest
    free neighbours (lowest index on ties).
    """
    budget = model_parameters["node_budget"] if node_budget is None else node_budget
    if not 0 <= worker < workers:
        raise InvalidParameters(f"worker {worker} outside 0..{workers - 1}")
    n = region.size
    if n == 0:
        if worker == 0:
            yield Tiling(partner=(), region=region)
        return
    partner = [-1] * n
    used = [False] * n

    def most_constrained():
        best = None
        for r in range(n):
            if partner[r] >= 0:
                continue
            free = [c for c in region.neighbours[r] if not used[c]]
            if best is None or len(free) < len(best[1]):
                best = (r, free)
                if not free:
                    break
        return best

    nodes = 0
    row, free = most_constrained()
    stack = [[row, free, 0]]
    while stack:
        frame = stack[-1]
        row, free, idx = frame
        if partner[row] >= 0:
            used[partner[row]] = False
            partner[row] = -1
        if len(stack) == 1:
            while idx < len(free) and idx % workers != worker:
                idx += 1
        if idx >= len(free):
            stack.pop()
            continue
        frame[2] = idx + 1
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(nodes, budget)
        partner[row] = free[idx]
        used[free[idx]] = True
        following = most_constrained()
        if following is None:
            yield Tiling(partner=tuple(partner), region=region)
        elif following[1]:
            stack.append([following[0], following[1], 0])


def count_tilings(p: AciParams, node_budget: int = None) -> int:
    return sum(1 for _ in enumerate_tilings(build_region(p), node_budget))


def admissible_lambda(C: int, M: int, k: int) -> Tuple[int, ...]:
    """

    :return: tuple of the admissible permutation lambda_k, 0-based, side starts first.
    """
    return tuple(list(range(k)) + [M + i for i in range(k, C)] + [k + i for i in range(M)])


def tiling_to_paths(t: Tiling) -> PathFamily:
    """

    :param t: Tiling.
    :return: PathFamily of the C+M non-intersecting lattice paths traced by the x and y lozenges.
    """
    region = t.region
    paths, lam = [], []
    for start in region.start_labels():
        label = start
        points = [region.point(label)]
        while label.k > 0:
            m = Monomial(label.i, label.j, label.k - 1)
            row = region.down_index.get(m)
            if row is None:
                raise InvariantViolation(f"path from {start} leaves the region at {m}")
            n = region.up[t.partner[row]]
            if n != m.times(Y) and n != m.times(X):
                raise InvariantViolation(f"path from {start} is blocked at {m}")
            label = n
            points.append(region.point(label))
        end = label.j - region.A
        if not 0 <= end < region.C + region.M:
            raise InvariantViolation(f"path from {start} ends outside the end points")
        paths.append(tuple(points))
        lam.append(end)
    C, M = region.C, region.M
    k = sum(1 for i in range(C) if lam[i] == i)
    if tuple(lam) != admissible_lambda(C, M, k):
        raise InvariantViolation(f"inadmissible path permutation {lam}")
    sign = -1 if (M * (C - k)) % 2 else 1
    if len(lam) > 1 and Permutation(lam).signature() != sign:
        raise InvariantViolation(f"sign of lambda_{k} disagrees with (-1)^(M(C-k))")
    return PathFamily(paths=tuple(paths), lam=tuple(lam), k=k, sign=sign)


def paths_to_tiling(region: Region, family: PathFamily) -> Tiling:
    """

    :param region: Region.
    :param family: PathFamily.
    :return: Tiling; cells not crossed by a path are covered by z lozenges.
    """
    partner = [-1] * region.size
    for points in family.paths:
        labels = [region.label(pt) for pt in points]
        for before, after in zip(labels, labels[1:]):
            row = region.down_index.get(Monomial(before.i, before.j, before.k - 1))
            col = region.up_index.get(after)
            if row is None or col is None:
                raise InvalidParameters(f"path step {before} -> {after} leaves the region")
            partner[row] = col
    taken = set(c for c in partner if c >= 0)
    for row, m in enumerate(region.down):
        if partner[row] < 0:
            col = region.up_index.get(m.times(Z))
            if col is None or col in taken:
                raise InvalidParameters(f"cell {m} cannot be covered by a z lozenge")
            partner[row] = col
            taken.add(col)
    if len(taken) != region.size:
        raise InvalidParameters("paths do not determine a tiling")
    return Tiling(partner=tuple(partner), region=region)


def tiling_to_matching(t: Tiling) -> Matching:
    return Matching(pi=t.partner)


def matching_to_tiling(region: Region, matching: Matching) -> Tiling:
    if sorted(matching.pi) != list(range(region.size)):
        raise InvalidParameters("matching is not a permutation of the up cells")
    for row, col in enumerate(matching.pi):
        if col not in region.neighbours[row]:
            raise InvalidParameters(f"cells {row} and {col} do not share an edge")
    return Tiling(partner=tuple(matching.pi), region=region)


def _triplet(region: Region, vertex: Monomial):
    if min(vertex) < 1 or vertex.degree != region.s_plus_2:
        return None
    p = Monomial(vertex.i - 1, vertex.j - 1, vertex.k - 1)
    downs = [region.down_index.get(p.times(v)) for v in (X, Y, Z)]
    ups = [region.up_index.get(p.times(v).times(w)) for v, w in ((X, Y), (X, Z), (Y, Z))]
    if None in downs or None in ups:
        return None
    px, py, pz = downs
    pxy, pxz, pyz = ups
    first = {px: pxy, py: pyz, pz: pxz}
    second = {px: pxz, py: pxy, pz: pyz}
    return first, second


def rotatable_vertices(t: Tiling) -> List[Monomial]:
    """

    :param t: Tiling.
    :return: list of the interior vertices surrounded by three lozenges that can be rotated.
    """
    region = t.region
    found = []
    for up in region.up:
        for v in (X, Y, Z):
            vertex = up.times(v)
            if vertex in found:
                continue
            pair = _triplet(region, vertex)
            if pair and any(all(t.partner[r] == c for r, c in side.items()) for side in pair):
                found.append(vertex)
    return sorted(found, reverse=True)


def rotate_triplet(t: Tiling, vertex: Monomial) -> Tiling:
    """

    :param t: Tiling.
    :param vertex: Monomial of degree s+2, the centre of the hexagon formed by three lozenges.
    :return: Tiling with those three lozenges exchanged for the other covering of the hexagon.
    """
    pair = _triplet(t.region, vertex)
    if pair is None:
        raise InvalidParameters(f"vertex {vertex} is not interior to the region")
    first, second = pair
    partner = list(t.partner)
    if all(partner[r] == c for r, c in first.items()):
        target = second
    elif all(partner[r] == c for r, c in second.items()):
        target = first
    else:
        raise InvalidParameters(f"the lozenges around {vertex} do not form a rotatable triplet")
    for r, c in target.items():
        partner[r] = c
    return Tiling(partner=tuple(partner), region=t.region)


def _enumerate_share(args) -> dict:
    p, node_budget, worker, workers = args
    region = build_region(p)
    counts = Counter()
    signed_paths = signed_matchings = unsigned = 0
    constants = set()
    for t in enumerate_tilings(region, node_budget, worker, workers):
        family = tiling_to_paths(t)
        matching_sign = tiling_to_matching(t).sign
        counts[family.k] += 1
        signed_paths += family.sign
        signed_matchings += matching_sign
        unsigned += 1
        constants.add(matching_sign * family.sign)
    return {"counts": dict(counts), "signed_paths": signed_paths, "signed_matchings": signed_matchings,
            "unsigned": unsigned, "constants": constants}


def signed_enumeration(p: AciParams, node_budget: int = None, workers: int = 1) -> EnumerationSummary:
    """

    :param p: AciParams, hexagonal.
    :param node_budget: int per share of the search.
    :param workers: int number of processes.
    :return: EnumerationSummary with tiling counts per admissible permutation and both signed totals.
    """
    require_hexagonal(p)
    shares = [(p, node_budget, w, workers) for w in range(workers)]
    if workers > 1:
        with Pool(workers) as pool:
            parts = pool.map(_enumerate_share, shares)
    else:
        parts = [_enumerate_share(shares[0])]
    counts = Counter()
    constants = set()
    for part in parts:
        counts.update(part["counts"])
        constants |= part["constants"]
    if len(constants) > 1:
        raise InvariantViolation(f"matching and path signs of {p.label()} are not related by a constant")
    summary = EnumerationSummary(per_lambda_counts=dict(sorted(counts.items())),
                                 signed_total_paths=sum(part["signed_paths"] for part in parts),
                                 signed_total_matchings=sum(part["signed_matchings"] for part in parts),
                                 unsigned_total=sum(part["unsigned"] for part in parts),
                                 sign_constant=constants.pop() if constants else None)
    logger.debug("enumerated %d tilings of %s", summary.unsigned_total, p.label())
    return summary


def sign_constant(p: AciParams, node_budget: int = None) -> int:
    return signed_enumeration(p, node_budget).sign_constant
