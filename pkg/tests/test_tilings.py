# -*- coding: utf-8 -*-
from itertools import islice

import pytest

from errors import BudgetExceeded, InvalidParameters
from exact_linalg import det_exact, forced_primes, permanent_exact
from formulas import closed_det
from hilbert import Monomial
from matrices import build_N, build_Z
from params_core import AciParams, iter_hexagonal, require_hexagonal
from tilings import (Matching, admissible_lambda, build_region, count_tilings, enumerate_tilings,
                     matching_to_tiling, paths_to_tiling, rotatable_vertices, rotate_triplet, sign_constant,
                     signed_enumeration, tiling_to_matching, tiling_to_paths)


@pytest.mark.parametrize("values, count", [
    ((2, 2, 2, 1, 1, 1), 2),
    ((4, 6, 6, 1, 1, 3), 11),
    ((2, 2, 4, 1, 1, 2), 1),
    ((4, 4, 4, 2, 2, 2), 20),
])
def test_count_tilings(values, count):
    assert count_tilings(AciParams(*values)) == count


def test_region_cells_match_Z(det_eleven):
    region = build_region(det_eleven)
    assert region.biadjacency() == build_Z(det_eleven)
    assert region.size == build_Z(det_eleven).rows
    assert region.side_lengths() == (3, 3, 1, 5, 1, 3)
    assert len(region.start_labels()) == region.C + region.M


def test_region_needs_a_hexagonal_sextuple():
    with pytest.raises(InvalidParameters):
        build_region(AciParams(4, 5, 5, 3, 1, 1))


def test_enumeration_is_deterministic(det_eleven):
    region = build_region(det_eleven)
    first = [t.partner for t in enumerate_tilings(region)]
    second = [t.partner for t in enumerate_tilings(region)]
    assert first == second
    assert len(set(first)) == 11


def test_worker_shares_partition_the_tilings(det_eleven):
    region = build_region(det_eleven)
    everything = {t.partner for t in enumerate_tilings(region)}
    shares = [{t.partner for t in enumerate_tilings(region, None, w, 3)} for w in range(3)]
    assert sum(len(s) for s in shares) == len(everything)
    assert set().union(*shares) == everything
    with pytest.raises(InvalidParameters):
        list(enumerate_tilings(region, None, 3, 3))


def test_node_budget(det_eleven):
    with pytest.raises(BudgetExceeded) as info:
        count_tilings(det_eleven, node_budget=1)
    assert info.value.budget == 1
    assert info.value.exit_code == 2


def test_admissible_lambda():
    assert admissible_lambda(1, 2, 1) == (0, 1, 2)
    assert admissible_lambda(1, 2, 0) == (2, 0, 1)
    assert admissible_lambda(0, 0, 0) == ()


def test_tilings_paths_and_matchings_correspond(det_eleven):
    region = build_region(det_eleven)
    for t in enumerate_tilings(region):
        family = tiling_to_paths(t)
        assert len(family.paths) == region.C + region.M
        assert family.lam == admissible_lambda(region.C, region.M, family.k)
        assert paths_to_tiling(region, family) == t
        assert matching_to_tiling(region, tiling_to_matching(t)) == t


def test_matching_must_use_adjacent_cells(smallest):
    region = build_region(smallest)
    with pytest.raises(InvalidParameters):
        matching_to_tiling(region, Matching((0, 0, 1)))


def test_rotating_the_single_hexagon(smallest):
    region = build_region(smallest)
    first, second = list(enumerate_tilings(region))
    centre = Monomial(1, 1, 1)
    assert rotatable_vertices(first) == [centre]
    assert rotate_triplet(first, centre) == second
    assert rotate_triplet(second, centre) == first
    with pytest.raises(InvalidParameters):
        rotate_triplet(first, Monomial(3, 0, 0))


@pytest.mark.parametrize("values", [
    (4, 6, 6, 1, 1, 3),
    (5, 5, 3, 2, 2, 1),
    (2, 2, 4, 1, 1, 2),
])
def test_signed_enumeration_recovers_both_determinants(values):
    p = AciParams(*values)
    summary = signed_enumeration(p)
    assert summary.signed_total_paths == det_exact(build_N(p))
    assert summary.signed_total_matchings == det_exact(build_Z(p))
    assert summary.unsigned_total == count_tilings(p)
    assert sum(summary.per_lambda_counts.values()) == summary.unsigned_total
    assert summary.sign_constant in (1, -1)
    assert summary.signed_total_matchings == summary.sign_constant * summary.signed_total_paths


def test_always_failing_example_cancels(always_fails):
    summary = signed_enumeration(always_fails)
    assert summary.signed_total_paths == 0
    assert summary.unsigned_total > 0
    assert summary.to_dict()["signed_total_paths"] == "0"


def test_signed_enumeration_in_parallel(det_eleven):
    serial = signed_enumeration(det_eleven)
    parallel = signed_enumeration(det_eleven, workers=2)
    assert parallel.per_lambda_counts == serial.per_lambda_counts
    assert parallel.signed_total_paths == serial.signed_total_paths
    assert sign_constant(det_eleven) == serial.sign_constant


@pytest.mark.slow
def test_signed_enumeration_with_a_negative_determinant():
    p = AciParams(6, 7, 8, 3, 3, 3)
    assert signed_enumeration(p).signed_total_paths == -1764


@pytest.mark.slow
@pytest.mark.parametrize("s_plus_2", range(1, 10))
def test_determinants_agree_on_every_small_hexagon(s_plus_2):
    for p in iter_hexagonal(s_plus_2):
        _, _, _, _, M = require_hexagonal(p)
        det = det_exact(build_N(p))
        assert abs(det) == abs(det_exact(build_Z(p))), p.label()
        if M % 2 == 0:
            assert det > 0, p.label()
        for q in forced_primes(p):
            assert det % q == 0, (p.label(), q)
        result = closed_det(p)
        if result.value is not None:
            assert abs(result.value) == abs(det), p.label()
            if result.sign_certain:
                assert result.value == det, p.label()


@pytest.mark.slow
@pytest.mark.parametrize("s_plus_2", range(1, 8))
def test_enumeration_agrees_with_determinants_on_every_small_hexagon(s_plus_2):
    for p in iter_hexagonal(s_plus_2):
        _, _, _, _, M = require_hexagonal(p)
        Z = build_Z(p)
        summary = signed_enumeration(p)
        assert summary.signed_total_paths == det_exact(build_N(p)), p.label()
        assert summary.signed_total_matchings == det_exact(Z), p.label()
        assert summary.sign_constant in (1, -1), p.label()
        permanent = permanent_exact(Z, 12)
        if permanent is not None:
            assert summary.unsigned_total == permanent, p.label()
        if M % 2 == 0:
            assert summary.unsigned_total == summary.signed_total_paths, p.label()


@pytest.mark.slow
def test_rotations_keep_lambda_and_the_matching_sign():
    region = build_region(AciParams(6, 7, 8, 3, 3, 3))
    rotated = 0
    for t in islice(enumerate_tilings(region), 100):
        family, matching = tiling_to_paths(t), tiling_to_matching(t)
        for vertex in rotatable_vertices(t):
            u = rotate_triplet(t, vertex)
            assert u != t
            assert tiling_to_paths(u).lam == family.lam
            assert tiling_to_matching(u).sign == matching.sign
            rotated += 1
    assert rotated > 0
