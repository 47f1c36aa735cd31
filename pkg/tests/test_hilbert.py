# -*- coding: utf-8 -*-
import pytest

from errors import InvalidParameters
from hilbert import (X, Y, Z, Monomial, h_by_counting, h_by_resolution, h_vector, in_quotient, monomial_basis,
                     resolution_shifts, twin_peaks)
from params_core import AciParams, iter_sextuples


@pytest.mark.parametrize("values, h, multiplicity", [
    ((2, 2, 2, 1, 1, 1), (1, 3, 3), 7),
    ((3, 3, 3, 1, 1, 1), (1, 3, 6, 6, 3), 19),
    ((2, 2, 4, 1, 1, 2), (1, 3, 4, 4, 2), 14),
])
def test_h_vector(values, h, multiplicity):
    data = h_vector(AciParams(*values))
    assert data.h == h
    assert data.multiplicity == multiplicity


def test_multiplicity_of_the_always_failing_example(always_fails):
    assert h_vector(always_fails).multiplicity == 57


def test_s_is_only_set_for_hexagonal_sextuples(det_eleven):
    assert h_vector(det_eleven).s == 5
    assert h_vector(AciParams(4, 5, 5, 3, 1, 1)).s is None


def test_counting_and_resolution_agree_on_every_small_sextuple():
    for triple_sum in range(6, 13):
        for p in iter_sextuples(triple_sum):
            assert h_by_counting(p) == h_by_resolution(p), p.label()


def test_resolution_shifts_of_type_two_drop_the_socle_terms():
    three = resolution_shifts(AciParams(3, 3, 3, 1, 1, 1))
    two = resolution_shifts(AciParams(3, 3, 1, 1, 1, 0))
    assert len(three) == 14
    assert len(two) == 12
    assert three[0] == (1, 0)
    assert sum(sign for sign, _ in three) == 0
    assert sum(sign for sign, _ in two) == 0


def test_monomial_basis_order(smallest):
    assert monomial_basis(smallest, 1) == [X, Y, Z]
    assert monomial_basis(smallest, 2) == [Monomial(1, 1, 0), Monomial(1, 0, 1), Monomial(0, 1, 1)]
    assert monomial_basis(smallest, 3) == []
    with pytest.raises(InvalidParameters):
        monomial_basis(smallest, -1)


def test_in_quotient(smallest):
    assert in_quotient(smallest, Monomial(1, 1, 0))
    assert not in_quotient(smallest, Monomial(1, 1, 1))
    assert not in_quotient(smallest, Monomial(2, 0, 0))


def test_monomial_helpers():
    m = Monomial(1, 2, 0)
    assert m.degree == 3
    assert m.times(Z) == Monomial(1, 2, 1)
    assert m.divides(Monomial(2, 2, 1))
    assert not m.divides(Monomial(0, 5, 5))
    assert str(m) == "xy^2"
    assert str(Monomial(0, 0, 0)) == "1"


@pytest.mark.parametrize("values", [
    (2, 2, 2, 1, 1, 1),
    (4, 6, 6, 1, 1, 3),
    (5, 5, 3, 2, 2, 1),
    (7, 7, 7, 3, 3, 3),
    (6, 7, 8, 3, 3, 3),
])
def test_twin_peaks(values):
    p = AciParams(*values)
    h_s, equal = twin_peaks(p)
    h = h_vector(p).h
    s = h_vector(p).s
    assert equal
    assert h_s == h[s] == h[s + 1]


def test_twin_peaks_needs_a_hexagonal_sextuple():
    with pytest.raises(InvalidParameters):
        twin_peaks(AciParams(4, 5, 5, 3, 1, 1))
