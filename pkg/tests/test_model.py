# -*- coding: utf-8 -*-
import pytest

from errors import InvalidParameters
from model import ScanFilter, ScanModel
from params_core import AciParams, RELABELINGS, relabel
from sextuple import MATCH_COLUMNS, SextupleAgent, scan_record


def test_scan_filter_defaults_come_from_the_config():
    scan_filter = ScanFilter()
    assert (scan_filter.min_s_plus_2, scan_filter.max_s_plus_2) == (1, 9)
    assert not scan_filter.needs_det
    assert not scan_filter.hexagonal_only


@pytest.mark.parametrize("kwargs", [
    {"min_s_plus_2": 5, "max_s_plus_2": 4},
    {"min_s_plus_2": 0},
    {"cm_type": 4},
    {"prime_divisor": 4},
    {"det_equals": -1},
    {"minimize": "det"},
])
def test_scan_filter_rejects_bad_options(kwargs):
    with pytest.raises(InvalidParameters):
        ScanFilter(**kwargs)


def test_determinant_filters_restrict_to_hexagonal_sextuples():
    assert ScanFilter(det_zero=True).hexagonal_only
    assert ScanFilter(prime_divisor=11).needs_det
    assert ScanFilter(gravity_central=True).hexagonal_only


def test_scan_record(det_eleven):
    record = scan_record(det_eleven, with_det=True)
    assert record.det_N == 11
    assert record.multiplicity == sum(record.h)
    assert record.cm_type == 3 and not record.level
    assert record.s_plus_2 == "7"
    as_dict = record.to_dict()
    assert as_dict["params"] == [4, 6, 6, 1, 1, 3]
    assert as_dict["det_N"] == "11"
    assert scan_record(det_eleven, with_det=False).det_N is None


def test_filter_matching(det_eleven):
    record = scan_record(det_eleven, with_det=True)
    assert ScanFilter(prime_divisor=11).matches(record)
    assert not ScanFilter(prime_divisor=2).matches(record)
    assert ScanFilter(det_equals=11).matches(record)
    assert not ScanFilter(det_one=True).matches(record)
    assert not ScanFilter(level=True).matches(record)
    assert not ScanFilter(max_multiplicity=10).matches(record)


def test_filter_compares_absolute_determinants():
    record = scan_record(AciParams(6, 7, 8, 3, 3, 3), with_det=True)
    assert record.det_N == -1764
    assert ScanFilter(det_equals=1764).matches(record)
    assert ScanFilter(prime_divisor=7).matches(record)


def test_least_level_type_three_with_vanishing_determinant():
    scan_filter = ScanFilter(max_s_plus_2=4, cm_type=3, level=True, det_zero=True, minimize="multiplicity")
    found = ScanModel(scan_filter, quiet=True).run_model()
    assert [r.params for r in found] == [AciParams(3, 3, 3, 1, 1, 1)]
    assert found[0].multiplicity == 19


def test_least_nonlevel_type_three_with_unit_determinant():
    scan_filter = ScanFilter(max_s_plus_2=4, cm_type=3, level=False, det_one=True, minimize="multiplicity")
    found = ScanModel(scan_filter, quiet=True).run_model()
    params = [r.params for r in found]
    assert AciParams(2, 2, 4, 1, 1, 2) in params
    assert {r.multiplicity for r in found} == {14}
    for p in params:
        assert any(relabel(p, sigma) == AciParams(2, 2, 4, 1, 1, 2) for sigma in RELABELINGS)


def test_determinant_equal_to_three():
    found = ScanModel(ScanFilter(max_s_plus_2=5, det_equals=3), quiet=True).run_model()
    assert AciParams(3, 3, 5, 0, 1, 3) in [r.params for r in found]
    assert all(abs(r.det_N) == 3 for r in found)


def test_scan_collects_rows_in_canonical_order(tmp_path):
    model = ScanModel(ScanFilter(max_s_plus_2=3), quiet=True)
    records = model.run_model()
    assert model.visited == len(records)
    sums = [r.params.triple_sum for r in records]
    assert sums == sorted(sums)
    matches = model.datacollector.get_table_dataframe("matches")
    assert list(matches.columns) == MATCH_COLUMNS
    assert len(matches) == len(records)
    assert matches["a"].tolist() == [r.params.a for r in records]
    path = model.to_csv(str(tmp_path / "scans" / "scan.csv"))
    with open(path) as fp:
        assert fp.readline().strip() == ",".join(MATCH_COLUMNS)


def test_scan_collects_one_summary_per_triple_sum():
    model = ScanModel(ScanFilter(max_s_plus_2=3, cm_type=3), quiet=True)
    records = model.run_model()
    steps = model.datacollector.get_model_vars_dataframe()
    assert steps["triple_sum"].tolist() == list(range(3, 10))
    assert steps["visited"].iloc[-1] == model.visited
    assert steps["matched"].iloc[-1] == len(records)
    assert model.schedule.get_agent_count() == 0
    assert not model.running


def test_sextuple_agent_reports_only_matches(det_eleven):
    model = ScanModel(ScanFilter(max_s_plus_2=7, prime_divisor=11), quiet=True)
    agent = SextupleAgent(model.next_id(), model, det_eleven)
    agent.step()
    assert agent.record.det_N == 11
    assert model.records == [agent.record]
    other = SextupleAgent(model.next_id(), model, AciParams(2, 2, 2, 1, 1, 1))
    other.step()
    assert other.record is not None
    assert len(model.records) == 1


def test_parallel_scan_matches_the_serial_scan():
    scan_filter = ScanFilter(max_s_plus_2=3, cm_type=3)
    serial = ScanModel(scan_filter, workers=1, quiet=True).run_model()
    parallel = ScanModel(scan_filter, workers=2, quiet=True).run_model()
    assert [r.params for r in parallel] == [r.params for r in serial]


def test_scan_model_needs_a_worker():
    with pytest.raises(InvalidParameters):
        ScanModel(ScanFilter(max_s_plus_2=2), workers=-1)
