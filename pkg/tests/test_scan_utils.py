# -*- coding: utf-8 -*-
import pytest
from mesa import Agent
from mesa.model import Model

from errors import InvalidParameters
from params_core import AciParams, iter_hexagonal, iter_sextuples
from scan_utils.schedule import SextupleSchedule, merge, partition


class _Tally(Agent):
    def __init__(self, unique_id, model, log):
        super().__init__(unique_id, model)
        self.log = log

    def step(self):
        self.log.append(self.unique_id)


def test_schedule_visits_triple_sums_in_order():
    schedule = SextupleSchedule(Model(), 3, 4)
    assert schedule.triple_sums == list(range(9, 13))
    assert schedule.batch(9) == list(iter_sextuples(9))
    assert list(schedule) == [p for s in range(9, 13) for p in iter_sextuples(s)]


def test_schedule_activates_in_insertion_order_and_releases_the_agents():
    model = Model()
    schedule = SextupleSchedule(model, 3, 4)
    log = []
    for unique_id in (3, 1, 2):
        schedule.add(_Tally(unique_id, model, log))
    assert schedule.current_sum == 9
    schedule.step()
    assert log == [3, 1, 2]
    assert schedule.get_agent_count() == 0
    assert schedule.steps == 1
    assert schedule.current_sum == 10


def test_schedule_is_exhausted_after_the_last_sum():
    schedule = SextupleSchedule(Model(), 2, 2, hexagonal_only=True)
    assert schedule.current_sum == 6
    schedule.step()
    assert schedule.current_sum is None


def test_hexagonal_schedule():
    schedule = SextupleSchedule(Model(), 2, 3, hexagonal_only=True)
    assert schedule.triple_sums == [6, 9]
    assert schedule.batch(7) == []
    assert list(schedule) == list(iter_hexagonal(2)) + list(iter_hexagonal(3))


def test_schedule_range_must_not_be_empty():
    with pytest.raises(InvalidParameters):
        SextupleSchedule(Model(), 5, 4)


def test_partition_and_merge():
    items = list(range(7))
    shares = partition(items, 3)
    assert shares == [[0, 3, 6], [1, 4], [2, 5]]
    assert merge(shares) == items
    assert merge(partition(items, 10)) == items
    assert merge([]) == []


def test_merge_restores_sextuple_order():
    batch = list(iter_sextuples(10))
    assert merge(partition(batch, 4)) == batch
    assert AciParams(2, 2, 3, 1, 1, 1) in batch
