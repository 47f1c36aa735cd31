# -*- coding: utf-8 -*-

import logging
import os
import sys
from dataclasses import dataclass
from multiprocessing import Pool
from typing import List, Optional

from mesa.datacollection import DataCollector
from mesa.model import Model
from sympy import isprime
from tqdm import tqdm

from errors import InvalidParameters
from read_config import *
from scan_utils.schedule import SextupleSchedule, merge, partition
from sextuple import MATCH_COLUMNS, ScanRecord, SextupleAgent, scan_record
from utils import create_directory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScanFilter:
    min_s_plus_2: int = None
    max_s_plus_2: int = None
    cm_type: Optional[int] = None
    level: Optional[bool] = None
    det_zero: bool = False
    det_one: bool = False
    det_equals: Optional[int] = None
    prime_divisor: Optional[int] = None
    axis_central: bool = False
    gravity_central: bool = False
    max_multiplicity: Optional[int] = None
    minimize: Optional[str] = None

    def __post_init__(self):
        if self.min_s_plus_2 is None:
            object.__setattr__(self, "min_s_plus_2", model_parameters["scan_min_s_plus_2"])
        if self.max_s_plus_2 is None:
            object.__setattr__(self, "max_s_plus_2", model_parameters["scan_max_s_plus_2"])
        if self.min_s_plus_2 < 1 or self.max_s_plus_2 < self.min_s_plus_2:
            raise InvalidParameters(f"scan bounds {self.min_s_plus_2}..{self.max_s_plus_2} are empty")
        if self.cm_type not in (None, 2, 3):
            raise InvalidParameters(f"type must be 2 or 3, got {self.cm_type}")
        if self.minimize not in (None, "multiplicity"):
            raise InvalidParameters(f"cannot minimize {self.minimize}")
        if self.prime_divisor is not None and not isprime(self.prime_divisor):
            raise InvalidParameters(f"{self.prime_divisor} is not a prime")
        if self.det_equals is not None and self.det_equals < 0:
            raise InvalidParameters("--det-equals compares |det N| and needs n >= 0")

    @property
    def needs_det(self) -> bool:
        return self.det_zero or self.det_one or self.det_equals is not None or self.prime_divisor is not None

    @property
    def hexagonal_only(self) -> bool:
        return self.needs_det or self.axis_central or self.gravity_central

    def matches(self, record: ScanRecord) -> bool:
        if self.cm_type is not None and record.cm_type != self.cm_type:
            return False
        if self.level is not None and record.level != self.level:
            return False
        if self.max_multiplicity is not None and record.multiplicity > self.max_multiplicity:
            return False
        if self.hexagonal_only and not record.hexagonal:
            return False
        if self.axis_central and not record.axis_central:
            return False
        if self.gravity_central and not record.gravity_central:
            return False
        if self.needs_det:
            det = abs(record.det_N)
            if self.det_zero and det != 0:
                return False
            if self.det_one and det != 1:
                return False
            if self.det_equals is not None and det != self.det_equals:
                return False
            if self.prime_divisor is not None and (det == 0 or det % self.prime_divisor):
                return False
        return True


def evaluate_share(args) -> List[ScanRecord]:
    items, with_det = args
    return [scan_record(p, with_det) for p in items]


class ScanModel(Model):

    def __init__(self, scan_filter: ScanFilter, workers: int = None, quiet: bool = False):
        super().__init__()
        self.scan_filter = scan_filter
        self.workers = workers or model_parameters["scan_workers"]
        if self.workers < 1:
            raise InvalidParameters(f"workers must be positive, got {self.workers}")
        self.quiet = quiet
        self.schedule = SextupleSchedule(self, scan_filter.min_s_plus_2, scan_filter.max_s_plus_2,
                                         hexagonal_only=scan_filter.hexagonal_only)
        self.running = True
        self.visited = 0
        self.triple_sum = None
        self.records: List[ScanRecord] = []

        # one model row per triple sum, one "matches" row per sextuple that passed the filter
        self.datacollector = DataCollector(
            model_reporters={"triple_sum": lambda m: m.triple_sum,
                             "visited": lambda m: m.visited,
                             "matched": lambda m: len(m.records)},
            tables={"matches": MATCH_COLUMNS})

    def record_match(self, record: ScanRecord) -> None:
        """

        :param record: ScanRecord of a sextuple that passed the filter.
        """
        self.records.append(record)
        self.datacollector.add_table_row("matches", record.to_row())

    def evaluate_in_parallel(self, agents: List[SextupleAgent]) -> None:
        """

        :param agents: list of SextupleAgent of the current triple sum.

         A function splits the sextuples among the worker processes and hands every agent its record.
        """
        shares = partition([agent.params for agent in agents], self.workers)
        with Pool(self.workers) as pool:
            parts = pool.map(evaluate_share, [(share, self.scan_filter.needs_det) for share in shares])
        for agent, record in zip(agents, merge(parts)):
            agent.record = record

    def step(self) -> None:
        """

         A function loads the sextuples of the next triple sum as agents, activates them in canonical order and
         collects the step summary.
        """
        self.triple_sum = self.schedule.current_sum
        if self.triple_sum is None:
            self.running = False
            return
        agents = [SextupleAgent(self.next_id(), self, p) for p in self.schedule.batch(self.triple_sum)]
        for agent in agents:
            self.schedule.add(agent)
        if self.workers > 1 and len(agents) > 1:
            self.evaluate_in_parallel(agents)
        self.schedule.step()
        self.visited += len(agents)
        self.datacollector.collect(self)

    def run_model(self) -> List[ScanRecord]:
        """

        :return: list of ScanRecord that passed the filter; with `minimize` only those of least multiplicity.
        """
        total = len(self.schedule.triple_sums)
        disable = self.quiet or not sys.stderr.isatty()
        with tqdm(total=total, desc="scan", unit="sum", disable=disable) as progress:
            while self.running:
                self.step()
                if self.running:
                    progress.update(1)
        logger.info("scan visited %d sextuples, %d matched", self.visited, len(self.records))
        return self.results()

    def results(self) -> List[ScanRecord]:
        if self.scan_filter.minimize != "multiplicity" or not self.records:
            return list(self.records)
        matches = self.datacollector.get_table_dataframe("matches")
        least = matches["multiplicity"].min()
        return [r for r in self.records if r.multiplicity == least]

    def to_csv(self, path: str) -> str:
        """

        :param path: str of the CSV file.
        :return: str of the path written, one line per matching sextuple.
        """
        create_directory(os.path.dirname(os.path.abspath(path)))
        self.datacollector.get_table_dataframe("matches").to_csv(path, index=False)
        logger.info("stored %d scan rows in %s", len(self.records), path)
        return path
