# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Optional, Tuple

from mesa import Agent
from mesa.model import Model

from exact_linalg import det_exact
from hilbert import h_vector
from matrices import build_N
from params_core import AciParams, classify_puncture, derive_stats, socle_info
from utils import decimal

MATCH_COLUMNS = ["a", "b", "c", "alpha", "beta", "gamma", "triple_sum", "s_plus_2", "type", "level", "h_vector",
                 "multiplicity", "det_N", "axis_central", "gravity_central"]


@dataclass(frozen=True)
class ScanRecord:
    params: AciParams
    cm_type: int
    level: bool
    h: Tuple[int, ...]
    multiplicity: int
    hexagonal: bool
    s_plus_2: str
    det_N: Optional[int] = None
    axis_central: bool = False
    gravity_central: bool = False

    def to_dict(self) -> dict:
        return {"params": list(self.params.as_tuple()), "type": self.cm_type, "level": self.level,
                "h_vector": list(self.h), "multiplicity": self.multiplicity, "hexagonal": self.hexagonal,
                "s_plus_2": self.s_plus_2,
                "det_N": None if self.det_N is None else decimal(self.det_N),
                "axis_central": self.axis_central, "gravity_central": self.gravity_central}

    def to_row(self) -> dict:
        """

        :return: dict with one entry per column of the scan table.
        """
        row = dict(zip(("a", "b", "c", "alpha", "beta", "gamma"), self.params.as_tuple()))
        row.update({"triple_sum": self.params.triple_sum, "s_plus_2": self.s_plus_2, "type": self.cm_type,
                    "level": self.level, "h_vector": " ".join(str(v) for v in self.h),
                    "multiplicity": self.multiplicity,
                    "det_N": "" if self.det_N is None else decimal(self.det_N),
                    "axis_central": self.axis_central, "gravity_central": self.gravity_central})
        return row


def scan_record(p: AciParams, with_det: bool) -> ScanRecord:
    """

    :param p: AciParams.
    :param with_det: bool, compute det N for hexagonal sextuples.
    :return: ScanRecord.
    """
    stats = derive_stats(p)
    socle = socle_info(p)
    hilbert = h_vector(p)
    det, axis, gravity = None, False, False
    if stats.hexagonal:
        if with_det:
            det = det_exact(build_N(p))
        if socle.cm_type == 3:
            puncture = classify_puncture(p)
            axis, gravity = puncture.axis_central, puncture.gravity_central
    return ScanRecord(params=p, cm_type=socle.cm_type, level=socle.level, h=hilbert.h,
                      multiplicity=hilbert.multiplicity, hexagonal=stats.hexagonal, s_plus_2=str(stats.s_plus_2),
                      det_N=det, axis_central=axis, gravity_central=gravity)


class SextupleAgent(Agent):
    def __init__(self: Agent, id: int, model: Model, params: AciParams) -> None:
        super().__init__(id, model)
        self.params = params
        # filled in ahead of time when the model evaluates a triple sum on several processes
        self.record: Optional[ScanRecord] = None

    def step(self: Agent) -> None:
        """

         A function evaluates the sextuple and hands its record to the model when it passes the scan filter.
        """
        if self.record is None:
            self.record = scan_record(self.params, self.model.scan_filter.needs_det)
        if self.model.scan_filter.matches(self.record):
            self.model.record_match(self.record)
