# -*- coding: utf-8 -*-
import os
import sys

import pytest

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

from params_core import AciParams  # noqa: E402


@pytest.fixture
def det_eleven():
    return AciParams(4, 6, 6, 1, 1, 3)


@pytest.fixture
def always_fails():
    return AciParams(5, 5, 3, 2, 2, 1)


@pytest.fixture
def smallest():
    return AciParams(2, 2, 2, 1, 1, 1)
