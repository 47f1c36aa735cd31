# -*- coding: utf-8 -*-

import json
import logging
import os
import sys

from scipy.special import comb
from read_config import *

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def binom(n: int, k: int) -> int:
    """

    :param n: int upper index.
    :param k: int lower index.
    :return: int of the binomial coefficient, zero outside 0 <= k <= n.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def decimal(value: int) -> str:
    """

    :param value: int possibly beyond the native word size.
    :return: str of its decimal digits.
    """
    return str(int(value))


def configure_logging(level: str = None) -> None:
    """

    :param level: str of a logging level name, defaults to the configured `log_level`.

    A function sends log records to stderr so that reports on stdout stay clean.
    """
    level = level or model_parameters["log_level"]
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(asctime)s %(name)s %(levelname)s %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


def dumps(payload: dict) -> str:
    """

    :param payload: dict of a report.
    :return: str of the byte-stable JSON text, stamped with the schema version.
    """
    payload = dict(payload)
    payload.setdefault("schema", SCHEMA_VERSION)
    return json.dumps(payload, indent=2, sort_keys=True)


def store_json(payload: dict, path: str) -> str:
    """

    :param payload: dict of a report.
    :param path: str of the output file.
    :return: str of the path written.

    A function stores a report as JSON, creating the parent directory when needed.
    """
    parent = os.path.dirname(os.path.abspath(path))
    create_directory(parent)
    with open(path, "w") as fp:
        fp.write(dumps(payload))
        fp.write("\n")
    logger.info("stored %s", path)
    return path


def error_payload(exc: Exception) -> dict:
    """

    :param exc: Exception raised by the library.
    :return: dict of the machine readable error document.
    """
    kind = getattr(exc, "kind", "error")
    return {"schema": SCHEMA_VERSION, "error": {"kind": kind, "message": str(exc)}}


def create_directory(dir: str) -> None:
    """

    A function creates a directory by giving a path.
    """
    if not os.path.exists(dir):
        try:
            os.makedirs(dir)
        except OSError:
            logger.error("An issue while creating the directory: %s", dir)
        else:
            logger.info("Successfully created the directory %s", dir)


def get_results_dir() -> str:
    """

    :return: str.

    A function gets the absolute path of the results directory.
    """
    current_dir = os.path.dirname(__file__)
    parent_dir = os.path.dirname(current_dir)
    results_path = os.path.join(parent_dir, model_input["results_directory"])
    return results_path


def get_exec_path() -> str:
    """

    :return: str.

    A function gets the absolute path of the current execution directory.
    """
    result_path = get_results_dir()
    exec_path = os.path.join(result_path, model_input["execution_dir"])
    return exec_path


def get_output_dir(kind: str) -> str:
    """

    :param kind: str, one of "reports", "scans" or "figures".
    :return: str of the absolute path of that output directory inside the execution directory.
    """
    return os.path.join(get_exec_path(), model_input[f"{kind}_directory"])


def output_path(path: str, kind: str) -> str:
    """

    :param path: str of a file given on the command line.
    :param kind: str, one of "reports", "scans" or "figures".
    :return: str; a bare file name is placed in the output directory of that kind, any other path is kept.
    """
    if os.path.dirname(path):
        return path
    return os.path.join(get_output_dir(kind), path)
