"""Shipped data tables and where to find them.

Lookup order for the data directory: an explicit argument, then the
``CHARSLOPE_DATA`` environment variable, then the copy bundled with the
package.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

ENV_VAR = "CHARSLOPE_DATA"


def data_dir(explicit=None):
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("charslope") / "data"))


def data_path(name, explicit=None):
    return data_dir(explicit) / name


@dataclass(frozen=True)
class SystoleRow:
    key: int
    systole: str  # exact decimal string as tabulated
    reference_q: int


# caches are keyed on the resolved path, so changing the environment
# variable between calls picks up the new directory
@lru_cache(maxsize=None)
def _read_systoles(path, key):
    with open(path, newline="", encoding="utf-8") as f:
        return {int(r[key]): SystoleRow(int(r[key]), r["systole"], int(r["reference_q"]))
                for r in csv.DictReader(f)}


@lru_cache(maxsize=None)
def _read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def twist_systoles(directory=None):
    """Systoles of twist knot complements, keyed by sign * t."""
    return _read_systoles(data_path("twist_lengths.csv", directory), "signed_twist")


def double_systoles(directory=None):
    """Systoles of the n-clasped Whitehead link complements, keyed by |n|."""
    return _read_systoles(data_path("double_lengths.csv", directory), "clasp")


def stage_data(directory=None):
    return _read_json(data_path("stages.json", directory))


def census_path(directory=None):
    return data_path("census.jsonl", directory)
