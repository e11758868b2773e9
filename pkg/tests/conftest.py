from __future__ import annotations

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from regchains.concurrency import all_configs  # noqa: E402
from regchains.poly import VariableOrder, parse  # noqa: E402
from regchains.sysfile import load_system  # noqa: E402

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

# enough pooled workers to exercise real concurrency even on one core
WORKERS = 4


def fixture_path(name: str) -> str:
    return os.path.join(FIXTURES, name if name.endswith(".sys") else name + ".sys")


def fixture(name: str):
    return load_system(fixture_path(name))


def fixture_names():
    return sorted(f[:-4] for f in os.listdir(FIXTURES) if f.endswith(".sys"))


def zero_dim_names():
    return [n for n in fixture_names() if n.startswith("zd_")]


CONFIGS = all_configs(WORKERS)


@pytest.fixture
def zyx():
    return VariableOrder("z > y > x")


@pytest.fixture
def P(zyx):
    return lambda text: parse(text, zyx)
