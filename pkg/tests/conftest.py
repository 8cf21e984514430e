"""
Shared fixtures for the ordmatch test suite
"""

import random

import pytest

from core import OrderedGraph


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def k4():
    return OrderedGraph.complete(4)


@pytest.fixture
def k6():
    return OrderedGraph.complete(6)


@pytest.fixture
def data_dir(tmp_path):
    return str(tmp_path / "data")
