"""
Roman Domination Engine
Shared pytest fixtures
"""

import os
import sys

import pytest

# Add the project root to Python path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from roman_domination_core import catalogue
from roman_domination_core.graph import cycle_graph
from roman_domination_core.reductions import ds_to_treegadget, x3c_to_split, x4c_to_classG


@pytest.fixture(scope="session")
def split_yes():
    return x3c_to_split(catalogue.SPLIT_YES_X3C)


@pytest.fixture(scope="session")
def split_no():
    return x3c_to_split(catalogue.SPLIT_NO_X3C)


@pytest.fixture(scope="session")
def gadget_unit():
    return x4c_to_classG(catalogue.GADGET_UNIT_X4C)


@pytest.fixture(scope="session")
def gadget_yes():
    return x4c_to_classG(catalogue.GADGET_YES_X4C)


@pytest.fixture(scope="session")
def gadget_no():
    return x4c_to_classG(catalogue.GADGET_NO_X4C)


@pytest.fixture(scope="session")
def c4_tree():
    return ds_to_treegadget(cycle_graph(4), 2)
