# -*- coding: utf-8 -*-
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config  # noqa: E402
from conjugacy import conjugacy_classes  # noqa: E402
from coxeter_core import enumerate_group, parse_type  # noqa: E402

config.VERBOSE = False


def pytest_configure(config):
    config.addinivalue_line("markers", "extended: corridas largas (requiere COXSIG_EXTENDED=1)")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("COXSIG_EXTENDED", "").strip().lower() in {"1", "true", "yes"}:
        return
    skip = pytest.mark.skip(reason="requiere COXSIG_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def _group(spec, labeling="table2"):
    s = parse_type(spec, labeling)
    table = enumerate_group(s, cache_dir="")
    return s, table, conjugacy_classes(table, s)


@pytest.fixture(scope="session")
def h3():
    return _group("H3")


@pytest.fixture(scope="session")
def h3_example():
    return _group("H3", "example73")


@pytest.fixture(scope="session")
def f4():
    return _group("F4")


@pytest.fixture(scope="session")
def h4():
    return _group("H4")


@pytest.fixture(scope="session")
def a3():
    return _group("A3")


@pytest.fixture(scope="session")
def b2():
    return _group("B2")


@pytest.fixture(scope="session")
def e6():
    return _group("E6")
