from __future__ import annotations

from functools import lru_cache

import pytest

from wallchamber.algebra import bundled_algebra
from wallchamber.fields import QQ, PrimeField
from wallchamber.paths import build_exchange_graph
from wallchamber.tilting import Catalog, assemble_tau_tilting_pairs

F2 = PrimeField(2)


def algebra(name, p=2):
    """Shared algebra instances; p = 0 selects the rationals."""
    return _algebra(name, p)


@lru_cache(maxsize=None)
def _algebra(name, p):
    return bundled_algebra(name, QQ if p == 0 else PrimeField(p))


def catalog(name, bound=3, p=2):
    return _catalog(name, bound, p)


@lru_cache(maxsize=None)
def _catalog(name, bound, p):
    return Catalog(algebra(name, p), bound)


def pairs(name, bound=3, p=2):
    return _pairs(name, bound, p)


@lru_cache(maxsize=None)
def _pairs(name, bound, p):
    return tuple(assemble_tau_tilting_pairs(catalog(name, bound, p)))


def graph(name, bound=3, p=2):
    return _graph(name, bound, p)


@lru_cache(maxsize=None)
def _graph(name, bound, p):
    return build_exchange_graph(catalog(name, bound, p), list(pairs(name, bound, p)))


@pytest.fixture
def a2():
    return algebra("a2")


@pytest.fixture
def a2q():
    return algebra("a2", 0)


@pytest.fixture
def nak():
    return algebra("nakayama")


@pytest.fixture
def kron():
    return algebra("kronecker")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
