import sys

import pytest

from thyme.counting import compiled_available
from thyme.hypergraph import TemporalHypergraph

E1_PAIRS = [({1, 2}, 1), ({2, 3}, 2), ({1, 2}, 3), ({3, 4}, 4), ({1, 2, 3}, 6)]
E1_DELTA = 3

BACKENDS = ["python"] + (["compiled"] if compiled_available() else [])


def make_e1():
    return TemporalHypergraph.from_pairs(E1_PAIRS)


@pytest.fixture
def e1():
    return make_e1()


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
