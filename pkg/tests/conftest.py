import functools

import pytest

from cupcsa import catalog
from cupcsa.datum import subgroups
from cupcsa.theorem import build_D, run_theorem

GENERIC = ("quat_2_3", "quat_m1_m2", "kummer3_2_3")


@functools.lru_cache(maxsize=None)
def datum(name):
    return catalog.load_example(name)


@functools.lru_cache(maxsize=None)
def pipeline(name):
    """(datum, subgroups, context, D) for a catalog datum with N_f != N_g."""
    d = datum(name)
    sub = subgroups(d)
    ctx = run_theorem(d, sub)
    return d, sub, ctx, build_D(ctx)


@pytest.fixture(params=GENERIC)
def generic_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
