import pytest

from surfhom.chartable import character_table
from surfhom.groups import parse_group_spec

ZOO_SPECS = ("builtin:sym:3", "builtin:sym:4", "builtin:alt:4", "builtin:dih:4",
             "builtin:q8", "builtin:cyc:6", "builtin:cyc:7")

_cache = {}


def group(spec):
    if spec not in _cache:
        _cache[spec] = parse_group_spec(spec)
    return _cache[spec]


def table(spec):
    return character_table(group(spec))


@pytest.fixture(params=ZOO_SPECS)
def zoo_spec(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.REPORT:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.REPORT:
            terminalreporter.write_line(line)
