import pytest

# Table 1 of the source, copied verbatim: (n, r_n, s_n) with zero padding.
TABLE_1 = [
    (1, "5", "6"),
    (2, "25", "76"),
    (3, "625", "376"),
    (4, "0625", "9376"),
    (5, "90625", "09376"),
    (6, "890625", "109376"),
    (7, "2890625", "7109376"),
    (8, "12890625", "87109376"),
    (9, "212890625", "787109376"),
    (10, "8212890625", "1787109376"),
]


def brute_idempotents(modulus):
    """Independent oracle: scan every residue."""
    return [x for x in range(modulus) if (x * x) % modulus == x]


@pytest.fixture
def table_1():
    return TABLE_1


_criteria = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _criteria.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _criteria:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
