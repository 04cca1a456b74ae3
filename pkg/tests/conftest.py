import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from setmosaic import SetSystem, ZoneSet, zones_from_membership  # noqa: E402

# people interested in books, technology and cars: only books, only cars,
# books and technology, all three
FIG2_PAIRS = [
    ("e1", "Books"),
    ("e2", "Cars"),
    ("e3", "Books"), ("e3", "Technology"),
    ("e4", "Books"), ("e4", "Technology"), ("e4", "Cars"),
]
FIG2_TSV = "".join(f"{e}\t{s}\n" for e, s in FIG2_PAIRS)


@pytest.fixture
def fig2_system():
    return SetSystem.from_pairs(FIG2_PAIRS)


@pytest.fixture
def fig2(fig2_system):
    return zones_from_membership(fig2_system)


@pytest.fixture
def fig2_tsv(tmp_path):
    p = tmp_path / "fig2.tsv"
    p.write_text(FIG2_TSV)
    return p


def zs_of(*signatures, labels=None, cards=None):
    sigs = [frozenset(s) for s in signatures]
    if labels is None:
        labels = sorted(set().union(*sigs))
    return ZoneSet.from_signatures(sigs, labels, cards)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
