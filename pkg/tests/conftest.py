import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from rindex import _backend  # noqa: E402
from rindex.construct import build_index  # noqa: E402
from rindex.seq_io import SequenceCatalog, SequenceRecord, TextCorpus, build_corpus  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--kernels", choices=sorted(_backend.AVAILABLE), default=None,
                     help="kernel backend used where a test does not pick one explicitly")


def pytest_configure(config):
    choice = config.getoption("--kernels")
    if choice:
        _backend.DEFAULT = choice


@pytest.fixture(params=sorted(_backend.AVAILABLE))
def backend(request):
    return request.param


@pytest.fixture
def acgt_index(backend):
    """Index over ``ACGTACGT$`` with the full SA kept for checks."""
    return build_index(TextCorpus(b"ACGTACGT$"), SequenceCatalog(), backend=backend, keep_sa=True)


@pytest.fixture
def two_seq():
    return build_corpus([SequenceRecord("a", b"ACGT"), SequenceRecord("b", b"GG")])


_CRITERIA = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(label, ok, detail)``."""
    def record(label, ok, detail=""):
        _CRITERIA.append((label, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _CRITERIA:
        status = "N/A " if ok is None else "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  {label}  {detail}")
