import itertools

import pytest

from susbounds.text import Interval, make_text

FIG1 = "aabbaababaa"


def I(b, e):
    return Interval(b, e)


def small_strings(n_max=7, alphabet="abc"):
    """Every string up to n_max over the alphabet (not canonicalised)."""
    for n in range(1, n_max + 1):
        for t in itertools.product(alphabet, repeat=n):
            yield "".join(t)


@pytest.fixture
def fig1():
    return make_text(FIG1)


_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _criteria.append((marker.args[0], doc, "PASS" if rep.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    grouped = {}
    for number, doc, status in _criteria:
        docs, statuses = grouped.setdefault(number, ([], []))
        if doc not in docs:
            docs.append(doc)
        statuses.append(status)
    terminalreporter.section("acceptance criteria")
    for number in sorted(grouped):
        docs, statuses = grouped[number]
        status = "PASS" if all(s == "PASS" for s in statuses) else "FAIL"
        passed = statuses.count("PASS")
        terminalreporter.write_line(
            f"criterion {number}: {status} ({passed}/{len(statuses)} tests)  {' / '.join(docs)}")
