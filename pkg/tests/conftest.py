"""Collects acceptance results and prints one line per criterion at the end."""

from collections import defaultdict

import pytest

CRITERIA = {
    1: "coefficient ground truth (j1, j6, mock theta prefixes)",
    2: "parity suites via CLI at full size",
    3: "odd-prime chains and exact E12 identities",
    4: "identity suite and perturbation detection",
    5: "triangular counting formula up to 10^4",
    6: "printed odd-index lists",
    7: "oracle equivalences",
    8: "property suites",
}

_outcomes = defaultdict(list)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[marker.args[0]].append((item.name, rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if not results:
            tr.write_line(f"AC{n} NOT RUN  {CRITERIA[n]}")
            continue
        ok = all(passed for _, passed, _ in results)
        secs = sum(d for _, _, d in results)
        failed = [name for name, passed, _ in results if not passed]
        tail = f" (failed: {', '.join(failed)})" if failed else ""
        tr.write_line(f"AC{n} {'PASS' if ok else 'FAIL'}  {CRITERIA[n]}  [{len(results)} checks, {secs:.2f}s]{tail}")
