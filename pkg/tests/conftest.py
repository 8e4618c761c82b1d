import pytest

from speh_poles.coset import sigma_context


def contexts(max_total, min_total=2):
    """Every admissible (m, n, sigma) with min_total <= m+n <= max_total."""
    out = []
    for total in range(min_total, max_total + 1):
        for m in range(1, total):
            n = total - m
            for sigma in range(total // 2 + 1):
                out.append(sigma_context(m, n, sigma))
    return out


@pytest.fixture(scope="session")
def small_contexts():
    return contexts(6)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        for line in mod.RESULTS[number].lines():
            terminalreporter.write_line(line)
