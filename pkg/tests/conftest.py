from functools import lru_cache

import pytest

from coxbruhat.core import build_system


@lru_cache(maxsize=None)
def system(name):
    return build_system(name)


@lru_cache(maxsize=None)
def cayley_lengths(name):
    """Word lengths by breadth-first search on the right Cayley graph.

    Independent of the root-flip length count used by the library.
    """
    sys = system(name)
    start = sys.identity()
    dist = {start.perm: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in sys.generators():
                y = sys.multiply(x, g)
                if y.perm not in dist:
                    dist[y.perm] = dist[x.perm] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


@pytest.fixture
def A2():
    return system("A2")


@pytest.fixture
def A3():
    return system("A3")


@pytest.fixture
def B3():
    return system("B3")


def word(sys, *letters):
    """Element from 1-based generator names, e.g. word(A2, 1, 2) = s1 s2."""
    return sys.element_from_word([i - 1 for i in letters])


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line per acceptance criterion; echoed in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def _report(number, title, failures, elapsed, limit):
        ok = not failures and elapsed < limit
        line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}  {title}  [{elapsed:.2f}s, limit {limit}s]"
        if failures:
            line += f"  {len(failures)} violation(s), first: {failures[0]}"
        print(line)
        lines.append(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
