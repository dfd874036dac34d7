import cmath
import math
import time
from itertools import combinations


def laplace_det(rows):
    """Cofactor expansion; slow but independent of the library's elimination."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * laplace_det(minor)
    return total


def determinantal_divisors(rows):
    """gcd of all k x k minors for k = 1..rank."""
    if not rows or not rows[0]:
        return []
    m, n = len(rows), len(rows[0])
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                g = math.gcd(g, laplace_det([[rows[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        out.append(g)
    return out


def numeric_root_sum(p, j):
    w = cmath.exp(2j * cmath.pi / p)
    return sum(w ** (-i * (j + 2)) / (1 - w ** (-i)) ** 2 for i in range(1, p))


def pytest_sessionstart(session):
    session.config._suite_started = time.perf_counter()


def pytest_collection_modifyitems(config, items):
    # the runtime criterion measures everything before it, so it goes last
    last = [i for i in items if i.nodeid.endswith("test_criterion[11]")]
    items[:] = [i for i in items if i not in last] + last


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(test_acceptance.RESULTS):
        ok, detail = test_acceptance.RESULTS[n]
        terminalreporter.write_line(test_acceptance.format_line(n, ok, detail))
