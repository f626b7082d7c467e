from functools import lru_cache

import pytest

from frobdessin import generate_singer_set, space_params

# (m, p, e) spaces small enough to build their Singer sets in the default run
SPACES = [
    (2, 2, 1), (2, 3, 1), (2, 5, 1), (2, 7, 1), (3, 2, 1), (3, 3, 1),
    (4, 2, 1), (2, 2, 2), (3, 2, 2), (5, 2, 1), (4, 3, 1), (6, 2, 1),
    (2, 3, 2), (4, 2, 2), (4, 5, 1), (6, 3, 1), (4, 7, 1), (6, 2, 2),
]

WALK_LIMIT = 1_500_000


@lru_cache(maxsize=None)
def singer(mpe):
    return generate_singer_set(space_params(*mpe))


@pytest.fixture(params=SPACES, ids=lambda s: "P%d(F%d^%d)" % s)
def space(request):
    return space_params(*request.param)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
