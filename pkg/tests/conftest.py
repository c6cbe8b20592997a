import random
import sys

import pytest

from greenring import make_ring


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_element(spec, rng, lo=-3, hi=3, density=0.5):
    """Sparse random element with small integer coefficients."""
    vec = [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(spec.rank)]
    return spec.from_vector(vec)


SMALL_SPECS = [
    ("radford", 2, 1), ("radford", 2, 2), ("radford", 3, 2), ("radford", 3, 3), ("radford", 4, 2),
    ("grothendieck", 2, 2), ("grothendieck", 3, 3), ("grothendieck", 4, 2),
    ("stable", 2, 1), ("stable", 3, 1), ("stable", 4, 1), ("stable", 5, 1),
]


@pytest.fixture(params=SMALL_SPECS, ids=lambda p: f"{p[0]}-n{p[1]}-m{p[2]}")
def spec(request):
    return make_ring(*request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
