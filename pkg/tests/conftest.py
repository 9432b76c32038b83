import numpy as np
import pytest

from linbwm import io as bwmio
from linbwm import validate_pcs


def make_pcs(best_to_others, others_to_worst, best=0, worst=None, scale_max=9, criteria=None):
    n = len(best_to_others)
    return validate_pcs(
        {
            "criteria": criteria,
            "best": best,
            "worst": n - 1 if worst is None else worst,
            "best_to_others": best_to_others,
            "others_to_worst": others_to_worst,
            "scale_max": scale_max,
        }
    )


def load_example(name):
    return bwmio.parse_pcs(bwmio.load_fixture_text(f"{name}.json"))


def random_pcs(rng, n=None, scale_max=9, abw_min=1, dominance=False):
    """Random integer comparison system; ``dominance`` caps entries at a_bw."""
    n = int(n if n is not None else rng.integers(3, 10))
    best, worst = map(int, rng.choice(n, size=2, replace=False))
    a_bw = int(rng.integers(abw_min, scale_max + 1))
    high = a_bw if dominance else scale_max
    ab = [int(v) for v in rng.integers(1, high + 1, size=n)]
    aw = [int(v) for v in rng.integers(1, high + 1, size=n)]
    ab[best] = 1
    aw[worst] = 1
    ab[worst] = a_bw
    aw[best] = a_bw
    return make_pcs(ab, aw, best=best, worst=worst, scale_max=scale_max)


@pytest.fixture(scope="session")
def example1():
    return load_example("example1")


@pytest.fixture(scope="session")
def example2():
    return load_example("example2")


@pytest.fixture(scope="session")
def example3():
    return load_example("example3")


@pytest.fixture(scope="session")
def example4():
    return load_example("example4")


@pytest.fixture(scope="session")
def example5():
    return load_example("example5")


@pytest.fixture(scope="session")
def consistent_pcs():
    return load_example("consistent")


@pytest.fixture(scope="session")
def random_suite():
    """The shared 1,000-system random suite used by the property tests."""
    rng = np.random.default_rng(20240521)
    return [random_pcs(rng) for _ in range(1000)]
