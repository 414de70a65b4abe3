import pytest

from leraycheck import GF2, GF3, QQ
from leraycheck.generators import random_complex, trial_seed

FIELDS = [GF2, GF3, QQ]


def corpus(n_values, count, seed, model="mix"):
    out = []
    for t in range(count):
        n = n_values[t % len(n_values)]
        out.append(random_complex(n, model, trial_seed(seed, t)))
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return corpus([3, 4, 5, 6], 40, seed=11)


@pytest.fixture(scope="session")
def pair_corpus():
    xs = corpus([4, 5, 6], 30, seed=21)
    ys = corpus([4, 5, 6], 30, seed=22)
    return list(zip(xs, ys))
