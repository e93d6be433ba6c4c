import pytest

from tsigma.harness import corpus_builtin
from tsigma.sigma import parse_sigma

SIGMA_SPECS = ("minimal", "2,3|5|*", "2|3,5|*")


@pytest.fixture(scope="session")
def corpus60():
    return corpus_builtin(60)


@pytest.fixture(scope="session")
def corpus48(corpus60):
    return [G for G in corpus60 if G.order <= 48]


@pytest.fixture(scope="session")
def corpus24(corpus60):
    return [G for G in corpus60 if G.order <= 24]


@pytest.fixture(scope="session")
def sigmas():
    return [parse_sigma(s) for s in SIGMA_SPECS]
