import pytest

from bei import paper_corpus


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    # pay the one-time JIT compile cost before any timed assertion
    import bei.kernels as kernels
    kernels._accel()


@pytest.fixture(scope="session")
def corpus():
    return paper_corpus()
