import warnings

import hypothesis
import numpy as np
import pytest

from spinchain import ChainSpec, FieldParams

hypothesis.settings.register_profile("default", deadline=None, max_examples=50)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=10)
hypothesis.settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def chain6():
    return ChainSpec(6)


@pytest.fixture
def generic_params():
    return FieldParams(1.3, 0.7, 0.9, 0.3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(autouse=True)
def _quiet_double_bond():
    with warnings.catch_warnings():
        warnings.filterwarnings("ignore", message="N=2", category=RuntimeWarning)
        yield


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
