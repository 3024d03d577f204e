import numpy as np
import pytest

from geomseq.catalog import catalog_entries


@pytest.fixture(scope="session")
def catalog():
    # entries are immutable; one copy serves the whole run
    return catalog_entries()


@pytest.fixture
def rng():
    return np.random.default_rng(20260819)
