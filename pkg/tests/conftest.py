import numpy as np
import pytest

from construction.sequence import burling_sequence
from shapes.generators import frame, gamma


@pytest.fixture
def frame_shape():
    return frame()


@pytest.fixture
def gamma_shape():
    return gamma()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def frame_scenes():
    """Frame-based scenes for k = 1, 2, 3, built once per session."""
    return {k: burling_sequence(frame(), k) for k in (1, 2, 3)}


@pytest.fixture(scope="session")
def gamma_scene3():
    return burling_sequence(gamma(), 3)
