import random
import sys
from pathlib import Path

import pytest

from entropoid import backend
from entropoid.presets import preset

sys.path.insert(0, str(Path(__file__).parent))

BACKENDS = backend.available()


@pytest.fixture(params=BACKENDS)
def backend_name(request):
    return request.param


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def e7(backend_name):
    return preset("e7", backend_name)


@pytest.fixture
def e11(backend_name):
    return preset("e11", backend_name)


@pytest.fixture
def e49223(backend_name):
    return preset("e49223", backend_name)


@pytest.fixture
def e13(backend_name):
    return preset("e13", backend_name)
