import random

import pytest

from lmis import examples


@pytest.fixture
def star():
    return examples.star()


@pytest.fixture
def triangle_pendant():
    return examples.triangle_pendant()


@pytest.fixture
def tree6():
    return examples.six_vertex_tree()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
