# File: tests/conftest.py
import os
import sys
from fractions import Fraction

import numpy as np
import pytest

# Add project root to Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from moments.generators import MeasureGenerator, SeparatedMeasureGenerator
from words.models import Rank

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


@pytest.fixture
def data_path():
    def path(name):
        return os.path.join(DATA_DIR, name)
    return path


@pytest.fixture
def s_grid():
    """21 points in [-1, 1]"""
    return np.linspace(-1.0, 1.0, 21).tolist()


@pytest.fixture
def exact_grid():
    """Rationals in [-3/2, 3/2] in steps of 1/4"""
    return [Fraction(k, 4) for k in range(-6, 7)]


@pytest.fixture
def measure_corpus():
    return MeasureGenerator(seed=20240501).take(200)


@pytest.fixture
def separated_corpus():
    return SeparatedMeasureGenerator(seed=7).take(40)


@pytest.fixture(params=[1, 2, 3, None], ids=['r1', 'r2', 'r3', 'rinf'])
def any_rank(request):
    return Rank(request.param)
