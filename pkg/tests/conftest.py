"""
Shared fixtures for the metahecke test-suite
"""

import sys
from pathlib import Path

import pytest
from hypothesis import settings

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from factory import get_finite_field, get_local_field

settings.register_profile("metahecke", derandomize=True, deadline=None, max_examples=100)
settings.load_profile("metahecke")


@pytest.fixture
def f7():
    return get_finite_field(7, 1)


@pytest.fixture
def f9():
    return get_finite_field(3, 2)


@pytest.fixture
def k7():
    """Local field with residue field F_7 and symbol degree 6"""
    return get_local_field(7, 1, 6)
