"""Shared fixtures: the repository normal basis and small seeded codes."""

import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

import pytest

from engine.basis_builder import load_default_ctx
from engine.gabidulin import gen_code
from engine.gf_normal import NormalBasisField
from engine.gf_poly import PolyBasisField


@pytest.fixture(scope="session")
def ctx():
    return load_default_ctx()


@pytest.fixture(scope="session")
def normal_field(ctx):
    return NormalBasisField(ctx)


@pytest.fixture(scope="session")
def poly_field():
    return PolyBasisField()


@pytest.fixture(scope="session")
def small_code():
    """(n, k) = (12, 4): tau_max = 4."""
    return gen_code(12, 4, seed=11)


@pytest.fixture(scope="session")
def medium_code():
    """(n, k) = (40, 6): tau_max = 17."""
    return gen_code(40, 6, seed=5)
