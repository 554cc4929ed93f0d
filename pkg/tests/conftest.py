import pytest

from src.core.lattice import Basis, hnf
from src.core.tiling import Tiling

# Index-12 lattice with generators (2,2) and (-2,4); HNF (6,2,2)
INDEX12_BASIS = Basis((2, 2), (-2, 4))

# Doubly periodic tiling of type (2,2,8) and fingerprint (0,3) on INDEX12_BASIS
SAMPLE_CELLS = "LLRRRDRDRRRR"


@pytest.fixture
def index12_basis() -> Basis:
    return INDEX12_BASIS


@pytest.fixture
def sample_tiling() -> Tiling:
    return Tiling.from_word(hnf(INDEX12_BASIS), SAMPLE_CELLS)


@pytest.fixture
def strip_basis() -> Basis:
    """B = [[2,0],[0,1]], HNF (2,1,0)"""
    return Basis((2, 0), (0, 1))


@pytest.fixture
def identity_basis() -> Basis:
    return Basis((1, 0), (0, 1))
