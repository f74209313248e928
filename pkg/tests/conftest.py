import pytest

from bottchern.algebra import Matrix
from bottchern.bicomplex import DoubleComplex
from bottchern.lie import builtin_complex


def dot_complex():
    """One-dimensional A^{0,0}, nothing else, n = 1."""
    return DoubleComplex(1, {(0, 0): 1, (1, 0): 0, (0, 1): 0, (1, 1): 0})


def square_complex():
    """Acyclic square: every cell one-dimensional, del delbar = -delbar del = 1."""
    one, neg = Matrix.from_rows([[1]]), Matrix.from_rows([[-1]])
    return DoubleComplex(1, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1},
                         partial={(0, 0): one, (0, 1): one}, partial_bar={(0, 0): one, (1, 0): neg})


def zigzag_complex():
    """A^{1,0} -> A^{1,1} <- A^{0,1}, both maps the identity."""
    one = Matrix.from_rows([[1]])
    return DoubleComplex(1, {(0, 0): 0, (1, 0): 1, (0, 1): 1, (1, 1): 1},
                         partial={(0, 1): one}, partial_bar={(1, 0): one})


HAND_BUILT = {"dot": dot_complex, "square": square_complex, "zigzag": zigzag_complex}

SHIPPED = [("torus", 1), ("torus", 2), ("torus", 3), ("iwasawa", None), ("kodaira_thurston", None)]


@pytest.fixture
def iwasawa():
    return builtin_complex("iwasawa")


@pytest.fixture
def kodaira_thurston():
    return builtin_complex("kodaira_thurston")


@pytest.fixture(params=SHIPPED, ids=lambda x: f"{x[0]}{x[1] or ''}")
def shipped(request):
    name, n = request.param
    return builtin_complex(name, n)
