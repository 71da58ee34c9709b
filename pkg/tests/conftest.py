import pytest

from tetgroups import CoxeterSymbol, full_presentation, kleinian_presentation

T10 = CoxeterSymbol(3, 3, 6, 2, 2, 2)


@pytest.fixture
def t10_full():
    return full_presentation(T10)


@pytest.fixture
def t10_kleinian():
    return kleinian_presentation(T10)
