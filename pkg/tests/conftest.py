import pytest

from gradedufd import BkData, Context, Field, PresentedAlgebra, bk_algebra


@pytest.fixture
def ctx_q3():
    return Context(Field(), ("x", "y", "z"))


@pytest.fixture
def bk532():
    """B(5,3,2) over Q: k[x,y,z1]/(x^5 + y^3 + z1^2), weights (6,10,15)."""
    return bk_algebra(BkData(5, 3, [2], [1]))


@pytest.fixture
def bk7532():
    """B(7,5,3,2) over Q, weights (30,42,70,105)."""
    return bk_algebra(BkData(7, 5, [3, 2], [1, 2]))


@pytest.fixture
def free_xy():
    """Free k[x,y] with weights (2,3)."""
    ctx = Context(Field(), ("x", "y"))
    return PresentedAlgebra(ctx, [], (2, 3))
