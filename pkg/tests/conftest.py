import pytest

from z2z4.additive import GeneratorMatrix
from z2z4.cycliccode import CyclicGenerators
from z2z4.polyring import BinPoly, QuatPoly


@pytest.fixture
def cyclic_projections_matrix():
    # alpha=2, beta=3; projections cyclic, the code itself is not
    return GeneratorMatrix.from_text("1 0 | 1 0 0\n0 1 | 0 1 0\n0 0 | 0 0 1")


@pytest.fixture
def nonlinear_image_matrix():
    # nonlinear extended Gray image, linear quaternary image
    return GeneratorMatrix.from_text(
        "1 0 0 | 0 0 0\n"
        "0 1 0 | 0 0 0\n"
        "0 0 1 | 2 0 0\n"
        "0 0 0 | 1 1 0\n"
        "0 0 0 | 1 0 1"
    )


@pytest.fixture
def length9_code():
    # <(x^2+x+1 | 0), (1 | x^2+x+3)> with f=1, h=x^2+x+1, g=x+3
    return CyclicGenerators(
        3,
        3,
        BinPoly.parse("x^2+x+1"),
        BinPoly.one(),
        QuatPoly.one(),
        QuatPoly.parse("x^2+x+1"),
        QuatPoly.parse("x+3"),
    )
