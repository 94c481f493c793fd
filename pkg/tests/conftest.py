import random

import pytest

from qlra import ProbContext


@pytest.fixture
def ctx1() -> ProbContext:
    """Worked example: symmetric matrices, both directions hyperbolic.

    lambda(b|a) = (4/3, -4/3), lambda(a|b) = (-16/9, 16/9).
    """
    return ProbContext(
        p_a=(0.5, 0.5),
        p_b=(0.9, 0.1),
        p_b_given_a=((0.9, 0.1), (0.1, 0.9)),
        p_a_given_b=((0.9, 0.1), (0.1, 0.9)),
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
