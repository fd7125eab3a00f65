from __future__ import annotations

import math

from pytest import mark, raises

from juntaid3.distributions import (
    SATURATED,
    InvalidParameterError,
    sample_size_basic,
    sample_size_correlation,
    sample_size_junta,
    sample_size_parity,
)


def test_basic_example():
    # beta^-2 gamma^2 eps^-4 alpha^-4 k = 1/4 * 2^20 * 2^8 * 2
    assert sample_size_basic(2, 1, 0.03125, 0.25, 2, 16, 0.1) == math.ceil(2**27 * math.log(160))


def test_correlation_example():
    assert sample_size_correlation(0.1, 0.5, 0, 0.5) == 70


def test_parity_grows_with_k():
    sizes = [sample_size_parity(0.25, 0.2, 2, 1, k, 32, 0.1) for k in range(1, 5)]

    assert sizes == sorted(sizes)
    assert len(set(sizes)) == 4


def test_saturates():
    assert sample_size_parity(0.01, 0.01, 2, 1, 20, 64, 0.1) == SATURATED
    assert sample_size_junta(0.01, 0.01, 2, 1, 40, 64, 0.1, 0.1) == SATURATED


@mark.parametrize(
    "parameters",
    [
        dict(beta=0, gamma=1, epsilon=0.1, alpha=0.25, k=2, n=16, delta=0.1),
        dict(beta=2, gamma=1, epsilon=-0.1, alpha=0.25, k=2, n=16, delta=0.1),
        dict(beta=2, gamma=1, epsilon=0.1, alpha=1.0, k=2, n=16, delta=0.1),
        dict(beta=2, gamma=1, epsilon=0.1, alpha=0.25, k=2, n=16, delta=0.0),
    ],
)
def test_basic_invalid(parameters: dict[str, float]):
    with raises(InvalidParameterError):
        sample_size_basic(**parameters)  # type: ignore[arg-type]


def test_junta_needs_relevant_coordinates():
    with raises(InvalidParameterError) as info:
        sample_size_junta(0.1, 0.1, 2, 1, 0, 16, 0.1, 0.1)
    assert info.value.name == "k"


def test_c_range():
    with raises(InvalidParameterError):
        sample_size_parity(0.1, 0.5, 2, 1, 2, 16, 0.1)
    with raises(InvalidParameterError):
        sample_size_junta(0.1, 0.0, 2, 1, 2, 16, 0.1, 0.1)
