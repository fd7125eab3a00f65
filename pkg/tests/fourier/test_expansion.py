from __future__ import annotations

import numpy as np
from pytest import approx, mark, raises

from juntaid3.common.errors import EnumerationLimitError
from juntaid3.core import FREE, DimensionMismatchError, PartialAssignment, make_junta, make_parity, random_junta
from juntaid3.fourier import (
    FOURIER_LIMIT,
    FourierExpansion,
    RestrictionOutsideSupportError,
    fourier_coeffs,
    restrict_target,
    walsh_hadamard,
)


def test_and_coefficients():
    expansion = fourier_coeffs([0, 0, 0, 1])

    assert expansion.coeffs.tolist() == [0.25, 0.25, 0.25, 0.25]
    assert expansion.degree == 2


def test_parity_coefficients():
    expansion = fourier_coeffs([0, 1, 1, 0])

    assert dict(expansion.items()) == {0: 0.5, 3: -0.5}
    assert expansion.degree == 2


def test_constant_coefficients():
    assert dict(fourier_coeffs([1, 1, 1, 1]).items()) == {0: 1.0}
    assert fourier_coeffs([0, 0]).degree == -1
    assert fourier_coeffs([1]).k == 0


def test_dictator_coefficients():
    # f(x) = x0 = 1/2 + 1/2 (2 x0 - 1)
    assert dict(fourier_coeffs([0, 1]).items()) == {0: 0.5, 1: 0.5}


@mark.parametrize("length", [0, 3, 6])
def test_length_must_be_power_of_two(length: int):
    with raises(DimensionMismatchError):
        fourier_coeffs([0] * length)
    with raises(DimensionMismatchError):
        walsh_hadamard([1.0] * length)


def test_enumeration_limit():
    with raises(EnumerationLimitError):
        fourier_coeffs(np.zeros(1 << (FOURIER_LIMIT + 1)))


def test_expansion_length_checked():
    with raises(DimensionMismatchError):
        FourierExpansion(2, [0.5, 0.5])


def test_evaluate_matches_table():
    table = [0, 1, 1, 1, 0, 0, 1, 0]
    expansion = fourier_coeffs(table)

    for x, value in enumerate(table):
        bits = [x >> position & 1 for position in range(3)]
        assert expansion.evaluate(bits) == approx(value, abs=1e-12), f"Input {bits} evaluated wrongly"

    with raises(DimensionMismatchError):
        expansion.evaluate([0, 1])


def test_random_juntas():
    rng = np.random.default_rng(3)
    for _ in range(200):
        k = int(rng.integers(0, 9))
        table = rng.integers(0, 2, size=1 << k)
        expansion = fourier_coeffs(table)
        coeffs = expansion.coeffs

        assert np.allclose(expansion.to_truth_table(), table, atol=1e-9), "Reconstruction does not match"
        assert float(np.sum(coeffs**2)) == approx(float(np.mean(table)), abs=1e-12), "Parseval does not hold"
        nonzero = coeffs[coeffs != 0]
        assert np.all(np.abs(nonzero) >= 2.0**-k - 1e-15), "A nonzero coefficient is below 2^-k"


def test_restrict_and_to_constant():
    target = make_junta(2, [0, 1], [0, 0, 0, 1])
    restricted = restrict_target(target, PartialAssignment([FREE, 0]))

    assert list(restricted.support) == [0]
    assert restricted.truth_table.tolist() == [0, 0]
    assert restricted.is_constant


def test_restrict_parity_negates():
    target = make_parity(3, [0, 1, 2])
    restricted = restrict_target(target, PartialAssignment([FREE, FREE, 1]))

    assert list(restricted.support) == [0, 1]
    assert restricted.truth_table.tolist() == [1, 0, 0, 1]


def test_restrict_free_is_identity():
    target = make_parity(4, [1, 3])

    assert restrict_target(target, PartialAssignment.free(4)) == target


def test_restrict_outside_support():
    target = make_parity(3, [0, 1])
    assignment = PartialAssignment([FREE, 1, 0])

    with raises(RestrictionOutsideSupportError):
        restrict_target(target, assignment)

    restricted = restrict_target(target, assignment, strict=False)
    assert list(restricted.support) == [0]
    assert restricted.truth_table.tolist() == [1, 0]


def test_restrict_dimension_mismatch():
    with raises(DimensionMismatchError):
        restrict_target(make_parity(3, [0, 1]), PartialAssignment.free(2))


def test_restrict_matches_evaluation():
    rng = np.random.default_rng(8)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        k = int(rng.integers(1, n + 1))
        support = sorted(rng.choice(n, size=k, replace=False).tolist())
        target = random_junta(n, support, rng)
        values = [FREE] * n
        for coordinate in support:
            if rng.random() < 0.5:
                values[coordinate] = int(rng.integers(2))
        restricted = restrict_target(target, PartialAssignment(values))

        for _ in range(8):
            bits = rng.integers(0, 2, size=n)
            for coordinate, value in enumerate(values):
                if value is not FREE:
                    bits[coordinate] = value
            assert restricted.evaluate_many(bits.reshape(1, -1).astype(bool))[0] == target.evaluate_many(
                bits.reshape(1, -1).astype(bool)
            )[0], "Restriction disagrees with the target"
