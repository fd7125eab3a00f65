from __future__ import annotations

from itertools import product

from numpy.random import default_rng
from pytest import mark, raises

from juntaid3.common import EnumerationLimitError
from juntaid3.core import (
    ENUMERATION_LIMIT,
    DimensionMismatchError,
    InvalidIndexError,
    TargetFunction,
    evaluate_target,
    make_junta,
    make_parity,
    random_junta,
)


@mark.parametrize("support", [(0,), (0, 2), (1, 2, 3)])
def test_parity_matches_definition(support: tuple[int, ...]):
    parity = make_parity(4, support)

    for bits in product((0, 1), repeat=4):
        expected = sum(bits[index] for index in support) % 2
        assert evaluate_target(parity, bits) == expected, f"Wrong parity on {bits}"


def test_two_parity_table():
    assert make_parity(3, [0, 2]).truth_table.tolist() == [0, 1, 1, 0]


def test_and_junta():
    conjunction = make_junta(3, [0, 1], [0, 0, 0, 1])

    assert evaluate_target(conjunction, [1, 1, 0]) == 1
    assert evaluate_target(conjunction, [1, 0, 1]) == 0


def test_lowest_support_index_is_least_significant():
    target = make_junta(3, [0, 2], [0, 1, 0, 0])

    assert evaluate_target(target, [1, 0, 0]) == 1
    assert evaluate_target(target, [0, 0, 1]) == 0


def test_evaluate_many_matches_evaluate():
    rng = default_rng(3)
    target = random_junta(6, [1, 3, 4], rng)
    features = rng.integers(0, 2, size=(50, 6)).astype(bool)

    labels = target.evaluate_many(features)

    for row, label in zip(features, labels):
        assert evaluate_target(target, row.tolist()) == label


def test_random_junta_is_not_constant():
    rng = default_rng(0)
    for _ in range(50):
        assert not random_junta(4, [0], rng).is_constant


def test_support_must_increase():
    with raises(InvalidIndexError):
        TargetFunction(4, [2, 1], [0, 1, 1, 0])


def test_support_out_of_range():
    with raises(InvalidIndexError):
        TargetFunction(2, [0, 2], [0, 1, 1, 0])


def test_table_size():
    with raises(DimensionMismatchError):
        TargetFunction(3, [0, 1], [0, 1])


def test_enumeration_limit():
    with raises(EnumerationLimitError):
        make_parity(ENUMERATION_LIMIT + 1, range(ENUMERATION_LIMIT + 1))


def test_evaluate_wrong_length():
    with raises(DimensionMismatchError):
        evaluate_target(make_parity(3, [0]), [0, 1])


def test_empty_parity():
    with raises(InvalidIndexError):
        make_parity(3, [])


def test_flipping_a_coordinate_outside_the_support_keeps_the_label():
    rng = default_rng(17)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        k = int(rng.integers(1, n))
        support = sorted(rng.choice(n, size=k, replace=False).tolist())
        target = random_junta(n, support, rng)
        bits = rng.integers(0, 2, size=n).tolist()
        label = evaluate_target(target, bits)

        for index in set(range(n)) - set(support):
            flipped = list(bits)
            flipped[index] ^= 1
            assert evaluate_target(target, flipped) == label, f"x{index} changed {target!r} on {bits}"
