from __future__ import annotations

from pytest import raises

from juntaid3.core import (
    FREE,
    ConflictingAssignmentError,
    DimensionMismatchError,
    InvalidIndexError,
    PartialAssignment,
)


def test_parse_and_str():
    assignment = PartialAssignment.parse("01*1")

    assert assignment.values == (0, 1, FREE, 1)
    assert str(assignment) == "01*1"
    assert assignment.support == frozenset({0, 1, 3})
    assert list(assignment.fixed_items()) == [(0, 0), (1, 1), (3, 1)]


def test_parse_invalid_character():
    with raises(InvalidIndexError):
        PartialAssignment.parse("01x")


def test_free():
    assignment = PartialAssignment.free(3)

    assert assignment.support == frozenset()
    assert all(assignment.is_free(index) for index in range(3))


def test_fix_returns_copy():
    free = PartialAssignment.free(3)
    fixed = free.fix(1, 1)

    assert str(free) == "***", "fix modified the original"
    assert str(fixed) == "*1*"


def test_fix_conflict():
    with raises(ConflictingAssignmentError):
        PartialAssignment.parse("1**").fix(0, 0)


def test_fix_out_of_range():
    with raises(InvalidIndexError):
        PartialAssignment.free(2).fix(2, 0)


def test_merge():
    merged = PartialAssignment.parse("1**").merge(PartialAssignment.parse("**0"))

    assert str(merged) == "1*0"


def test_merge_conflict():
    with raises(ConflictingAssignmentError):
        PartialAssignment.parse("1**").merge(PartialAssignment.parse("0**"))


def test_merge_dimension_mismatch():
    with raises(DimensionMismatchError):
        PartialAssignment.free(2).merge(PartialAssignment.free(3))


def test_is_consistent():
    assignment = PartialAssignment.parse("1*0")

    assert assignment.is_consistent([1, 0, 0])
    assert assignment.is_consistent([1, 1, 0])
    assert not assignment.is_consistent([0, 1, 0])
    with raises(DimensionMismatchError):
        assignment.is_consistent([1, 0])


def test_equality_and_hash():
    assert PartialAssignment.parse("1*") == PartialAssignment([1, FREE])
    assert len({PartialAssignment.parse("1*"), PartialAssignment([1, FREE])}) == 1


def test_invalid_value():
    with raises(InvalidIndexError):
        PartialAssignment([2])
