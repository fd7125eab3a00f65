# The MIT License (MIT)
# Copyright (c) 2024-present juntaid3 developers
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS
# OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
# FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER
# DEALINGS IN THE SOFTWARE.

from __future__ import annotations

from enum import Enum
from typing import TYPE_CHECKING

from .errors import ConflictingAssignmentError, DimensionMismatchError, InvalidIndexError

if TYPE_CHECKING:
    from typing import Final, Iterable, Iterator, Literal, Sequence, Union

    from typing_extensions import Self

    Bit = Literal[0, 1]
    AssignmentValue = Union[Bit, "FreeType"]

__all__: Final[tuple[str, ...]] = ("FreeType", "FREE", "PartialAssignment")


class FreeType(Enum):
    """Marker for a coordinate a :class:`PartialAssignment` leaves unassigned.

    **Example usage:**

    .. code-block:: python3

        from juntaid3.core import FREE, PartialAssignment

        w = PartialAssignment.parse("1*0")
        assert w[1] is FREE
    """

    FREE = "*"


FREE: Literal[FreeType.FREE] = FreeType.FREE


class PartialAssignment:
    """A element of ``{0, 1, *}^n``.

    It encodes a root-to-node path of a decision tree, and the subcube ``X_w`` of inputs that agree with every
    fixed coordinate.

    Parameters
    ----------
    values:
        One entry per coordinate, either ``0``, ``1`` or :data:`FREE`.

    Attributes
    ----------
    values:
        One entry per coordinate, either ``0``, ``1`` or :data:`FREE`.
    """

    __slots__ = ("values",)

    def __init__(self, values: Iterable[AssignmentValue]) -> None:
        checked: list[AssignmentValue] = []
        for value in values:
            if value is not FREE and value not in (0, 1):
                raise InvalidIndexError(f"Assignment values must be 0, 1 or FREE, got {value!r}")
            checked.append(value if value is FREE else int(value))  # type: ignore [arg-type]
        self.values: tuple[AssignmentValue, ...] = tuple(checked)

    @classmethod
    def free(cls, n: int) -> Self:
        """The assignment that fixes nothing."""
        return cls([FREE] * n)

    @classmethod
    def parse(cls, text: str) -> Self:
        """Parse a string like ``"01**1"``.

        Raises
        ------
        InvalidIndexError
            A character other than ``0``, ``1`` or ``*`` was found.
        """
        values: list[AssignmentValue] = []
        for char in text:
            if char == "*":
                values.append(FREE)
            elif char in "01":
                values.append(1 if char == "1" else 0)
            else:
                raise InvalidIndexError(f"Invalid partial assignment character {char!r}")
        return cls(values)

    @property
    def n(self) -> int:
        """The ambient dimension."""
        return len(self.values)

    @property
    def support(self) -> frozenset[int]:
        """``supp(w)``, the coordinates that are fixed."""
        return frozenset(index for index, value in enumerate(self.values) if value is not FREE)

    def fixed_items(self) -> Iterator[tuple[int, Bit]]:
        """Iterate over ``(index, value)`` for every fixed coordinate, in index order."""
        for index, value in enumerate(self.values):
            if value is not FREE:
                yield index, value

    def is_free(self, index: int) -> bool:
        return self.values[index] is FREE

    def fix(self, index: int, value: Bit) -> PartialAssignment:
        """Return a copy with ``index`` fixed to ``value``.

        Raises
        ------
        InvalidIndexError
            ``index`` is out of range.
        ConflictingAssignmentError
            ``index`` is already fixed.
        """
        if not 0 <= index < self.n:
            raise InvalidIndexError(f"Coordinate {index} is out of range for n={self.n}")
        if self.values[index] is not FREE:
            raise ConflictingAssignmentError(index)
        values = list(self.values)
        values[index] = value
        return PartialAssignment(values)

    def merge(self, other: PartialAssignment) -> PartialAssignment:
        """Combine two assignments fixing disjoint coordinates.

        Raises
        ------
        DimensionMismatchError
            The assignments have different dimensions.
        ConflictingAssignmentError
            Both assignments fix the same coordinate.
        """
        if other.n != self.n:
            raise DimensionMismatchError(self.n, other.n)
        merged = self
        for index, value in other.fixed_items():
            merged = merged.fix(index, value)
        return merged

    def is_consistent(self, bits: Sequence[int]) -> bool:
        """Whether ``bits`` lies in the subcube ``X_w``."""
        if len(bits) != self.n:
            raise DimensionMismatchError(self.n, len(bits))
        return all(bits[index] == value for index, value in self.fixed_items())

    def __getitem__(self, index: int) -> AssignmentValue:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialAssignment):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __str__(self) -> str:
        return "".join("*" if value is FREE else str(value) for value in self.values)

    def __repr__(self) -> str:
        return f"PartialAssignment({str(self)!r})"
