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

from typing import TYPE_CHECKING

from ..common.errors import JuntaError

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "DimensionMismatchError",
    "InvalidIndexError",
    "InvalidTreeError",
    "DatasetFormatError",
    "ConflictingAssignmentError",
)


class DimensionMismatchError(JuntaError):
    """Two objects that should share the ambient dimension ``n`` do not.

    Parameters
    ----------
    expected:
        The dimension that was expected.
    got:
        The dimension that was provided.
    """

    def __init__(self, expected: int, got: int) -> None:
        self.expected: int = expected
        self.got: int = got
        super().__init__(f"Dimension mismatch: expected {expected}, got {got}")


class InvalidIndexError(JuntaError):
    """A coordinate index is out of range, repeated or otherwise unusable."""


class InvalidTreeError(JuntaError):
    """A decision tree violates its structural invariants."""


class DatasetFormatError(JuntaError):
    """A dataset file does not follow the dataset text format.

    Parameters
    ----------
    line:
        The 1-based line number the error was found on.
    reason:
        What was wrong with it.
    """

    def __init__(self, line: int, reason: str) -> None:
        self.line: int = line
        super().__init__(f"Invalid dataset on line {line}: {reason}")


class ConflictingAssignmentError(JuntaError):
    """A restriction tried to re-assign a coordinate that was already fixed.

    Parameters
    ----------
    index:
        The coordinate.
    """

    def __init__(self, index: int) -> None:
        self.index: int = index
        super().__init__(f"Coordinate {index} is already fixed")
