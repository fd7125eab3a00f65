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

    from ..core import PartialAssignment

__all__: Final[tuple[str, ...]] = ("ZeroMassRestrictionError", "FixedCoordinateError")


class ZeroMassRestrictionError(JuntaError):
    """The subcube of a restriction has probability 0, so the restricted distribution is undefined.

    This happens when a coordinate is fixed to a value its Bernoulli parameter never takes.

    Parameters
    ----------
    assignment:
        The restriction ``w``.
    """

    def __init__(self, assignment: PartialAssignment) -> None:
        self.assignment: PartialAssignment = assignment
        super().__init__(f"The subcube of {assignment} has probability 0")


class FixedCoordinateError(JuntaError):
    """A statistic was requested for a coordinate the restriction already fixes.

    Parameters
    ----------
    index:
        The coordinate.
    """

    def __init__(self, index: int) -> None:
        self.index: int = index
        super().__init__(f"Coordinate {index} is fixed by the restriction")
