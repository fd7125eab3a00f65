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

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = ("JuntaError", "EnumerationLimitError", "ProbabilityOutOfRangeError")


class JuntaError(ValueError):
    """Base class for every error raised by juntaid3.

    This subclasses :exc:`ValueError` as every error in the library is caused by invalid input.
    """


class EnumerationLimitError(JuntaError):
    """A computation would need to enumerate more junta patterns than allowed.

    Parameters
    ----------
    size:
        The requested arity.
    limit:
        The largest allowed arity.

    Attributes
    ----------
    size:
        The requested arity.
    limit:
        The largest allowed arity.
    """

    def __init__(self, size: int, limit: int) -> None:
        self.size: int = size
        self.limit: int = limit
        super().__init__(f"Cannot enumerate {size} coordinates, the limit is {limit}")


class ProbabilityOutOfRangeError(JuntaError):
    """A probability was outside of [0, 1].

    Parameters
    ----------
    value:
        The offending value.
    """

    def __init__(self, value: float) -> None:
        self.value: float = value
        super().__init__(f"Expected a probability in [0, 1], got {value!r}")
