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

import numpy as np

from ..common.errors import EnumerationLimitError
from .errors import DimensionMismatchError, InvalidIndexError

if TYPE_CHECKING:
    from typing import Final, Iterable, Sequence

    from numpy.random import Generator
    from numpy.typing import NDArray

__all__: Final[tuple[str, ...]] = (
    "ENUMERATION_LIMIT",
    "TargetFunction",
    "make_parity",
    "make_junta",
    "random_junta",
    "evaluate_target",
)

ENUMERATION_LIMIT: Final[int] = 25


class TargetFunction:
    """A k-junta ``f(x) = f~(x_J)``.

    Parameters
    ----------
    n:
        The ambient dimension.
    support:
        The strictly increasing coordinates ``J`` the function depends on.
    truth_table:
        ``2^k`` labels. Entry ``b`` is the label for the support pattern where bit ``t`` of ``b`` is the value of
        ``x_{support[t]}`` (the lowest support index is the least significant bit).

    Raises
    ------
    InvalidIndexError
        The support is not strictly increasing, or has a index outside of ``[0, n)``.
    EnumerationLimitError
        ``k`` is larger than :data:`ENUMERATION_LIMIT`.
    DimensionMismatchError
        The truth table does not have ``2^k`` entries.
    """

    __slots__ = ("n", "support", "_table")

    def __init__(self, n: int, support: Iterable[int], truth_table: Iterable[int]) -> None:
        if n < 1:
            raise InvalidIndexError(f"The dimension must be positive, got {n}")
        support_tuple = tuple(int(index) for index in support)
        if any(later <= earlier for earlier, later in zip(support_tuple, support_tuple[1:])):
            raise InvalidIndexError(f"Support must be strictly increasing, got {support_tuple}")
        if support_tuple and (support_tuple[0] < 0 or support_tuple[-1] >= n):
            raise InvalidIndexError(f"Support {support_tuple} is out of range for n={n}")
        if len(support_tuple) > ENUMERATION_LIMIT:
            raise EnumerationLimitError(len(support_tuple), ENUMERATION_LIMIT)

        table = np.array(list(truth_table), dtype=np.uint8)
        if table.shape[0] != 1 << len(support_tuple):
            raise DimensionMismatchError(1 << len(support_tuple), int(table.shape[0]))
        if np.any(table > 1):
            raise InvalidIndexError("Truth table entries must be 0 or 1")
        table.setflags(write=False)

        self.n: int = n
        self.support: tuple[int, ...] = support_tuple
        self._table: NDArray[np.uint8] = table

    @property
    def k(self) -> int:
        """The number of relevant coordinates."""
        return len(self.support)

    @property
    def truth_table(self) -> NDArray[np.uint8]:
        """A read-only view of ``f~``."""
        return self._table

    @property
    def is_constant(self) -> bool:
        return bool(np.all(self._table == self._table[0]))

    def pattern_index(self, bits: Sequence[int]) -> int:
        """The truth table index of the support pattern of ``bits``."""
        index = 0
        for position, coordinate in enumerate(self.support):
            if bits[coordinate]:
                index |= 1 << position
        return index

    def evaluate_many(self, features: NDArray[np.bool_]) -> NDArray[np.uint8]:
        """Label every row of a ``(m, n)`` feature matrix."""
        if features.shape[1] != self.n:
            raise DimensionMismatchError(self.n, int(features.shape[1]))
        index = np.zeros(features.shape[0], dtype=np.int64)
        for position, coordinate in enumerate(self.support):
            index |= features[:, coordinate].astype(np.int64) << position
        return self._table[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TargetFunction):
            return NotImplemented
        return self.n == other.n and self.support == other.support and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.n, self.support, self._table.tobytes()))

    def __repr__(self) -> str:
        return f"TargetFunction(n={self.n}, support={self.support}, truth_table={self._table.tolist()})"


def evaluate_target(target: TargetFunction, bits: Sequence[int]) -> int:
    """Evaluate ``f`` on a single input.

    Raises
    ------
    DimensionMismatchError
        ``bits`` does not have length ``n``.
    """
    if len(bits) != target.n:
        raise DimensionMismatchError(target.n, len(bits))
    return int(target.truth_table[target.pattern_index(bits)])


def make_parity(n: int, support: Iterable[int]) -> TargetFunction:
    """The parity ``chi_J``, which is ``1`` iff an odd number of the bits in ``J`` are set.

    Raises
    ------
    InvalidIndexError
        ``support`` is empty or invalid.
    """
    support_tuple = tuple(sorted(int(index) for index in support))
    if not support_tuple:
        raise InvalidIndexError("A parity needs a non-empty support")
    if len(support_tuple) > ENUMERATION_LIMIT:
        raise EnumerationLimitError(len(support_tuple), ENUMERATION_LIMIT)
    patterns = np.arange(1 << len(support_tuple), dtype=np.int64)
    table = np.zeros_like(patterns)
    for position in range(len(support_tuple)):
        table ^= (patterns >> position) & 1
    return TargetFunction(n, support_tuple, table.tolist())


def make_junta(n: int, support: Iterable[int], truth_table: Iterable[int]) -> TargetFunction:
    """A junta with a explicit truth table. Alias of the :class:`TargetFunction` constructor."""
    return TargetFunction(n, support, truth_table)


def random_junta(n: int, support: Iterable[int], rng: Generator) -> TargetFunction:
    """A junta with a uniformly random, non-constant truth table.

    Constant tables are rejected and redrawn, so ``support`` must have at least one coordinate.
    """
    support_tuple = tuple(support)
    if not support_tuple:
        raise InvalidIndexError("A non-constant junta needs a non-empty support")
    if len(support_tuple) > ENUMERATION_LIMIT:
        raise EnumerationLimitError(len(support_tuple), ENUMERATION_LIMIT)
    while True:
        table = rng.integers(0, 2, size=1 << len(support_tuple), dtype=np.uint8)
        if not np.all(table == table[0]):
            return TargetFunction(n, support_tuple, table.tolist())
