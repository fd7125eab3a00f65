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
from ..core import DimensionMismatchError, PartialAssignment, TargetFunction
from .errors import RestrictionOutsideSupportError

if TYPE_CHECKING:
    from typing import Final, Iterator, Sequence

    from numpy.typing import ArrayLike, NDArray

__all__: Final[tuple[str, ...]] = (
    "FOURIER_LIMIT",
    "FourierExpansion",
    "walsh_hadamard",
    "subset_signs",
    "fourier_coeffs",
    "restrict_target",
)

FOURIER_LIMIT: Final[int] = 20


def walsh_hadamard(values: ArrayLike) -> NDArray[np.float64]:
    """The unnormalized Walsh-Hadamard transform ``sum_x (-1)^|I & x| v(x)`` for every mask ``I``.

    Uses the in-place butterfly, ``O(k 2^k)``.

    Raises
    ------
    DimensionMismatchError
        The length is not a power of two.
    """
    result = np.array(values, dtype=np.float64).reshape(-1)
    size = int(result.shape[0])
    if size == 0 or size & (size - 1):
        raise DimensionMismatchError(1 << max(size - 1, 0).bit_length(), size)
    half = 1
    while half < size:
        view = result.reshape(-1, 2, half)
        zero = view[:, 0, :].copy()
        one = view[:, 1, :].copy()
        view[:, 0, :] = zero + one
        view[:, 1, :] = zero - one
        half *= 2
    return result


def subset_signs(k: int) -> NDArray[np.float64]:
    """``(-1)^|I|`` for every mask ``I`` of ``k`` bits."""
    signs = np.ones(1, dtype=np.float64)
    for _ in range(k):
        signs = np.concatenate((signs, -signs))
    return signs


class FourierExpansion:
    """``f = sum_I alpha_I chi_I`` with ``chi_I(x) = prod_{i in I} (2 x_i - 1)``.

    Parameters
    ----------
    k:
        The arity.
    coeffs:
        ``2^k`` coefficients, entry ``I`` is the coefficient of the subset with bitmask ``I``.

    Attributes
    ----------
    k:
        The arity.
    """

    __slots__ = ("k", "_coeffs")

    def __init__(self, k: int, coeffs: ArrayLike) -> None:
        array = np.array(coeffs, dtype=np.float64).reshape(-1)
        if array.shape[0] != 1 << k:
            raise DimensionMismatchError(1 << k, int(array.shape[0]))
        array.setflags(write=False)
        self.k: int = k
        self._coeffs: NDArray[np.float64] = array

    @property
    def coeffs(self) -> NDArray[np.float64]:
        """A read-only dense array indexed by subset bitmask."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """The largest ``|I|`` with ``alpha_I != 0``, or -1 for the zero function."""
        nonzero = np.flatnonzero(self._coeffs)
        if nonzero.size == 0:
            return -1
        return max(bin(int(mask)).count("1") for mask in nonzero)

    def __getitem__(self, mask: int) -> float:
        return float(self._coeffs[mask])

    def items(self) -> Iterator[tuple[int, float]]:
        """Iterate over ``(mask, alpha_I)`` for the nonzero coefficients."""
        for mask in np.flatnonzero(self._coeffs):
            yield int(mask), float(self._coeffs[mask])

    def evaluate(self, bits: Sequence[int]) -> float:
        """``sum_I alpha_I chi_I(x)`` for a single input of ``k`` bits."""
        if len(bits) != self.k:
            raise DimensionMismatchError(self.k, len(bits))
        signs = [2 * int(bit) - 1 for bit in bits]
        total = 0.0
        for mask, coefficient in self.items():
            term = coefficient
            for position in range(self.k):
                if mask >> position & 1:
                    term *= signs[position]
            total += term
        return total

    def to_truth_table(self) -> NDArray[np.float64]:
        """Reconstruct the function on all ``2^k`` inputs."""
        return walsh_hadamard(self._coeffs * subset_signs(self.k))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FourierExpansion):
            return NotImplemented
        return self.k == other.k and bool(np.array_equal(self._coeffs, other._coeffs))

    def __hash__(self) -> int:
        return hash((self.k, self._coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"FourierExpansion(k={self.k}, coeffs={dict(self.items())!r})"


def fourier_coeffs(truth_table: ArrayLike) -> FourierExpansion:
    """``alpha_I = 2^-k sum_x chi_I(x) f(x)`` for every subset ``I``.

    Parameters
    ----------
    truth_table:
        ``2^k`` values, entry ``x`` is ``f`` at the input whose bit ``t`` is ``x_t``.

    Raises
    ------
    EnumerationLimitError
        ``k`` is above :data:`FOURIER_LIMIT`.
    DimensionMismatchError
        The length is not a power of two.
    """
    table = np.asarray(truth_table, dtype=np.float64).reshape(-1)
    size = int(table.shape[0])
    k = max(size - 1, 0).bit_length()
    if k > FOURIER_LIMIT:
        raise EnumerationLimitError(k, FOURIER_LIMIT)
    transform = walsh_hadamard(table)
    return FourierExpansion(k, transform * subset_signs(k) / size)


def restrict_target(target: TargetFunction, assignment: PartialAssignment, *, strict: bool = True) -> TargetFunction:
    """``f_w``, the junta with every support coordinate fixed by ``w`` substituted.

    The result is a junta over the free support coordinates.

    Parameters
    ----------
    target:
        ``f``.
    assignment:
        ``w``.
    strict:
        Whether fixing a coordinate outside of the support is an error. When ``False`` those coordinates are ignored,
        as ``f`` does not read them.

    Raises
    ------
    DimensionMismatchError
        ``w`` does not have ``n`` coordinates.
    RestrictionOutsideSupportError
        ``strict`` is set and ``w`` fixes a coordinate outside of the support.
    """
    if assignment.n != target.n:
        raise DimensionMismatchError(target.n, assignment.n)
    support = set(target.support)
    if strict:
        for index, _ in assignment.fixed_items():
            if index not in support:
                raise RestrictionOutsideSupportError(index)

    base = 0
    free_positions: list[int] = []
    for position, coordinate in enumerate(target.support):
        value = assignment[coordinate]
        if isinstance(value, int):
            base |= value << position
        else:
            free_positions.append(position)

    patterns = np.arange(1 << len(free_positions), dtype=np.int64)
    index = np.full_like(patterns, base)
    for new_position, old_position in enumerate(free_positions):
        index |= ((patterns >> new_position) & 1) << old_position
    free_support = [target.support[position] for position in free_positions]
    return TargetFunction(target.n, free_support, target.truth_table[index].tolist())
