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

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

from ..core import DimensionMismatchError
from .errors import ZeroMassRestrictionError

if TYPE_CHECKING:
    from typing import Final, Iterator

    from numpy.typing import NDArray

    from ..core import PartialAssignment, ProductDistribution, TargetFunction

__all__: Final[tuple[str, ...]] = ("SubcubeWeight", "SubcubeWeights", "subcube_weights", "pattern_bits")


@lru_cache(maxsize=32)
def pattern_bits(k: int) -> NDArray[np.bool_]:
    """A read-only ``(k, 2^k)`` matrix where entry ``(t, b)`` is bit ``t`` of pattern ``b``."""
    patterns = np.arange(1 << k, dtype=np.int64)
    bits = ((patterns[np.newaxis, :] >> np.arange(k, dtype=np.int64)[:, np.newaxis]) & 1).astype(np.bool_)
    bits.setflags(write=False)
    return bits


class SubcubeWeight:
    """The probability of one junta pattern under a restricted distribution.

    Attributes
    ----------
    pattern:
        The pattern, bit ``t`` is the value of ``x_{support[t]}``.
    weight:
        ``Pr_{D_w}(x_J = pattern)``.
    """

    __slots__ = ("pattern", "weight")

    def __init__(self, pattern: int, weight: float) -> None:
        self.pattern: int = pattern
        self.weight: float = weight

    def __repr__(self) -> str:
        return f"SubcubeWeight(pattern={self.pattern}, weight={self.weight!r})"


class SubcubeWeights:
    """The distribution ``D_w`` projected on the junta support.

    Attributes
    ----------
    support:
        The junta support ``J``.
    weights:
        A read-only array of ``2^k`` pattern probabilities. Patterns that disagree with ``w`` have weight 0, the
        rest sum to 1.
    consistent:
        A read-only mask of the patterns that agree with ``w``.
    mass:
        ``Pr_D(X_w)``, the probability of the whole subcube.
    """

    __slots__ = ("support", "weights", "consistent", "mass")

    def __init__(
        self, support: tuple[int, ...], weights: NDArray[np.float64], consistent: NDArray[np.bool_], mass: float
    ) -> None:
        weights.setflags(write=False)
        consistent.setflags(write=False)
        self.support: tuple[int, ...] = support
        self.weights: NDArray[np.float64] = weights
        self.consistent: NDArray[np.bool_] = consistent
        self.mass: float = mass

    def __iter__(self) -> Iterator[SubcubeWeight]:
        """Iterate over the patterns consistent with the restriction."""
        for pattern in np.flatnonzero(self.consistent):
            yield SubcubeWeight(int(pattern), float(self.weights[pattern]))

    def __len__(self) -> int:
        return int(self.consistent.sum())

    def label_prob(self, truth_table: NDArray[np.uint8]) -> float:
        """``Pr_{D_w}(y = 1)`` for a truth table over the same support."""
        return float(self.weights @ truth_table)

    def __repr__(self) -> str:
        return f"<SubcubeWeights support={self.support} patterns={len(self)} mass={self.mass!r}>"


def subcube_weights(
    distribution: ProductDistribution, target: TargetFunction, assignment: PartialAssignment
) -> SubcubeWeights:
    """Enumerate the ``2^k`` junta patterns and weigh them under ``D_w``.

    A free junta coordinate contributes ``p_i`` or ``1 - p_i``. A fixed junta coordinate contributes 1 to the
    patterns that agree with ``w`` and 0 to the rest. Fixed coordinates outside the support only change
    :attr:`SubcubeWeights.mass`.

    Raises
    ------
    DimensionMismatchError
        The distribution, target and assignment do not share ``n``.
    ZeroMassRestrictionError
        ``Pr_D(X_w) = 0``.
    """
    if distribution.n != target.n:
        raise DimensionMismatchError(target.n, distribution.n)
    if assignment.n != target.n:
        raise DimensionMismatchError(target.n, assignment.n)

    probs = distribution.probs
    weights = np.ones(1, dtype=np.float64)
    consistent = np.ones(1, dtype=np.bool_)
    mass = 1.0
    for coordinate in target.support:
        value = assignment[coordinate]
        if isinstance(value, int):
            mass *= probs[coordinate] if value else 1.0 - probs[coordinate]
            weights = np.concatenate((weights * (1 - value), weights * value))
            consistent = np.concatenate((consistent & (value == 0), consistent & (value == 1)))
        else:
            weights = np.concatenate((weights * (1.0 - probs[coordinate]), weights * probs[coordinate]))
            consistent = np.concatenate((consistent, consistent))

    support = set(target.support)
    for index, value in assignment.fixed_items():
        if index not in support:
            mass *= probs[index] if value else 1.0 - probs[index]

    if mass <= 0.0:
        raise ZeroMassRestrictionError(assignment)
    return SubcubeWeights(target.support, weights, consistent, float(mass))
