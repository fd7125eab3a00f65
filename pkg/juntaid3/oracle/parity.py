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

"""Closed forms for parities under product distributions, and the bounds derived from them.

With ``eps_i = p_i - 1/2`` and ``k'`` free support coordinates, an odd number of the free bits is set with
probability ``1/2 - (-1)^k' 2^(k'-1) prod(eps_i)``.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from ..core import InvalidIndexError, PartialAssignment, ProductDistribution
from .errors import FixedCoordinateError

if TYPE_CHECKING:
    from typing import Final, Iterable, Sequence, Union

    ProbabilityVector = Union[ProductDistribution, Sequence[float]]

__all__: Final[tuple[str, ...]] = (
    "parity_label_prob_closed_form",
    "parity_I_closed_form",
    "parity_lower_bound",
    "gain_upper_bound",
    "gain_lower_bound",
)


def _split_support(
    probs: ProbabilityVector, support: Iterable[int], assignment: PartialAssignment | None
) -> tuple[list[float], list[int], int]:
    """The free support parameters, the free support coordinates and the parity of the fixed support bits."""
    values = probs.probs if isinstance(probs, ProductDistribution) else np.asarray(probs, dtype=np.float64)
    n = int(values.shape[0])
    assignment = PartialAssignment.free(n) if assignment is None else assignment
    free_probs: list[float] = []
    free_coordinates: list[int] = []
    fixed_parity = 0
    for coordinate in sorted(set(support)):
        if not 0 <= coordinate < n:
            raise InvalidIndexError(f"Coordinate {coordinate} is out of range for n={n}")
        value = assignment[coordinate]
        if isinstance(value, int):
            fixed_parity ^= value
        else:
            free_probs.append(float(values[coordinate]))
            free_coordinates.append(coordinate)
    return free_probs, free_coordinates, fixed_parity


def parity_label_prob_closed_form(
    probs: ProbabilityVector, support: Iterable[int], assignment: PartialAssignment | None = None
) -> float:
    """``Pr_{D_w}(chi_J(x) = 1)`` without enumeration.

    When the fixed support bits have odd parity the label is flipped, so the probability is mirrored around 1/2.
    """
    free_probs, _, fixed_parity = _split_support(probs, support, assignment)
    k_free = len(free_probs)
    if k_free == 0:
        return float(fixed_parity)
    bias = (-1) ** k_free * 2.0 ** (k_free - 1) * float(np.prod([p - 0.5 for p in free_probs]))
    return 0.5 + bias if fixed_parity else 0.5 - bias


def parity_I_closed_form(
    probs: ProbabilityVector, support: Iterable[int], assignment: PartialAssignment | None, feature: int
) -> float:
    """``|I(D_w, j)|`` for the parity over ``support``.

    This is ``p_j (1 - p_j) 2^(k'-1) prod |eps_i|`` over the free support coordinates other than ``j``.

    Raises
    ------
    InvalidIndexError
        ``feature`` is not in the support.
    FixedCoordinateError
        ``w`` fixes ``feature``.
    """
    support_set = set(support)
    if feature not in support_set:
        raise InvalidIndexError(f"Coordinate {feature} is not in the support")
    free_probs, free_coordinates, _ = _split_support(probs, support_set, assignment)
    if feature not in free_coordinates:
        raise FixedCoordinateError(feature)

    p_j = free_probs[free_coordinates.index(feature)]
    others = [abs(p - 0.5) for p, coordinate in zip(free_probs, free_coordinates) if coordinate != feature]
    return p_j * (1.0 - p_j) * 2.0 ** (len(free_probs) - 1) * float(np.prod(others))


def parity_lower_bound(alpha: float, c: float, k: int) -> float:
    """``alpha^2 (2c)^(k-1)``, a lower bound on ``|I(D_w, j)|`` for a k-parity under a (alpha, c)-distribution."""
    return alpha**2 * (2 * c) ** (k - 1)


def gain_upper_bound(gamma: float, epsilon: float) -> float:
    """``2 gamma eps``, an upper bound on the gain of a feature with ``|I| <= eps`` for a gamma-Lipschitz impurity."""
    return 2 * gamma * epsilon


def gain_lower_bound(beta: float, epsilon: float) -> float:
    """``beta eps^2 / 8``, a lower bound on the gain of a feature with ``|I| >= eps`` for a beta-strongly concave
    impurity, including the slack lost when ``I`` is only estimated to within ``eps / 2``.
    """
    return beta * epsilon**2 / 8
