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

if TYPE_CHECKING:
    from typing import Final, Union

    from numpy.typing import NDArray

    from .impurity import ImpuritySpec

    Mass = Union[int, float]

__all__: Final[tuple[str, ...]] = ("split_gains",)


def split_gains(
    total: Mass,
    positives: Mass,
    ones: NDArray[np.generic],
    positive_ones: NDArray[np.generic],
    spec: ImpuritySpec,
) -> NDArray[np.float64]:
    """The gain of splitting on every feature, from the masses of the four label/feature events.

    The masses can be integer counts of a sample or probabilities of a distribution.

    Parameters
    ----------
    total:
        The total mass, must be positive.
    positives:
        The mass of ``y = 1``.
    ones:
        Per feature, the mass of ``x_i = 1``.
    positive_ones:
        Per feature, the mass of ``x_i = 1 and y = 1``.
    spec:
        The impurity function.

    A branch with no mass contributes nothing, so a feature that is constant has a gain of exactly 0.
    """
    zeros = total - ones
    degenerate = (ones <= 0) | (zeros <= 0)
    safe_ones = np.where(degenerate, 1, ones)
    safe_zeros = np.where(degenerate, 1, zeros)

    p_one = ones / total
    q_one = np.clip(positive_ones / safe_ones, 0.0, 1.0)
    q_zero = np.clip((positives - positive_ones) / safe_zeros, 0.0, 1.0)
    gains = spec(positives / total) - (p_one * spec(q_one) + (1.0 - p_one) * spec(q_zero))
    return np.where(degenerate, 0.0, gains)
