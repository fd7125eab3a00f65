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

from ..core.errors import InvalidIndexError
from ..impurity import GINI, split_gains
from .errors import DegenerateFeatureError, EmptySampleError

if TYPE_CHECKING:
    from typing import Final, Sequence

    from numpy.typing import NDArray

    from ..core import Dataset
    from ..impurity import ImpuritySpec

__all__: Final[tuple[str, ...]] = (
    "empirical_gains",
    "empirical_gain",
    "empirical_I",
    "conditional_difference",
)


def _counts(dataset: Dataset, features: Sequence[int]) -> tuple[int, int, NDArray[np.int64], NDArray[np.int64]]:
    if dataset.m == 0:
        raise EmptySampleError()
    for feature in features:
        if not 0 <= feature < dataset.n:
            raise InvalidIndexError(f"Feature {feature} is out of range for n={dataset.n}")
    columns = dataset.features[:, list(features)]
    positive_rows = dataset.labels.astype(np.bool_)
    ones = columns.sum(axis=0, dtype=np.int64)
    positive_ones = columns[positive_rows].sum(axis=0, dtype=np.int64)
    return dataset.m, int(positive_rows.sum()), ones, positive_ones


def empirical_gains(dataset: Dataset, features: Sequence[int], spec: ImpuritySpec = GINI) -> NDArray[np.float64]:
    """``Gain(S, i)`` for every ``i`` in ``features``, in the same order.

    Raises
    ------
    EmptySampleError
        The sample is empty.
    InvalidIndexError
        A feature is out of range.
    """
    m, positives, ones, positive_ones = _counts(dataset, features)
    return split_gains(m, positives, ones, positive_ones, spec)


def empirical_gain(dataset: Dataset, feature: int, spec: ImpuritySpec = GINI) -> float:
    """The gain of splitting ``S`` on ``x_feature``.

    ``C(Pr[y=1]) - Pr[x_i=1] C(Pr[y=1 | x_i=1]) - Pr[x_i=0] C(Pr[y=1 | x_i=0])``. A branch with no examples
    contributes nothing, so a feature that is constant on ``S`` has a gain of 0.

    Raises
    ------
    EmptySampleError
        The sample is empty.
    InvalidIndexError
        The feature is out of range.
    """
    return float(empirical_gains(dataset, (feature,), spec)[0])


def empirical_I(dataset: Dataset, feature: int) -> float:
    """The dependence measure ``I(S, i) = E[y] E[x_i] - E[y x_i]``.

    Raises
    ------
    EmptySampleError
        The sample is empty.
    InvalidIndexError
        The feature is out of range.
    """
    m, positives, ones, positive_ones = _counts(dataset, (feature,))
    return (positives / m) * (int(ones[0]) / m) - int(positive_ones[0]) / m


def conditional_difference(dataset: Dataset, feature: int) -> float:
    """``Pr[y=1 | x_i=1] - Pr[y=1 | x_i=0]``.

    This equals ``-I(S, i) / (p(1 - p))`` where ``p = Pr[x_i = 1]``.

    Raises
    ------
    EmptySampleError
        The sample is empty.
    DegenerateFeatureError
        The feature is constant on the sample.
    """
    m, positives, ones, positive_ones = _counts(dataset, (feature,))
    one_count = int(ones[0])
    if one_count in (0, m):
        raise DegenerateFeatureError(feature)
    positive_one_count = int(positive_ones[0])
    return positive_one_count / one_count - (positives - positive_one_count) / (m - one_count)
