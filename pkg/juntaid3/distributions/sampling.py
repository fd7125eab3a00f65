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

from logging import getLogger
from typing import TYPE_CHECKING

import numpy as np
from numpy.random import Generator

from ..common.random import make_generator
from ..core import Dataset, DimensionMismatchError
from .errors import InvalidParameterError

if TYPE_CHECKING:
    from typing import Final, Union

    from numpy.typing import NDArray

    from ..core import ProductDistribution, TargetFunction

    SeedLike = Union[int, Generator]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("sample_features", "sample_dataset")


def _generator(seed: SeedLike) -> Generator:
    return seed if isinstance(seed, Generator) else make_generator(seed)


def sample_features(distribution: ProductDistribution, m: int, seed: SeedLike) -> NDArray[np.bool_]:
    """Draw a ``(m, n)`` matrix of independent bits, column ``i`` being ``Bernoulli(p_i)``."""
    rng = _generator(seed)
    features = np.empty((m, distribution.n), dtype=np.bool_)
    for index, p in enumerate(distribution.probs):
        features[:, index] = rng.random(m) < p
    return features


def sample_dataset(distribution: ProductDistribution, target: TargetFunction, m: int, seed: SeedLike) -> Dataset:
    """Draw ``m`` i.i.d. examples ``(x, f(x))`` with ``x ~ D``.

    The same seed always produces the same dataset.

    Parameters
    ----------
    distribution:
        ``D``.
    target:
        ``f``, the labels are always ``f(x)``.
    m:
        The number of examples.
    seed:
        An integer seed, or a generator to draw from.

    Raises
    ------
    InvalidParameterError
        ``m < 1``.
    DimensionMismatchError
        ``D`` and ``f`` have different dimensions.
    """
    if m < 1:
        raise InvalidParameterError("m", m, "at least 1")
    if distribution.n != target.n:
        raise DimensionMismatchError(target.n, distribution.n)
    features = sample_features(distribution, m, seed)
    logger.debug("Sampled %s examples over %s coordinates", m, distribution.n)
    return Dataset(features, target.evaluate_many(features), n=target.n)
