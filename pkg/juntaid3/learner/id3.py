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

from ..common.random import make_generator
from ..core import InvalidIndexError, Leaf, Node
from ..impurity import split_gains
from .errors import EmptySampleError
from .policy import LearnerPolicy, TieBreak

if TYPE_CHECKING:
    from typing import Final, Iterable, Sequence

    from numpy.random import Generator
    from numpy.typing import NDArray

    from ..core import Dataset, DecisionTree

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("id3_learn", "choose_feature", "majority_label")


def majority_label(positives: float, total: float) -> int:
    """The majority label of a sample (or distribution) with the given mass of positives. Ties are labelled 0."""
    return 1 if 2 * positives > total else 0


def choose_feature(
    candidates: Sequence[int], gains: NDArray[np.float64], policy: LearnerPolicy, rng: Generator | None
) -> int:
    """The argmax of ``gains`` over ``candidates``, with ties broken by the policy.

    Gains are compared exactly, so only features with bit-identical gains are tied.
    """
    best = gains.max()
    tied = [feature for feature, gain in zip(candidates, gains) if gain >= best]
    if len(tied) == 1 or policy.tie_break is TieBreak.LOWEST_INDEX or rng is None:
        return min(tied)
    return tied[int(rng.integers(len(tied)))]


class _Recursion:
    __slots__ = ("policy", "rng")

    def __init__(self, policy: LearnerPolicy, rng: Generator | None) -> None:
        self.policy: LearnerPolicy = policy
        self.rng: Generator | None = rng

    def learn(
        self,
        features: NDArray[np.bool_],
        labels: NDArray[np.bool_],
        available: tuple[int, ...],
        parent_majority: int,
    ) -> DecisionTree:
        m = int(labels.shape[0])
        if m == 0:
            return Leaf(parent_majority)

        positives = int(labels.sum())
        if positives in (0, m):
            return Leaf(1 if positives else 0)

        majority = majority_label(positives, m)
        if not available:
            return Leaf(majority)

        columns = features[:, list(available)]
        ones = columns.sum(axis=0, dtype=np.int64)
        positive_ones = columns[labels].sum(axis=0, dtype=np.int64)
        gains = split_gains(m, positives, ones, positive_ones, self.policy.impurity)
        feature = choose_feature(available, gains, self.policy, self.rng)
        logger.debug("Splitting %s examples on x%s (gain %r)", m, feature, float(gains.max()))

        remaining = tuple(index for index in available if index != feature)
        mask = features[:, feature]
        zero = self.learn(features[~mask], labels[~mask], remaining, majority)
        one = self.learn(features[mask], labels[mask], remaining, majority)
        return Node(feature, zero, one)


def id3_learn(
    dataset: Dataset,
    features: Iterable[int] | None = None,
    policy: LearnerPolicy | None = None,
    seed: int = 0,
) -> DecisionTree:
    """Grow a decision tree with ID3.

    A pure sample becomes a leaf. Otherwise the node splits on the available feature with the largest gain and
    recurses on both halves without that feature. Two cases the textbook recursion leaves open are closed by the
    policy: a branch no example reaches becomes a leaf with the parent's majority label, and a impure sample with no
    features left becomes a majority leaf. Majority ties are labelled 0.

    Parameters
    ----------
    dataset:
        The training sample ``S``.
    features:
        The candidate features ``A``. Defaults to every feature.
    policy:
        The learner policy. Defaults to gini with lowest index tie breaking.
    seed:
        Only used by :attr:`TieBreak.SEEDED_RANDOM`.

    Raises
    ------
    EmptySampleError
        ``dataset`` has no examples.
    InvalidIndexError
        A feature is out of range.
    """
    if dataset.m == 0:
        raise EmptySampleError()
    policy = policy or LearnerPolicy()
    available = tuple(sorted(set(range(dataset.n) if features is None else features)))
    for feature in available:
        if not 0 <= feature < dataset.n:
            raise InvalidIndexError(f"Feature {feature} is out of range for n={dataset.n}")

    rng = make_generator(seed) if policy.tie_break is TieBreak.SEEDED_RANDOM else None
    labels = dataset.labels.astype(np.bool_)
    return _Recursion(policy, rng).learn(dataset.features, labels, available, 0)
