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
from ..core import DimensionMismatchError, InvalidIndexError, Leaf, Node, PartialAssignment
from ..oracle import ZeroMassRestrictionError, exact_gains, subcube_weights
from .id3 import choose_feature, majority_label
from .policy import LearnerPolicy, TieBreak

if TYPE_CHECKING:
    from typing import Final, Iterable

    from numpy.random import Generator

    from ..core import DecisionTree, ProductDistribution, TargetFunction
    from ..impurity import ImpuritySpec

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("id3_population",)


def id3_population(
    distribution: ProductDistribution,
    target: TargetFunction,
    features: Iterable[int] | None = None,
    spec: ImpuritySpec | None = None,
    policy: LearnerPolicy | None = None,
    seed: int = 0,
) -> DecisionTree:
    """Run the ID3 recursion with exact distributional gains instead of sample estimates.

    Every ``Gain(S_w, i)`` is replaced by ``Gain(D_w, i)`` from the oracle, so there is no sampling noise. A node is
    a leaf when ``Pr_{D_w}(y = 1)`` is 0 or 1, and a branch with probability 0 becomes a leaf with the parent's
    majority label. The depth is capped at ``n``.

    Under the uniform distribution every gain of a parity is 0, so the tree is grown from tie breaking alone and can
    have up to ``2^n`` leaves. Keep ``n`` small in that regime.

    Parameters
    ----------
    distribution:
        ``D``.
    target:
        ``f``, within the enumeration limit.
    features:
        The candidate features ``A``. Defaults to every feature.
    spec:
        The impurity. Overrides the impurity of ``policy`` when given.
    policy:
        Tie breaking and empty branch handling.
    seed:
        Only used by :attr:`TieBreak.SEEDED_RANDOM`.

    Raises
    ------
    DimensionMismatchError
        ``distribution`` and ``target`` have different dimensions.
    InvalidIndexError
        A feature is out of range.
    """
    if distribution.n != target.n:
        raise DimensionMismatchError(target.n, distribution.n)
    policy = policy or LearnerPolicy()
    if spec is not None:
        policy = LearnerPolicy(policy.tie_break, policy.empty_branch, spec)
    available = tuple(sorted(set(range(target.n) if features is None else features)))
    for feature in available:
        if not 0 <= feature < target.n:
            raise InvalidIndexError(f"Feature {feature} is out of range for n={target.n}")
    rng: Generator | None = make_generator(seed) if policy.tie_break is TieBreak.SEEDED_RANDOM else None
    table = target.truth_table

    def learn(assignment: PartialAssignment, remaining: tuple[int, ...], parent_majority: int) -> DecisionTree:
        try:
            weights = subcube_weights(distribution, target, assignment)
        except ZeroMassRestrictionError:
            return Leaf(parent_majority)

        reachable = table[weights.weights > 0]
        if np.all(reachable == reachable[0]):
            return Leaf(int(reachable[0]))

        majority = majority_label(weights.label_prob(table), 1.0)
        if not remaining or len(assignment.support) >= target.n:
            return Leaf(majority)

        gains = exact_gains(distribution, target, assignment, remaining, policy.impurity)
        feature = choose_feature(remaining, gains, policy, rng)
        logger.debug("Splitting %s on x%s (exact gain %r)", assignment, feature, float(gains.max()))
        rest = tuple(index for index in remaining if index != feature)
        return Node(
            feature,
            learn(assignment.fix(feature, 0), rest, majority),
            learn(assignment.fix(feature, 1), rest, majority),
        )

    return learn(PartialAssignment.free(target.n), available, 0)
