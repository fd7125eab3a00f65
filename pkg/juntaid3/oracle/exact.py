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

"""Exact statistics of a junta under a restricted product distribution.

Everything here enumerates the ``2^k`` junta patterns with :func:`subcube_weights`, so the cost is independent of
``n``. Coordinates outside of the support are independent of the label, which makes their ``I`` and gain exactly
``0.0`` without any enumeration.
"""

from __future__ import annotations

from logging import getLogger
from typing import TYPE_CHECKING

import numpy as np

from ..core import InvalidIndexError, Leaf, PartialAssignment, validate_tree
from ..impurity import GINI, split_gains
from .errors import FixedCoordinateError
from .subcube import pattern_bits, subcube_weights

if TYPE_CHECKING:
    from typing import Final, Iterable

    from numpy.typing import NDArray

    from ..core import DecisionTree, ProductDistribution, TargetFunction
    from ..impurity import ImpuritySpec

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "exact_label_prob",
    "exact_I",
    "exact_gain",
    "exact_gains",
    "exact_tree_loss",
)


def _assignment(target: TargetFunction, assignment: PartialAssignment | None) -> PartialAssignment:
    return PartialAssignment.free(target.n) if assignment is None else assignment


def _check_feature(assignment: PartialAssignment, feature: int) -> None:
    if not 0 <= feature < assignment.n:
        raise InvalidIndexError(f"Feature {feature} is out of range for n={assignment.n}")
    if not assignment.is_free(feature):
        raise FixedCoordinateError(feature)


def exact_label_prob(
    distribution: ProductDistribution, target: TargetFunction, assignment: PartialAssignment | None = None
) -> float:
    """``Pr_{D_w}(y = 1)``.

    Parameters
    ----------
    distribution:
        ``D``.
    target:
        ``f``.
    assignment:
        ``w``. Defaults to the assignment that fixes nothing.

    Raises
    ------
    ZeroMassRestrictionError
        ``Pr_D(X_w) = 0``.
    """
    assignment = _assignment(target, assignment)
    return subcube_weights(distribution, target, assignment).label_prob(target.truth_table)


def _junta_moments(
    distribution: ProductDistribution, target: TargetFunction, assignment: PartialAssignment, features: list[int]
) -> tuple[float, NDArray[np.float64], NDArray[np.float64]]:
    """``E[y]``, and per feature ``E[x_i]`` and ``E[y x_i]`` under ``D_w``."""
    weights = subcube_weights(distribution, target, assignment)
    labelled = weights.weights * target.truth_table
    positives = float(labelled.sum())
    bits = pattern_bits(target.k)
    position = {coordinate: index for index, coordinate in enumerate(target.support)}

    ones = np.empty(len(features), dtype=np.float64)
    positive_ones = np.empty(len(features), dtype=np.float64)
    for column, feature in enumerate(features):
        ones[column] = distribution.probs[feature]
        if feature in position:
            positive_ones[column] = labelled[bits[position[feature]]].sum()
        else:
            positive_ones[column] = positives * ones[column]
    return positives, ones, positive_ones


def exact_I(
    distribution: ProductDistribution,
    target: TargetFunction,
    assignment: PartialAssignment | None,
    feature: int,
) -> float:
    """``I(D_w, i) = E[y] E[x_i] - E[y x_i]`` under the restricted distribution.

    Raises
    ------
    FixedCoordinateError
        ``w`` fixes ``feature``.
    ZeroMassRestrictionError
        ``Pr_D(X_w) = 0``.
    """
    assignment = _assignment(target, assignment)
    _check_feature(assignment, feature)
    if feature not in target.support:
        subcube_weights(distribution, target, assignment)
        return 0.0
    positives, ones, positive_ones = _junta_moments(distribution, target, assignment, [feature])
    return positives * float(ones[0]) - float(positive_ones[0])


def exact_gains(
    distribution: ProductDistribution,
    target: TargetFunction,
    assignment: PartialAssignment | None,
    features: Iterable[int],
    spec: ImpuritySpec = GINI,
) -> NDArray[np.float64]:
    """``Gain(D_w, i)`` for every feature, in the given order. Features outside of the support have gain ``0.0``.

    Raises
    ------
    FixedCoordinateError
        ``w`` fixes one of the features.
    ZeroMassRestrictionError
        ``Pr_D(X_w) = 0``.
    """
    assignment = _assignment(target, assignment)
    feature_list = list(features)
    for feature in feature_list:
        _check_feature(assignment, feature)
    positives, ones, positive_ones = _junta_moments(distribution, target, assignment, feature_list)
    gains = split_gains(1.0, positives, ones, positive_ones, spec)
    support = set(target.support)
    outside = np.array([feature not in support for feature in feature_list], dtype=np.bool_)
    return np.where(outside, 0.0, gains)


def exact_gain(
    distribution: ProductDistribution,
    target: TargetFunction,
    assignment: PartialAssignment | None,
    feature: int,
    spec: ImpuritySpec = GINI,
) -> float:
    """``Gain(D_w, i)``, the gain formula with exact conditional probabilities.

    Raises
    ------
    FixedCoordinateError
        ``w`` fixes ``feature``.
    ZeroMassRestrictionError
        ``Pr_D(X_w) = 0``.
    """
    return float(exact_gains(distribution, target, assignment, (feature,), spec)[0])


def exact_tree_loss(distribution: ProductDistribution, target: TargetFunction, tree: DecisionTree) -> float:
    """``L_D(T) = Pr(T(x) != f(x))``, computed exactly.

    The loss is accumulated over the leaves. A split on a junta coordinate masks the patterns that disagree with the
    branch, and a split on any other coordinate scales the branch by ``p_i`` or ``1 - p_i``. A tree that agrees with
    ``f`` on every reachable pattern has a loss of exactly ``0.0``.

    Raises
    ------
    InvalidTreeError
        The tree uses a feature ``>= n`` or repeats a feature along a path.
    """
    validate_tree(tree, target.n)
    root = subcube_weights(distribution, target, PartialAssignment.free(target.n))
    bits = pattern_bits(target.k)
    position = {coordinate: index for index, coordinate in enumerate(target.support)}
    probs = distribution.probs
    table = target.truth_table

    def walk(node: DecisionTree, weights: NDArray[np.float64], scale: float) -> float:
        if isinstance(node, Leaf):
            return scale * float(weights[table != node.label].sum())
        if node.feature in position:
            one_mask = bits[position[node.feature]]
            return walk(node.zero, weights * ~one_mask, scale) + walk(node.one, weights * one_mask, scale)
        p = float(probs[node.feature])
        return walk(node.zero, weights, scale * (1.0 - p)) + walk(node.one, weights, scale * p)

    loss = walk(tree, root.weights, 1.0)
    logger.debug("Exact loss of a tree with %s nodes is %r", tree.size, loss)
    return min(max(loss, 0.0), 1.0)
