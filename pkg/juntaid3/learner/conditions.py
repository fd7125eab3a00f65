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

from ..core import DimensionMismatchError, PartialAssignment
from ..impurity import GINI, split_gains

if TYPE_CHECKING:
    from typing import Final

    from numpy.typing import NDArray

    from ..core import Dataset, TargetFunction
    from ..impurity import ImpuritySpec

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("GainDominanceViolation", "GainDominanceReport", "check_gain_dominance")


class GainDominanceViolation:
    """A subcube where some non-junta feature gains at least as much as a free junta feature.

    Attributes
    ----------
    assignment:
        The restriction ``w``.
    junta_gain:
        The smallest gain over the free junta features.
    other_gain:
        The largest gain over the other features.
    """

    __slots__ = ("assignment", "junta_gain", "other_gain")

    def __init__(self, assignment: PartialAssignment, junta_gain: float, other_gain: float) -> None:
        self.assignment: PartialAssignment = assignment
        self.junta_gain: float = junta_gain
        self.other_gain: float = other_gain

    def __repr__(self) -> str:
        return (
            f"<GainDominanceViolation w={self.assignment} junta_gain={self.junta_gain!r}"
            f" other_gain={self.other_gain!r}>"
        )


class GainDominanceReport:
    """The outcome of :func:`check_gain_dominance`.

    Attributes
    ----------
    subcubes:
        How many restrictions were checked.
    empty:
        Restrictions ``w`` with ``S_w`` empty.
    violations:
        Restrictions where the gain ordering failed.
    """

    __slots__ = ("subcubes", "empty", "violations")

    def __init__(
        self, subcubes: int, empty: tuple[PartialAssignment, ...], violations: tuple[GainDominanceViolation, ...]
    ) -> None:
        self.subcubes: int = subcubes
        self.empty: tuple[PartialAssignment, ...] = empty
        self.violations: tuple[GainDominanceViolation, ...] = violations

    @property
    def held(self) -> bool:
        """Whether every subcube is non-empty and either pure or correctly ordered."""
        return not self.empty and not self.violations

    def __bool__(self) -> bool:
        return self.held

    def __repr__(self) -> str:
        return (
            f"<GainDominanceReport held={self.held} subcubes={self.subcubes} empty={len(self.empty)}"
            f" violations={len(self.violations)}>"
        )


def check_gain_dominance(
    dataset: Dataset, target: TargetFunction, spec: ImpuritySpec = GINI
) -> GainDominanceReport:
    """Check the sample condition under which ID3 is guaranteed to fit ``S`` with zero error.

    For every ``w`` with ``supp(w) ⊆ J`` the restricted sample ``S_w`` must be non-empty, and either every label in
    ``S_w`` is equal or every free junta feature has a strictly larger gain than every feature outside ``J``. This
    visits ``3^k`` restrictions.

    Raises
    ------
    DimensionMismatchError
        The dataset and target have different dimensions.
    """
    if dataset.n != target.n:
        raise DimensionMismatchError(target.n, dataset.n)

    support = target.support
    others = [index for index in range(dataset.n) if index not in set(support)]
    features = dataset.features
    labels = dataset.labels.astype(np.bool_)
    empty: list[PartialAssignment] = []
    violations: list[GainDominanceViolation] = []
    visited = 0

    def check(assignment: PartialAssignment, rows: NDArray[np.bool_]) -> None:
        nonlocal visited
        visited += 1
        sub_features = features[rows]
        sub_labels = labels[rows]
        m = int(sub_labels.shape[0])
        if m == 0:
            empty.append(assignment)
            return
        positives = int(sub_labels.sum())
        free_junta = [index for index in support if assignment.is_free(index)]
        if positives in (0, m) or not free_junta or not others:
            return

        columns = sub_features[:, free_junta + others]
        ones = columns.sum(axis=0, dtype=np.int64)
        positive_ones = columns[sub_labels].sum(axis=0, dtype=np.int64)
        gains = split_gains(m, positives, ones, positive_ones, spec)
        junta_gain = float(gains[: len(free_junta)].min())
        other_gain = float(gains[len(free_junta) :].max())
        if not junta_gain > other_gain:
            logger.debug("Gain ordering fails on %s: %r <= %r", assignment, junta_gain, other_gain)
            violations.append(GainDominanceViolation(assignment, junta_gain, other_gain))

    def descend(position: int, assignment: PartialAssignment, rows: NDArray[np.bool_]) -> None:
        if position == len(support):
            check(assignment, rows)
            return
        coordinate = support[position]
        descend(position + 1, assignment, rows)
        column = features[:, coordinate]
        descend(position + 1, assignment.fix(coordinate, 0), rows & ~column)
        descend(position + 1, assignment.fix(coordinate, 1), rows & column)

    descend(0, PartialAssignment.free(dataset.n), np.ones(dataset.m, dtype=np.bool_))
    return GainDominanceReport(visited, tuple(empty), tuple(violations))
