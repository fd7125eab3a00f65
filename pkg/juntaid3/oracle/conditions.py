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

from itertools import product
from logging import getLogger
from math import inf
from typing import TYPE_CHECKING

import numpy as np

from ..core import FREE, PartialAssignment
from ..impurity import GINI, split_gains
from .errors import ZeroMassRestrictionError
from .subcube import pattern_bits, subcube_weights

if TYPE_CHECKING:
    from typing import Final

    from ..core import ProductDistribution, TargetFunction
    from ..impurity import ImpuritySpec

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("SubcubeDiagnostic", "BasicConditionsReport", "verify_basic_conditions")


class SubcubeDiagnostic:
    """What the oracle found for one restriction ``w``.

    Attributes
    ----------
    assignment:
        The restriction.
    mass:
        ``Pr_D(X_w)``. When this is 0 the remaining fields are ``None``.
    label_prob:
        ``Pr_{D_w}(y = 1)``.
    pure:
        Whether the label is constant on ``D_w``.
    min_abs_I:
        The smallest ``|I(D_w, i)|`` over the free support coordinates, ``None`` for pure subcubes.
    min_gain:
        The smallest ``Gain(D_w, i)`` over the free support coordinates, ``None`` for pure subcubes.
    """

    __slots__ = ("assignment", "mass", "label_prob", "pure", "min_abs_I", "min_gain")

    def __init__(
        self,
        assignment: PartialAssignment,
        mass: float,
        label_prob: float | None = None,
        pure: bool | None = None,
        min_abs_I: float | None = None,
        min_gain: float | None = None,
    ) -> None:
        self.assignment: PartialAssignment = assignment
        self.mass: float = mass
        self.label_prob: float | None = label_prob
        self.pure: bool | None = pure
        self.min_abs_I: float | None = min_abs_I
        self.min_gain: float | None = min_gain

    def __repr__(self) -> str:
        return f"<SubcubeDiagnostic w={self.assignment} pure={self.pure} min_abs_I={self.min_abs_I!r}>"


class BasicConditionsReport:
    """The outcome of :func:`verify_basic_conditions`.

    Attributes
    ----------
    epsilon:
        The largest ``eps`` such that every subcube is pure or has ``|I(D_w, i)| >= eps`` for every free support
        coordinate. ``inf`` when every subcube is pure, ``0.0`` when some subcube is neither.
    requested:
        The ``eps`` the caller asked about.
    entries:
        One diagnostic per restriction, in enumeration order.
    """

    __slots__ = ("epsilon", "requested", "entries")

    def __init__(self, epsilon: float, requested: float, entries: tuple[SubcubeDiagnostic, ...]) -> None:
        self.epsilon: float = epsilon
        self.requested: float = requested
        self.entries: tuple[SubcubeDiagnostic, ...] = entries

    @property
    def held(self) -> bool:
        """Whether the hypothesis holds for the requested ``eps``."""
        return self.epsilon > 0 and self.epsilon >= self.requested

    def __repr__(self) -> str:
        return f"<BasicConditionsReport epsilon={self.epsilon!r} held={self.held} subcubes={len(self.entries)}>"


def verify_basic_conditions(
    distribution: ProductDistribution,
    target: TargetFunction,
    spec: ImpuritySpec = GINI,
    epsilon: float = 0.0,
) -> BasicConditionsReport:
    """Check, for every ``w`` supported inside ``J``, that ``D_w`` is pure or every free support coordinate has
    ``|I(D_w, i)| >= eps``.

    All ``3^k`` restrictions are enumerated, coordinates outside of ``J`` stay free. A restriction whose subcube has
    probability 0 makes the hypothesis fail.

    Parameters
    ----------
    distribution:
        ``D``.
    target:
        ``f``.
    spec:
        The impurity used for the gain diagnostics.
    epsilon:
        The threshold reported by :attr:`BasicConditionsReport.held`.
    """
    support = target.support
    bits = pattern_bits(target.k)
    table = target.truth_table
    probs = distribution.probs
    entries: list[SubcubeDiagnostic] = []
    best = inf

    for values in product((FREE, 0, 1), repeat=target.k):
        raw = [FREE] * target.n
        for coordinate, value in zip(support, values):
            raw[coordinate] = value
        assignment = PartialAssignment(raw)
        try:
            weights = subcube_weights(distribution, target, assignment)
        except ZeroMassRestrictionError:
            entries.append(SubcubeDiagnostic(assignment, 0.0))
            best = 0.0
            continue

        labelled = weights.weights * table
        label_prob = float(labelled.sum())
        reachable = weights.weights > 0
        pure = bool(np.all(table[reachable] == 1) or np.all(table[reachable] == 0))
        positions = [t for t, value in enumerate(values) if value is FREE]
        if pure or not positions:
            entries.append(SubcubeDiagnostic(assignment, weights.mass, label_prob, True))
            continue

        ones = np.array([probs[support[t]] for t in positions], dtype=np.float64)
        positive_ones = np.array([labelled[bits[t]].sum() for t in positions], dtype=np.float64)
        abs_I = np.abs(label_prob * ones - positive_ones)
        gains = split_gains(1.0, label_prob, ones, positive_ones, spec)
        min_abs_I = float(abs_I.min())
        entries.append(
            SubcubeDiagnostic(assignment, weights.mass, label_prob, False, min_abs_I, float(gains.min()))
        )
        logger.debug("Subcube %s has min |I| %r", assignment, min_abs_I)
        best = min(best, min_abs_I)

    return BasicConditionsReport(best, epsilon, tuple(entries))
