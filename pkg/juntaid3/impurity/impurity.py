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

import math
from enum import Enum
from logging import getLogger
from typing import TYPE_CHECKING, overload

import numpy as np

from ..common.errors import ProbabilityOutOfRangeError
from .errors import UnknownImpurityError

if TYPE_CHECKING:
    from typing import Final

    from numpy.typing import NDArray

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "ImpurityKind",
    "ImpuritySpec",
    "GINI",
    "ENTROPY",
    "get_impurity",
    "evaluate_impurity",
    "constants",
)


class ImpurityKind(str, Enum):
    """The supported impurity functions, by the id used in configs and cli flags."""

    GINI = "gini"
    ENTROPY = "entropy"


class ImpuritySpec:
    """A impurity function ``C`` with its strong concavity and Lipschitz constants.

    ``C`` is concave on [0, 1], symmetric around 1/2 and zero at both ends.

    Parameters
    ----------
    kind:
        Which function this is.
    beta:
        The strong concavity constant.
    gamma:
        The Lipschitz constant.
    gamma_globally_valid:
        Whether ``gamma`` holds on all of [0, 1]. Entropy has a unbounded derivative at 0 and 1.

    Attributes
    ----------
    kind:
        Which function this is.
    beta:
        The strong concavity constant.
    gamma:
        The Lipschitz constant. :data:`math.inf` if there is no global one.
    gamma_globally_valid:
        Whether ``gamma`` holds on all of [0, 1].
    """

    __slots__ = ("kind", "beta", "gamma", "gamma_globally_valid")

    def __init__(self, kind: ImpurityKind, beta: float, gamma: float, *, gamma_globally_valid: bool = True) -> None:
        self.kind: ImpurityKind = kind
        self.beta: float = beta
        self.gamma: float = gamma
        self.gamma_globally_valid: bool = gamma_globally_valid

    @property
    def id(self) -> str:
        return self.kind.value

    @overload
    def __call__(self, q: float) -> float:
        ...

    @overload
    def __call__(self, q: NDArray[np.float64]) -> NDArray[np.float64]:
        ...

    def __call__(self, q: float | NDArray[np.float64]) -> float | NDArray[np.float64]:
        """Evaluate ``C`` without range checks. Works elementwise on arrays."""
        if self.kind is ImpurityKind.GINI:
            return q * (1 - q)

        array = np.asarray(q, dtype=np.float64)
        complement = 1.0 - array
        with np.errstate(divide="ignore", invalid="ignore"):
            left = np.where(array > 0, -array * np.log2(np.where(array > 0, array, 1.0)), 0.0)
            right = np.where(complement > 0, -complement * np.log2(np.where(complement > 0, complement, 1.0)), 0.0)
        result = left + right
        if np.ndim(q) == 0:
            return float(result)
        return result

    def __repr__(self) -> str:
        return f"ImpuritySpec({self.kind.value!r}, beta={self.beta}, gamma={self.gamma})"

    def __reduce__(self) -> tuple[object, ...]:
        return (get_impurity, (self.kind.value,))


GINI: Final[ImpuritySpec] = ImpuritySpec(ImpurityKind.GINI, 2.0, 1.0)
ENTROPY: Final[ImpuritySpec] = ImpuritySpec(
    ImpurityKind.ENTROPY, 4.0 / math.log(2), math.inf, gamma_globally_valid=False
)


def get_impurity(impurity_id: str | ImpurityKind) -> ImpuritySpec:
    """Look up a impurity function by id.

    Raises
    ------
    UnknownImpurityError
        The id is not ``gini`` or ``entropy``.
    """
    try:
        kind = ImpurityKind(impurity_id)
    except ValueError:
        raise UnknownImpurityError(str(impurity_id)) from None
    return GINI if kind is ImpurityKind.GINI else ENTROPY


def evaluate_impurity(spec: ImpuritySpec, q: float) -> float:
    """Evaluate ``C(q)``.

    Gini is ``q(1 - q)``, entropy is the base 2 binary entropy with ``0 log 0 = 0``.

    Raises
    ------
    ProbabilityOutOfRangeError
        ``q`` is outside of [0, 1].
    """
    if not 0.0 <= q <= 1.0:
        raise ProbabilityOutOfRangeError(q)
    return float(spec(q))


def constants(spec: ImpuritySpec) -> tuple[float, float]:
    """The ``(beta, gamma)`` pair of a impurity function.

    For entropy ``gamma`` is :data:`math.inf`, as the derivative is unbounded near 0 and 1.
    """
    if not spec.gamma_globally_valid:
        logger.warning("The Lipschitz constant of %s is not globally valid", spec.id)
    return spec.beta, spec.gamma
