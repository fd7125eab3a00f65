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

from ..common.errors import ProbabilityOutOfRangeError

if TYPE_CHECKING:
    from typing import Final, Iterable

    from numpy.typing import NDArray

__all__: Final[tuple[str, ...]] = ("ProductDistribution",)


class ProductDistribution:
    """A product distribution over ``{0,1}^n`` where bit ``i`` is ``Bernoulli(p_i)``.

    Parameters
    ----------
    probs:
        The Bernoulli parameter of every coordinate.

    Raises
    ------
    ProbabilityOutOfRangeError
        A parameter is outside of [0, 1] (or is nan).
    """

    __slots__ = ("_probs",)

    def __init__(self, probs: Iterable[float]) -> None:
        array = np.array(list(probs), dtype=np.float64)
        for value in array:
            if not 0.0 <= value <= 1.0:
                raise ProbabilityOutOfRangeError(float(value))
        array.setflags(write=False)
        self._probs: NDArray[np.float64] = array

    @classmethod
    def uniform(cls, n: int) -> ProductDistribution:
        """The uniform distribution, every ``p_i = 1/2``."""
        return cls([0.5] * n)

    @classmethod
    def constant(cls, n: int, p: float) -> ProductDistribution:
        """Every coordinate shares the parameter ``p``."""
        return cls([p] * n)

    @property
    def probs(self) -> NDArray[np.float64]:
        """A read-only array of the parameters."""
        return self._probs

    @property
    def n(self) -> int:
        return int(self._probs.shape[0])

    def __getitem__(self, index: int) -> float:
        return float(self._probs[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProductDistribution):
            return NotImplemented
        return bool(np.array_equal(self._probs, other._probs))

    def __hash__(self) -> int:
        return hash(self._probs.tobytes())

    def __repr__(self) -> str:
        return f"ProductDistribution({self._probs.tolist()!r})"
