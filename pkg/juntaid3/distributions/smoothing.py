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
from numpy.random import Generator

from ..common.random import make_generator
from ..core import InvalidIndexError, ProductDistribution
from .errors import SmoothingSpecError

if TYPE_CHECKING:
    from typing import Final, Iterable, Union

    from numpy.typing import NDArray

    SeedLike = Union[int, Generator]

__all__: Final[tuple[str, ...]] = (
    "SmoothingSpec",
    "smoothed_distribution",
    "draw_perturbation",
    "validate_alpha_c",
)


class SmoothingSpec:
    """A smoothed (alpha, c)-distribution ``p_i = p^_i + delta_i`` with ``delta_i ~ Uni([-c, c])``.

    Parameters
    ----------
    base:
        The unperturbed parameters ``p^_i``.
    alpha:
        The margin from 0 and 1 every ``p_i`` keeps.
    c:
        The perturbation radius.

    Raises
    ------
    SmoothingSpecError
        ``alpha <= 0``, ``c < 0``, ``alpha + c >= 1/2``, or a ``p^_i`` is outside the open interval
        ``(alpha + c, 1 - alpha - c)``.
    """

    __slots__ = ("_base", "alpha", "c")

    def __init__(self, base: Iterable[float], alpha: float, c: float) -> None:
        array = np.array(list(base), dtype=np.float64)
        if not alpha > 0:
            raise SmoothingSpecError(f"alpha must be positive, got {alpha!r}")
        if not c >= 0:
            raise SmoothingSpecError(f"c must be non-negative, got {c!r}")
        if not alpha + c < 0.5:
            raise SmoothingSpecError(f"alpha + c must be below 1/2, got {alpha + c!r}")
        low, high = alpha + c, 1.0 - alpha - c
        for index, value in enumerate(array):
            if not low < value < high:
                raise SmoothingSpecError(f"Base probability {index} is {value!r}, outside of ({low!r}, {high!r})")
        array.setflags(write=False)
        self._base: NDArray[np.float64] = array
        self.alpha: float = float(alpha)
        self.c: float = float(c)

    @property
    def base(self) -> NDArray[np.float64]:
        """A read-only array of ``p^_i``."""
        return self._base

    @property
    def n(self) -> int:
        return int(self._base.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SmoothingSpec):
            return NotImplemented
        return self.alpha == other.alpha and self.c == other.c and bool(np.array_equal(self._base, other._base))

    def __hash__(self) -> int:
        return hash((self.alpha, self.c, self._base.tobytes()))

    def __repr__(self) -> str:
        return f"SmoothingSpec(base={self._base.tolist()!r}, alpha={self.alpha!r}, c={self.c!r})"


def draw_perturbation(spec: SmoothingSpec, seed: SeedLike) -> NDArray[np.float64]:
    """Draw ``delta ~ Uni([-c, c]^n)`` as ``c (2u - 1)`` with ``u`` uniform on ``[0, 1)``."""
    rng = seed if isinstance(seed, Generator) else make_generator(seed)
    return spec.c * (2.0 * rng.random(spec.n) - 1.0)


def smoothed_distribution(spec: SmoothingSpec, seed: SeedLike) -> ProductDistribution:
    """Draw ``p = p^ + delta``. Every drawn ``p_i`` lies in ``(alpha, 1 - alpha)``.

    Parameters
    ----------
    spec:
        The smoothing specification.
    seed:
        An integer seed, or a generator to draw from.
    """
    return ProductDistribution(spec.base + draw_perturbation(spec, seed))


def validate_alpha_c(
    distribution: ProductDistribution,
    support: Iterable[int],
    alpha: float,
    c: float,
    *,
    strict: bool = False,
) -> bool:
    """Whether ``p_i ∈ (alpha, 1 - alpha)`` and ``|p_i - 1/2| > c`` for every ``i`` in ``support``.

    Parameters
    ----------
    distribution:
        ``D``.
    support:
        The coordinates to check, usually the junta support.
    alpha:
        The margin from 0 and 1.
    c:
        The margin from 1/2.
    strict:
        Check every coordinate instead of only ``support``.

    Raises
    ------
    InvalidIndexError
        A coordinate is out of range.
    """
    coordinates = range(distribution.n) if strict else sorted(set(support))
    for coordinate in coordinates:
        if not 0 <= coordinate < distribution.n:
            raise InvalidIndexError(f"Coordinate {coordinate} is out of range for n={distribution.n}")
        p = distribution[coordinate]
        if not (alpha < p < 1.0 - alpha and abs(p - 0.5) > c):
            return False
    return True
