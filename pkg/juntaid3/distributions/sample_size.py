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

"""Sample sizes that make ID3 succeed with high probability.

The bounds are stated up to a universal constant, which is taken to be 1. They are advisory orders of magnitude, and
astronomically large for most parameters, so the experiment harness treats ``m`` as a free knob instead. Results
that do not fit in a signed 64 bit integer saturate to :data:`SATURATED` with a warning.
"""

from __future__ import annotations

import math
from logging import getLogger
from typing import TYPE_CHECKING

from .errors import InvalidParameterError

if TYPE_CHECKING:
    from typing import Final

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "SATURATED",
    "sample_size_basic",
    "sample_size_parity",
    "sample_size_junta",
    "sample_size_correlation",
)

SATURATED: Final[int] = 2**63 - 1


def _positive(**parameters: float) -> None:
    for name, value in parameters.items():
        if not value > 0:
            raise InvalidParameterError(name, value, "positive")


def _probability(**parameters: float) -> None:
    for name, value in parameters.items():
        if not 0 < value < 1:
            raise InvalidParameterError(name, value, "in (0, 1)")


def _saturate(name: str, compute: float) -> int:
    if not math.isfinite(compute) or compute >= SATURATED:
        logger.warning("%s does not fit in 64 bits, saturating to %s", name, SATURATED)
        return SATURATED
    return max(math.ceil(compute), 1)


def _evaluate(name: str, *factors: float) -> int:
    try:
        value = math.prod(factors)
    except OverflowError:
        value = math.inf
    return _saturate(name, value)


def sample_size_basic(
    beta: float, gamma: float, epsilon: float, alpha: float, k: int, n: int, delta: float
) -> int:
    """``m = beta^-2 gamma^2 eps^-4 alpha^-2k k log(n / delta)``, enough for a junta whose subcubes are pure or have
    ``|I(D_w, i)| >= eps`` for every free junta coordinate.

    Raises
    ------
    InvalidParameterError
        A parameter is out of range.
    """
    _positive(beta=beta, gamma=gamma, epsilon=epsilon, k=k, n=n)
    _probability(alpha=alpha, delta=delta)
    try:
        factors = (beta**-2, gamma**2, epsilon**-4, alpha ** (-2 * k), k, math.log(n / delta))
    except OverflowError:
        return _saturate("sample_size_basic", math.inf)
    return _evaluate("sample_size_basic", *factors)


def sample_size_parity(alpha: float, c: float, beta: float, gamma: float, k: int, n: int, delta: float) -> int:
    """``m = beta^-2 gamma^2 (2c)^(-4k-4) alpha^(-2k-8) k log(n / delta)`` for a k-parity under a
    (alpha, c)-distribution.

    Raises
    ------
    InvalidParameterError
        A parameter is out of range, or ``c >= 1/2``.
    """
    _positive(beta=beta, gamma=gamma, k=k, n=n)
    _probability(alpha=alpha, delta=delta)
    if not 0 < c < 0.5:
        raise InvalidParameterError("c", c, "in (0, 1/2)")
    try:
        factors = (
            beta**-2,
            gamma**2,
            (2 * c) ** (-4 * k - 4),
            alpha ** (-2 * k - 8),
            k,
            math.log(n / delta),
        )
    except OverflowError:
        return _saturate("sample_size_parity", math.inf)
    return _evaluate("sample_size_parity", *factors)


def sample_size_junta(
    alpha: float, c: float, beta: float, gamma: float, k: int, n: int, delta1: float, delta2: float
) -> int:
    """``m = beta^-2 gamma^2 c^-8k delta1^-8 alpha^(-2k-8) k log(n / delta2)`` for a k-junta under a smoothed
    (alpha, c)-distribution, failing with probability ``delta1`` over the smoothing and ``delta2`` over the sample.

    Raises
    ------
    InvalidParameterError
        A parameter is out of range, including ``k < 1``.
    """
    if k < 1:
        raise InvalidParameterError("k", k, "at least 1")
    _positive(beta=beta, gamma=gamma, n=n)
    _probability(alpha=alpha, delta1=delta1, delta2=delta2)
    if not 0 < c < 0.5:
        raise InvalidParameterError("c", c, "in (0, 1/2)")
    try:
        factors = (
            beta**-2,
            gamma**2,
            c ** (-8 * k),
            delta1**-8,
            alpha ** (-2 * k - 8),
            k,
            math.log(n / delta2),
        )
    except OverflowError:
        return _saturate("sample_size_junta", math.inf)
    return _evaluate("sample_size_junta", *factors)


def sample_size_correlation(epsilon: float, alpha: float, k: int, delta: float) -> int:
    """``m = eps^-2 alpha^-2k log(1 / delta)``, enough for ``|I(S_w, i) - I(D_w, i)| < eps`` with probability
    ``1 - delta`` on a subcube of depth at most ``k``.

    Raises
    ------
    InvalidParameterError
        A parameter is out of range.
    """
    _positive(epsilon=epsilon)
    _probability(alpha=alpha, delta=delta)
    if k < 0:
        raise InvalidParameterError("k", k, "non-negative")
    try:
        factors = (epsilon**-2, alpha ** (-2 * k), math.log(1 / delta))
    except OverflowError:
        return _saturate("sample_size_correlation", math.inf)
    return _evaluate("sample_size_correlation", *factors)
