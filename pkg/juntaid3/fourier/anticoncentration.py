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

"""Anti-concentration of the shifted restriction polynomial, and the lower bound on ``|I|`` it implies.

Under a smoothed distribution ``p = p^ + delta``, the dependence of ``y`` on a junta coordinate ``i`` is
``|I(D_w, i)| = 2 p_i (1 - p_i) |g0(delta)|``, where ``g0`` is the part of ``f_w`` multiplying ``2 x_i - 1`` with
``x = p^ + delta`` substituted. A polynomial with a large leading coefficient is rarely close to 0 on a random
point, which keeps ``|I|`` away from 0 for most draws of ``delta``.
"""

from __future__ import annotations

from itertools import product
from logging import getLogger
from math import sqrt
from typing import TYPE_CHECKING

import numpy as np

from ..common.errors import JuntaError
from ..common.random import derive_seed, make_generator
from ..core import FREE, DimensionMismatchError, PartialAssignment
from ..distributions import smoothed_distribution
from ..oracle import ZeroMassRestrictionError, exact_I, subcube_weights

if TYPE_CHECKING:
    from typing import Final

    from ..core import ProductDistribution, TargetFunction
    from ..distributions import SmoothingSpec
    from .polynomial import MultilinearPolynomial

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "anticoncentration_estimate",
    "anticoncentration_bound",
    "normalized_anticoncentration_bound",
    "junta_I_lower_bound",
    "junta_bound_failure_rate",
)


def anticoncentration_estimate(
    polynomial: MultilinearPolynomial, c: float, epsilon: float, trials: int, seed: int
) -> float:
    """Monte Carlo estimate of ``Pr(|g0(delta)| <= eps)`` for ``delta ~ Uni([-c, c]^arity)``.

    ``delta`` is drawn as ``c (2u - 1)`` with ``u`` uniform on ``[0, 1)``.

    Raises
    ------
    JuntaError
        ``trials < 1``.
    """
    if trials < 1:
        raise JuntaError(f"trials must be at least 1, got {trials}")
    rng = make_generator(seed)
    deltas = c * (2.0 * rng.random((trials, polynomial.arity)) - 1.0)
    values = polynomial.evaluate_many(deltas)
    return float(np.mean(np.abs(values) <= epsilon))


def anticoncentration_bound(c: float, k: int, epsilon: float) -> float:
    """``(2/c)^k sqrt(eps)``, the envelope for ``Pr(|g0(delta)| <= eps)`` of a restriction of a k-junta."""
    return (2.0 / c) ** k * sqrt(epsilon)


def normalized_anticoncentration_bound(k0: int, epsilon: float) -> float:
    """``2^k0 sqrt(eps)``, the envelope for a degree ``k0`` polynomial with a top coefficient of magnitude 1 or more,
    evaluated on a uniform point of ``[-1, 1]^arity``.
    """
    return 2.0**k0 * sqrt(epsilon)


def junta_I_lower_bound(alpha: float, c: float, k: int, delta: float) -> float:
    """``2 alpha^2 delta^2 (c/2)^2k``.

    With probability at least ``1 - delta`` over the smoothing, every impure subcube of a k-junta has a free junta
    coordinate with ``|I(D_w, i)|`` above this.
    """
    return 2.0 * alpha**2 * delta**2 * (c / 2.0) ** (2 * k)


def _weakest_subcube(distribution: ProductDistribution, target: TargetFunction) -> float:
    """``min_w max_i |I(D_w, i)|`` over the impure subcubes supported in ``J``, ``inf`` when all are pure."""
    weakest = float("inf")
    table = target.truth_table
    for values in product((FREE, 0, 1), repeat=target.k):
        raw = [FREE] * target.n
        for coordinate, value in zip(target.support, values):
            raw[coordinate] = value
        assignment = PartialAssignment(raw)
        try:
            weights = subcube_weights(distribution, target, assignment)
        except ZeroMassRestrictionError:
            continue
        reachable = table[weights.weights > 0]
        if np.all(reachable == reachable[0]):
            continue
        strongest = max(
            abs(exact_I(distribution, target, assignment, coordinate))
            for coordinate, value in zip(target.support, values)
            if value is FREE
        )
        weakest = min(weakest, strongest)
    return weakest


def junta_bound_failure_rate(
    target: TargetFunction, smoothing: SmoothingSpec, delta: float, draws: int, seed: int
) -> float:
    """The fraction of smoothing draws for which some impure subcube has no free junta coordinate with
    ``|I(D_w, i)|`` above :func:`junta_I_lower_bound`.

    The guarantee is that this happens with probability at most ``delta``. Every draw enumerates ``3^k``
    restrictions.

    Parameters
    ----------
    target:
        ``f``.
    smoothing:
        The smoothed (alpha, c)-distribution.
    delta:
        Used both as the failure probability and inside the bound.
    draws:
        How many independent ``delta`` draws to make.
    seed:
        The master seed, draw ``t`` uses ``derive_seed(seed, t)``.

    Raises
    ------
    DimensionMismatchError
        The smoothing and target have different dimensions.
    JuntaError
        ``draws < 1``.
    """
    if smoothing.n != target.n:
        raise DimensionMismatchError(target.n, smoothing.n)
    if draws < 1:
        raise JuntaError(f"draws must be at least 1, got {draws}")
    bound = junta_I_lower_bound(smoothing.alpha, smoothing.c, target.k, delta)
    failures = 0
    for draw in range(draws):
        distribution = smoothed_distribution(smoothing, derive_seed(seed, draw))
        if _weakest_subcube(distribution, target) <= bound:
            failures += 1
    logger.debug("Bound %r failed on %s of %s draws", bound, failures, draws)
    return failures / draws
