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

from ..common.json import json_loads
from ..common.random import make_generator
from ..core import ProductDistribution, TargetFunction, make_junta, make_parity, random_junta
from .errors import InstanceFormatError
from .smoothing import SmoothingSpec, smoothed_distribution

if TYPE_CHECKING:
    from typing import Any, Final, Mapping, Union

    from ..typings import InstanceData, TargetData

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("Instance", "parse_instance", "parse_target", "parse_probabilities")


class Instance:
    """A learning problem: a distribution (or a way to draw one) and a target.

    Attributes
    ----------
    target:
        ``f``.
    distribution:
        ``D`` when the probabilities are fixed, else ``None``.
    smoothing:
        The smoothing specification when ``D`` is drawn, else ``None``.
    smoothing_seed:
        The seed the document gave for the smoothing draw, if any.
    """

    __slots__ = ("target", "distribution", "smoothing", "smoothing_seed")

    def __init__(
        self,
        target: TargetFunction,
        distribution: ProductDistribution | None = None,
        smoothing: SmoothingSpec | None = None,
        smoothing_seed: int | None = None,
    ) -> None:
        if (distribution is None) == (smoothing is None):
            raise InstanceFormatError("exactly one of a distribution and a smoothing specification is required")
        self.target: TargetFunction = target
        self.distribution: ProductDistribution | None = distribution
        self.smoothing: SmoothingSpec | None = smoothing
        self.smoothing_seed: int | None = smoothing_seed

    @property
    def n(self) -> int:
        return self.target.n

    @property
    def is_smoothed(self) -> bool:
        return self.smoothing is not None

    def draw_distribution(self, seed: int | None = None) -> ProductDistribution:
        """The fixed distribution, or a fresh smoothed draw.

        Parameters
        ----------
        seed:
            The seed of the draw. Defaults to the document's seed, then 0.
        """
        if self.distribution is not None:
            return self.distribution
        assert self.smoothing is not None
        if seed is None:
            seed = self.smoothing_seed if self.smoothing_seed is not None else 0
        return smoothed_distribution(self.smoothing, seed)

    def __repr__(self) -> str:
        source = self.smoothing if self.smoothing is not None else self.distribution
        return f"<Instance n={self.n} target={self.target!r} distribution={source!r}>"


def _broadcast(value: Any, n: int, name: str) -> list[float]:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [float(value)] * n
    if isinstance(value, list) and all(isinstance(item, (int, float)) for item in value):
        if len(value) != n:
            raise InstanceFormatError(f"{name} has {len(value)} entries, expected {n}")
        return [float(item) for item in value]
    raise InstanceFormatError(f"{name} must be a number or a list of numbers")


def parse_probabilities(value: Any, n: int) -> Union[ProductDistribution, tuple[SmoothingSpec, int | None]]:
    """Parse the ``"probs"`` entry: a list, a single number for every coordinate, or a smoothing object.

    Raises
    ------
    InstanceFormatError
        The entry is malformed.
    SmoothingSpecError
        The smoothing parameters are invalid.
    ProbabilityOutOfRangeError
        A probability is outside of [0, 1].
    """
    if isinstance(value, dict):
        try:
            base = _broadcast(value["base"], n, "base")
            alpha = float(value["alpha"])
            c = float(value["c"])
        except KeyError as error:
            raise InstanceFormatError(f"smoothing is missing {error.args[0]!r}") from None
        except (TypeError, ValueError):
            raise InstanceFormatError("alpha and c must be numbers") from None
        seed = value.get("seed")
        if seed is not None and (not isinstance(seed, int) or seed < 0):
            raise InstanceFormatError(f"smoothing seed must be a non-negative integer, got {seed!r}")
        return SmoothingSpec(base, alpha, c), seed
    return ProductDistribution(_broadcast(value, n, "probs"))


def parse_target(data: TargetData | Mapping[str, Any], n: int, *, k: int | None = None) -> TargetFunction:
    """Parse the ``"target"`` entry.

    ``"parity"`` and ``"random_junta"`` default their support to the first ``k`` coordinates. ``"random_junta"``
    draws its table from ``"seed"`` (default 0), ``"junta"`` needs an explicit ``"table"``.

    Raises
    ------
    InstanceFormatError
        The entry is malformed.
    """
    if not isinstance(data, dict):
        raise InstanceFormatError("target must be an object")
    kind = data.get("type")
    support = data.get("support")
    if support is None:
        if k is None:
            raise InstanceFormatError("target needs a support, or a k to default it")
        support = list(range(k))
    if not isinstance(support, list) or not all(isinstance(index, int) for index in support):
        raise InstanceFormatError("support must be a list of integers")

    if kind == "parity":
        return make_parity(n, support)
    if kind == "junta":
        table = data.get("table")
        if not isinstance(table, list):
            raise InstanceFormatError("a junta target needs a table")
        return make_junta(n, support, table)
    if kind == "random_junta":
        seed = data.get("seed", 0)
        if not isinstance(seed, int) or seed < 0:
            raise InstanceFormatError(f"target seed must be a non-negative integer, got {seed!r}")
        return random_junta(n, sorted(support), make_generator(seed))
    raise InstanceFormatError(f"unknown target type {kind!r}")


def parse_instance(document: InstanceData | Mapping[str, Any] | str | bytes, *, k: int | None = None) -> Instance:
    """Build an :class:`Instance` from a json document or its decoded form.

    .. code-block:: json

        {"n": 8, "probs": 0.75, "target": {"type": "parity", "support": [0, 1]}}

    Raises
    ------
    InstanceFormatError
        The document is malformed.
    JuntaError
        A value is invalid, for example a probability out of range.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json_loads(document)
        except ValueError as error:
            raise InstanceFormatError(f"not valid json ({error})") from None
    if not isinstance(document, dict):
        raise InstanceFormatError("the document must be an object")
    n = document.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InstanceFormatError(f"n must be a positive integer, got {n!r}")
    if "probs" not in document or "target" not in document:
        raise InstanceFormatError("the document needs 'probs' and 'target'")

    target = parse_target(document["target"], n, k=k)
    probabilities = parse_probabilities(document["probs"], n)
    logger.debug("Parsed instance with n=%s and target %r", n, target)
    if isinstance(probabilities, ProductDistribution):
        return Instance(target, distribution=probabilities)
    smoothing, seed = probabilities
    return Instance(target, smoothing=smoothing, smoothing_seed=seed)
