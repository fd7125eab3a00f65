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

from copy import deepcopy
from enum import Enum
from logging import getLogger
from math import isfinite
from typing import TYPE_CHECKING

from ..common.errors import JuntaError
from ..common.json import json_loads
from ..core import ENUMERATION_LIMIT, ProductDistribution, TargetFunction, random_junta
from ..distributions import SmoothingSpec, parse_probabilities, parse_target, smoothed_distribution
from ..learner import LearnerPolicy
from .errors import ConfigError

if TYPE_CHECKING:
    from os import PathLike
    from typing import Any, Final, Mapping, Union

    from numpy.random import Generator

    from ..typings import ExperimentData

    StrPath = Union[str, PathLike[str]]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "TargetKind",
    "SmoothingMode",
    "SweepAxis",
    "TrialConfig",
    "parse_config",
    "load_config",
)


class TargetKind(str, Enum):
    PARITY = "parity"
    RANDOM_JUNTA = "random_junta"
    JUNTA = "junta"


class SmoothingMode(str, Enum):
    """How often a smoothed distribution is drawn."""

    PER_TRIAL = "per_trial"
    """Every trial draws its own perturbation."""
    FIXED = "fixed"
    """One perturbation is shared by every trial of a batch."""


class SweepAxis(str, Enum):
    """The configuration value a sweep varies."""

    M = "m"
    C = "c"
    K = "k"
    N = "n"


def _integer(document: Mapping[str, Any], key: str, default: int | None, minimum: int) -> int:
    value = document.get(key, default)
    if value is None:
        raise ConfigError(f"{key!r} is required")
    if not isinstance(value, int) or isinstance(value, bool):
        raise ConfigError(f"{key!r} must be an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(f"{key!r} must be at least {minimum}, got {value}")
    return value


class TrialConfig:
    """A validated experiment configuration.

    A trial is a pure function of the configuration and its index, so a config can be shipped to worker processes.

    Attributes
    ----------
    document:
        The normalized json document, used for reporting and for sweeps.
    n:
        The ambient dimension.
    k:
        The junta size.
    target_kind:
        How the target is built.
    fixed_target:
        The target when it does not change between trials, ``None`` for random juntas drawn per trial.
    support:
        The junta support.
    distribution:
        The distribution when the probabilities are fixed.
    smoothing:
        The smoothing specification when the distribution is drawn.
    smoothing_mode:
        Whether the smoothing is redrawn every trial.
    smoothing_seed:
        The seed of the shared draw in :attr:`SmoothingMode.FIXED`.
    m:
        The sample size.
    policy:
        The learner policy.
    seed:
        The master seed.
    trials:
        How many trials a batch runs.
    """

    __slots__ = (
        "document",
        "n",
        "k",
        "target_kind",
        "fixed_target",
        "support",
        "distribution",
        "smoothing",
        "smoothing_mode",
        "smoothing_seed",
        "m",
        "policy",
        "seed",
        "trials",
    )

    def __init__(self, document: ExperimentData | Mapping[str, Any]) -> None:
        if not isinstance(document, dict):
            raise ConfigError("the configuration must be an object")
        self.document: dict[str, Any] = deepcopy(dict(document))
        self.n: int = _integer(document, "n", None, 1)
        self.m: int = _integer(document, "m", None, 1)
        self.trials: int = _integer(document, "trials", 1, 1)
        self.seed: int = _integer(document, "seed", 0, 0)

        target_data = document.get("target")
        if not isinstance(target_data, dict):
            raise ConfigError("'target' must be an object")
        try:
            self.target_kind: TargetKind = TargetKind(target_data.get("type"))
        except ValueError:
            raise ConfigError(f"unknown target type {target_data.get('type')!r}") from None
        support = target_data.get("support")
        if support is None:
            self.k: int = _integer(document, "k", None, 1)
        else:
            if not isinstance(support, list):
                raise ConfigError("'support' must be a list")
            self.k = len(support)
            if "k" in document and document["k"] != self.k:
                raise ConfigError(f"'k' is {document['k']!r} but the support has {self.k} coordinates")
        if self.k > ENUMERATION_LIMIT:
            raise ConfigError(f"k={self.k} is above the enumeration limit of {ENUMERATION_LIMIT}")

        try:
            parsed_target = parse_target(target_data, self.n, k=self.k)
            probabilities = parse_probabilities(document.get("probs"), self.n)
            self.policy: LearnerPolicy = LearnerPolicy(
                document.get("tie_break", "lowest_index"), impurity=document.get("impurity", "gini")
            )
        except ConfigError:
            raise
        except JuntaError as error:
            raise ConfigError(str(error)) from error

        self.support: tuple[int, ...] = parsed_target.support
        per_trial_target = self.target_kind is TargetKind.RANDOM_JUNTA and "seed" not in target_data
        self.fixed_target: TargetFunction | None = None if per_trial_target else parsed_target

        try:
            self.smoothing_mode: SmoothingMode = SmoothingMode(document.get("smoothing_mode", "per_trial"))
        except ValueError:
            raise ConfigError(f"unknown smoothing_mode {document.get('smoothing_mode')!r}") from None
        if isinstance(probabilities, ProductDistribution):
            self.distribution: ProductDistribution | None = probabilities
            self.smoothing: SmoothingSpec | None = None
            self.smoothing_seed: int = self.seed
        else:
            self.distribution = None
            self.smoothing, smoothing_seed = probabilities
            self.smoothing_seed = self.seed if smoothing_seed is None else smoothing_seed

    def make_target(self, rng: Generator) -> TargetFunction:
        """The target of a trial, drawn from ``rng`` for random juntas."""
        if self.fixed_target is not None:
            return self.fixed_target
        return random_junta(self.n, self.support, rng)

    def make_distribution(self, rng: Generator) -> ProductDistribution:
        """The distribution of a trial, drawn from ``rng`` when smoothing per trial."""
        if self.distribution is not None:
            return self.distribution
        assert self.smoothing is not None
        if self.smoothing_mode is SmoothingMode.FIXED:
            return smoothed_distribution(self.smoothing, self.smoothing_seed)
        return smoothed_distribution(self.smoothing, rng)

    def replace(self, axis: SweepAxis | str, value: float) -> TrialConfig:
        """A copy with one axis changed.

        ``c`` sets the smoothing radius, or for fixed probabilities sets every ``p_i`` to ``1/2 + c``. ``k`` resets
        the support to the first ``k`` coordinates.

        Raises
        ------
        ConfigError
            The axis is unknown, or the new value makes the configuration invalid.
        """
        try:
            axis = SweepAxis(axis)
        except ValueError:
            raise ConfigError(f"unknown sweep axis {axis!r}") from None
        if not isfinite(float(value)):
            raise ConfigError(f"{axis.value!r} must be finite, got {value!r}")
        document = deepcopy(self.document)
        if axis is SweepAxis.C:
            probs = document.get("probs")
            if isinstance(probs, dict):
                probs["c"] = float(value)
            else:
                document["probs"] = 0.5 + float(value)
        else:
            if float(value) != int(value):
                raise ConfigError(f"{axis.value!r} must be an integer, got {value!r}")
            document[axis.value] = int(value)
            if axis is SweepAxis.K:
                document["target"].pop("support", None)
        return TrialConfig(document)

    def to_json(self) -> dict[str, Any]:
        return deepcopy(self.document)

    def __repr__(self) -> str:
        return (
            f"<TrialConfig n={self.n} k={self.k} target={self.target_kind.value} m={self.m} trials={self.trials}"
            f" seed={self.seed}>"
        )


def parse_config(document: ExperimentData | Mapping[str, Any] | str | bytes) -> TrialConfig:
    """Validate a experiment configuration document.

    .. code-block:: json

        {
            "n": 32, "k": 4, "m": 100000, "trials": 20, "seed": 0,
            "probs": 0.75,
            "target": {"type": "parity"}
        }

    Raises
    ------
    ConfigError
        The document is not valid.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json_loads(document)
        except ValueError as error:
            raise ConfigError(f"not valid json ({error})") from None
    config = TrialConfig(document)  # type: ignore [arg-type]
    logger.debug("Parsed %r", config)
    return config


def load_config(path: StrPath) -> TrialConfig:
    """Read and validate a configuration file.

    Raises
    ------
    ConfigError
        The file can not be read or is not valid.
    """
    try:
        with open(path, "rb") as file:
            data = file.read()
    except OSError as error:
        raise ConfigError(f"can not read {path}: {error.strerror}") from None
    return parse_config(data)
