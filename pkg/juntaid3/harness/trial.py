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
from math import isnan, nan
from time import perf_counter
from typing import TYPE_CHECKING

from numpy.random import SeedSequence

from ..common.errors import JuntaError
from ..common.random import derive_seed, make_generator
from ..core import split_features
from ..distributions import sample_dataset
from ..learner import check_gain_dominance, id3_learn
from ..oracle import exact_tree_loss

if TYPE_CHECKING:
    from typing import Any, Final

    from .config import TrialConfig

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("TrialResult", "run_trial")


class TrialResult:
    """The outcome of one trial.

    Attributes
    ----------
    index:
        The trial index inside its batch.
    seed:
        The seed derived from the master seed and the index.
    exact_loss:
        ``L_D(T)`` from the oracle, ``nan`` when the trial failed.
    tree_size:
        The number of nodes of the learned tree.
    tree_depth:
        The depth of the learned tree.
    junta_only:
        Whether every split feature is in the junta support.
    basic_conditions_held:
        Whether the sample satisfied the gain ordering condition on every subcube supported in ``J``.
    elapsed:
        Wall time in seconds.
    error:
        ``"<exception class>: <message>"`` when the trial failed, else ``None``.
    """

    __slots__ = (
        "index",
        "seed",
        "exact_loss",
        "tree_size",
        "tree_depth",
        "junta_only",
        "basic_conditions_held",
        "elapsed",
        "error",
    )

    def __init__(
        self,
        index: int,
        seed: int,
        exact_loss: float,
        tree_size: int,
        tree_depth: int,
        junta_only: bool,
        basic_conditions_held: bool,
        elapsed: float,
        error: str | None = None,
    ) -> None:
        self.index: int = index
        self.seed: int = seed
        self.exact_loss: float = exact_loss
        self.tree_size: int = tree_size
        self.tree_depth: int = tree_depth
        self.junta_only: bool = junta_only
        self.basic_conditions_held: bool = basic_conditions_held
        self.elapsed: float = elapsed
        self.error: str | None = error

    @property
    def success(self) -> bool:
        """Whether the learned tree has an exact loss of 0."""
        return self.error is None and not isnan(self.exact_loss) and self.exact_loss == 0.0

    def to_row(self) -> dict[str, Any]:
        """The deterministic part of the result, without the wall time."""
        return {
            "index": self.index,
            "seed": self.seed,
            "success": int(self.success),
            "exact_loss": repr(self.exact_loss),
            "tree_size": self.tree_size,
            "tree_depth": self.tree_depth,
            "junta_only": int(self.junta_only),
            "basic_conditions_held": int(self.basic_conditions_held),
            "error": self.error or "",
        }

    def __repr__(self) -> str:
        return f"<TrialResult index={self.index} exact_loss={self.exact_loss!r} error={self.error!r}>"


def run_trial(config: TrialConfig, index: int) -> TrialResult:
    """Run one trial: draw the target, the distribution and a sample, learn a tree and score it exactly.

    The target, distribution, sample and learner each get an independent stream spawned from
    ``derive_seed(config.seed, index)``, so the result only depends on ``(config, index)``. Errors raised by the
    library are recorded on the result instead of being raised.
    """
    seed = derive_seed(config.seed, index)
    started = perf_counter()
    target_stream, distribution_stream, sample_stream, learner_stream = SeedSequence(seed).spawn(4)
    logger.debug("Trial %s uses seed %s", index, seed)
    try:
        target = config.make_target(make_generator(target_stream))
        distribution = config.make_distribution(make_generator(distribution_stream))
        sample = sample_dataset(distribution, target, config.m, make_generator(sample_stream))
        learner_seed = int(learner_stream.generate_state(1, dtype="uint64")[0])
        tree = id3_learn(sample, None, config.policy, learner_seed)
        loss = exact_tree_loss(distribution, target, tree)
        junta_only = split_features(tree) <= frozenset(target.support)
        conditions = check_gain_dominance(sample, target, config.policy.impurity)
    except JuntaError as error:
        logger.warning("Trial %s failed: %s", index, error)
        return TrialResult(index, seed, nan, 0, 0, False, False, perf_counter() - started, _describe(error))
    except Exception as error:
        logger.exception("Trial %s crashed", index)
        return TrialResult(index, seed, nan, 0, 0, False, False, perf_counter() - started, _describe(error))

    return TrialResult(
        index,
        seed,
        loss,
        tree.size,
        tree.depth,
        junta_only,
        conditions.held,
        perf_counter() - started,
    )


def _describe(error: Exception) -> str:
    return f"{type(error).__name__}: {error}"
