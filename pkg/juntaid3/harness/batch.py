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

import asyncio
from concurrent.futures import ProcessPoolExecutor
from logging import getLogger
from math import nan
from time import perf_counter
from typing import TYPE_CHECKING

from ..common.dispatcher import Dispatcher
from ..common.random import GENERATOR_NAME
from .trial import run_trial

if TYPE_CHECKING:
    from typing import Any, Final, Iterable, Literal

    from .config import TrialConfig
    from .trial import TrialResult

    BatchEventName = Literal["trial_finished", "batch_finished"]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("BatchSummary", "BatchRunner", "run_batch")


def _mean(values: list[float]) -> float:
    return sum(values) / len(values) if values else nan


class BatchSummary:
    """Aggregated results of a batch.

    Attributes
    ----------
    config:
        The configuration the batch ran.
    results:
        Every trial result, ordered by index.
    elapsed:
        Wall time of the whole batch in seconds.
    """

    __slots__ = ("config", "results", "elapsed")

    def __init__(self, config: TrialConfig, results: Iterable[TrialResult], elapsed: float) -> None:
        self.config: TrialConfig = config
        self.results: tuple[TrialResult, ...] = tuple(sorted(results, key=lambda result: result.index))
        self.elapsed: float = elapsed

    @property
    def trials(self) -> int:
        return len(self.results)

    @property
    def errors(self) -> int:
        return sum(result.error is not None for result in self.results)

    @property
    def success_rate(self) -> float:
        """The fraction of all trials that ended with an exact loss of 0. Failed trials count as unsuccessful."""
        if not self.results:
            return nan
        return sum(result.success for result in self.results) / len(self.results)

    @property
    def mean_loss(self) -> float:
        """The mean exact loss over the trials that did not fail."""
        return _mean([result.exact_loss for result in self.results if result.error is None])

    @property
    def mean_tree_size(self) -> float:
        return _mean([float(result.tree_size) for result in self.results if result.error is None])

    @property
    def junta_only_rate(self) -> float:
        if not self.results:
            return nan
        return sum(result.junta_only for result in self.results) / len(self.results)

    @property
    def conditions_rate(self) -> float:
        if not self.results:
            return nan
        return sum(result.basic_conditions_held for result in self.results) / len(self.results)

    def to_json(self) -> dict[str, Any]:
        """Everything :func:`write_summary_json` writes, including wall times."""
        return {
            "config": self.config.to_json(),
            "generator": GENERATOR_NAME,
            "trials": self.trials,
            "errors": self.errors,
            "success_rate": self.success_rate,
            "mean_loss": self.mean_loss,
            "mean_tree_size": self.mean_tree_size,
            "junta_only_rate": self.junta_only_rate,
            "basic_conditions_rate": self.conditions_rate,
            "elapsed_seconds": self.elapsed,
            "rows": [dict(result.to_row(), elapsed_seconds=result.elapsed) for result in self.results],
        }

    def __repr__(self) -> str:
        return f"<BatchSummary trials={self.trials} success_rate={self.success_rate!r} errors={self.errors}>"


class BatchRunner:
    """Runs the trials of a batch, optionally in worker processes.

    Every trial is a pure function of the configuration and its index, and the results are ordered by index, so the
    number of workers never changes the output.

    **Example usage:**

    .. code-block:: python

        runner = BatchRunner(jobs=4)

        @runner.dispatcher.listen("trial_finished")
        def on_trial(result: TrialResult) -> None:
            print(result.index, result.exact_loss)

        summary = await runner.run(config)

    Parameters
    ----------
    jobs:
        The number of worker processes. ``1`` runs every trial in the current process.
    dispatcher:
        Receives ``trial_finished`` with each :class:`TrialResult` as it completes, and ``batch_finished`` with the
        :class:`BatchSummary`. A new one is created if not provided.

    Attributes
    ----------
    jobs:
        The number of worker processes.
    dispatcher:
        The event dispatcher.
    """

    __slots__ = ("jobs", "dispatcher")

    def __init__(self, jobs: int = 1, dispatcher: Dispatcher[BatchEventName] | None = None) -> None:
        self.jobs: int = max(jobs, 1)
        self.dispatcher: Dispatcher[BatchEventName] = dispatcher or Dispatcher()

    async def run(self, config: TrialConfig) -> BatchSummary:
        """Run every trial of ``config`` and aggregate them."""
        logger.info("Starting a batch of %s trials with %s jobs", config.trials, self.jobs)
        started = perf_counter()
        results: list[TrialResult] = []

        if self.jobs == 1:
            for index in range(config.trials):
                result = run_trial(config, index)
                results.append(result)
                await self.dispatcher.dispatch("trial_finished", result)
        else:
            loop = asyncio.get_running_loop()
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                pending = [loop.run_in_executor(pool, run_trial, config, index) for index in range(config.trials)]
                for future in asyncio.as_completed(pending):
                    result = await future
                    results.append(result)
                    await self.dispatcher.dispatch("trial_finished", result)

        summary = BatchSummary(config, results, perf_counter() - started)
        logger.info("Finished a batch: success rate %r, %s errors", summary.success_rate, summary.errors)
        await self.dispatcher.dispatch("batch_finished", summary)
        return summary


def run_batch(config: TrialConfig, jobs: int = 1) -> BatchSummary:
    """Blocking wrapper around :meth:`BatchRunner.run`. Must not be called from a running event loop."""
    return asyncio.run(BatchRunner(jobs).run(config))
