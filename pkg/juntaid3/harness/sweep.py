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
from logging import getLogger
from math import isfinite, nan
from typing import TYPE_CHECKING

from .batch import BatchRunner
from .config import SweepAxis
from .errors import ConfigError

if TYPE_CHECKING:
    from typing import Any, Final, Iterable

    from .config import TrialConfig

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = ("SweepRow", "SweepTable", "sweep", "run_sweep")


class SweepRow:
    """One swept value and the aggregates of its batch.

    Attributes
    ----------
    value:
        The axis value.
    success_rate:
        The batch success rate, ``nan`` if the value was invalid.
    mean_loss:
        The batch mean exact loss.
    mean_tree_size:
        The batch mean tree size.
    trials:
        How many trials ran.
    error:
        Why the value was rejected, else ``None``.
    """

    __slots__ = ("value", "success_rate", "mean_loss", "mean_tree_size", "trials", "error")

    def __init__(
        self,
        value: float,
        success_rate: float,
        mean_loss: float,
        mean_tree_size: float,
        trials: int,
        error: str | None = None,
    ) -> None:
        self.value: float = value
        self.success_rate: float = success_rate
        self.mean_loss: float = mean_loss
        self.mean_tree_size: float = mean_tree_size
        self.trials: int = trials
        self.error: str | None = error

    def to_row(self) -> dict[str, Any]:
        return {
            "value": repr(self.value),
            "success_rate": repr(self.success_rate),
            "mean_loss": repr(self.mean_loss),
            "mean_tree_size": repr(self.mean_tree_size),
            "trials": self.trials,
            "error": self.error or "",
        }

    def __repr__(self) -> str:
        return f"<SweepRow value={self.value!r} success_rate={self.success_rate!r} error={self.error!r}>"


class SweepTable:
    """The rows of a sweep, in the order the values were given.

    Attributes
    ----------
    axis:
        The swept axis.
    rows:
        One row per value.
    """

    __slots__ = ("axis", "rows")

    def __init__(self, axis: SweepAxis, rows: Iterable[SweepRow]) -> None:
        self.axis: SweepAxis = axis
        self.rows: tuple[SweepRow, ...] = tuple(rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"<SweepTable axis={self.axis.value} rows={len(self.rows)}>"


def _normalize(value: float) -> float | int:
    value = float(value)
    return int(value) if isfinite(value) and value.is_integer() else value


async def sweep(
    runner: BatchRunner, config: TrialConfig, axis: SweepAxis | str, values: Iterable[float]
) -> SweepTable:
    """Run one batch per value of ``axis``.

    A value that makes the configuration invalid produces a row with its error instead of stopping the sweep.

    Raises
    ------
    ConfigError
        ``axis`` is not a known axis.
    """
    try:
        axis = SweepAxis(axis)
    except ValueError:
        raise ConfigError(f"unknown sweep axis {axis!r}") from None

    rows: list[SweepRow] = []
    for value in values:
        value = _normalize(value)
        try:
            swept = config.replace(axis, value)
        except ConfigError as error:
            logger.warning("Skipping %s=%r: %s", axis.value, value, error.reason)
            rows.append(SweepRow(value, nan, nan, nan, 0, error.reason))
            continue
        logger.info("Sweeping %s=%r", axis.value, value)
        summary = await runner.run(swept)
        rows.append(SweepRow(value, summary.success_rate, summary.mean_loss, summary.mean_tree_size, summary.trials))
    return SweepTable(axis, rows)


def run_sweep(config: TrialConfig, axis: SweepAxis | str, values: Iterable[float], jobs: int = 1) -> SweepTable:
    """Blocking wrapper around :func:`sweep`. Must not be called from a running event loop."""
    return asyncio.run(sweep(BatchRunner(jobs), config, axis, values))
