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

import csv
from io import StringIO
from logging import getLogger
from math import isfinite
from typing import TYPE_CHECKING

from ..common.json import json_dumps

if TYPE_CHECKING:
    from os import PathLike
    from typing import Any, Final, Union

    from .batch import BatchSummary
    from .sweep import SweepTable

    StrPath = Union[str, PathLike[str]]

logger = getLogger(__name__)

__all__: Final[tuple[str, ...]] = (
    "TRIAL_COLUMNS",
    "SWEEP_COLUMNS",
    "dumps_trials_csv",
    "write_trials_csv",
    "dumps_sweep_csv",
    "write_sweep_csv",
    "finite_json",
    "dumps_summary_json",
    "write_summary_json",
    "render_svg",
    "write_plot_svg",
)

TRIAL_COLUMNS: Final[tuple[str, ...]] = (
    "index",
    "seed",
    "success",
    "exact_loss",
    "tree_size",
    "tree_depth",
    "junta_only",
    "basic_conditions_held",
    "error",
)
SWEEP_COLUMNS: Final[tuple[str, ...]] = ("value", "success_rate", "mean_loss", "mean_tree_size", "trials", "error")

_WIDTH: Final[int] = 640
_HEIGHT: Final[int] = 400
_MARGIN: Final[int] = 56


def _dumps_csv(columns: tuple[str, ...], rows: list[dict[str, Any]]) -> str:
    buffer = StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _write_text(path: StrPath, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(text)
    logger.debug("Wrote %s", path)


def dumps_trials_csv(summary: BatchSummary) -> str:
    """The per-trial rows of a batch as csv, ordered by index.

    Wall times are left out, so the same configuration always produces the same bytes.
    """
    return _dumps_csv(TRIAL_COLUMNS, [result.to_row() for result in summary.results])


def write_trials_csv(summary: BatchSummary, path: StrPath) -> None:
    _write_text(path, dumps_trials_csv(summary))


def dumps_sweep_csv(table: SweepTable) -> str:
    return _dumps_csv(SWEEP_COLUMNS, [row.to_row() for row in table.rows])


def write_sweep_csv(table: SweepTable, path: StrPath) -> None:
    _write_text(path, dumps_sweep_csv(table))


def finite_json(value: Any) -> Any:
    """Replace every non-finite float inside nested dicts and lists with ``None``."""
    if isinstance(value, float) and not isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: finite_json(item) for key, item in value.items()}
    if isinstance(value, list):
        return [finite_json(item) for item in value]
    return value


def dumps_summary_json(summary: BatchSummary) -> str:
    """The batch summary as indented json. Non-finite numbers become ``null``."""
    return json_dumps(finite_json(summary.to_json()), indent=True)


def write_summary_json(summary: BatchSummary, path: StrPath) -> None:
    _write_text(path, dumps_summary_json(summary) + "\n")


def render_svg(table: SweepTable) -> str:
    """A self-contained line chart of the success rate against the swept axis.

    Rows without a finite success rate are skipped. The x axis is linear between the smallest and largest value.
    """
    points = [(float(row.value), row.success_rate) for row in table.rows if isfinite(row.success_rate)]
    plot_width = _WIDTH - 2 * _MARGIN
    plot_height = _HEIGHT - 2 * _MARGIN
    bottom = _HEIGHT - _MARGIN

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" height="{_HEIGHT}" '
        f'viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
        f'<line x1="{_MARGIN}" y1="{bottom}" x2="{_WIDTH - _MARGIN}" y2="{bottom}" stroke="black"/>',
        f'<line x1="{_MARGIN}" y1="{_MARGIN}" x2="{_MARGIN}" y2="{bottom}" stroke="black"/>',
        f'<text x="{_WIDTH // 2}" y="{_HEIGHT - 16}" text-anchor="middle" font-size="14">{table.axis.value}</text>',
        f'<text x="16" y="{_HEIGHT // 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 16 {_HEIGHT // 2})">success rate</text>',
    ]
    for tick in (0.0, 0.5, 1.0):
        y = bottom - tick * plot_height
        lines.append(f'<text x="{_MARGIN - 8}" y="{y:.1f}" text-anchor="end" font-size="12">{tick:g}</text>')

    if points:
        low = min(x for x, _ in points)
        high = max(x for x, _ in points)
        span = high - low or 1.0
        coordinates = []
        for x, rate in points:
            px = _MARGIN + (x - low) / span * plot_width if high > low else _MARGIN + plot_width / 2
            py = bottom - rate * plot_height
            coordinates.append(f"{px:.1f},{py:.1f}")
            lines.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="3" fill="steelblue"/>')
        lines.append(f'<polyline points="{" ".join(coordinates)}" fill="none" stroke="steelblue" stroke-width="2"/>')
        lines.append(f'<text x="{_MARGIN}" y="{bottom + 18}" text-anchor="middle" font-size="12">{low:g}</text>')
        if high > low:
            lines.append(
                f'<text x="{_WIDTH - _MARGIN}" y="{bottom + 18}" text-anchor="middle" font-size="12">{high:g}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_plot_svg(table: SweepTable, path: StrPath) -> None:
    _write_text(path, render_svg(table))
