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

"""Seeded experiments: trials, batches, sweeps and their reports."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .batch import *
from .cli import *
from .config import *
from .errors import *
from .report import *
from .sweep import *
from .trial import *

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "BatchSummary",
    "BatchRunner",
    "run_batch",
    "build_parser",
    "main",
    "TargetKind",
    "SmoothingMode",
    "SweepAxis",
    "TrialConfig",
    "parse_config",
    "load_config",
    "ConfigError",
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
    "SweepRow",
    "SweepTable",
    "sweep",
    "run_sweep",
    "TrialResult",
    "run_trial",
)
