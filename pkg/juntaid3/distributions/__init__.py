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

"""Example samplers, smoothed distributions, (alpha, c) validation and sample size calculators."""

from __future__ import annotations

from typing import TYPE_CHECKING

from .errors import *
from .instance import *
from .sample_size import *
from .sampling import *
from .smoothing import *

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "SmoothingSpecError",
    "InstanceFormatError",
    "InvalidParameterError",
    "Instance",
    "parse_instance",
    "parse_target",
    "parse_probabilities",
    "SATURATED",
    "sample_size_basic",
    "sample_size_parity",
    "sample_size_junta",
    "sample_size_correlation",
    "sample_features",
    "sample_dataset",
    "SmoothingSpec",
    "smoothed_distribution",
    "draw_perturbation",
    "validate_alpha_c",
)
