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

"""Exact distributional ground truth for junta targets.

Label probabilities, ``I(D_w, i)``, gains and tree losses are computed by enumerating the ``2^k`` patterns of the
junta support, which keeps every quantity exact up to floating point rounding.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .conditions import *
from .errors import *
from .exact import *
from .parity import *
from .subcube import *

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "SubcubeDiagnostic",
    "BasicConditionsReport",
    "verify_basic_conditions",
    "ZeroMassRestrictionError",
    "FixedCoordinateError",
    "exact_label_prob",
    "exact_I",
    "exact_gain",
    "exact_gains",
    "exact_tree_loss",
    "parity_label_prob_closed_form",
    "parity_I_closed_form",
    "parity_lower_bound",
    "gain_upper_bound",
    "gain_lower_bound",
    "SubcubeWeight",
    "SubcubeWeights",
    "subcube_weights",
    "pattern_bits",
)
