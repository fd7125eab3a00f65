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

"""Boolean Fourier analysis of junta targets over the ``chi_I(x) = prod (2 x_i - 1)`` basis.

Coefficients, restrictions ``f_w``, the split ``f_w = (2 x_i - 1) g + h``, the shifted polynomial ``g0(delta)`` and
its normalization, and Monte Carlo anti-concentration checks.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .anticoncentration import *
from .errors import *
from .expansion import *
from .polynomial import *

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "anticoncentration_estimate",
    "anticoncentration_bound",
    "normalized_anticoncentration_bound",
    "junta_I_lower_bound",
    "junta_bound_failure_rate",
    "RestrictionOutsideSupportError",
    "PolynomialArityError",
    "UnsupportedBasisError",
    "FOURIER_LIMIT",
    "FourierExpansion",
    "walsh_hadamard",
    "subset_signs",
    "fourier_coeffs",
    "restrict_target",
    "Basis",
    "MultilinearPolynomial",
    "split_on_coordinate",
    "shift_polynomial",
    "normalize_polynomial",
)
