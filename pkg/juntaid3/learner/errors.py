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

from typing import TYPE_CHECKING

from ..common.errors import JuntaError

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = ("EmptySampleError", "DegenerateFeatureError", "UnknownPolicyError")


class EmptySampleError(JuntaError):
    """A statistic or the learner was asked to work on a sample with no examples."""

    def __init__(self) -> None:
        super().__init__("The sample is empty")


class DegenerateFeatureError(JuntaError):
    """A feature is constant on the sample, so one of its conditional probabilities is undefined.

    Parameters
    ----------
    feature:
        The feature index.
    """

    def __init__(self, feature: int) -> None:
        self.feature: int = feature
        super().__init__(f"Feature {feature} is constant on the sample")


class UnknownPolicyError(JuntaError):
    """A learner policy field has a unsupported value.

    Parameters
    ----------
    field:
        The policy field.
    value:
        The value that was requested.
    """

    def __init__(self, field: str, value: str) -> None:
        self.field: str = field
        self.value: str = value
        super().__init__(f"Unknown {field} {value!r}")
