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

"""Shapes of every json document read or written by juntaid3."""

from __future__ import annotations

from typing import TYPE_CHECKING, List, Union

from typing_extensions import Literal, NotRequired, TypedDict

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "LeafData",
    "SplitData",
    "TreeNodeData",
    "SmoothingData",
    "TargetData",
    "InstanceData",
    "ExperimentData",
)


class LeafData(TypedDict):
    leaf: int


class SplitData(TypedDict):
    feature: int
    zero: TreeNodeData
    one: TreeNodeData


TreeNodeData = Union[LeafData, SplitData]


class SmoothingData(TypedDict):
    base: Union[List[float], float]
    alpha: float
    c: float
    seed: NotRequired[int]


class TargetData(TypedDict):
    type: Literal["parity", "junta", "random_junta"]
    support: NotRequired[List[int]]
    table: NotRequired[List[int]]
    seed: NotRequired[int]


class InstanceData(TypedDict):
    n: int
    probs: Union[List[float], float, SmoothingData]
    target: TargetData


class ExperimentData(InstanceData, total=False):
    k: int
    m: int
    trials: int
    seed: int
    impurity: Literal["gini", "entropy"]
    tie_break: Literal["lowest_index", "seeded_random"]
    smoothing_mode: Literal["per_trial", "fixed"]
    jobs: int


