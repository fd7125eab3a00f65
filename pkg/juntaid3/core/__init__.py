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

"""Domain types shared by every other module.

Bit vectors, datasets, product distributions, junta targets, partial assignments and decision trees.
Everything here is immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from .dataset import *
from .distribution import *
from .errors import *
from .partial_assignment import *
from .target import *
from .tree import *

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = (
    "Example",
    "Dataset",
    "restrict_dataset",
    "dumps_dataset",
    "loads_dataset",
    "read_dataset",
    "write_dataset",
    "ProductDistribution",
    "DimensionMismatchError",
    "InvalidIndexError",
    "InvalidTreeError",
    "DatasetFormatError",
    "ConflictingAssignmentError",
    "FreeType",
    "FREE",
    "PartialAssignment",
    "ENUMERATION_LIMIT",
    "TargetFunction",
    "make_parity",
    "make_junta",
    "random_junta",
    "evaluate_target",
    "Leaf",
    "Node",
    "DecisionTree",
    "evaluate_tree",
    "evaluate_tree_traced",
    "split_features",
    "tree_leaves",
    "validate_tree",
    "tree_to_json",
    "tree_from_json",
    "render_tree",
)
