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

from enum import Enum
from typing import TYPE_CHECKING

from ..impurity import GINI, ImpuritySpec, get_impurity
from .errors import UnknownPolicyError

if TYPE_CHECKING:
    from typing import Final

__all__: Final[tuple[str, ...]] = ("TieBreak", "EmptyBranch", "LearnerPolicy")


class TieBreak(str, Enum):
    """How to pick between features with exactly the same gain."""

    LOWEST_INDEX = "lowest_index"
    SEEDED_RANDOM = "seeded_random"


class EmptyBranch(str, Enum):
    """What a branch that no example reaches becomes."""

    PARENT_MAJORITY = "parent_majority"


class LearnerPolicy:
    """Everything the ID3 recursion needs to be fully determined by ``(S, A, seed)``.

    Parameters
    ----------
    tie_break:
        How ties in the argmax are broken.
    empty_branch:
        How empty branches are labelled.
    impurity:
        The impurity function, or its id.

    Raises
    ------
    UnknownPolicyError
        A string value is not a known mode.
    """

    __slots__ = ("tie_break", "empty_branch", "impurity")

    def __init__(
        self,
        tie_break: TieBreak | str = TieBreak.LOWEST_INDEX,
        empty_branch: EmptyBranch | str = EmptyBranch.PARENT_MAJORITY,
        impurity: ImpuritySpec | str = GINI,
    ) -> None:
        try:
            self.tie_break: TieBreak = TieBreak(tie_break)
        except ValueError:
            raise UnknownPolicyError("tie_break", str(tie_break)) from None
        try:
            self.empty_branch: EmptyBranch = EmptyBranch(empty_branch)
        except ValueError:
            raise UnknownPolicyError("empty_branch", str(empty_branch)) from None
        self.impurity: ImpuritySpec = get_impurity(impurity) if isinstance(impurity, str) else impurity

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LearnerPolicy):
            return NotImplemented
        return (
            self.tie_break is other.tie_break
            and self.empty_branch is other.empty_branch
            and self.impurity.kind is other.impurity.kind
        )

    def __hash__(self) -> int:
        return hash((self.tie_break, self.empty_branch, self.impurity.kind))

    def __repr__(self) -> str:
        return (
            f"LearnerPolicy(tie_break={self.tie_break.value!r}, empty_branch={self.empty_branch.value!r}, "
            f"impurity={self.impurity.id!r})"
        )
