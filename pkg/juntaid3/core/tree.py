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

from typing import TYPE_CHECKING, Union

from .errors import InvalidTreeError
from .partial_assignment import PartialAssignment

if TYPE_CHECKING:
    from typing import Any, Final, Iterator, Sequence

    from ..typings import TreeNodeData

__all__: Final[tuple[str, ...]] = (
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


class Leaf:
    """A leaf that outputs a fixed label.

    Attributes
    ----------
    label:
        The predicted label.
    """

    __slots__ = ("label",)

    def __init__(self, label: int) -> None:
        if label not in (0, 1):
            raise InvalidTreeError(f"Leaf labels must be 0 or 1, got {label!r}")
        self.label: int = int(label)

    @property
    def size(self) -> int:
        return 1

    @property
    def depth(self) -> int:
        return 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Leaf):
            return NotImplemented
        return self.label == other.label

    def __hash__(self) -> int:
        return hash(("leaf", self.label))

    def __repr__(self) -> str:
        return f"Leaf({self.label})"


class Node:
    """A internal node splitting on a feature.

    Attributes
    ----------
    feature:
        The index of the feature this node reads.
    zero:
        The subtree for inputs with ``x_feature = 0``.
    one:
        The subtree for inputs with ``x_feature = 1``.
    """

    __slots__ = ("feature", "zero", "one", "size", "depth")

    def __init__(self, feature: int, zero: DecisionTree, one: DecisionTree) -> None:
        if feature < 0:
            raise InvalidTreeError(f"Feature indices must be non-negative, got {feature}")
        self.feature: int = int(feature)
        self.zero: DecisionTree = zero
        self.one: DecisionTree = one
        self.size: int = 1 + zero.size + one.size
        self.depth: int = 1 + max(zero.depth, one.depth)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Node):
            return NotImplemented
        return self.feature == other.feature and self.zero == other.zero and self.one == other.one

    def __hash__(self) -> int:
        return hash((self.feature, self.zero, self.one))

    def __repr__(self) -> str:
        return f"Node({self.feature}, zero={self.zero!r}, one={self.one!r})"


DecisionTree = Union[Leaf, Node]


def evaluate_tree(tree: DecisionTree, bits: Sequence[int]) -> int:
    """Follow the branch selected by each node's feature and return the leaf label."""
    node = tree
    while isinstance(node, Node):
        node = node.one if bits[node.feature] else node.zero
    return node.label


def evaluate_tree_traced(tree: DecisionTree, bits: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Like :func:`evaluate_tree`, but also return the features consulted on the way, in order."""
    consulted: list[int] = []
    node = tree
    while isinstance(node, Node):
        consulted.append(node.feature)
        node = node.one if bits[node.feature] else node.zero
    return node.label, tuple(consulted)


def split_features(tree: DecisionTree) -> frozenset[int]:
    """Every feature used by a internal node."""
    if isinstance(tree, Leaf):
        return frozenset()
    return frozenset((tree.feature,)) | split_features(tree.zero) | split_features(tree.one)


def tree_leaves(tree: DecisionTree, n: int) -> Iterator[tuple[PartialAssignment, int]]:
    """Iterate over every leaf as ``(path assignment, label)``.

    Raises
    ------
    InvalidTreeError
        A feature is ``>= n`` or repeats along a path.
    """

    def walk(node: DecisionTree, path: PartialAssignment) -> Iterator[tuple[PartialAssignment, int]]:
        if isinstance(node, Leaf):
            yield path, node.label
            return
        if node.feature >= n:
            raise InvalidTreeError(f"Feature {node.feature} is out of range for n={n}")
        if not path.is_free(node.feature):
            raise InvalidTreeError(f"Feature {node.feature} repeats along a path")
        yield from walk(node.zero, path.fix(node.feature, 0))
        yield from walk(node.one, path.fix(node.feature, 1))

    yield from walk(tree, PartialAssignment.free(n))


def validate_tree(tree: DecisionTree, n: int) -> None:
    """Check that every feature is ``< n`` and no feature repeats along a root-to-leaf path.

    Raises
    ------
    InvalidTreeError
        The tree is invalid.
    """
    for _ in tree_leaves(tree, n):
        pass


def tree_to_json(tree: DecisionTree) -> TreeNodeData:
    """Convert a tree to ``{"feature": int, "zero": node, "one": node}`` / ``{"leaf": 0|1}`` dicts."""
    if isinstance(tree, Leaf):
        return {"leaf": tree.label}
    return {"feature": tree.feature, "zero": tree_to_json(tree.zero), "one": tree_to_json(tree.one)}


def tree_from_json(data: Any, n: int | None = None) -> DecisionTree:
    """Build a tree from the dicts produced by :func:`tree_to_json`.

    Parameters
    ----------
    data:
        The decoded json.
    n:
        If provided, the tree is validated against this dimension.

    Raises
    ------
    InvalidTreeError
        The data is not a valid tree.
    """

    def build(node: Any) -> DecisionTree:
        if not isinstance(node, dict):
            raise InvalidTreeError(f"Expected a object, got {node!r}")
        if "leaf" in node:
            return Leaf(node["leaf"])
        try:
            feature = node["feature"]
            zero = node["zero"]
            one = node["one"]
        except KeyError as error:
            raise InvalidTreeError(f"Node is missing {error.args[0]!r}") from None
        if not isinstance(feature, int) or isinstance(feature, bool):
            raise InvalidTreeError(f"Feature must be a integer, got {feature!r}")
        return Node(feature, build(zero), build(one))

    tree = build(data)
    if n is not None:
        validate_tree(tree, n)
    return tree


def render_tree(tree: DecisionTree, *, indent: str = "  ") -> str:
    """Render a tree as indented text.

    .. code-block:: text

        x0 = 0:
          leaf 0
        x0 = 1:
          leaf 1
    """
    lines: list[str] = []

    def walk(node: DecisionTree, depth: int) -> None:
        prefix = indent * depth
        if isinstance(node, Leaf):
            lines.append(f"{prefix}leaf {node.label}")
            return
        lines.append(f"{prefix}x{node.feature} = 0:")
        walk(node.zero, depth + 1)
        lines.append(f"{prefix}x{node.feature} = 1:")
        walk(node.one, depth + 1)

    walk(tree, 0)
    return "\n".join(lines) + "\n"
