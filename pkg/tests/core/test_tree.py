from __future__ import annotations

from numpy.random import default_rng
from pytest import raises

from juntaid3.core import (
    Dataset,
    InvalidTreeError,
    Leaf,
    Node,
    evaluate_tree,
    evaluate_tree_traced,
    render_tree,
    split_features,
    tree_from_json,
    tree_leaves,
    tree_to_json,
    validate_tree,
)
from juntaid3.learner import id3_learn

XOR = Node(0, Node(1, Leaf(0), Leaf(1)), Node(1, Leaf(1), Leaf(0)))


def test_size_and_depth():
    assert Leaf(1).size == 1
    assert Leaf(1).depth == 0
    assert XOR.size == 7
    assert XOR.depth == 2


def test_evaluate():
    assert evaluate_tree(XOR, [0, 0]) == 0
    assert evaluate_tree(XOR, [1, 0]) == 1
    assert evaluate_tree(XOR, [1, 1]) == 0


def test_evaluate_traced():
    label, consulted = evaluate_tree_traced(XOR, [0, 1])

    assert label == 1
    assert consulted == (0, 1)


def test_split_features():
    assert split_features(XOR) == frozenset({0, 1})
    assert split_features(Leaf(0)) == frozenset()


def test_leaves():
    leaves = [(str(path), label) for path, label in tree_leaves(XOR, 3)]

    assert leaves == [("00*", 0), ("01*", 1), ("10*", 1), ("11*", 0)]


def test_repeated_feature_is_invalid():
    with raises(InvalidTreeError):
        validate_tree(Node(0, Node(0, Leaf(0), Leaf(1)), Leaf(1)), 2)


def test_feature_out_of_range():
    with raises(InvalidTreeError):
        validate_tree(Node(3, Leaf(0), Leaf(1)), 2)


def test_invalid_leaf():
    with raises(InvalidTreeError):
        Leaf(2)


def test_json_round_trip():
    data = tree_to_json(XOR)

    assert data["feature"] == 0  # type: ignore [typeddict-item]
    assert tree_from_json(data, 2) == XOR


def test_json_shape():
    assert tree_to_json(Node(2, Leaf(0), Leaf(1))) == {"feature": 2, "zero": {"leaf": 0}, "one": {"leaf": 1}}


def test_json_missing_key():
    with raises(InvalidTreeError):
        tree_from_json({"feature": 0, "zero": {"leaf": 0}})


def test_json_validates_dimension():
    with raises(InvalidTreeError):
        tree_from_json({"feature": 5, "zero": {"leaf": 0}, "one": {"leaf": 1}}, 3)


def test_render():
    assert render_tree(Node(3, Leaf(0), Leaf(1))) == "x3 = 0:\n  leaf 0\nx3 = 1:\n  leaf 1\n"


def test_learned_trees_only_consult_their_path():
    rng = default_rng(21)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        m = int(rng.integers(1, 80))
        tree = id3_learn(Dataset(rng.integers(0, 2, size=(m, n)), rng.integers(0, 2, size=m)))
        leaves = {(str(path), label) for path, label in tree_leaves(tree, n)}

        for _ in range(20):
            bits = rng.integers(0, 2, size=n).tolist()
            label, consulted = evaluate_tree_traced(tree, bits)

            assert label == evaluate_tree(tree, bits)
            assert len(set(consulted)) == len(consulted)
            path = "".join(str(bit) if index in consulted else "*" for index, bit in enumerate(bits))
            assert (path, label) in leaves, f"{path} is not a root to leaf path of {tree!r}"
            for index in set(range(n)) - set(consulted):
                flipped = list(bits)
                flipped[index] ^= 1
                assert evaluate_tree(tree, flipped) == label
