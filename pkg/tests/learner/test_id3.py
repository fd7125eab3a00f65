from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from pytest import mark, raises

from juntaid3.core import (
    Dataset,
    InvalidIndexError,
    Leaf,
    Node,
    ProductDistribution,
    evaluate_tree,
    make_parity,
    random_junta,
    split_features,
    validate_tree,
)
from juntaid3.distributions import sample_dataset
from juntaid3.impurity import ENTROPY
from juntaid3.learner import (
    EmptySampleError,
    LearnerPolicy,
    TieBreak,
    UnknownPolicyError,
    check_gain_dominance,
    choose_feature,
    id3_learn,
    majority_label,
)
from juntaid3.oracle import exact_tree_loss

if TYPE_CHECKING:
    from typing import Iterator

    from juntaid3.core import DecisionTree


def test_pure_sample_is_a_leaf():
    dataset = Dataset([[0, 1], [1, 0]], [1, 1])

    assert id3_learn(dataset) == Leaf(1)


def test_constant_feature_can_win_a_zero_gain_tie():
    # every gain is 0, so the lowest index wins even though x0 never varies
    dataset = Dataset([[0, 0], [0, 0], [0, 1], [0, 1]], [0, 1, 0, 1])

    tree = id3_learn(dataset)

    assert tree == Node(0, Node(1, Leaf(0), Leaf(0)), Leaf(0))


def test_dictator():
    dataset = Dataset([[0, 0], [0, 1], [1, 0], [1, 1]], [0, 0, 1, 1])

    assert id3_learn(dataset) == Node(0, Leaf(0), Leaf(1))


def test_weighted_parity_with_noise(weighted_parity_with_noise: Dataset):
    tree = id3_learn(weighted_parity_with_noise)
    distribution = ProductDistribution([0.75, 0.75, 0.5, 0.5])

    assert split_features(tree) == frozenset({0, 1}), f"Split on irrelevant features: {tree!r}"
    assert exact_tree_loss(distribution, make_parity(4, [0, 1]), tree) == 0.0


def test_zero_training_error(weighted_parity_with_noise: Dataset):
    tree = id3_learn(weighted_parity_with_noise, policy=LearnerPolicy(impurity=ENTROPY))

    for example in weighted_parity_with_noise.examples:
        assert evaluate_tree(tree, example.bits) == example.label


def test_deterministic(weighted_parity_with_noise: Dataset):
    assert id3_learn(weighted_parity_with_noise) == id3_learn(weighted_parity_with_noise)


def test_seeded_random_is_reproducible():
    dataset = Dataset([[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]], [0, 1, 1, 0])
    policy = LearnerPolicy(TieBreak.SEEDED_RANDOM)

    assert id3_learn(dataset, policy=policy, seed=5) == id3_learn(dataset, policy=policy, seed=5)


def test_seeded_random_uses_ties():
    dataset = Dataset([[0, 0], [0, 1], [1, 0], [1, 1]], [0, 1, 1, 0])
    policy = LearnerPolicy(TieBreak.SEEDED_RANDOM)

    roots = {id3_learn(dataset, policy=policy, seed=seed).feature for seed in range(40)}  # type: ignore [union-attr]

    assert roots == {0, 1}, "Seeded ties never picked one of the tied features"


def test_exhausted_features_give_majority_leaf():
    dataset = Dataset([[1, 0], [1, 0], [1, 0]], [1, 1, 0])

    assert id3_learn(dataset, features=[]) == Leaf(1)
    assert id3_learn(dataset, features=[0]) == Node(0, Leaf(1), Leaf(1))


def test_majority_ties_are_zero():
    dataset = Dataset([[1], [1]], [1, 0])

    assert id3_learn(dataset, features=[]) == Leaf(0)
    assert id3_learn(dataset) == Node(0, Leaf(0), Leaf(0))


def test_empty_branch_uses_parent_majority():
    # x1 is constant on the x0 = 0 half, so splitting on it there leaves the x1 = 1 branch empty.
    dataset = Dataset([[1, 0], [1, 1], [1, 0], [1, 1], [0, 0], [0, 0], [0, 0]], [1, 1, 1, 1, 0, 0, 1])
    tree = id3_learn(dataset)

    assert tree == Node(0, Node(1, Leaf(0), Leaf(0)), Leaf(1)), f"Unexpected tree {tree!r}"
    assert evaluate_tree(tree, [0, 1]) == 0, "Empty branch did not use the majority of its parent"


def test_empty_sample():
    with raises(EmptySampleError):
        id3_learn(Dataset(np.zeros((0, 2), dtype=bool), [], n=2))


def test_feature_out_of_range():
    with raises(InvalidIndexError):
        id3_learn(Dataset([[0], [1]], [0, 1]), features=[1])


def test_unknown_policy():
    with raises(UnknownPolicyError):
        LearnerPolicy("random")


def test_majority_label():
    assert majority_label(3, 4) == 1
    assert majority_label(2, 4) == 0
    assert majority_label(0.375, 1.0) == 0


def test_choose_feature_lowest_index():
    policy = LearnerPolicy()

    assert choose_feature((2, 5, 7), np.array([0.1, 0.3, 0.3]), policy, None) == 5


def _paths(tree: DecisionTree, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    if isinstance(tree, Leaf):
        yield prefix
        return
    yield from _paths(tree.zero, (*prefix, tree.feature))
    yield from _paths(tree.one, (*prefix, tree.feature))


@mark.parametrize("tie_break", [TieBreak.LOWEST_INDEX, TieBreak.SEEDED_RANDOM])
def test_paths_use_each_candidate_at_most_once(tie_break: TieBreak):
    rng = np.random.default_rng(12)
    policy = LearnerPolicy(tie_break)
    for seed in range(100):
        n = int(rng.integers(1, 8))
        m = int(rng.integers(1, 100))
        candidates = [index for index in range(n) if rng.random() < 0.7]
        dataset = Dataset(rng.integers(0, 2, size=(m, n)), rng.integers(0, 2, size=m))

        tree = id3_learn(dataset, features=candidates, policy=policy, seed=seed)

        validate_tree(tree, n)
        assert split_features(tree) <= set(candidates)
        for path in _paths(tree):
            assert len(set(path)) == len(path), f"Repeated feature on {path}"


def test_gain_dominance_gives_zero_training_error():
    rng = np.random.default_rng(13)
    held = 0
    for _ in range(60):
        k = int(rng.integers(1, 4))
        n = k + 3
        target = random_junta(n, range(k), rng)
        biased = rng.uniform(0.15, 0.35, size=n)
        distribution = ProductDistribution(np.where(rng.random(n) < 0.5, biased, 1 - biased))
        dataset = sample_dataset(distribution, target, int(rng.integers(500, 3000)), rng)
        if not check_gain_dominance(dataset, target):
            continue
        held += 1

        tree = id3_learn(dataset)

        patterns = {tuple(row) for row in dataset.features[:, :k].astype(int).tolist()}
        assert len(patterns) == 2**k
        for example in dataset.examples:
            assert evaluate_tree(tree, example.bits) == example.label
        assert split_features(tree) <= set(range(k))

    assert held >= 10, "Too few samples met the gain ordering to say anything"
