from __future__ import annotations

from itertools import product

import numpy as np
from pytest import approx, mark, raises

from juntaid3.core import (
    FREE,
    InvalidTreeError,
    Leaf,
    Node,
    PartialAssignment,
    ProductDistribution,
    evaluate_target,
    make_junta,
    make_parity,
    random_junta,
    restrict_dataset,
)
from juntaid3.distributions import sample_dataset
from juntaid3.impurity import ENTROPY, GINI
from juntaid3.learner import empirical_gain, empirical_I
from juntaid3.oracle import (
    FixedCoordinateError,
    ZeroMassRestrictionError,
    exact_gain,
    exact_gains,
    exact_I,
    exact_label_prob,
    exact_tree_loss,
    subcube_weights,
)

BIASED = ProductDistribution([0.75, 0.75])
PARITY = make_parity(2, [0, 1])


def _brute_force_label_prob(distribution: ProductDistribution, target, assignment: PartialAssignment) -> float:
    mass = 0.0
    positive = 0.0
    for bits in product((0, 1), repeat=distribution.n):
        if not assignment.is_consistent(bits):
            continue
        weight = float(np.prod([p if bit else 1 - p for p, bit in zip(distribution.probs, bits)]))
        mass += weight
        positive += weight * evaluate_target(target, bits)
    return positive / mass


def test_weighted_parity():
    assert exact_label_prob(BIASED, PARITY) == approx(0.375, abs=1e-15)
    assert exact_I(BIASED, PARITY, None, 0) == approx(0.09375, abs=1e-15)
    assert exact_gain(BIASED, PARITY, None, 0, GINI) == approx(0.046875, abs=1e-15)


def test_constant_one():
    target = make_junta(3, [1], [1, 1])

    assert exact_label_prob(ProductDistribution([0.2, 0.9, 0.4]), target) == 1.0


def test_fully_fixed_support_is_a_table_lookup():
    target = make_junta(3, [0, 2], [0, 1, 1, 0])
    distribution = ProductDistribution([0.3, 0.6, 0.8])

    for x0, x2 in product((0, 1), repeat=2):
        assignment = PartialAssignment([x0, FREE, x2])
        assert exact_label_prob(distribution, target, assignment) == evaluate_target(target, [x0, 0, x2])


def test_irrelevant_feature_is_exactly_zero():
    distribution = ProductDistribution([0.75, 0.75, 0.6])
    target = make_parity(3, [0, 1])

    assert exact_I(distribution, target, None, 2) == 0.0
    assert exact_gain(distribution, target, None, 2) == 0.0


def test_last_free_coordinate():
    distribution = ProductDistribution([0.75, 0.6])
    assignment = PartialAssignment([1, FREE])

    assert abs(exact_I(distribution, PARITY, assignment, 1)) == approx(0.6 * 0.4, abs=1e-15)


@mark.parametrize("k", range(2, 7))
def test_uniform_parity_has_zero_gain(k: int):
    distribution = ProductDistribution.uniform(k + 1)
    target = make_parity(k + 1, range(k))

    gains = exact_gains(distribution, target, None, range(k + 1), GINI)

    assert gains.tolist() == [0.0] * (k + 1), f"Nonzero uniform parity gains {gains}"


@mark.parametrize("seed", range(10))
def test_matches_brute_force(seed: int):
    rng = np.random.default_rng(seed)
    n = 5
    distribution = ProductDistribution(rng.uniform(0.05, 0.95, size=n))
    target = make_junta(n, [0, 2, 3], rng.integers(0, 2, size=8))
    values = [FREE, 0, 1]
    assignment = PartialAssignment([values[int(rng.integers(3))] for _ in range(n)])

    expected = _brute_force_label_prob(distribution, target, assignment)

    assert exact_label_prob(distribution, target, assignment) == approx(expected, abs=1e-12)


def test_gains_match_single_gain():
    distribution = ProductDistribution([0.7, 0.2, 0.55, 0.4])
    target = make_junta(4, [0, 1, 3], [0, 1, 1, 1, 0, 0, 1, 0])

    gains = exact_gains(distribution, target, None, [3, 0, 2], ENTROPY)

    assert gains[0] == exact_gain(distribution, target, None, 3, ENTROPY)
    assert gains[1] == exact_gain(distribution, target, None, 0, ENTROPY)
    assert gains[2] == 0.0


def test_fixed_feature():
    with raises(FixedCoordinateError):
        exact_I(BIASED, PARITY, PartialAssignment([0, FREE]), 0)


def test_zero_mass():
    distribution = ProductDistribution([1.0, 0.5])

    with raises(ZeroMassRestrictionError):
        exact_label_prob(distribution, PARITY, PartialAssignment([0, FREE]))


def test_subcube_weights_sum_to_one():
    distribution = ProductDistribution([0.3, 0.9, 0.6])
    target = make_junta(3, [0, 1, 2], [0, 1, 0, 1, 1, 0, 0, 1])

    weights = subcube_weights(distribution, target, PartialAssignment([FREE, 1, FREE]))

    assert float(weights.weights.sum()) == approx(1.0)
    assert weights.mass == approx(0.9)
    assert all(entry.weight == 0.0 for entry in weights if not entry.pattern & 0b10)


def test_tree_loss():
    assert exact_tree_loss(BIASED, PARITY, Leaf(1)) == approx(0.625, abs=1e-15)
    assert exact_tree_loss(BIASED, PARITY, Leaf(0)) == approx(exact_label_prob(BIASED, PARITY), abs=1e-15)


def test_tree_loss_of_exact_tree():
    tree = Node(1, Node(0, Leaf(0), Leaf(1)), Node(0, Leaf(1), Leaf(0)))

    assert exact_tree_loss(BIASED, PARITY, tree) == 0.0


def test_tree_loss_with_irrelevant_split():
    distribution = ProductDistribution([0.75, 0.75, 0.2])
    target = make_parity(3, [0, 1])
    tree = Node(2, Leaf(1), Node(0, Node(1, Leaf(0), Leaf(1)), Node(1, Leaf(1), Leaf(0))))

    assert exact_tree_loss(distribution, target, tree) == approx(0.8 * 0.625, abs=1e-15)


def test_tree_loss_invalid_tree():
    with raises(InvalidTreeError):
        exact_tree_loss(BIASED, PARITY, Node(4, Leaf(0), Leaf(1)))


def test_sample_estimates_stay_inside_the_hoeffding_envelope():
    rng = np.random.default_rng(8)
    n, m, delta = 6, 100_000, 0.05
    failures = 0
    for _ in range(100):
        distribution = ProductDistribution(rng.uniform(0.2, 0.8, size=n))
        support = sorted(rng.choice(n, size=int(rng.integers(1, 4)), replace=False).tolist())
        target = random_junta(n, support, rng)
        fixed = rng.choice(support, size=int(rng.integers(0, min(2, len(support)) + 1)), replace=False)
        raw = [FREE] * n
        for coordinate in fixed.tolist():
            raw[coordinate] = int(rng.integers(0, 2))
        assignment = PartialAssignment(raw)
        feature = int(rng.choice([i for i in range(n) if assignment.is_free(i)]))
        probs = distribution.probs
        mass = float(np.prod([probs[i] if bit else 1 - probs[i] for i, bit in assignment.fixed_items()]))
        envelope = 4 * np.sqrt(np.log(1 / delta) / (2 * m)) / mass

        restricted = restrict_dataset(sample_dataset(distribution, target, m, rng), assignment)

        I_error = abs(empirical_I(restricted, feature) - exact_I(distribution, target, assignment, feature))
        gain_error = abs(empirical_gain(restricted, feature) - exact_gain(distribution, target, assignment, feature))
        failures += I_error > envelope or gain_error > envelope

    assert failures <= 5
